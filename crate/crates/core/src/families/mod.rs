//! Graph families: one-dimensional affine graphs, forms graphs, and orbital
//! graphs of matrix groups.

mod forms;
mod onedim;
mod orbital;
mod space;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::GfError;
use crate::graphs::DenseGraph;
use crate::permgrp::{affine_perms, GeneratorSet, PermError, DEFAULT_SL25_SEED};

pub use forms::{
    affine_polar, alternating_forms, bilinear_forms, hamming2, QuadraticForm, Sign,
};
pub use onedim::{paley, peisert, van_lint_schrijver};
pub use orbital::{affine_orbital_graph, nonzero_orbits, shipped_group, OrbitalSource, SHIPPED_GROUPS};
pub use space::{cayley_graph, matrix_rank, ConnectionSet, VectorSpace, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0}")]
    BadCongruence(String),
    #[error("ord_{e}({p}) is not {e} - 1 or the degree is not a multiple of it")]
    OrderCondition { p: u32, e: u32 },
    #[error("connection set contains {0} but not its negative")]
    AsymmetricConnectionSet(u32),
    #[error("connection set contains zero")]
    ZeroInSet,
    #[error("vector index {0} out of range")]
    OutOfRange(u32),
    #[error("zero stabiliser has {0} orbits on nonzero vectors, expected 2")]
    WrongOrbitCount(usize),
    #[error("chosen orbit is not closed under negation")]
    AsymmetricOrbit,
    #[error("generator {0} of the affine group does not preserve the graph")]
    NotInvariant(usize),
    #[error("graph would exceed {} vertices", MAX_VERTICES)]
    TooLarge,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("bad descriptor: {0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A graph family with its parameters, written as a descriptor string such
/// as `paley:49`, `vls:16:3`, `vo:-:4:2` or `orbital:q8:13`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FamilyId {
    Paley { q: u64 },
    Peisert { q: u64 },
    Vls { q: u64, e: u32 },
    Hamming2 { m: usize },
    /// `dim = 2m` is the dimension of the underlying space.
    AffinePolar { sign: Sign, dim: usize, q: u64 },
    BilinearForms { q: u64, m: usize },
    AlternatingForms,
    AffineOrbital { source: OrbitalSource },
}

/// A constructed graph together with a rank 3 group known to act on it.
#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: DenseGraph,
    pub group: Option<GeneratorSet>,
}

impl FamilyId {
    /// Parses a descriptor; `seed` is used by randomised group searches.
    pub fn parse_with_seed(s: &str, seed: u64) -> Result<Self, FamilyError> {
        let bad = || FamilyError::Parse(s.to_string());
        let num = |t: &str| t.parse::<u64>().map_err(|_| bad());
        let (tag, rest) = s.split_once(':').unwrap_or((s, ""));
        let args: Vec<&str> = if rest.is_empty() { Vec::new() } else { rest.split(':').collect() };
        Ok(match (tag, args.as_slice()) {
            ("paley", [q]) => FamilyId::Paley { q: num(q)? },
            ("peisert", [q]) => FamilyId::Peisert { q: num(q)? },
            ("vls", [q, e]) => FamilyId::Vls {
                q: num(q)?,
                e: u32::try_from(num(e)?).map_err(|_| bad())?,
            },
            ("hamming2", [m]) => FamilyId::Hamming2 { m: num(m)? as usize },
            ("vo", [sign, dim, q]) => {
                let sign = match *sign {
                    "+" => Sign::Plus,
                    "-" => Sign::Minus,
                    _ => return Err(bad()),
                };
                let dim = num(dim)? as usize;
                if !dim.is_multiple_of(2) {
                    return Err(bad());
                }
                FamilyId::AffinePolar { sign, dim, q: num(q)? }
            }
            ("hq", [q, m]) => FamilyId::BilinearForms {
                q: num(q)?,
                m: num(m)? as usize,
            },
            ("a52", []) => FamilyId::AlternatingForms,
            ("orbital", [_, ..]) => FamilyId::AffineOrbital {
                source: OrbitalSource::parse(rest, seed)?,
            },
            _ => return Err(bad()),
        })
    }

    pub fn build(&self) -> Result<Construction, FamilyError> {
        use FamilyId::*;
        let (graph, group) = match self {
            Paley { q } => {
                let (f, cs) = onedim::paley_set(*q)?;
                (cayley_graph(&cs), Some(onedim::paley_group(&f)))
            }
            Peisert { q } => {
                let (f, cs) = onedim::peisert_set(*q)?;
                (cayley_graph(&cs), Some(onedim::peisert_group(&f)))
            }
            Vls { q, e } => {
                let (f, cs) = onedim::vls_set(*q, *e)?;
                (cayley_graph(&cs), Some(onedim::vls_group(&f, *e)))
            }
            Hamming2 { m } => (hamming2(*m)?, Some(forms::hamming2_group(*m))),
            AffinePolar { sign, dim, q } => {
                let (sp, cs) = forms::affine_polar_set(dim / 2, *q, *sign)?;
                let group = (*sign == Sign::Plus && *dim == 4).then(|| forms::affine_polar_group(&sp));
                (cayley_graph(&cs), group)
            }
            BilinearForms { q, m } => {
                let (sp, cs) = forms::bilinear_set(*q, *m)?;
                (cayley_graph(&cs), Some(forms::bilinear_group(&sp, *m)))
            }
            AlternatingForms => {
                let (sp, cs) = forms::alternating_set()?;
                (cayley_graph(&cs), Some(forms::alternating_group(&sp)))
            }
            AffineOrbital { source } => {
                let spec = source.resolve()?;
                (affine_orbital_graph(&spec, 0)?, Some(affine_perms(&spec)?))
            }
        };
        Ok(Construction { graph, group })
    }

    pub fn graph(&self) -> Result<DenseGraph, FamilyError> {
        Ok(self.build()?.graph)
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_with_seed(s, DEFAULT_SL25_SEED)
    }
}

impl TryFrom<String> for FamilyId {
    type Error = FamilyError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<FamilyId> for String {
    fn from(id: FamilyId) -> String {
        id.to_string()
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Paley { q } => write!(f, "paley:{q}"),
            FamilyId::Peisert { q } => write!(f, "peisert:{q}"),
            FamilyId::Vls { q, e } => write!(f, "vls:{q}:{e}"),
            FamilyId::Hamming2 { m } => write!(f, "hamming2:{m}"),
            FamilyId::AffinePolar { sign, dim, q } => write!(f, "vo:{}:{dim}:{q}", sign.symbol()),
            FamilyId::BilinearForms { q, m } => write!(f, "hq:{q}:{m}"),
            FamilyId::AlternatingForms => write!(f, "a52"),
            FamilyId::AffineOrbital { source } => write!(f, "orbital:{}", source.descriptor()),
        }
    }
}
