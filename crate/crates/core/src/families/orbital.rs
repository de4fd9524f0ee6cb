//! Orbital graphs of affine groups `V:G_0` given by matrix generators.

use crate::gf::FiniteField;
use crate::graphs::DenseGraph;
use crate::permgrp::{
    affine_perms, central_product_with_scalars, enumerate_matrix_group, find_sl25_in_gl2,
    linear_perms, normalizer_in_gl2, q8_in_sl2, sl23_in_sl2, MatrixGroupSpec, DEFAULT_SL25_BUDGET,
};

use super::space::{cayley_graph, ConnectionSet, VectorSpace};
use super::FamilyError;

/// Matrix groups shipped with the crate, addressed by name.
pub const SHIPPED_GROUPS: &[(&str, &str)] = &[
    ("b49", include_str!("../../data/groups/b49.txt")),
    ("b169", include_str!("../../data/groups/b169.txt")),
    ("b289", include_str!("../../data/groups/b289.txt")),
    ("b361", include_str!("../../data/groups/b361.txt")),
    ("b529", include_str!("../../data/groups/b529.txt")),
    ("b841", include_str!("../../data/groups/b841.txt")),
    ("b961", include_str!("../../data/groups/b961.txt")),
    ("b2209", include_str!("../../data/groups/b2209.txt")),
];

pub fn shipped_group(name: &str) -> Option<MatrixGroupSpec> {
    SHIPPED_GROUPS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| MatrixGroupSpec::parse(text).expect("shipped group files are valid"))
}

/// Where the zero stabiliser of an orbital graph comes from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrbitalSource {
    /// The full normaliser of `Q_8` in `GL_2(p)`.
    Q8Normalizer { p: u32 },
    /// `SL_2(3)` with scalars of the given order.
    Sl23 { p: u32, scalars: u64 },
    /// `SL_2(5)` found by seeded search, with scalars of the given order.
    Sl25 { p: u32, scalars: u64, seed: u64 },
    /// A group from [`SHIPPED_GROUPS`].
    Shipped(String),
    /// A matrix-group spec file on disk.
    File(String),
}

impl OrbitalSource {
    pub fn parse(s: &str, seed: u64) -> Result<Self, FamilyError> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| -> Result<u64, FamilyError> {
            t.parse()
                .map_err(|_| FamilyError::Parse(format!("bad number {t:?} in orbital:{s}")))
        };
        let p32 = |t: &str| -> Result<u32, FamilyError> {
            u32::try_from(num(t)?).map_err(|_| FamilyError::Parse(format!("prime {t} too large")))
        };
        Ok(match parts.as_slice() {
            ["q8", p] => OrbitalSource::Q8Normalizer { p: p32(p)? },
            ["sl23", p, z] => OrbitalSource::Sl23 {
                p: p32(p)?,
                scalars: num(z)?,
            },
            ["sl25", p, z] => OrbitalSource::Sl25 {
                p: p32(p)?,
                scalars: num(z)?,
                seed,
            },
            _ if SHIPPED_GROUPS.iter().any(|(n, _)| *n == s) => OrbitalSource::Shipped(s.to_string()),
            _ => OrbitalSource::File(s.to_string()),
        })
    }

    pub fn descriptor(&self) -> String {
        match self {
            OrbitalSource::Q8Normalizer { p } => format!("q8:{p}"),
            OrbitalSource::Sl23 { p, scalars } => format!("sl23:{p}:{scalars}"),
            OrbitalSource::Sl25 { p, scalars, .. } => format!("sl25:{p}:{scalars}"),
            OrbitalSource::Shipped(n) | OrbitalSource::File(n) => n.clone(),
        }
    }

    pub fn resolve(&self) -> Result<MatrixGroupSpec, FamilyError> {
        Ok(match self {
            OrbitalSource::Q8Normalizer { p } => {
                let q8 = enumerate_matrix_group(&q8_in_sl2(*p)?, 8).expect("Q8 has order 8");
                normalizer_in_gl2(*p, &q8)?
            }
            OrbitalSource::Sl23 { p, scalars } => {
                let s = MatrixGroupSpec::new(*p, 2, sl23_in_sl2(*p)?)?;
                central_product_with_scalars(&s, *scalars)?
            }
            OrbitalSource::Sl25 { p, scalars, seed } => {
                let s = find_sl25_in_gl2(*p, *seed, DEFAULT_SL25_BUDGET)?;
                central_product_with_scalars(&s, *scalars)?
            }
            OrbitalSource::Shipped(n) => shipped_group(n).expect("checked at parse time"),
            OrbitalSource::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| FamilyError::Io(format!("{path}: {e}")))?;
                MatrixGroupSpec::parse(&text)?
            }
        })
    }
}

/// Orbits of `G_0` on the nonzero vectors, ordered by size then smallest
/// element.
pub fn nonzero_orbits(spec: &MatrixGroupSpec) -> Result<Vec<Vec<u32>>, FamilyError> {
    let lin = linear_perms(spec)?;
    let mut orbits: Vec<Vec<u32>> = lin.orbits().into_iter().filter(|o| o[0] != 0).collect();
    orbits.sort_by_key(|o| (o.len(), o[0]));
    Ok(orbits)
}

/// Orbital graph of `V:G_0` whose connection set is the `orbit_choice`-th
/// nonzero orbit (see [`nonzero_orbits`]). `G_0` must have exactly two
/// orbits on nonzero vectors.
pub fn affine_orbital_graph(spec: &MatrixGroupSpec, orbit_choice: usize) -> Result<DenseGraph, FamilyError> {
    let orbits = nonzero_orbits(spec)?;
    if orbits.len() != 2 {
        return Err(FamilyError::WrongOrbitCount(orbits.len()));
    }
    let orbit = orbits
        .get(orbit_choice)
        .ok_or_else(|| FamilyError::Unsupported(format!("orbit index {orbit_choice}")))?;
    let sp = VectorSpace::new(FiniteField::new(spec.p, 1)?, spec.d)?;
    let cs = ConnectionSet::new(sp, orbit.iter().copied()).map_err(|e| match e {
        FamilyError::AsymmetricConnectionSet(_) => FamilyError::AsymmetricOrbit,
        e => e,
    })?;
    let g = cayley_graph(&cs);
    let group = affine_perms(spec)?;
    if let Some(i) = group.gens().iter().position(|h| !g.is_automorphism(h.images())) {
        return Err(FamilyError::NotInvariant(i));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::{Matrix, PermError};

    #[test]
    fn gl2_is_transitive() {
        let gens = vec![
            Matrix::from_ints(5, 2, &[1, 1, 0, 1]).unwrap(),
            Matrix::from_ints(5, 2, &[0, 1, 1, 0]).unwrap(),
            Matrix::from_ints(5, 2, &[2, 0, 0, 1]).unwrap(),
        ];
        let spec = MatrixGroupSpec::new(5, 2, gens).unwrap();
        assert_eq!(affine_orbital_graph(&spec, 0), Err(FamilyError::WrongOrbitCount(1)));
    }

    #[test]
    fn q8_normalizer_mod_7_is_transitive() {
        let spec = OrbitalSource::Q8Normalizer { p: 7 }.resolve().unwrap();
        assert_eq!(affine_orbital_graph(&spec, 0), Err(FamilyError::WrongOrbitCount(1)));
    }

    #[test]
    fn sl23_mod_7_orbits() {
        let spec = OrbitalSource::Sl23 { p: 7, scalars: 3 }.resolve().unwrap();
        let sizes: Vec<usize> = nonzero_orbits(&spec).unwrap().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![24, 24]);
        let g = affine_orbital_graph(&spec, 0).unwrap();
        assert_eq!(g.srg_params().unwrap().k, 24);
    }

    #[test]
    fn sources_parse() {
        assert_eq!(
            OrbitalSource::parse("q8:13", 0).unwrap(),
            OrbitalSource::Q8Normalizer { p: 13 }
        );
        assert_eq!(
            OrbitalSource::parse("b169", 0).unwrap(),
            OrbitalSource::Shipped("b169".into())
        );
        assert_eq!(
            OrbitalSource::parse("dir/g.txt", 0).unwrap(),
            OrbitalSource::File("dir/g.txt".into())
        );
        assert!(matches!(
            OrbitalSource::File("/nonexistent/x".into()).resolve(),
            Err(FamilyError::Io(_))
        ));
        assert!(matches!(
            OrbitalSource::Sl25 { p: 7, scalars: 1, seed: 1 }.resolve(),
            Err(FamilyError::Perm(PermError::NotFound { .. }))
        ));
    }
}
