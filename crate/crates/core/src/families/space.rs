use crate::gf::FiniteField;
use crate::graphs::DenseGraph;
use crate::permgrp::Permutation;

use super::FamilyError;

/// Largest vector space the constructors will build a dense graph on.
pub const MAX_VERTICES: usize = 1 << 14;

/// `GF(q)^dim`, indexed by `Σ c_j q^j` where `c_j` is the field index of
/// coordinate `j`. Since field indices are themselves base-`p` digit strings,
/// the vector index is the base-`p` expansion of all `dim·k` prime-field
/// coordinates, and vector addition is digit-wise addition mod `p`.
#[derive(Debug, Clone)]
pub struct VectorSpace {
    field: FiniteField,
    dim: usize,
    size: usize,
    digits: usize,
}

impl VectorSpace {
    pub fn new(field: FiniteField, dim: usize) -> Result<Self, FamilyError> {
        let q = field.order() as usize;
        let size = q
            .checked_pow(dim as u32)
            .filter(|&s| s <= MAX_VERTICES)
            .ok_or(FamilyError::TooLarge)?;
        let digits = dim * field.degree() as usize;
        Ok(VectorSpace {
            field,
            dim,
            size,
            digits,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn coords(&self, mut x: u32) -> Vec<u32> {
        let q = self.field.order();
        (0..self.dim)
            .map(|_| {
                let c = x % q;
                x /= q;
                c
            })
            .collect()
    }

    pub fn from_coords(&self, c: &[u32]) -> u32 {
        let q = self.field.order();
        c.iter().rev().fold(0, |acc, &x| acc * q + x)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.field.characteristic();
        if p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut w) = (0, 1);
        for _ in 0..self.digits {
            out += ((a % p + b % p) % p) * w;
            a /= p;
            b /= p;
            w *= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let p = self.field.characteristic();
        if p == 2 {
            return a;
        }
        let mut a = a;
        let (mut out, mut w) = (0, 1);
        for _ in 0..self.digits {
            out += ((p - a % p) % p) * w;
            a /= p;
            w *= p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// Permutation of the vectors induced by a map on coordinate lists.
    pub fn coordinate_map(&self, f: impl Fn(&[u32]) -> Vec<u32>) -> Permutation {
        let images: Vec<u32> = (0..self.size as u32)
            .map(|x| self.from_coords(&f(&self.coords(x))))
            .collect();
        Permutation::new(images).expect("coordinate map must be bijective")
    }

    /// Translations by the prime-field basis vectors.
    pub fn translations(&self) -> Vec<Permutation> {
        let p = self.field.characteristic();
        let mut step = 1u32;
        let mut out = Vec::with_capacity(self.digits);
        for _ in 0..self.digits {
            let images = (0..self.size as u32).map(|x| self.add(x, step)).collect();
            out.push(Permutation::new(images).expect("translation"));
            step *= p;
        }
        out
    }
}

/// A symmetric set of nonzero vectors.
#[derive(Debug, Clone)]
pub struct ConnectionSet {
    space: VectorSpace,
    members: Vec<u32>,
}

impl ConnectionSet {
    pub fn new(space: VectorSpace, members: impl IntoIterator<Item = u32>) -> Result<Self, FamilyError> {
        let mut members: Vec<u32> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if members.first() == Some(&0) {
            return Err(FamilyError::ZeroInSet);
        }
        if let Some(&x) = members.last() {
            if x as usize >= space.size() {
                return Err(FamilyError::OutOfRange(x));
            }
        }
        for &s in &members {
            if members.binary_search(&space.neg(s)).is_err() {
                return Err(FamilyError::AsymmetricConnectionSet(s));
            }
        }
        Ok(ConnectionSet { space, members })
    }

    pub fn space(&self) -> &VectorSpace {
        &self.space
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `x ~ y` iff `x − y ∈ S`.
pub fn cayley_graph(cs: &ConnectionSet) -> DenseGraph {
    let sp = &cs.space;
    DenseGraph::from_neighbours(sp.size(), |x| {
        cs.members.iter().map(move |&s| sp.add(x as u32, s) as usize)
    })
}

/// Rank of a `rows × cols` matrix of field indices.
pub fn matrix_rank(field: &FiniteField, rows: usize, cols: usize, entries: &[u32]) -> usize {
    let mut a = entries.to_vec();
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        for j in 0..cols {
            a.swap(piv * cols + j, rank * cols + j);
        }
        let inv = field.inv_idx(a[rank * cols + col]).unwrap();
        for r in 0..rows {
            if r == rank || a[r * cols + col] == 0 {
                continue;
            }
            let f = field.mul_idx(a[r * cols + col], inv);
            for j in col..cols {
                let t = field.mul_idx(f, a[rank * cols + j]);
                a[r * cols + j] = field.sub_idx(a[r * cols + j], t);
            }
        }
        rank += 1;
    }
    rank
}
