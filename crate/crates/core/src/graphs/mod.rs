//! Dense undirected graphs over bit-matrix adjacency.
//!
//! Rows are padded to whole `u64` words so that common-neighbour counts are
//! popcounts of row intersections.

mod io;

pub use io::{from_adjacency_list, from_graph6, to_adjacency_list, to_graph6, FormatError};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} used as both endpoints")]
    SameVertex(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DenseGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for DenseGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DenseGraph(n={}, m={})", self.n, self.edge_count())
    }
}

impl DenseGraph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        DenseGraph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Builds the graph from a symmetric predicate evaluated on `u < v`.
    pub fn from_fn(n: usize, adjacent: impl Fn(usize, usize) -> bool + Sync) -> Self {
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        bits.par_chunks_mut(words).enumerate().for_each(|(u, row)| {
            for v in 0..n {
                if u != v && adjacent(u.min(v), u.max(v)) {
                    row[v / 64] |= 1 << (v % 64);
                }
            }
        });
        DenseGraph { n, words, bits }
    }

    /// Builds the graph row by row from the neighbours of each vertex. The
    /// neighbour lists must describe a symmetric relation without loops.
    pub fn from_neighbours<I>(n: usize, neighbours: impl Fn(usize) -> I + Sync) -> Self
    where
        I: IntoIterator<Item = usize>,
    {
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        bits.par_chunks_mut(words).enumerate().for_each(|(u, row)| {
            for v in neighbours(u) {
                row[v / 64] |= 1 << (v % 64);
            }
        });
        let g = DenseGraph { n, words, bits };
        debug_assert!(g.is_symmetric() && g.is_irreflexive());
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Words per adjacency row.
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Adds `{u, v}`; self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            return;
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    pub fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbours(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    #[inline]
    fn common_unchecked(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `|N(u) ∩ N(v)|` for distinct vertices.
    pub fn common_neighbours(&self, u: usize, v: usize) -> Result<usize, GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::OutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        Ok(self.common_unchecked(u, v))
    }

    pub fn complement(&self) -> DenseGraph {
        let mut g = self.clone();
        for u in 0..self.n {
            let row = &mut g.bits[u * self.words..(u + 1) * self.words];
            for w in row.iter_mut() {
                *w = !*w;
            }
            if !self.n.is_multiple_of(64) {
                row[self.words - 1] &= (1u64 << (self.n % 64)) - 1;
            }
            row[u / 64] &= !(1 << (u % 64));
        }
        g
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|u| (0..self.n).all(|v| self.has_edge(u, v) == self.has_edge(v, u)))
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.n).all(|u| !self.has_edge(u, u))
    }

    /// Adjacency is preserved by the vertex map `image`.
    pub fn is_automorphism(&self, image: &[u32]) -> bool {
        if image.len() != self.n {
            return false;
        }
        (0..self.n).into_par_iter().all(|u| {
            let iu = image[u] as usize;
            (u + 1..self.n).all(|v| self.has_edge(u, v) == self.has_edge(iu, image[v] as usize))
        })
    }

    /// Adjacency of `self` maps onto `other` under `map`.
    pub fn is_isomorphism_to(&self, other: &DenseGraph, map: &[u32]) -> bool {
        if self.n != other.n || map.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &m in map {
            if m as usize >= self.n || std::mem::replace(&mut seen[m as usize], true) {
                return false;
            }
        }
        (0..self.n).into_par_iter().all(|u| {
            let iu = map[u] as usize;
            (u + 1..self.n).all(|v| self.has_edge(u, v) == other.has_edge(iu, map[v] as usize))
        })
    }

    /// Strongly-regular parameters, or why they do not exist.
    pub fn srg_params(&self) -> Result<SrgParams, SrgError> {
        let n = self.n;
        if n < 3 {
            return Err(SrgError::Degenerate { n, k: 0 });
        }
        let k = self.degree(0);
        if let Some(v) = (1..n).find(|&v| self.degree(v) != k) {
            return Err(SrgError::NotStronglyRegular(SrgWitness::Degree {
                vertex: v,
                degree: self.degree(v),
                expected: k,
            }));
        }
        if k == 0 || k == n - 1 {
            return Err(SrgError::Degenerate { n, k });
        }
        // Reference counts come from vertex 0's first neighbour and first
        // non-neighbour; every other pair must agree.
        let adj_ref = (1..n).find(|&v| self.has_edge(0, v)).unwrap();
        let non_ref = (1..n).find(|&v| !self.has_edge(0, v)).unwrap();
        let lambda = self.common_unchecked(0, adj_ref);
        let mu = self.common_unchecked(0, non_ref);
        let bad = (0..n)
            .into_par_iter()
            .find_map_first(|u| {
                for v in u + 1..n {
                    let c = self.common_unchecked(u, v);
                    let adjacent = self.has_edge(u, v);
                    let want = if adjacent { lambda } else { mu };
                    if c != want {
                        return Some(SrgWitness::Pair {
                            u,
                            v,
                            adjacent,
                            common: c,
                            expected: want,
                        });
                    }
                }
                None
            });
        match bad {
            Some(w) => Err(SrgError::NotStronglyRegular(w)),
            None => Ok(SrgParams { n, k, lambda, mu }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// `k(k − λ − 1) = (n − k − 1)μ`.
    pub fn is_feasible(&self) -> bool {
        self.k * (self.k - self.lambda - 1) == (self.n - self.k - 1) * self.mu
    }

    /// Parameters of the complementary graph.
    pub fn complement(&self) -> SrgParams {
        let SrgParams { n, k, lambda, mu } = *self;
        SrgParams {
            n,
            k: n - k - 1,
            lambda: n + mu - 2 * k - 2,
            mu: n + lambda - 2 * k,
        }
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SRG({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SrgWitness {
    Degree {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    Pair {
        u: usize,
        v: usize,
        adjacent: bool,
        common: usize,
        expected: usize,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SrgError {
    #[error("graph on {n} vertices with valency {k} is empty, complete or too small")]
    Degenerate { n: usize, k: usize },
    #[error("not strongly regular: {0:?}")]
    NotStronglyRegular(SrgWitness),
}
