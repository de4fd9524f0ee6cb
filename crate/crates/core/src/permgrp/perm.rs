use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::PermError;

/// A bijection on `0..n`, acting on the right: `x^(ab) = (x^a)^b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(PermError::NotBijection);
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles on `0..n`.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                if x as usize >= n {
                    return Err(PermError::NotBijection);
                }
                images[x as usize] = c[(i + 1) % c.len()];
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn first_moved(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut acc = 1u64;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            acc = acc / crate::arith::gcd(acc, len) * len;
        }
        acc
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Generators of a permutation group of fixed degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    degree: usize,
    gens: Vec<Permutation>,
}

impl GeneratorSet {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self, PermError> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(GeneratorSet { degree, gens })
    }

    pub fn trivial(degree: usize) -> Self {
        GeneratorSet {
            degree,
            gens: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn push(&mut self, g: Permutation) -> Result<(), PermError> {
        if g.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        self.gens.push(g);
        Ok(())
    }

    /// Smallest invariant set containing `point`, in breadth-first order.
    pub fn orbit(&self, point: u32) -> Vec<u32> {
        orbit_of(self.degree, &self.gens, point)
    }

    /// All orbits, each sorted, ordered by smallest element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        orbits_of(self.degree, &self.gens)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }
}

pub(crate) fn orbit_of(n: usize, gens: &[Permutation], point: u32) -> Vec<u32> {
    let mut seen = vec![false; n];
    let mut out = vec![point];
    seen[point as usize] = true;
    let mut queue = VecDeque::from([point]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    out
}

pub(crate) fn orbits_of(n: usize, gens: &[Permutation]) -> Vec<Vec<u32>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut orb = orbit_of(n, gens, start);
        for &x in &orb {
            seen[x as usize] = true;
        }
        orb.sort_unstable();
        out.push(orb);
    }
    out
}
