use std::fmt;

use serde::{Deserialize, Serialize};

use super::perm::{GeneratorSet, Permutation};
use super::PermError;
use crate::arith::{is_prime, mod_pow};

/// A square matrix over the prime field GF(p), stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Matrix {
    p: u32,
    d: usize,
    entries: Vec<u32>,
}

impl Matrix {
    pub fn new(p: u32, d: usize, entries: Vec<u32>) -> Result<Self, PermError> {
        if entries.len() != d * d || entries.iter().any(|&x| x >= p) {
            return Err(PermError::BadMatrix { p, d });
        }
        Ok(Matrix { p, d, entries })
    }

    /// Reduces arbitrary integers mod `p`.
    pub fn from_ints(p: u32, d: usize, entries: &[i64]) -> Result<Self, PermError> {
        if entries.len() != d * d {
            return Err(PermError::BadMatrix { p, d });
        }
        let e = entries
            .iter()
            .map(|&x| x.rem_euclid(p as i64) as u32)
            .collect();
        Ok(Matrix { p, d, entries: e })
    }

    pub fn identity(p: u32, d: usize) -> Self {
        Self::scalar(p, d, 1)
    }

    pub fn scalar(p: u32, d: usize, c: u32) -> Self {
        let mut entries = vec![0; d * d];
        for i in 0..d {
            entries[i * d + i] = c % p;
        }
        Matrix { p, d, entries }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.d + j]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!((self.p, self.d), (other.p, other.d));
        let (d, p) = (self.d, self.p as u64);
        let mut entries = vec![0u32; d * d];
        for i in 0..d {
            for j in 0..d {
                let mut acc = 0u64;
                for k in 0..d {
                    acc += self.get(i, k) as u64 * other.get(k, j) as u64;
                }
                entries[i * d + j] = (acc % p) as u32;
            }
        }
        Matrix {
            p: self.p,
            d,
            entries,
        }
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.p, self.d);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> u32 {
        let t: u64 = (0..self.d).map(|i| self.get(i, i) as u64).sum();
        (t % self.p as u64) as u32
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> u32 {
        let (d, p) = (self.d, self.p as u64);
        let mut a: Vec<u64> = self.entries.iter().map(|&x| x as u64).collect();
        let mut det = 1u64;
        for col in 0..d {
            let Some(piv) = (col..d).find(|&r| a[r * d + col] != 0) else {
                return 0;
            };
            if piv != col {
                for j in 0..d {
                    a.swap(piv * d + j, col * d + j);
                }
                det = (p - det) % p;
            }
            let pv = a[col * d + col];
            det = det * pv % p;
            let inv = mod_pow(pv, p - 2, p);
            for r in col + 1..d {
                let f = a[r * d + col] * inv % p;
                if f == 0 {
                    continue;
                }
                for j in col..d {
                    a[r * d + j] = (a[r * d + j] + p * p - f * a[col * d + j]) % p;
                }
            }
        }
        det as u32
    }

    pub fn is_invertible(&self) -> bool {
        self.det() != 0
    }

    /// Image of the vector with index `x = Σ v_i p^i` under `v ↦ Mv`.
    pub fn apply_index(&self, x: usize) -> usize {
        let (d, p) = (self.d, self.p as usize);
        let mut v = [0usize; 16];
        let mut t = x;
        for slot in v.iter_mut().take(d) {
            *slot = t % p;
            t /= p;
        }
        let mut out = 0usize;
        for i in (0..d).rev() {
            let mut acc = 0usize;
            for (j, &vj) in v.iter().enumerate().take(d) {
                acc += self.get(i, j) as usize * vj;
            }
            out = out * p + acc % p;
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[u32]> = self.entries.chunks(self.d.max(1)).collect();
        write!(f, "{rows:?} mod {}", self.p)
    }
}

/// Generators of a matrix group `G ≤ GL_d(p)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixGroupSpec {
    pub p: u32,
    pub d: usize,
    pub gens: Vec<Matrix>,
}

impl MatrixGroupSpec {
    pub fn new(p: u32, d: usize, gens: Vec<Matrix>) -> Result<Self, PermError> {
        if !is_prime(p as u64) {
            return Err(PermError::NotPrime(p as u64));
        }
        if d == 0 || d > 16 {
            return Err(PermError::BadMatrix { p, d });
        }
        for (i, g) in gens.iter().enumerate() {
            if g.p != p || g.d != d {
                return Err(PermError::BadMatrix { p, d });
            }
            if !g.is_invertible() {
                return Err(PermError::SingularGenerator(i));
            }
        }
        Ok(MatrixGroupSpec { p, d, gens })
    }

    /// Number of vectors `p^d`.
    pub fn degree(&self) -> usize {
        (self.p as usize).pow(self.d as u32)
    }

    /// Parses `p d` followed by `d·d` integers per generator. Lines starting
    /// with `#` are ignored and entries may be negative.
    pub fn parse(text: &str) -> Result<Self, PermError> {
        let mut tokens = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.starts_with('#'))
            .flat_map(str::split_whitespace);
        let mut next_int = |what: &str| -> Result<Option<i64>, PermError> {
            match tokens.next() {
                None => Ok(None),
                Some(t) => t
                    .parse::<i64>()
                    .map(Some)
                    .map_err(|_| PermError::Parse(format!("bad {what} {t:?}"))),
            }
        };
        let p = next_int("prime")?.ok_or_else(|| PermError::Parse("missing header".into()))?;
        let d = next_int("dimension")?.ok_or_else(|| PermError::Parse("missing dimension".into()))?;
        if !(2..=u32::MAX as i64).contains(&p) || !(1..=16).contains(&d) {
            return Err(PermError::Parse(format!("bad header {p} {d}")));
        }
        let (p, d) = (p as u32, d as usize);
        let mut flat = Vec::new();
        while let Some(x) = next_int("entry")? {
            flat.push(x);
        }
        if flat.len() % (d * d) != 0 {
            return Err(PermError::Parse(format!(
                "{} entries is not a multiple of {}",
                flat.len(),
                d * d
            )));
        }
        let gens = flat
            .chunks(d * d)
            .map(|c| Matrix::from_ints(p, d, c))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(p, d, gens)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.p, self.d);
        for g in &self.gens {
            for row in g.entries.chunks(self.d) {
                let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                s.push_str(&r.join(" "));
                s.push('\n');
            }
        }
        s
    }
}

/// The matrix generators acting linearly on the `p^d` vectors.
pub fn linear_perms(spec: &MatrixGroupSpec) -> Result<GeneratorSet, PermError> {
    let n = spec.degree();
    let mut gens = Vec::with_capacity(spec.gens.len());
    for (i, m) in spec.gens.iter().enumerate() {
        if !m.is_invertible() {
            return Err(PermError::SingularGenerator(i));
        }
        let images = (0..n).map(|x| m.apply_index(x) as u32).collect();
        gens.push(Permutation::from_images_unchecked(images));
    }
    GeneratorSet::new(n, gens)
}

/// Translations by the standard basis vectors together with the matrix
/// generators, generating `V:G_0`.
pub fn affine_perms(spec: &MatrixGroupSpec) -> Result<GeneratorSet, PermError> {
    let n = spec.degree();
    let p = spec.p as usize;
    let mut gs = linear_perms(spec)?;
    let mut gens = Vec::with_capacity(spec.d + gs.gens().len());
    let mut step = 1usize;
    for _ in 0..spec.d {
        let images = (0..n)
            .map(|x| {
                let digit = (x / step) % p;
                let bumped = if digit + 1 == p { x - digit * step } else { x + step };
                bumped as u32
            })
            .collect();
        gens.push(Permutation::from_images_unchecked(images));
        step *= p;
    }
    gens.extend(gs.gens().iter().cloned());
    gs = GeneratorSet::new(n, gens)?;
    Ok(gs)
}
