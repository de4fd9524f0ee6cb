//! Finite fields GF(p^d) in a polynomial basis.
//!
//! Elements are addressed by their index `Σ coeffs[i]·p^i` in `[0, q)`, with
//! index 0 the zero vector. The modulus is the lexicographically smallest
//! monic primitive polynomial (coefficients compared from the top degree
//! down), so the residue class of `x` is the distinguished generator `ω`.
//! For `d = 1` the modulus is `x − g` with `g` the smallest primitive root.

use thiserror::Error;

use crate::arith;

/// Discrete-log tables are built up to this order.
pub const LOG_TABLE_LIMIT: u32 = 1 << 16;

const MAX_ORDER: u64 = 1 << 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field order {p}^{d} exceeds 2^31")]
    TooLarge { p: u32, d: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements come from fields of order {0} and {1}")]
    FieldMismatch(u32, u32),
    #[error("{e} does not divide {order}")]
    DoesNotDivide { e: u64, order: u64 },
    #[error("index {index} is not an element of a field of order {order}")]
    OutOfRange { index: u32, order: u32 },
}

/// An element tagged with the order of its field.
///
/// Fields of equal order built by [`FiniteField::new`] are identical, so the
/// order alone identifies the field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    order: u32,
    index: u32,
}

impl FieldElement {
    pub fn index(self) -> u32 {
        self.index
    }

    pub fn field_order(self) -> u32 {
        self.order
    }

    pub fn is_zero(self) -> bool {
        self.index == 0
    }
}

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u32,
    d: u32,
    q: u32,
    /// Monic, constant term first, `d + 1` entries.
    modulus: Vec<u32>,
    omega: u32,
    pow_p: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl FiniteField {
    /// Builds GF(p^d) with its canonical primitive modulus.
    pub fn new(p: u32, d: u32) -> Result<Self, GfError> {
        if !arith::is_prime(p as u64) {
            return Err(GfError::NotPrime(p));
        }
        if d == 0 {
            return Err(GfError::TooLarge { p, d });
        }
        let q = match arith::checked_pow(p as u64, d) {
            Some(q) if q <= MAX_ORDER => q as u32,
            _ => return Err(GfError::TooLarge { p, d }),
        };
        let (modulus, omega) = if d == 1 {
            let g = smallest_primitive_root(p);
            (vec![(p - g) % p, 1], g)
        } else {
            (smallest_primitive_polynomial(p, d), p)
        };
        let mut pow_p = Vec::with_capacity(d as usize + 1);
        let mut acc = 1u32;
        for i in 0..=d {
            pow_p.push(acc);
            if i < d {
                acc = acc.wrapping_mul(p);
            }
        }
        let mut field = FiniteField {
            p,
            d,
            q,
            modulus,
            omega,
            pow_p,
            exp: Vec::new(),
            log: Vec::new(),
        };
        if q <= LOG_TABLE_LIMIT {
            field.build_tables();
        }
        Ok(field)
    }

    fn build_tables(&mut self) {
        let n = (self.q - 1) as usize;
        let mut exp = Vec::with_capacity(n);
        let mut log = vec![u32::MAX; self.q as usize];
        let mut x = 1u32;
        for k in 0..n {
            exp.push(x);
            log[x as usize] = k as u32;
            x = self.mul_slow(x, self.omega);
        }
        debug_assert_eq!(x, 1, "omega must have order q - 1");
        self.exp = exp;
        self.log = log;
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients of the modulus, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn omega(&self) -> FieldElement {
        self.wrap(self.omega)
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    pub fn element(&self, index: u32) -> Result<FieldElement, GfError> {
        if index >= self.q {
            return Err(GfError::OutOfRange {
                index,
                order: self.q,
            });
        }
        Ok(self.wrap(index))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|i| self.wrap(i))
    }

    /// Element from little-endian coefficients; extra or oversized
    /// coefficients are rejected.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, GfError> {
        let mut idx = 0u64;
        for (i, &c) in coeffs.iter().enumerate() {
            if c >= self.p || i >= self.d as usize {
                if c == 0 {
                    continue;
                }
                return Err(GfError::OutOfRange {
                    index: c,
                    order: self.q,
                });
            }
            idx += c as u64 * self.pow_p[i] as u64;
        }
        Ok(self.wrap(idx as u32))
    }

    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        self.digits(x.index)
    }

    fn wrap(&self, index: u32) -> FieldElement {
        FieldElement {
            order: self.q,
            index,
        }
    }

    fn check(&self, x: FieldElement) -> Result<u32, GfError> {
        if x.order != self.q {
            return Err(GfError::FieldMismatch(self.q, x.order));
        }
        Ok(x.index)
    }

    fn check2(&self, x: FieldElement, y: FieldElement) -> Result<(u32, u32), GfError> {
        if x.order != y.order {
            return Err(GfError::FieldMismatch(x.order, y.order));
        }
        Ok((self.check(x)?, self.check(y)?))
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement, GfError> {
        let (a, b) = self.check2(x, y)?;
        Ok(self.wrap(self.add_idx(a, b)))
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement, GfError> {
        let (a, b) = self.check2(x, y)?;
        Ok(self.wrap(self.sub_idx(a, b)))
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement, GfError> {
        let (a, b) = self.check2(x, y)?;
        Ok(self.wrap(self.mul_idx(a, b)))
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement, GfError> {
        let (a, b) = self.check2(x, y)?;
        let inv = self.inv_idx(b).ok_or(GfError::DivisionByZero)?;
        Ok(self.wrap(self.mul_idx(a, inv)))
    }

    pub fn neg(&self, x: FieldElement) -> Result<FieldElement, GfError> {
        Ok(self.wrap(self.neg_idx(self.check(x)?)))
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement, GfError> {
        let a = self.check(x)?;
        self.inv_idx(a)
            .map(|i| self.wrap(i))
            .ok_or(GfError::DivisionByZero)
    }

    pub fn pow(&self, x: FieldElement, e: u64) -> Result<FieldElement, GfError> {
        Ok(self.wrap(self.pow_idx(self.check(x)?, e)))
    }

    /// `x ↦ x^p`.
    pub fn frobenius(&self, x: FieldElement) -> Result<FieldElement, GfError> {
        Ok(self.wrap(self.frobenius_idx(self.check(x)?)))
    }

    /// Discrete logarithm to base `ω`; `None` for zero.
    pub fn log(&self, x: FieldElement) -> Result<Option<u32>, GfError> {
        let a = self.check(x)?;
        Ok(self.log_idx(a))
    }

    // ---- index-level kernels -------------------------------------------

    pub fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.d as usize);
        for _ in 0..self.d {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    fn undigits(&self, digits: &[u32]) -> u32 {
        digits
            .iter()
            .zip(&self.pow_p)
            .map(|(&c, &w)| c * w)
            .sum()
    }

    #[inline]
    pub fn add_idx(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.d == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for &w in &self.pow_p[..self.d as usize] {
            let s = (a % self.p + b % self.p) % self.p;
            out += s * w;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    #[inline]
    pub fn neg_idx(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        if self.d == 1 {
            return (self.p - a) % self.p;
        }
        let mut a = a;
        let mut out = 0;
        for &w in &self.pow_p[..self.d as usize] {
            out += ((self.p - a % self.p) % self.p) * w;
            a /= self.p;
        }
        out
    }

    #[inline]
    pub fn sub_idx(&self, a: u32, b: u32) -> u32 {
        self.add_idx(a, self.neg_idx(b))
    }

    #[inline]
    pub fn mul_idx(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.exp.is_empty() {
            return self.mul_slow(a, b);
        }
        let n = self.q as usize - 1;
        let s = self.log[a as usize] as usize + self.log[b as usize] as usize;
        self.exp[if s >= n { s - n } else { s }]
    }

    pub fn inv_idx(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if self.exp.is_empty() {
            return Some(self.pow_idx(a, self.q as u64 - 2));
        }
        let n = self.q as usize - 1;
        let l = self.log[a as usize] as usize;
        Some(self.exp[(n - l) % n])
    }

    pub fn pow_idx(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if !self.exp.is_empty() {
            let n = self.q as u64 - 1;
            let l = self.log[a as usize] as u64;
            return self.exp[((l * (e % n)) % n) as usize];
        }
        let mut base = a;
        let mut acc = 1;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_idx(acc, base);
            }
            base = self.mul_idx(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn frobenius_idx(&self, a: u32) -> u32 {
        self.pow_idx(a, self.p as u64)
    }

    /// `ω^k`.
    pub fn omega_pow(&self, k: u64) -> u32 {
        if !self.exp.is_empty() {
            return self.exp[(k % (self.q as u64 - 1)) as usize];
        }
        self.pow_idx(self.omega, k)
    }

    pub fn log_idx(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if !self.log.is_empty() {
            return Some(self.log[a as usize]);
        }
        let mut x = 1;
        for k in 0..self.q - 1 {
            if x == a {
                return Some(k);
            }
            x = self.mul_idx(x, self.omega);
        }
        unreachable!("omega generates the multiplicative group")
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        if self.d == 1 {
            return (a as u64 * b as u64 % p) as u32;
        }
        let da: Vec<u64> = self.digits(a).into_iter().map(u64::from).collect();
        let db: Vec<u64> = self.digits(b).into_iter().map(u64::from).collect();
        let m: Vec<u64> = self.modulus.iter().map(|&c| c as u64).collect();
        let prod = poly::mulmod(&da, &db, &m, p);
        let digits: Vec<u32> = prod.iter().map(|&c| c as u32).collect();
        self.undigits(&digits)
    }

    /// Cosets `C, Cω, …, Cω^(e−1)` of `C = ⟨ω^e⟩`, each sorted by index.
    pub fn power_residue_classes(&self, e: u32) -> Result<Vec<Vec<FieldElement>>, GfError> {
        let n = self.q as u64 - 1;
        if e == 0 || !n.is_multiple_of(e as u64) {
            return Err(GfError::DoesNotDivide {
                e: e as u64,
                order: n,
            });
        }
        let mut classes = vec![Vec::with_capacity((n / e as u64) as usize); e as usize];
        let mut x = 1u32;
        for k in 0..n {
            classes[(k % e as u64) as usize].push(self.wrap(x));
            x = self.mul_idx(x, self.omega);
        }
        for c in &mut classes {
            c.sort();
        }
        Ok(classes)
    }

    /// Index of the class of `ω^e`-cosets containing a nonzero element.
    pub fn residue_class_idx(&self, a: u32, e: u32) -> Option<u32> {
        self.log_idx(a).map(|l| l % e)
    }
}

fn smallest_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let n = (p - 1) as u64;
    let primes = arith::prime_divisors(n);
    (2..p)
        .find(|&g| {
            primes
                .iter()
                .all(|&r| arith::mod_pow(g as u64, n / r, p as u64) != 1)
        })
        .expect("every prime has a primitive root")
}

fn smallest_primitive_polynomial(p: u32, d: u32) -> Vec<u32> {
    let q = (p as u64).pow(d);
    let n = q - 1;
    let primes = arith::prime_divisors(n);
    // Enumerating the lower coefficients as a base-p integer visits monic
    // polynomials in high-degree-first lexicographic order.
    for code in 0..q {
        let mut m: Vec<u64> = Vec::with_capacity(d as usize + 1);
        let mut c = code;
        for _ in 0..d {
            m.push(c % p as u64);
            c /= p as u64;
        }
        if m[0] == 0 {
            continue;
        }
        m.push(1);
        if poly::is_primitive(&m, p as u64, n, &primes) {
            return m.into_iter().map(|c| c as u32).collect();
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}

/// Polynomial arithmetic over GF(p), constant term first.
pub mod poly {
    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let mut m = m.to_vec();
        trim(&mut m);
        let dm = m.len() - 1;
        let lead_inv = crate::arith::mod_pow(m[dm], p - 2, p);
        while r.len() > dm {
            let top = r.len() - 1;
            let c = r[top] * lead_inv % p;
            if c != 0 {
                for (i, &mi) in m.iter().enumerate() {
                    let idx = top - dm + i;
                    r[idx] = (r[idx] + p - c * mi % p) % p;
                }
            }
            trim(&mut r);
            if r.len() > top {
                r.pop();
            }
        }
        r
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(&mut out);
        out
    }

    pub fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = rem(&mul(a, b, p), m, p);
        r.resize(m.len() - 1, 0);
        r
    }

    pub fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul(&acc, &b, p), m, p);
            }
            b = rem(&mul(&b, &b, p), m, p);
            e >>= 1;
        }
        acc
    }

    fn is_one(a: &[u64]) -> bool {
        let mut a = a.to_vec();
        trim(&mut a);
        a == [1]
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0u64; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = (x + p - y) % p;
        }
        trim(&mut out);
        out
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// `x` has multiplicative order exactly `n` modulo `m` (which forces `m`
    /// irreducible when `n = p^deg − 1`).
    pub fn is_primitive(m: &[u64], p: u64, n: u64, prime_divisors: &[u64]) -> bool {
        let x = [0u64, 1];
        if !is_one(&powmod(&x, n, m, p)) {
            return false;
        }
        prime_divisors
            .iter()
            .all(|&r| !is_one(&powmod(&x, n / r, m, p)))
    }

    /// Irreducibility via `gcd(m, x^(p^i) − x) = 1` for `1 ≤ i ≤ deg/2`.
    pub fn is_irreducible(m: &[u64], p: u64) -> bool {
        let deg = m.len() - 1;
        if deg <= 1 {
            return deg == 1;
        }
        let x = vec![0u64, 1];
        let mut xp = x.clone();
        for _ in 1..=deg / 2 {
            xp = powmod(&xp, p, m, p);
            let g = gcd(m, &sub(&xp, &x, p), p);
            if g.len() > 1 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_of(f: &FiniteField, a: u32) -> u32 {
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = f.mul_idx(x, a);
            k += 1;
        }
        k
    }

    #[test]
    fn prime_field_generators() {
        // Orders of 1..4 mod 5 are 1, 4, 4, 2: smallest generator is 2.
        let f5 = FiniteField::new(5, 1).unwrap();
        assert_eq!(f5.omega().index(), 2);
        let f3 = FiniteField::new(3, 1).unwrap();
        assert_eq!(f3.omega().index(), 2);
        assert_eq!(order_of(&f3, 2), 2);
        let f2 = FiniteField::new(2, 1).unwrap();
        assert_eq!(f2.omega().index(), 1);
    }

    #[test]
    fn gf9_modulus_is_smallest_primitive_quadratic() {
        // Monic irreducible quadratics over GF(3): x^2+1, x^2+x+2, x^2+2x+2.
        // x^2+1 gives x of order 4, so x^2+x+2 is the first primitive one.
        let brute: Vec<Vec<u64>> = (0..9u64)
            .map(|c| vec![c % 3, c / 3, 1])
            .filter(|m| m[0] != 0 && (0..3).all(|r| (m[0] + m[1] * r + r * r) % 3 != 0))
            .collect();
        assert_eq!(brute, vec![vec![1, 0, 1], vec![2, 1, 1], vec![2, 2, 1]]);
        let f9 = FiniteField::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[2, 1, 1]);
        assert_eq!(order_of(&f9, f9.omega().index()), 8);
        assert_eq!(f9.pow(f9.omega(), 8).unwrap(), f9.one());
    }

    #[test]
    fn inverse_and_negation() {
        let f7 = FiniteField::new(7, 1).unwrap();
        let three = f7.element(3).unwrap();
        assert_eq!(f7.inv(three).unwrap().index(), 5);
        assert_eq!(f7.neg(f7.zero()).unwrap(), f7.zero());
        assert_eq!(f7.inv(f7.zero()), Err(GfError::DivisionByZero));
        let f16 = FiniteField::new(2, 4).unwrap();
        assert_eq!(f16.neg(f16.zero()).unwrap(), f16.zero());
    }

    #[test]
    fn mismatch_and_errors() {
        let f7 = FiniteField::new(7, 1).unwrap();
        let f9 = FiniteField::new(3, 2).unwrap();
        assert_eq!(
            f7.add(f7.one(), f9.one()),
            Err(GfError::FieldMismatch(7, 9))
        );
        assert_eq!(FiniteField::new(6, 1).unwrap_err(), GfError::NotPrime(6));
        assert_eq!(
            FiniteField::new(2, 32).unwrap_err(),
            GfError::TooLarge { p: 2, d: 32 }
        );
        assert!(f7.element(7).is_err());
    }

    #[test]
    fn frobenius_examples() {
        let f9 = FiniteField::new(3, 2).unwrap();
        for c in 0..3 {
            let x = f9.element(c).unwrap();
            assert_eq!(f9.frobenius(x).unwrap(), x);
        }
        let w = f9.omega();
        assert_eq!(f9.frobenius(w).unwrap(), f9.pow(w, 3).unwrap());
        let f4 = FiniteField::new(2, 2).unwrap();
        let w = f4.omega();
        assert_eq!(f4.frobenius(f4.frobenius(w).unwrap()).unwrap(), w);
    }

    #[test]
    fn quadratic_residues_mod_13() {
        let f13 = FiniteField::new(13, 1).unwrap();
        let classes = f13.power_residue_classes(2).unwrap();
        let mut squares: Vec<u32> = (1..13u32).map(|x| x * x % 13).collect();
        squares.sort();
        squares.dedup();
        assert_eq!(squares, vec![1, 3, 4, 9, 10, 12]);
        let c0: Vec<u32> = classes[0].iter().map(|x| x.index()).collect();
        assert_eq!(c0, squares);
        assert_eq!(classes[1].len(), 6);
    }

    #[test]
    fn residue_class_sizes() {
        let f16 = FiniteField::new(2, 4).unwrap();
        let classes = f16.power_residue_classes(3).unwrap();
        assert_eq!(classes.len(), 3);
        assert!(classes.iter().all(|c| c.len() == 5));
        let whole = f16.power_residue_classes(1).unwrap();
        assert_eq!(whole[0].len(), 15);
        assert_eq!(
            f16.power_residue_classes(4).unwrap_err(),
            GfError::DoesNotDivide { e: 4, order: 15 }
        );
    }

    #[test]
    fn large_field_without_tables() {
        // 3^11 = 177147 exceeds the log-table limit.
        let f = FiniteField::new(3, 11).unwrap();
        assert!(f.exp.is_empty());
        let w = f.omega();
        let n = f.order() as u64 - 1;
        assert_eq!(f.pow(w, n).unwrap(), f.one());
        for r in crate::arith::prime_divisors(n) {
            assert_ne!(f.pow(w, n / r).unwrap(), f.one());
        }
        let x = f.element(12345).unwrap();
        let y = f.inv(x).unwrap();
        assert_eq!(f.mul(x, y).unwrap(), f.one());
    }

    #[test]
    fn moduli_are_irreducible() {
        for &(p, d) in &[(2, 2), (2, 3), (2, 4), (2, 6), (2, 8), (3, 2), (3, 4), (5, 2), (7, 2), (2, 12)] {
            let f = FiniteField::new(p, d).unwrap();
            let m: Vec<u64> = f.modulus().iter().map(|&c| c as u64).collect();
            assert!(poly::is_irreducible(&m, p as u64), "GF({p}^{d})");
        }
        // x^2 + 1 is reducible over GF(5) (2^2 = -1).
        assert!(!poly::is_irreducible(&[1, 0, 1], 5));
    }
}
