//! Searches inside `GL_2(p)`: normalisers, quaternion and binary polyhedral
//! subgroups, and central products with scalars.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::matrix::{linear_perms, Matrix, MatrixGroupSpec};
use super::schreier::group_order;
use super::PermError;
use crate::arith::{is_prime, mod_pow};
use crate::gf::FiniteField;

pub const DEFAULT_SL25_SEED: u64 = 0x5eed_0005;
pub const DEFAULT_SL25_BUDGET: u64 = 200_000;

type M2 = [u32; 4];

fn m2(m: &Matrix) -> M2 {
    let e = m.entries();
    [e[0], e[1], e[2], e[3]]
}

fn to_matrix(p: u32, a: M2) -> Matrix {
    Matrix::new(p, 2, a.to_vec()).expect("entries reduced mod p")
}

#[inline]
fn mul2(p: u32, a: M2, b: M2) -> M2 {
    let p = p as u64;
    let [a0, a1, a2, a3] = a.map(u64::from);
    let [b0, b1, b2, b3] = b.map(u64::from);
    [
        ((a0 * b0 + a1 * b2) % p) as u32,
        ((a0 * b1 + a1 * b3) % p) as u32,
        ((a2 * b0 + a3 * b2) % p) as u32,
        ((a2 * b1 + a3 * b3) % p) as u32,
    ]
}

#[inline]
fn det2(p: u32, a: M2) -> u32 {
    let p = p as u64;
    ((a[0] as u64 * a[3] as u64 + p * p - a[1] as u64 * a[2] as u64) % p) as u32
}

fn inv2(p: u32, a: M2) -> Option<M2> {
    let d = det2(p, a);
    if d == 0 {
        return None;
    }
    let di = mod_pow(d as u64, p as u64 - 2, p as u64);
    let s = |x: u32| ((x as u64 * di) % p as u64) as u32;
    let neg = |x: u32| (p - x) % p;
    Some([s(a[3]), s(neg(a[1])), s(neg(a[2])), s(a[0])])
}

fn pow2(p: u32, a: M2, mut e: u64) -> M2 {
    let mut base = a;
    let mut acc = [1, 0, 0, 1];
    while e > 0 {
        if e & 1 == 1 {
            acc = mul2(p, acc, base);
        }
        base = mul2(p, base, base);
        e >>= 1;
    }
    acc
}

/// All elements of the group generated by `gens`, or `None` if it has more
/// than `limit` elements.
pub fn enumerate_matrix_group(gens: &[Matrix], limit: usize) -> Option<Vec<Matrix>> {
    let first = gens.first()?;
    let id = Matrix::identity(first.characteristic(), first.dim());
    let mut seen: HashSet<Matrix> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let y = out[i].mul(g);
            if !seen.contains(&y) {
                if out.len() == limit {
                    return None;
                }
                seen.insert(y.clone());
                out.push(y);
            }
        }
        i += 1;
    }
    Some(out)
}

/// Closure of 2×2 generators, extended in place when a generator is added.
struct Closure2 {
    p: u32,
    gens: Vec<M2>,
    elems: Vec<M2>,
    seen: HashSet<M2>,
}

impl Closure2 {
    fn new(p: u32) -> Self {
        Closure2 {
            p,
            gens: Vec::new(),
            elems: vec![[1, 0, 0, 1]],
            seen: HashSet::from([[1, 0, 0, 1]]),
        }
    }

    fn add_generator(&mut self, g: M2) {
        self.gens.push(g);
        let mut i = 0;
        while i < self.elems.len() {
            for k in 0..self.gens.len() {
                let y = mul2(self.p, self.elems[i], self.gens[k]);
                if self.seen.insert(y) {
                    self.elems.push(y);
                }
            }
            i += 1;
        }
    }
}

fn check_field(p: u32) -> Result<(), PermError> {
    if !is_prime(p as u64) {
        return Err(PermError::NotPrime(p as u64));
    }
    Ok(())
}

/// `N_{GL_2(p)}(R)` by scanning every invertible matrix, reduced to a small
/// generating set by greedy closure over the scan in lexicographic order.
pub fn normalizer_in_gl2(p: u32, subgroup: &[Matrix]) -> Result<MatrixGroupSpec, PermError> {
    check_field(p)?;
    if subgroup.iter().any(|m| m.characteristic() != p || m.dim() != 2) {
        return Err(PermError::BadMatrix { p, d: 2 });
    }
    let r: Vec<M2> = subgroup.iter().map(m2).collect();
    let rset: HashSet<M2> = r.iter().copied().collect();
    if r.is_empty() || r.iter().any(|&a| r.iter().any(|&b| !rset.contains(&mul2(p, a, b)))) {
        return Err(PermError::NotASubgroup);
    }
    // Conjugating generators of R suffices, but R is small enough to use it whole.
    let normal: Vec<M2> = (0..p)
        .into_par_iter()
        .flat_map_iter(|a| {
            let r = &r;
            let rset = &rset;
            (0..p * p * p).filter_map(move |rest| {
                let g = [a, rest / (p * p), (rest / p) % p, rest % p];
                let gi = inv2(p, g)?;
                r.iter()
                    .all(|&x| rset.contains(&mul2(p, mul2(p, gi, x), g)))
                    .then_some(g)
            })
        })
        .collect();
    // into_par_iter over a range preserves order, so `normal` is sorted.
    let target = normal.len();
    let mut cl = Closure2::new(p);
    for &g in &normal {
        if cl.elems.len() == target {
            break;
        }
        if !cl.seen.contains(&g) {
            cl.add_generator(g);
        }
    }
    debug_assert_eq!(cl.elems.len(), target);
    let gens = cl.gens.into_iter().map(|g| to_matrix(p, g)).collect();
    MatrixGroupSpec::new(p, 2, gens)
}

/// Random `SL_2(p)` element with the given trace.
fn random_with_trace(p: u32, trace: u32, rng: &mut ChaCha8Rng) -> M2 {
    let pp = p as u64;
    let a = rng.gen_range(0..p);
    let b = rng.gen_range(1..p);
    let d = (trace + p - a) % p;
    // a·d − b·c = 1  ⇒  c = (a·d − 1) / b
    let ad = a as u64 * d as u64 % pp;
    let num = (ad + pp - 1) % pp;
    let c = num * mod_pow(b as u64, pp - 2, pp) % pp;
    [a, b, c as u32, d]
}

/// Finds `SL_2(5) ≤ SL_2(p)` as `⟨s, t⟩` with `s² = t³ = (st)⁵ = −I`.
/// Candidates are drawn from a seeded generator; at most `budget` pairs
/// are tried.
pub fn find_sl25_in_gl2(p: u32, seed: u64, budget: u64) -> Result<MatrixGroupSpec, PermError> {
    check_field(p)?;
    if p == 2 {
        return Err(PermError::NotFound { p, tries: 0 });
    }
    let minus = [p - 1, 0, 0, p - 1];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..budget {
        let s = random_with_trace(p, 0, &mut rng);
        let t = random_with_trace(p, 1, &mut rng);
        if pow2(p, mul2(p, s, t), 5) != minus {
            continue;
        }
        let gens = vec![to_matrix(p, s), to_matrix(p, t)];
        let Some(elems) = enumerate_matrix_group(&gens, 121) else {
            continue;
        };
        let involutions = elems
            .iter()
            .filter(|m| {
                let m = m2(m);
                m != [1, 0, 0, 1] && mul2(p, m, m) == [1, 0, 0, 1]
            })
            .count();
        let spec = MatrixGroupSpec::new(p, 2, gens)?;
        let order = group_order(&linear_perms(&spec)?);
        if elems.len() == 120 && involutions == 1 && order == 120u32.into() {
            return Ok(spec);
        }
        debug_assert!(false, "presentation forces SL(2,5) (attempt {attempt})");
    }
    Err(PermError::NotFound { p, tries: budget })
}

/// Adjoins the scalar matrix of multiplicative order `scalar_order`.
pub fn central_product_with_scalars(
    s: &MatrixGroupSpec,
    scalar_order: u64,
) -> Result<MatrixGroupSpec, PermError> {
    let p = s.p;
    if scalar_order == 0 || !(p as u64 - 1).is_multiple_of(scalar_order) {
        return Err(PermError::BadOrder {
            p,
            order: scalar_order,
        });
    }
    if scalar_order == 1 {
        return Ok(s.clone());
    }
    let f = FiniteField::new(p, 1).map_err(|_| PermError::NotPrime(p as u64))?;
    let c = f.omega_pow((p as u64 - 1) / scalar_order);
    let mut gens = s.gens.clone();
    gens.push(Matrix::scalar(p, s.d, c));
    MatrixGroupSpec::new(p, s.d, gens)
}

/// `Q_8 = ⟨[[0,−1],[1,0]], [[a,b],[b,−a]]⟩` with `a² + b² = −1`, taking the
/// lexicographically smallest `(a, b)`.
pub fn q8_in_sl2(p: u32) -> Result<Vec<Matrix>, PermError> {
    check_field(p)?;
    if p == 2 {
        return Err(PermError::BadMatrix { p, d: 2 });
    }
    let pp = p as u64;
    let (a, b) = (0..p)
        .flat_map(|a| (0..p).map(move |b| (a, b)))
        .find(|&(a, b)| (a as u64 * a as u64 + b as u64 * b as u64 + 1).is_multiple_of(pp))
        .expect("-1 is a sum of two squares mod every odd prime");
    Ok(vec![
        to_matrix(p, [0, p - 1, 1, 0]),
        to_matrix(p, [a, b, b, (p - a) % p]),
    ])
}

/// `SL_2(3) = Q_8 : 3`, adding the smallest element of order 3 in `SL_2(p)`
/// that normalises the quaternion group from [`q8_in_sl2`].
pub fn sl23_in_sl2(p: u32) -> Result<Vec<Matrix>, PermError> {
    let mut gens = q8_in_sl2(p)?;
    let q8 = enumerate_matrix_group(&gens, 8).expect("Q8 has order 8");
    let qset: HashSet<M2> = q8.iter().map(m2).collect();
    let id = [1, 0, 0, 1];
    let x = (0..p * p * p * p)
        .map(|k| [k / (p * p * p), (k / (p * p)) % p, (k / p) % p, k % p])
        .find(|&g| {
            det2(p, g) == 1
                && g != id
                && pow2(p, g, 3) == id
                && {
                    let gi = inv2(p, g).unwrap();
                    qset.iter().all(|&r| qset.contains(&mul2(p, mul2(p, gi, r), g)))
                }
        })
        .expect("SL(2,3) embeds in SL(2,p) for odd p");
    gens.push(to_matrix(p, x));
    Ok(gens)
}
