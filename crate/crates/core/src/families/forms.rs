//! Hamming, affine polar, bilinear forms and alternating forms graphs.

use crate::gf::FiniteField;
use crate::graphs::DenseGraph;
use crate::permgrp::{GeneratorSet, Permutation};

use super::onedim::field_of_order;
use super::space::{cayley_graph, ConnectionSet, VectorSpace};
use super::FamilyError;

/// `m × m` rook's graph: `(i, j)` is vertex `i·m + j`.
pub fn hamming2(m: usize) -> Result<DenseGraph, FamilyError> {
    if m < 2 {
        return Err(FamilyError::Unsupported(format!("hamming2 needs m >= 2, got {m}")));
    }
    if m * m > super::space::MAX_VERTICES {
        return Err(FamilyError::TooLarge);
    }
    Ok(DenseGraph::from_neighbours(m * m, |x| {
        let (i, j) = (x / m, x % m);
        (0..m)
            .filter(move |&c| c != j)
            .map(move |c| i * m + c)
            .chain((0..m).filter(move |&r| r != i).map(move |r| r * m + j))
    }))
}

/// `(Sym(m) × Sym(m)) : 2` in the product action.
pub(crate) fn hamming2_group(m: usize) -> GeneratorSet {
    let n = m * m;
    let map = |f: &dyn Fn(usize, usize) -> (usize, usize)| {
        let images = (0..n)
            .map(|x| {
                let (i, j) = f(x / m, x % m);
                (i * m + j) as u32
            })
            .collect();
        Permutation::new(images).unwrap()
    };
    let swap01 = |a: usize| match a {
        0 => 1,
        1 => 0,
        a => a,
    };
    let gens = vec![
        map(&|i, j| (swap01(i), j)),
        map(&|i, j| ((i + 1) % m, j)),
        map(&|i, j| (j, i)),
    ];
    GeneratorSet::new(n, gens).unwrap()
}

/// Plus or minus type of a nondegenerate quadratic form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Smallest `(a, b)` with `t² + a·t + b` irreducible over the field.
fn anisotropic_coeffs(f: &FiniteField) -> (u32, u32) {
    let q = f.order();
    for a in 0..q {
        for b in 1..q {
            let has_root = (0..q).any(|t| {
                let v = f.add_idx(f.add_idx(f.mul_idx(t, t), f.mul_idx(a, t)), b);
                v == 0
            });
            if !has_root {
                return (a, b);
            }
        }
    }
    unreachable!("irreducible quadratics exist over every finite field")
}

/// Quadratic form on `GF(q)^(2m)`: hyperbolic pairs `x_{2i} x_{2i+1}`, with
/// the last pair replaced by the norm form `u² + a·uv + b·v²` for the
/// minus type.
#[derive(Debug, Clone)]
pub struct QuadraticForm {
    field: FiniteField,
    m: usize,
    sign: Sign,
    ab: (u32, u32),
}

impl QuadraticForm {
    pub fn new(field: FiniteField, m: usize, sign: Sign) -> Self {
        let ab = anisotropic_coeffs(&field);
        QuadraticForm { field, m, sign, ab }
    }

    pub fn eval(&self, x: &[u32]) -> u32 {
        let f = &self.field;
        let mut acc = 0;
        for i in 0..self.m {
            let (u, v) = (x[2 * i], x[2 * i + 1]);
            let term = if i + 1 == self.m && self.sign == Sign::Minus {
                let (a, b) = self.ab;
                let uu = f.mul_idx(u, u);
                let uv = f.mul_idx(a, f.mul_idx(u, v));
                let vv = f.mul_idx(b, f.mul_idx(v, v));
                f.add_idx(f.add_idx(uu, uv), vv)
            } else {
                f.mul_idx(u, v)
            };
            acc = f.add_idx(acc, term);
        }
        acc
    }
}

pub(crate) fn affine_polar_set(
    m: usize,
    q: u64,
    sign: Sign,
) -> Result<(VectorSpace, ConnectionSet), FamilyError> {
    if m < 2 {
        return Err(FamilyError::Unsupported(format!("affine polar needs m >= 2, got {m}")));
    }
    let f = field_of_order(q)?;
    let sp = VectorSpace::new(f.clone(), 2 * m)?;
    let form = QuadraticForm::new(f, m, sign);
    let singular = (1..sp.size() as u32).filter(|&x| form.eval(&sp.coords(x)) == 0);
    let cs = ConnectionSet::new(sp.clone(), singular)?;
    Ok((sp, cs))
}

/// `VO^±_{2m}(q)`: `x ~ y` iff `Q(x − y) = 0`.
pub fn affine_polar(m: usize, q: u64, sign: Sign) -> Result<DenseGraph, FamilyError> {
    Ok(cayley_graph(&affine_polar_set(m, q, sign)?.1))
}

/// Generators of `GL_n(q)` as row-major index matrices: elementary matrices
/// `I + λ E_{i,i±1}` for `λ` in an additive basis, and `diag(ω, 1, …, 1)`.
pub(crate) fn gl_generators(f: &FiniteField, n: usize) -> Vec<Vec<u32>> {
    let id = |_: ()| {
        let mut a = vec![0u32; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        a
    };
    let mut out = Vec::new();
    let p = f.characteristic();
    for i in 0..n.saturating_sub(1) {
        let mut lambda = 1u32;
        for _ in 0..f.degree() {
            for (r, c) in [(i, i + 1), (i + 1, i)] {
                let mut a = id(());
                a[r * n + c] = lambda;
                out.push(a);
            }
            lambda *= p;
        }
    }
    if f.order() > 2 {
        let mut a = id(());
        a[0] = f.omega().index();
        out.push(a);
    }
    out
}

/// `A · B` for index matrices of shapes `r × k` and `k × c`.
pub(crate) fn mat_mul(f: &FiniteField, a: &[u32], b: &[u32], r: usize, k: usize, c: usize) -> Vec<u32> {
    let mut out = vec![0u32; r * c];
    for i in 0..r {
        for j in 0..c {
            let mut acc = 0;
            for t in 0..k {
                acc = f.add_idx(acc, f.mul_idx(a[i * k + t], b[t * c + j]));
            }
            out[i * c + j] = acc;
        }
    }
    out
}

fn frobenius_perm(sp: &VectorSpace) -> Option<Permutation> {
    let f = sp.field();
    (f.degree() > 1).then(|| sp.coordinate_map(|x| x.iter().map(|&c| f.frobenius_idx(c)).collect()))
}

/// Similitude group of the plus-type form on `GF(q)^4`, realised through
/// `(x0, x1, x2, x3) ↔ [[x0, x2], [−x3, x1]]` with `Q = det`: the maps
/// `X ↦ AX`, `X ↦ XB`, transposition and the field automorphism.
pub(crate) fn affine_polar_group(sp: &VectorSpace) -> GeneratorSet {
    let f = sp.field().clone();
    let to_m = |x: &[u32]| vec![x[0], x[2], f.neg_idx(x[3]), x[1]];
    let from_m = |m: &[u32]| vec![m[0], m[3], m[1], f.neg_idx(m[2])];
    let mut gens = sp.translations();
    for a in gl_generators(&f, 2) {
        gens.push(sp.coordinate_map(|x| from_m(&mat_mul(&f, &a, &to_m(x), 2, 2, 2))));
        gens.push(sp.coordinate_map(|x| from_m(&mat_mul(&f, &to_m(x), &a, 2, 2, 2))));
    }
    gens.push(sp.coordinate_map(|x| {
        let m = to_m(x);
        from_m(&[m[0], m[2], m[1], m[3]])
    }));
    gens.extend(frobenius_perm(sp));
    GeneratorSet::new(sp.size(), gens).unwrap()
}

pub(crate) fn bilinear_set(q: u64, m: usize) -> Result<(VectorSpace, ConnectionSet), FamilyError> {
    if m < 2 {
        return Err(FamilyError::Unsupported(format!("bilinear forms need m >= 2, got {m}")));
    }
    let f = field_of_order(q)?;
    let sp = VectorSpace::new(f.clone(), 2 * m)?;
    let qq = f.order();
    // Rank-one matrices are the outer products u·vᵀ.
    let mut members = Vec::new();
    for u0 in 0..qq {
        for u1 in 0..qq {
            if u0 == 0 && u1 == 0 {
                continue;
            }
            for v in 1..qq.pow(m as u32) {
                let vc: Vec<u32> = (0..m).map(|j| (v / qq.pow(j as u32)) % qq).collect();
                let entries: Vec<u32> = [u0, u1]
                    .iter()
                    .flat_map(|&u| vc.iter().map(move |&c| (u, c)))
                    .map(|(u, c)| f.mul_idx(u, c))
                    .collect();
                members.push(sp.from_coords(&entries));
            }
        }
    }
    let cs = ConnectionSet::new(sp.clone(), members)?;
    Ok((sp, cs))
}

/// `H_q(2, m)`: `2 × m` matrices, adjacent when their difference has rank 1.
/// Entry `(r, c)` is coordinate `r·m + c`.
pub fn bilinear_forms(q: u64, m: usize) -> Result<DenseGraph, FamilyError> {
    Ok(cayley_graph(&bilinear_set(q, m)?.1))
}

/// `X ↦ AXB` for `A ∈ GL_2(q)`, `B ∈ GL_m(q)`, plus the field automorphism.
pub(crate) fn bilinear_group(sp: &VectorSpace, m: usize) -> GeneratorSet {
    let f = sp.field().clone();
    let mut gens = sp.translations();
    for a in gl_generators(&f, 2) {
        gens.push(sp.coordinate_map(|x| mat_mul(&f, &a, x, 2, 2, m)));
    }
    for b in gl_generators(&f, m) {
        gens.push(sp.coordinate_map(|x| mat_mul(&f, x, &b, 2, m, m)));
    }
    gens.extend(frobenius_perm(sp));
    GeneratorSet::new(sp.size(), gens).unwrap()
}

/// Positions `(i, j)`, `i < j`, of a 5×5 alternating matrix in bit order.
const ALT_POSITIONS: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

fn alt_to_matrix(x: u32) -> [[u8; 5]; 5] {
    let mut a = [[0u8; 5]; 5];
    for (bit, &(i, j)) in ALT_POSITIONS.iter().enumerate() {
        let v = (x >> bit & 1) as u8;
        a[i][j] = v;
        a[j][i] = v;
    }
    a
}

fn alt_from_matrix(a: &[[u8; 5]; 5]) -> u32 {
    ALT_POSITIONS
        .iter()
        .enumerate()
        .map(|(bit, &(i, j))| (a[i][j] as u32 & 1) << bit)
        .sum()
}

pub(crate) fn alternating_set() -> Result<(VectorSpace, ConnectionSet), FamilyError> {
    let sp = VectorSpace::new(FiniteField::new(2, 1)?, 10)?;
    // Rank-two alternating matrices are the nonzero wedges u ∧ v.
    let mut members = Vec::new();
    for u in 0..32u32 {
        for v in 0..32u32 {
            let mut a = [[0u8; 5]; 5];
            for (i, row) in a.iter_mut().enumerate() {
                for (j, slot) in row.iter_mut().enumerate() {
                    *slot = ((u >> i & v >> j) ^ (u >> j & v >> i)) as u8 & 1;
                }
            }
            let x = alt_from_matrix(&a);
            if x != 0 {
                members.push(x);
            }
        }
    }
    let cs = ConnectionSet::new(sp.clone(), members)?;
    Ok((sp, cs))
}

/// `A(n, q)`: alternating `n × n` matrices adjacent when their difference
/// has rank 2. Only `A(5, 2)` is available; bit `t` of a vertex is the
/// `t`-th upper-triangle entry in row-major order.
pub fn alternating_forms(n: usize, q: u64) -> Result<DenseGraph, FamilyError> {
    if (n, q) != (5, 2) {
        return Err(FamilyError::Unsupported(format!("alternating forms A({n},{q})")));
    }
    Ok(cayley_graph(&alternating_set()?.1))
}

/// `X ↦ AXAᵀ` for `A ∈ GL_5(2)`, with translations.
pub(crate) fn alternating_group(sp: &VectorSpace) -> GeneratorSet {
    let mut gens = sp.translations();
    for i in 0..4 {
        for (r, c) in [(i, i + 1), (i + 1, i)] {
            // A = I + E_{rc}: AXAᵀ adds row c to row r, then column c to column r.
            let images = (0..1024u32)
                .map(|x| {
                    let mut a = alt_to_matrix(x);
                    let src = a[c];
                    for (dst, s) in a[r].iter_mut().zip(src) {
                        *dst ^= s;
                    }
                    for row in a.iter_mut() {
                        row[r] ^= row[c];
                    }
                    alt_from_matrix(&a)
                })
                .collect();
            gens.push(Permutation::new(images).unwrap());
        }
    }
    GeneratorSet::new(1024, gens).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::space::matrix_rank;

    #[test]
    fn hamming_params() {
        let p = hamming2(5).unwrap().srg_params().unwrap();
        assert_eq!((p.n, p.k, p.lambda, p.mu), (25, 8, 3, 2));
        let g = hamming2(4).unwrap();
        for h in hamming2_group(4).gens() {
            assert!(g.is_automorphism(h.images()));
        }
    }

    #[test]
    fn polar_valencies_by_direct_count() {
        // Nonzero singular vectors, counted by evaluating the form directly.
        for (m, q, sign, want) in [
            (2, 2, Sign::Minus, 5),
            (2, 2, Sign::Plus, 9),
            (2, 3, Sign::Plus, 32),
            (2, 3, Sign::Minus, 20),
            (3, 2, Sign::Minus, 27),
        ] {
            let g = affine_polar(m, q, sign).unwrap();
            assert_eq!(g.degree(0), want, "VO{}{}({q})", sign.symbol(), 2 * m);
        }
    }

    #[test]
    fn polar_group_preserves_graph() {
        let (sp, cs) = affine_polar_set(2, 3, Sign::Plus).unwrap();
        let g = cayley_graph(&cs);
        for h in affine_polar_group(&sp).gens() {
            assert!(g.is_automorphism(h.images()));
        }
    }

    #[test]
    fn bilinear_rank_one_count() {
        let (sp, cs) = bilinear_set(2, 3).unwrap();
        assert_eq!(cs.len(), 21);
        let f = sp.field();
        let by_rank = (1..sp.size() as u32)
            .filter(|&x| matrix_rank(f, 2, 3, &sp.coords(x)) == 1)
            .count();
        assert_eq!(by_rank, 21);
        let (sp, cs) = bilinear_set(3, 2).unwrap();
        let by_rank = (1..sp.size() as u32)
            .filter(|&x| matrix_rank(sp.field(), 2, 2, &sp.coords(x)) == 1)
            .count();
        assert_eq!(cs.len(), by_rank);
        let g = cayley_graph(&cs);
        for h in bilinear_group(&sp, 2).gens() {
            assert!(g.is_automorphism(h.images()));
        }
    }

    #[test]
    fn alternating_rank_two_count() {
        let (sp, cs) = alternating_set().unwrap();
        let f = sp.field().clone();
        let rank2 = (1..1024u32)
            .filter(|&x| {
                let a = alt_to_matrix(x);
                let flat: Vec<u32> = a.iter().flatten().map(|&v| v as u32).collect();
                matrix_rank(&f, 5, 5, &flat) == 2
            })
            .count();
        assert_eq!(cs.len(), rank2);
        assert_eq!(rank2, 155);
        assert!(alternating_forms(6, 2).is_err());
    }

    #[test]
    fn gl_generators_generate() {
        use crate::permgrp::{group_order, MatrixGroupSpec, Matrix, linear_perms};
        let f = FiniteField::new(3, 1).unwrap();
        let gens = gl_generators(&f, 3)
            .into_iter()
            .map(|a| Matrix::new(3, 3, a).unwrap())
            .collect();
        let spec = MatrixGroupSpec::new(3, 3, gens).unwrap();
        // |GL_3(3)| = 26·24·18
        assert_eq!(group_order(&linear_perms(&spec).unwrap()), (26u32 * 24 * 18).into());
    }
}
