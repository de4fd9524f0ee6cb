use super::perm::{GeneratorSet, Permutation};
use super::PermError;
use crate::gf::FiniteField;

/// One-dimensional semilinear group on `GF(q)`: translations, `x ↦ ω^e x`
/// and, if requested, `x ↦ ω^twist · x^p`.
pub fn semilinear_perms(
    field: &FiniteField,
    e: u64,
    include_frobenius: bool,
    twist: u64,
) -> Result<GeneratorSet, PermError> {
    let q = field.order() as usize;
    let q1 = q as u64 - 1;
    if e == 0 || !q1.is_multiple_of(e) {
        return Err(PermError::DoesNotDivide { e, q_minus_1: q1 });
    }
    let mut gens = Vec::new();
    let mut step = 1u32;
    for _ in 0..field.degree() {
        let images = (0..q as u32).map(|x| field.add_idx(x, step)).collect();
        gens.push(Permutation::from_images_unchecked(images));
        step *= field.characteristic();
    }
    let c = field.omega_pow(e);
    let images = (0..q as u32).map(|x| field.mul_idx(c, x)).collect();
    gens.push(Permutation::from_images_unchecked(images));
    if include_frobenius {
        let w = field.omega_pow(twist);
        let images = (0..q as u32)
            .map(|x| field.mul_idx(w, field.frobenius_idx(x)))
            .collect();
        gens.push(Permutation::from_images_unchecked(images));
    }
    GeneratorSet::new(q, gens)
}
