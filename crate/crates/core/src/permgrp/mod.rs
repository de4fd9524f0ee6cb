//! Permutation groups: orbits, Schreier–Sims, orbitals and matrix groups
//! over prime fields.

mod matrix;
mod orbitals;
mod perm;
mod schreier;
mod semilinear;
mod sl2;

use thiserror::Error;

pub use matrix::{affine_perms, linear_perms, Matrix, MatrixGroupSpec};
pub use orbitals::{rank_and_subdegrees, RankInfo, MAX_PAIR_DEGREE};
pub use perm::{GeneratorSet, Permutation};
pub use schreier::{group_order, Bsgs};
pub use semilinear::semilinear_perms;
pub use sl2::{
    central_product_with_scalars, enumerate_matrix_group, find_sl25_in_gl2, normalizer_in_gl2,
    q8_in_sl2, sl23_in_sl2, DEFAULT_SL25_BUDGET, DEFAULT_SL25_SEED,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("image list is not a bijection")]
    NotBijection,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group is not transitive (orbit of 0 has size {orbit} of {degree})")]
    NotTransitive { orbit: usize, degree: usize },
    #[error("degree {0} too large for pair-orbit closure")]
    TooLarge(usize),
    #[error("generator {0} is singular")]
    SingularGenerator(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("matrix entries do not fit {d}x{d} over GF({p})")]
    BadMatrix { p: u32, d: usize },
    #[error("matrix list is not closed under multiplication")]
    NotASubgroup,
    #[error("no SL(2,5) found in SL(2,{p}) after {tries} attempts")]
    NotFound { p: u32, tries: u64 },
    #[error("scalar order {order} does not divide {p} - 1")]
    BadOrder { p: u32, order: u64 },
    #[error("{e} does not divide q - 1 = {q_minus_1}")]
    DoesNotDivide { e: u64, q_minus_1: u64 },
    #[error("spec file: {0}")]
    Parse(String),
}

pub fn orbit(gs: &GeneratorSet, point: u32) -> Vec<u32> {
    gs.orbit(point)
}

pub fn schreier_sims(gs: &GeneratorSet) -> Bsgs {
    Bsgs::new(gs, &[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn gs(n: usize, gens: Vec<Vec<u32>>) -> GeneratorSet {
        GeneratorSet::new(
            n,
            gens.into_iter()
                .map(|g| Permutation::new(g).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn permutation_basics() {
        assert_eq!(Permutation::new(vec![0, 0]), Err(PermError::NotBijection));
        let a = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        assert_eq!(a.images(), &[1, 2, 3, 0]);
        assert_eq!(a.then(&b).apply(3), 1);
        assert!(a.then(&a.inverse()).is_identity());
        assert_eq!(a.order(), 4);
        assert_eq!(Permutation::from_cycles(5, &[&[0, 1], &[2, 3, 4]]).unwrap().order(), 6);
    }

    #[test]
    fn orbits_small() {
        let id = gs(5, vec![]);
        assert_eq!(orbit(&id, 3), vec![3]);
        let cyc = gs(5, vec![vec![1, 2, 3, 4, 0]]);
        assert_eq!(orbit(&cyc, 2).len(), 5);
        let two = gs(4, vec![vec![1, 0, 2, 3]]);
        assert_eq!(two.orbits(), vec![vec![0, 1], vec![2], vec![3]]);
    }

    #[test]
    fn schreier_sims_small_groups() {
        let s4 = gs(4, vec![vec![1, 0, 2, 3], vec![1, 2, 3, 0]]);
        assert_eq!(schreier_sims(&s4).order(), BigUint::from(24u32));
        let c5 = gs(5, vec![vec![1, 2, 3, 4, 0]]);
        assert_eq!(schreier_sims(&c5).order(), BigUint::from(5u32));
        let triv = gs(6, vec![]);
        assert_eq!(schreier_sims(&triv).order(), BigUint::from(1u32));
        let s9 = gs(
            9,
            vec![vec![1, 0, 2, 3, 4, 5, 6, 7, 8], vec![1, 2, 3, 4, 5, 6, 7, 8, 0]],
        );
        let b = schreier_sims(&s9);
        assert_eq!(b.order(), BigUint::from(362_880u32));
        assert!(b.contains(&Permutation::from_cycles(9, &[&[3, 7, 8]]).unwrap()));
    }

    #[test]
    fn membership() {
        // A4 = <(0 1 2), (1 2 3)> contains no transpositions.
        let a4 = gs(4, vec![vec![1, 2, 0, 3], vec![0, 2, 3, 1]]);
        let b = schreier_sims(&a4);
        assert_eq!(b.order(), BigUint::from(12u32));
        assert!(!b.contains(&Permutation::from_cycles(4, &[&[0, 1]]).unwrap()));
        assert!(b.contains(&Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()));
    }

    #[test]
    fn prescribed_base_prefix() {
        let s5 = gs(5, vec![vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]]);
        let b = Bsgs::new(&s5, &[3]);
        assert_eq!(b.base()[0], 3);
        assert_eq!(b.order(), BigUint::from(120u32));
        let stab = GeneratorSet::new(5, b.stabilizer_gens(1)).unwrap();
        assert_eq!(stab.orbit(3), vec![3]);
        assert_eq!(group_order(&stab), BigUint::from(24u32));
    }
}
