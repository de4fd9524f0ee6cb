//! Cayley graphs on `GF(q)` with multiplicative-coset connection sets.

use crate::arith::{multiplicative_order, prime_power};
use crate::gf::FiniteField;
use crate::graphs::DenseGraph;
use crate::permgrp::{semilinear_perms, GeneratorSet};

use super::space::{cayley_graph, ConnectionSet, VectorSpace};
use super::FamilyError;

pub(crate) fn field_of_order(q: u64) -> Result<FiniteField, FamilyError> {
    let (p, d) = prime_power(q).ok_or(FamilyError::NotPrimePower(q))?;
    Ok(FiniteField::new(p, d)?)
}

fn coset_union(field: &FiniteField, e: u32, classes: &[usize]) -> Result<ConnectionSet, FamilyError> {
    let cls = field.power_residue_classes(e)?;
    let members = classes
        .iter()
        .flat_map(|&c| cls[c].iter().map(|x| x.index()))
        .collect::<Vec<_>>();
    ConnectionSet::new(VectorSpace::new(field.clone(), 1)?, members)
}

pub(crate) fn paley_set(q: u64) -> Result<(FiniteField, ConnectionSet), FamilyError> {
    if q % 4 != 1 {
        return Err(FamilyError::BadCongruence(format!("paley needs q = 1 mod 4, got {q}")));
    }
    let f = field_of_order(q)?;
    let cs = coset_union(&f, 2, &[0])?;
    Ok((f, cs))
}

/// Paley graph: `x ~ y` iff `x − y` is a nonzero square.
pub fn paley(q: u64) -> Result<DenseGraph, FamilyError> {
    Ok(cayley_graph(&paley_set(q)?.1))
}

pub(crate) fn peisert_set(q: u64) -> Result<(FiniteField, ConnectionSet), FamilyError> {
    let f = field_of_order(q)?;
    let (p, d) = (f.characteristic(), f.degree());
    if p % 4 != 3 || d % 2 != 0 {
        return Err(FamilyError::BadCongruence(format!(
            "peisert needs p = 3 mod 4 and even degree, got {p}^{d}"
        )));
    }
    let cs = coset_union(&f, 4, &[0, 1])?;
    Ok((f, cs))
}

/// Peisert graph: connection set `C ∪ Cω` with `C = ⟨ω⁴⟩`.
pub fn peisert(q: u64) -> Result<DenseGraph, FamilyError> {
    Ok(cayley_graph(&peisert_set(q)?.1))
}

pub(crate) fn vls_set(q: u64, e: u32) -> Result<(FiniteField, ConnectionSet), FamilyError> {
    let f = field_of_order(q)?;
    let (p, d) = (f.characteristic(), f.degree());
    if e == 2 {
        return Err(FamilyError::Unsupported("e = 2 is the Paley graph".into()));
    }
    if !crate::arith::is_prime(e as u64) {
        return Err(FamilyError::OrderCondition { p, e });
    }
    let ord = multiplicative_order(p as u64 % e as u64, e as u64);
    if ord != Some(e as u64 - 1) || d % (e - 1) != 0 {
        return Err(FamilyError::OrderCondition { p, e });
    }
    let cs = coset_union(&f, e, &[0])?;
    Ok((f, cs))
}

/// Van Lint–Schrijver graph: connection set `⟨ω^e⟩`.
pub fn van_lint_schrijver(q: u64, e: u32) -> Result<DenseGraph, FamilyError> {
    Ok(cayley_graph(&vls_set(q, e)?.1))
}

pub(crate) fn paley_group(f: &FiniteField) -> GeneratorSet {
    semilinear_perms(f, 2, true, 0).expect("2 divides q - 1")
}

pub(crate) fn peisert_group(f: &FiniteField) -> GeneratorSet {
    semilinear_perms(f, 4, true, 1).expect("4 divides q - 1")
}

pub(crate) fn vls_group(f: &FiniteField, e: u32) -> GeneratorSet {
    semilinear_perms(f, e as u64, true, 0).expect("e divides q - 1")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valencies() {
        assert_eq!(paley(13).unwrap().degree(0), 6);
        assert_eq!(peisert(49).unwrap().degree(0), 24);
        assert_eq!(van_lint_schrijver(16, 3).unwrap().degree(0), 5);
        assert_eq!(van_lint_schrijver(25, 3).unwrap().degree(0), 8);
        assert_eq!(van_lint_schrijver(64, 3).unwrap().degree(0), 21);
        assert_eq!(van_lint_schrijver(81, 5).unwrap().degree(0), 16);
    }

    #[test]
    fn precondition_errors() {
        assert!(matches!(paley(7), Err(FamilyError::BadCongruence(_))));
        assert!(matches!(paley(21), Err(FamilyError::NotPrimePower(21))));
        assert!(matches!(peisert(25), Err(FamilyError::BadCongruence(_))));
        assert!(matches!(peisert(27), Err(FamilyError::BadCongruence(_))));
        assert!(matches!(van_lint_schrijver(9, 2), Err(FamilyError::Unsupported(_))));
        // ord_7(2) = 3, not 6.
        assert!(matches!(
            van_lint_schrijver(64, 7),
            Err(FamilyError::OrderCondition { p: 2, e: 7 })
        ));
    }

    #[test]
    fn groups_preserve_graphs() {
        for (g, gs) in [
            (paley(25).unwrap(), paley_group(&field_of_order(25).unwrap())),
            (peisert(81).unwrap(), peisert_group(&field_of_order(81).unwrap())),
            (
                van_lint_schrijver(64, 3).unwrap(),
                vls_group(&field_of_order(64).unwrap(), 3),
            ),
        ] {
            for h in gs.gens() {
                assert!(g.is_automorphism(h.images()));
            }
        }
    }
}
