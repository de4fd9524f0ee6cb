//! Rank 3 graphs and their automorphism groups.
//!
//! The crate builds the standard families of affine rank 3 graphs over
//! finite fields, computes automorphism groups with an
//! individualisation-refinement search, and checks a catalog of expected
//! parameters, ranks and group orders against the computed values.

pub mod arith;
pub mod autsolve;
pub mod gf;
pub mod graphs;
pub mod families;
pub mod permgrp;
pub mod catalog;
