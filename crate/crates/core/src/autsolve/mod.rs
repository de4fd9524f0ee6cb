//! Automorphism groups and isomorphisms of dense graphs by
//! individualisation-refinement, with orbit pruning from the automorphisms
//! found so far.

mod partition;
mod search;

use std::time::Duration;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use web_time::Instant;

use crate::graphs::DenseGraph;
use crate::permgrp::{Bsgs, GeneratorSet, Permutation};

use partition::{Partition, Scratch};
use search::{OrbitClasses, Searcher};

/// Default time budget for a single solver call.
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(60);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("search exceeded its {budget_ms} ms budget")]
    Timeout { budget_ms: u64 },
    #[error("brute force limited to 8 vertices, got {0}")]
    TooLarge(usize),
    #[error("colour ids must be contiguous from 0 and cover every vertex")]
    InvalidColoring,
}

#[derive(Debug, Clone, Copy)]
pub struct SolverOptions {
    /// `None` disables the deadline.
    pub budget: Option<Duration>,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            budget: Some(DEFAULT_BUDGET),
        }
    }
}

impl SolverOptions {
    pub fn with_budget(budget: Duration) -> Self {
        SolverOptions {
            budget: Some(budget),
        }
    }

    fn deadline(&self, start: Instant) -> (Option<Instant>, u64) {
        match self.budget {
            Some(b) => (Some(start + b), b.as_millis() as u64),
            None => (None, 0),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub refinements: u64,
    pub leaves: u64,
    pub elapsed_ms: u64,
}

/// A vertex colouring with ids `0..classes`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
    classes: usize,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Self, SolverError> {
        let classes = colors.iter().max().map_or(0, |&m| m as usize + 1);
        let mut used = vec![false; classes];
        for &c in &colors {
            used[c as usize] = true;
        }
        if used.iter().any(|&u| !u) {
            return Err(SolverError::InvalidColoring);
        }
        Ok(Coloring { colors, classes })
    }

    pub fn trivial(n: usize) -> Self {
        Coloring {
            colors: vec![0; n],
            classes: usize::from(n > 0),
        }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn classes(&self) -> usize {
        self.classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.classes];
        for &c in &self.colors {
            s[c as usize] += 1;
        }
        s
    }
}

/// Coarsest equitable colouring refining `initial`. Classes are numbered in
/// the order the refinement places them.
pub fn refine(g: &DenseGraph, initial: &Coloring) -> Coloring {
    assert_eq!(initial.colors.len(), g.order());
    let mut p = Partition::from_colors(&initial.colors);
    let starts = p.cell_starts();
    p.refine(g, &starts, &mut Scratch::default());
    Coloring {
        classes: p.cell_count(),
        colors: p.colors(),
    }
}

#[derive(Debug, Clone)]
pub struct AutResult {
    pub generators: GeneratorSet,
    /// Group order, computed by Schreier–Sims from the generators.
    pub order: BigUint,
    /// The first path of the search tree; a base for the group.
    pub base: Vec<u32>,
    pub stats: SearchStats,
}

pub fn automorphism_group(g: &DenseGraph) -> Result<AutResult, SolverError> {
    automorphism_group_with(g, &SolverOptions::default())
}

pub fn automorphism_group_with(g: &DenseGraph, opts: &SolverOptions) -> Result<AutResult, SolverError> {
    let start = Instant::now();
    let (deadline, budget_ms) = opts.deadline(start);
    aut_inner(g, deadline, budget_ms, start)
}

fn aut_inner(
    g: &DenseGraph,
    deadline: Option<Instant>,
    budget_ms: u64,
    start: Instant,
) -> Result<AutResult, SolverError> {
    let n = g.order();
    let mut s = Searcher::new(g, deadline, budget_ms);
    let path = s.first_path()?;
    let leaf0 = path.leaf().to_vec();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut orbits = OrbitClasses::new(n);
    let mut orbit_product = BigUint::from(1u32);
    let is_aut = |map: &[u32]| g.is_automorphism(map);

    for k in (0..path.depth()).rev() {
        let node = &path.nodes[k];
        let v = path.chosen[k];
        let mut cell = node.cell(path.targets[k]).to_vec();
        cell.sort_unstable();
        let mut failed: Vec<u32> = Vec::new();
        for &w in &cell {
            if orbits.same(w, v) || failed.iter().any(|&f| orbits.same(f, w)) {
                continue;
            }
            let (child, tr) = s.child(node, w);
            let mut found = None;
            if tr == path.traces[k + 1] {
                let mut prefix: Vec<u32> = path.chosen[..k].to_vec();
                prefix.push(w);
                found = s.find_leaf(&child, k + 1, &path, &leaf0, &mut prefix, &gens, &is_aut)?;
            }
            match found {
                Some(map) => {
                    let perm = Permutation::new(map).expect("leaf labelling is a bijection");
                    orbits.merge_perm(&perm);
                    gens.push(perm);
                }
                None => failed.push(w),
            }
        }
        let size = cell.iter().filter(|&&x| orbits.same(x, v)).count();
        orbit_product *= BigUint::from(size);
    }

    for h in &gens {
        assert!(g.is_automorphism(h.images()), "emitted generator is not an automorphism");
    }
    let generators = GeneratorSet::new(n, gens).expect("generators have degree n");
    let order = Bsgs::new(&generators, &path.chosen).order();
    debug_assert_eq!(order, orbit_product, "orbit product disagrees with Schreier-Sims");
    s.stats.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(AutResult {
        generators,
        order,
        base: path.chosen.clone(),
        stats: s.stats,
    })
}

/// Why two graphs were found to be non-isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum NonIsoReason {
    Order { left: usize, right: usize },
    EdgeCount { left: usize, right: usize },
    DegreeSequence,
    RefinementSignature,
    SearchExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    /// `map[v]` is the image in the second graph of vertex `v` of the first.
    Isomorphic(Vec<u32>),
    NotIsomorphic(NonIsoReason),
}

impl IsoOutcome {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }
}

pub fn are_isomorphic(g: &DenseGraph, h: &DenseGraph) -> Result<IsoOutcome, SolverError> {
    are_isomorphic_with(g, h, &SolverOptions::default())
}

/// Searches the tree of `h` for a leaf matching the first leaf of `g`,
/// pruning with automorphisms of `h`.
pub fn are_isomorphic_with(
    g: &DenseGraph,
    h: &DenseGraph,
    opts: &SolverOptions,
) -> Result<IsoOutcome, SolverError> {
    use NonIsoReason::*;
    let (n, m) = (g.order(), h.order());
    if n != m {
        return Ok(IsoOutcome::NotIsomorphic(Order { left: n, right: m }));
    }
    let (eg, eh) = (g.edge_count(), h.edge_count());
    if eg != eh {
        return Ok(IsoOutcome::NotIsomorphic(EdgeCount { left: eg, right: eh }));
    }
    let (mut dg, mut dh) = (g.degrees(), h.degrees());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(IsoOutcome::NotIsomorphic(DegreeSequence));
    }
    let start = Instant::now();
    let (deadline, budget_ms) = opts.deadline(start);
    let mut sg = Searcher::new(g, deadline, budget_ms);
    let path = sg.first_path()?;
    let mut sh = Searcher::new(h, deadline, budget_ms);
    let (root, tr) = sh.root();
    if tr != path.traces[0] {
        return Ok(IsoOutcome::NotIsomorphic(RefinementSignature));
    }
    let aut_h = aut_inner(h, deadline, budget_ms, start)?;
    let accept = |map: &[u32]| g.is_isomorphism_to(h, map);
    let found = sh.find_leaf(
        &root,
        0,
        &path,
        path.leaf(),
        &mut Vec::new(),
        aut_h.generators.gens(),
        &accept,
    )?;
    Ok(match found {
        Some(map) => {
            assert!(g.is_isomorphism_to(h, &map));
            IsoOutcome::Isomorphic(map)
        }
        None => IsoOutcome::NotIsomorphic(SearchExhausted),
    })
}

/// Every automorphism, by scanning all `n!` permutations.
pub fn brute_force_aut(g: &DenseGraph) -> Result<Vec<Permutation>, SolverError> {
    let n = g.order();
    if n > 8 {
        return Err(SolverError::TooLarge(n));
    }
    let mut perm: Vec<u32> = (0..n as u32).collect();
    let mut out = Vec::new();
    loop {
        if g.is_automorphism(&perm) {
            out.push(Permutation::new(perm.clone()).unwrap());
        }
        // Next permutation in lexicographic order.
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> DenseGraph {
        DenseGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    fn petersen() -> DenseGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        DenseGraph::from_edges(10, edges)
    }

    #[test]
    fn brute_force_small() {
        assert_eq!(brute_force_aut(&DenseGraph::complete(3)).unwrap().len(), 6);
        let p3 = DenseGraph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(brute_force_aut(&p3).unwrap().len(), 2);
        let c5_plus = DenseGraph::from_edges(6, (0..5).map(|i| (i, (i + 1) % 5)));
        assert_eq!(brute_force_aut(&c5_plus).unwrap().len(), 10);
        assert_eq!(brute_force_aut(&DenseGraph::empty(9)), Err(SolverError::TooLarge(9)));
    }

    #[test]
    fn small_orders() {
        assert_eq!(automorphism_group(&cycle(5)).unwrap().order, 10u32.into());
        assert_eq!(automorphism_group(&petersen()).unwrap().order, 120u32.into());
        assert_eq!(automorphism_group(&DenseGraph::empty(6)).unwrap().order, 720u32.into());
        assert_eq!(automorphism_group(&DenseGraph::complete(7)).unwrap().order, 5040u32.into());
        assert_eq!(automorphism_group(&DenseGraph::empty(0)).unwrap().order, 1u32.into());
        assert_eq!(automorphism_group(&DenseGraph::empty(1)).unwrap().order, 1u32.into());
    }

    #[test]
    fn refine_examples() {
        let p3 = DenseGraph::from_edges(3, [(0, 1), (1, 2)]);
        let c = refine(&p3, &Coloring::trivial(3));
        assert_eq!(c.classes(), 2);
        assert_eq!(c.colors()[0], c.colors()[2]);
        assert_eq!(refine(&p3, &c), c);
        assert_eq!(refine(&petersen(), &Coloring::trivial(10)).classes(), 1);
        assert!(Coloring::new(vec![0, 2]).is_err());
    }

    #[test]
    fn isomorphism_basic() {
        let g = petersen();
        assert!(matches!(are_isomorphic(&g, &g).unwrap(), IsoOutcome::Isomorphic(_)));
        assert_eq!(
            are_isomorphic(&cycle(6), &cycle(5)).unwrap(),
            IsoOutcome::NotIsomorphic(NonIsoReason::Order { left: 6, right: 5 })
        );
        // Two triangles versus a hexagon: same degrees, different refinement.
        let two_triangles = DenseGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        let out = are_isomorphic(&two_triangles, &cycle(6)).unwrap();
        assert!(!out.is_isomorphic());
    }

    #[test]
    fn timeout_reported() {
        let opts = SolverOptions::with_budget(Duration::ZERO);
        assert!(matches!(
            automorphism_group_with(&petersen(), &opts),
            Err(SolverError::Timeout { .. })
        ));
    }
}
