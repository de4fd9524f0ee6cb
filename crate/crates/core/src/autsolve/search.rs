//! Individualisation-refinement search trees.

use web_time::Instant;

use crate::graphs::DenseGraph;
use crate::permgrp::Permutation;

use super::partition::{Partition, Scratch};
use super::{SearchStats, SolverError};

/// The leftmost path of a search tree.
#[derive(Debug, Clone)]
pub(crate) struct FirstPath {
    /// Partition at each level, `nodes[0]` being the refined root.
    pub nodes: Vec<Partition>,
    /// Trace hash on arrival at each level.
    pub traces: Vec<u64>,
    /// Target cell start at each non-leaf level.
    pub targets: Vec<u32>,
    /// Vertex individualised at each non-leaf level.
    pub chosen: Vec<u32>,
}

impl FirstPath {
    pub fn depth(&self) -> usize {
        self.targets.len()
    }

    pub fn leaf(&self) -> &[u32] {
        &self.nodes.last().unwrap().elems
    }
}

pub(crate) struct Searcher<'a> {
    pub g: &'a DenseGraph,
    pub deadline: Option<Instant>,
    pub budget_ms: u64,
    pub scratch: Scratch,
    pub stats: SearchStats,
}

impl<'a> Searcher<'a> {
    pub fn new(g: &'a DenseGraph, deadline: Option<Instant>, budget_ms: u64) -> Self {
        Searcher {
            g,
            deadline,
            budget_ms,
            scratch: Scratch::default(),
            stats: SearchStats::default(),
        }
    }

    fn tick(&mut self) -> Result<(), SolverError> {
        self.stats.nodes += 1;
        match self.deadline {
            Some(d) if Instant::now() > d => Err(SolverError::Timeout {
                budget_ms: self.budget_ms,
            }),
            _ => Ok(()),
        }
    }

    pub fn root(&mut self) -> (Partition, u64) {
        let n = self.g.order();
        let mut p = Partition::unit(n);
        let t = if n == 0 { 0 } else { p.refine(self.g, &[0], &mut self.scratch) };
        self.stats.refinements += 1;
        (p, t)
    }

    pub fn child(&mut self, parent: &Partition, v: u32) -> (Partition, u64) {
        let mut p = parent.clone();
        let s = p.individualize(v);
        let t = p.refine(self.g, &[s], &mut self.scratch);
        self.stats.refinements += 1;
        (p, t)
    }

    /// Follows smallest vertex ids down the tree.
    pub fn first_path(&mut self) -> Result<FirstPath, SolverError> {
        let (root, t0) = self.root();
        let mut path = FirstPath {
            nodes: vec![root],
            traces: vec![t0],
            targets: Vec::new(),
            chosen: Vec::new(),
        };
        while let Some(t) = path.nodes.last().unwrap().target_cell() {
            self.tick()?;
            let v = *path.nodes.last().unwrap().cell(t).iter().min().unwrap();
            let (child, tr) = self.child(path.nodes.last().unwrap(), v);
            path.targets.push(t);
            path.chosen.push(v);
            path.nodes.push(child);
            path.traces.push(tr);
        }
        self.stats.leaves += 1;
        Ok(path)
    }

    /// Depth-first search below `node` (at `level`, trace already matched)
    /// for a leaf whose labelling, composed with `reference_leaf`, passes
    /// `accept`. Children equivalent under `prune_gens` that fix `prefix`
    /// to an already failed child are skipped.
    #[allow(clippy::too_many_arguments)]
    pub fn find_leaf(
        &mut self,
        node: &Partition,
        level: usize,
        path: &FirstPath,
        reference_leaf: &[u32],
        prefix: &mut Vec<u32>,
        prune_gens: &[Permutation],
        accept: &dyn Fn(&[u32]) -> bool,
    ) -> Result<Option<Vec<u32>>, SolverError> {
        self.tick()?;
        if level == path.depth() {
            self.stats.leaves += 1;
            debug_assert!(node.is_discrete());
            let n = node.len();
            let mut map = vec![0u32; n];
            for (i, &v) in reference_leaf.iter().enumerate() {
                map[v as usize] = node.elems[i];
            }
            return Ok(accept(&map).then_some(map));
        }
        let t = path.targets[level];
        let mut children: Vec<u32> = node.cell(t).to_vec();
        children.sort_unstable();

        let stab: Vec<&Permutation> = prune_gens
            .iter()
            .filter(|g| prefix.iter().all(|&x| g.apply(x) == x))
            .collect();
        let mut orbit_of = OrbitClasses::new(node.len());
        for g in &stab {
            orbit_of.merge_perm(g);
        }
        let mut failed: Vec<u32> = Vec::new();
        for u in children {
            if failed.iter().any(|&f| orbit_of.same(f, u)) {
                continue;
            }
            let (child, tr) = self.child(node, u);
            if tr == path.traces[level + 1] {
                prefix.push(u);
                let found =
                    self.find_leaf(&child, level + 1, path, reference_leaf, prefix, prune_gens, accept)?;
                prefix.pop();
                if found.is_some() {
                    return Ok(found);
                }
            }
            failed.push(u);
        }
        Ok(None)
    }
}

/// Union-find over points, merged along permutation cycles.
#[derive(Debug, Clone)]
pub(crate) struct OrbitClasses {
    parent: Vec<u32>,
}

impl OrbitClasses {
    pub fn new(n: usize) -> Self {
        OrbitClasses {
            parent: (0..n as u32).collect(),
        }
    }

    pub fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let gp = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = gp;
            x = gp;
        }
        x
    }

    pub fn same(&mut self, a: u32, b: u32) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }

    pub fn merge_perm(&mut self, g: &Permutation) {
        for (x, &y) in g.images().iter().enumerate() {
            self.union(x as u32, y);
        }
    }
}
