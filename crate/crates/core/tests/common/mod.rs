//! Reference implementations used as test oracles. Everything here is
//! deliberately naive and independent of the library's algorithms.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use rand::Rng;
use rank3::graphs::DenseGraph;

/// Counts automorphisms by trying every permutation (Heap's algorithm).
pub fn count_automorphisms(g: &DenseGraph) -> u64 {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let preserves = |p: &[usize]| edges.iter().all(|&(u, v)| g.has_edge(p[u], p[v]));
    let mut count = u64::from(preserves(&perm));
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            count += u64::from(preserves(&perm));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    count
}

/// Strongly regular parameters by counting common neighbours pair by pair,
/// or `None` if the graph is not strongly regular.
pub fn naive_srg(g: &DenseGraph) -> Option<(usize, usize, usize, usize)> {
    let n = g.order();
    let deg = |u: usize| (0..n).filter(|&v| g.has_edge(u, v)).count();
    let k = deg(0);
    if (0..n).any(|u| deg(u) != k) {
        return None;
    }
    let (mut lambda, mut mu) = (None, None);
    for u in 0..n {
        for v in u + 1..n {
            let c = (0..n).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count();
            let slot = if g.has_edge(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => return None,
                _ => {}
            }
        }
    }
    Some((n, k, lambda?, mu?))
}

/// Every element of the group generated by `gens`, by breadth-first
/// closure under right multiplication.
pub fn enumerate_group(n: usize, gens: &[Vec<u32>]) -> HashSet<Vec<u32>> {
    let id: Vec<u32> = (0..n as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Vec<u32> = x.iter().map(|&i| g[i as usize]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> DenseGraph {
    let mut g = DenseGraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// The graph with vertex `v` renamed to `perm[v]`.
pub fn relabel(g: &DenseGraph, perm: &[u32]) -> DenseGraph {
    DenseGraph::from_edges(g.order(), g.edges().map(|(u, v)| (perm[u] as usize, perm[v] as usize)))
}

/// Quadratic residue graph on Z_p for a prime p = 1 mod 4, from first
/// principles.
pub fn prime_paley(p: usize) -> DenseGraph {
    let squares: HashSet<usize> = (1..p).map(|x| x * x % p).collect();
    DenseGraph::from_fn(p, |u, v| u != v && squares.contains(&((u + p - v) % p)))
}

/// All permutations of `0..n`, built by inserting each new point at every
/// position.
pub fn all_permutations(n: usize) -> Vec<Vec<u32>> {
    let mut all: Vec<Vec<u32>> = vec![Vec::new()];
    for k in 0..n as u32 {
        all = all
            .iter()
            .flat_map(|p| {
                (0..=p.len()).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    q
                })
            })
            .collect();
    }
    all
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}
