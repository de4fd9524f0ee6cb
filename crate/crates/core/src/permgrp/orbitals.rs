use serde::{Deserialize, Serialize};

use super::perm::{GeneratorSet, Permutation};
use super::PermError;

/// Largest degree accepted by the pair-orbit closure.
pub const MAX_PAIR_DEGREE: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankInfo {
    pub rank: usize,
    /// Sizes of the non-diagonal orbitals through point 0, ascending.
    pub subdegrees: Vec<usize>,
}

/// Rank and subdegrees of a transitive group by closing `Ω × Ω` under the
/// generators. The subdegrees are then recomputed from the orbits of the
/// stabiliser of 0 and the two answers are asserted equal.
pub fn rank_and_subdegrees(gs: &GeneratorSet) -> Result<RankInfo, PermError> {
    let n = gs.degree();
    if n > MAX_PAIR_DEGREE {
        return Err(PermError::TooLarge(n));
    }
    if n == 0 {
        return Ok(RankInfo {
            rank: 0,
            subdegrees: Vec::new(),
        });
    }
    let orb = gs.orbit(0).len();
    if orb != n {
        return Err(PermError::NotTransitive { orbit: orb, degree: n });
    }

    let labels = pair_orbits(gs);
    let rank = labels.iter().copied().max().unwrap() as usize + 1;
    let diag = labels[0];
    let mut sizes = vec![0usize; rank];
    for v in 1..n {
        sizes[labels[v] as usize] += 1;
    }
    let mut subdegrees: Vec<usize> = sizes
        .iter()
        .enumerate()
        .filter(|&(l, &s)| l as u32 != diag && s > 0)
        .map(|(_, &s)| s)
        .collect();
    subdegrees.sort_unstable();
    assert_eq!(subdegrees.len() + 1, rank, "orbital missing from row 0");

    let mut from_stabilizer = stabilizer_orbit_sizes(gs, &labels[..n], rank);
    from_stabilizer.sort_unstable();
    assert_eq!(
        subdegrees, from_stabilizer,
        "pair-orbit closure disagrees with point-stabiliser orbits"
    );
    Ok(RankInfo { rank, subdegrees })
}

fn pair_orbits(gs: &GeneratorSet) -> Vec<u32> {
    let n = gs.degree();
    let mut labels = vec![u32::MAX; n * n];
    let mut next = 0u32;
    let mut stack: Vec<(u32, u32)> = Vec::new();
    for u in 0..n as u32 {
        for v in 0..n as u32 {
            if labels[u as usize * n + v as usize] != u32::MAX {
                continue;
            }
            labels[u as usize * n + v as usize] = next;
            stack.push((u, v));
            while let Some((a, b)) = stack.pop() {
                for g in gs.gens() {
                    let (x, y) = (g.apply(a), g.apply(b));
                    let slot = &mut labels[x as usize * n + y as usize];
                    if *slot == u32::MAX {
                        *slot = next;
                        stack.push((x, y));
                    }
                }
            }
            next += 1;
        }
    }
    labels
}

/// Orbit sizes of `G_0` on the points other than 0, from Schreier generators
/// merged in a union-find. Merging stops once the number of classes reaches
/// the rank: each Schreier generator lies in `G_0`, so its orbits can only
/// coarsen towards the true suborbits, and a merge across two different
/// orbital labels is a contradiction caught here.
fn stabilizer_orbit_sizes(gs: &GeneratorSet, row0: &[u32], rank: usize) -> Vec<usize> {
    let n = gs.degree();
    let gens = gs.gens();
    let inv: Vec<Permutation> = gens.iter().map(Permutation::inverse).collect();
    // Schreier tree rooted at 0.
    let mut parent = vec![u32::MAX; n];
    let mut order = vec![0u32];
    parent[0] = 0;
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        for (gi, g) in gens.iter().enumerate() {
            let y = g.apply(x) as usize;
            if parent[y] == u32::MAX {
                parent[y] = gi as u32;
                order.push(y as u32);
            }
        }
        i += 1;
    }
    // u_x⁻¹ applied to a point: walk back to the root.
    let back = |mut pt: u32, mut x: u32| -> u32 {
        while x != 0 {
            let gi = parent[x as usize] as usize;
            pt = inv[gi].apply(pt);
            x = inv[gi].apply(x);
        }
        pt
    };

    let mut uf: Vec<u32> = (0..n as u32).collect();
    fn find(uf: &mut [u32], mut x: u32) -> u32 {
        while uf[x as usize] != x {
            uf[x as usize] = uf[uf[x as usize] as usize];
            x = uf[x as usize];
        }
        x
    }
    let mut classes = n;
    let mut images = vec![0u32; n];
    'outer: for &beta in &order {
        // Forward images of every point under u_beta, via the inverse walk.
        let u_beta: Vec<u32> = {
            let mut inv_u = vec![0u32; n];
            for (pt, slot) in inv_u.iter_mut().enumerate() {
                *slot = back(pt as u32, beta);
            }
            let mut fwd = vec![0u32; n];
            for (pt, &img) in inv_u.iter().enumerate() {
                fwd[img as usize] = pt as u32;
            }
            fwd
        };
        for (gi, s) in gens.iter().enumerate() {
            let target = s.apply(beta);
            if parent[target as usize] == gi as u32 && inv[gi].apply(target) == beta {
                continue; // tree edge, trivial Schreier generator
            }
            for pt in 0..n {
                images[pt] = back(s.apply(u_beta[pt]), target);
            }
            debug_assert_eq!(images[0], 0);
            for pt in 1..n {
                let (a, b) = (find(&mut uf, pt as u32), find(&mut uf, images[pt]));
                if a != b {
                    assert_eq!(
                        row0[pt], row0[images[pt] as usize],
                        "stabiliser element crosses orbitals"
                    );
                    uf[a as usize] = b;
                    classes -= 1;
                }
            }
            if classes == rank {
                break 'outer;
            }
        }
    }
    let mut sizes = vec![0usize; n];
    for pt in 1..n as u32 {
        let r = find(&mut uf, pt);
        sizes[r as usize] += 1;
    }
    sizes.into_iter().filter(|&s| s > 0).collect()
}
