//! Deterministic Schreier–Sims with Schreier-tree transversals.

use num_bigint::BigUint;

use super::perm::Permutation;
use super::GeneratorSet;

#[derive(Debug, Clone)]
struct Level {
    base_point: u32,
    gens: Vec<Permutation>,
    gens_inv: Vec<Permutation>,
    /// For each orbit point other than the base point, the generator whose
    /// application reached it; `NONE` outside the orbit.
    tree: Vec<u32>,
    orbit: Vec<u32>,
}

const NONE: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

impl Level {
    fn new(n: usize, base_point: u32, gens: Vec<Permutation>) -> Self {
        let gens_inv = gens.iter().map(Permutation::inverse).collect();
        let mut level = Level {
            base_point,
            gens,
            gens_inv,
            tree: vec![NONE; n],
            orbit: Vec::new(),
        };
        level.rebuild_orbit();
        level
    }

    fn rebuild_orbit(&mut self) {
        self.tree.iter_mut().for_each(|t| *t = NONE);
        self.tree[self.base_point as usize] = ROOT;
        self.orbit = vec![self.base_point];
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            for (gi, g) in self.gens.iter().enumerate() {
                let y = g.apply(x);
                if self.tree[y as usize] == NONE {
                    self.tree[y as usize] = gi as u32;
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }

    fn push_gen(&mut self, g: Permutation) {
        self.gens_inv.push(g.inverse());
        self.gens.push(g);
        self.rebuild_orbit();
    }

    fn contains(&self, x: u32) -> bool {
        self.tree[x as usize] != NONE
    }

    /// `h · u_x⁻¹` where `u_x` maps the base point to `x`.
    fn strip(&self, h: &Permutation, mut x: u32) -> Permutation {
        let mut w = h.clone();
        while x != self.base_point {
            let gi = self.tree[x as usize] as usize;
            w = w.then(&self.gens_inv[gi]);
            x = self.gens_inv[gi].apply(x);
        }
        w
    }

    /// Coset representative mapping the base point to `x`.
    fn transversal(&self, x: u32) -> Permutation {
        let n = self.tree.len();
        self.strip(&Permutation::identity(n), x).inverse()
    }
}

/// Base and strong generating set.
#[derive(Debug, Clone)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    /// Runs Schreier–Sims; the base starts with `base_prefix` (which may be
    /// empty) and is extended as needed.
    pub fn new(group: &GeneratorSet, base_prefix: &[u32]) -> Self {
        let n = group.degree();
        let gens: Vec<Permutation> = group
            .gens()
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let mut base: Vec<u32> = base_prefix.to_vec();
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved().unwrap());
            }
        }
        let mut levels: Vec<Level> = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let lg: Vec<Permutation> = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&c| g.apply(c) == c))
                .cloned()
                .collect();
            levels.push(Level::new(n, b, lg));
        }
        let mut bsgs = Bsgs { degree: n, levels };
        bsgs.complete();
        bsgs
    }

    fn complete(&mut self) {
        let n = self.degree;
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            let mut restart_at = None;
            'scan: for oi in 0..self.levels[lvl].orbit.len() {
                let beta = self.levels[lvl].orbit[oi];
                let u_beta = self.levels[lvl].transversal(beta);
                for gi in 0..self.levels[lvl].gens.len() {
                    let s = &self.levels[lvl].gens[gi];
                    let image = s.apply(beta);
                    let schreier = self.levels[lvl].strip(&u_beta.then(s), image);
                    let (residue, depth) = self.sift_from(&schreier, lvl + 1);
                    if !residue.is_identity() {
                        if depth == self.levels.len() {
                            let b = residue.first_moved().unwrap();
                            self.levels.push(Level::new(n, b, Vec::new()));
                        }
                        for l in lvl + 1..=depth {
                            self.levels[l].push_gen(residue.clone());
                        }
                        restart_at = Some(depth);
                        break 'scan;
                    }
                }
            }
            match restart_at {
                Some(d) => i = d as isize,
                None => i -= 1,
            }
        }
    }

    /// Sifts `h` through levels `start..`; returns the residue and the level
    /// at which sifting stopped (`levels.len()` if it went through).
    fn sift_from(&self, h: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = h.clone();
        for l in start..self.levels.len() {
            let level = &self.levels[l];
            let x = h.apply(level.base_point);
            if !level.contains(x) {
                return (h, l);
            }
            h = level.strip(&h, x);
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift_from(g, 0).0.is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Orbit of the `i`-th base point under the `i`-th stabiliser.
    pub fn basic_orbit(&self, i: usize) -> &[u32] {
        &self.levels[i].orbit
    }

    /// Generators of the pointwise stabiliser of the first `i` base points.
    pub fn stabilizer_gens(&self, i: usize) -> Vec<Permutation> {
        self.levels.get(i).map(|l| l.gens.clone()).unwrap_or_default()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }
}

/// Group order via Schreier–Sims.
pub fn group_order(group: &GeneratorSet) -> BigUint {
    Bsgs::new(group, &[]).order()
}
