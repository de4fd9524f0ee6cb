//! Ordered partitions and equitable refinement.
//!
//! Cells are identified by their start position in `elems`. Every quantity
//! mixed into the refinement trace (cell starts, neighbour counts, piece
//! sizes) is independent of vertex labels, so isomorphic inputs produce
//! equal traces.

use crate::graphs::DenseGraph;

#[derive(Debug, Clone)]
pub(crate) struct Partition {
    /// Vertices in cell order.
    pub elems: Vec<u32>,
    /// Position of each vertex in `elems`.
    pos: Vec<u32>,
    /// Start of the cell containing each vertex.
    start_of: Vec<u32>,
    /// Cell length, valid at cell starts.
    len_at: Vec<u32>,
    cells: usize,
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h.rotate_left(23) ^ x).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

impl Partition {
    /// Cells given by colour classes, ordered by colour.
    pub fn from_colors(colors: &[u32]) -> Self {
        let n = colors.len();
        let mut elems: Vec<u32> = (0..n as u32).collect();
        elems.sort_by_key(|&v| (colors[v as usize], v));
        let mut p = Partition {
            elems,
            pos: vec![0; n],
            start_of: vec![0; n],
            len_at: vec![0; n.max(1)],
            cells: 0,
        };
        let mut s = 0;
        while s < n {
            let c = colors[p.elems[s] as usize];
            let mut e = s;
            while e < n && colors[p.elems[e] as usize] == c {
                e += 1;
            }
            p.len_at[s] = (e - s) as u32;
            for i in s..e {
                let v = p.elems[i] as usize;
                p.pos[v] = i as u32;
                p.start_of[v] = s as u32;
            }
            p.cells += 1;
            s = e;
        }
        p
    }

    pub fn unit(n: usize) -> Self {
        Self::from_colors(&vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn cell_count(&self) -> usize {
        self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.elems.len()
    }

    pub fn cell_starts(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.cells);
        let mut s = 0usize;
        while s < self.elems.len() {
            out.push(s as u32);
            s += self.len_at[s] as usize;
        }
        out
    }

    pub fn cell(&self, start: u32) -> &[u32] {
        let s = start as usize;
        &self.elems[s..s + self.len_at[s] as usize]
    }

    /// Colour of each vertex: index of its cell in position order.
    pub fn colors(&self) -> Vec<u32> {
        let mut out = vec![0u32; self.elems.len()];
        for (idx, s) in self.cell_starts().into_iter().enumerate() {
            for &v in self.cell(s) {
                out[v as usize] = idx as u32;
            }
        }
        out
    }

    /// First smallest non-singleton cell by position.
    pub fn target_cell(&self) -> Option<u32> {
        let mut best: Option<(u32, u32)> = None;
        let mut s = 0usize;
        while s < self.elems.len() {
            let l = self.len_at[s];
            if l > 1 && best.is_none_or(|(_, bl)| l < bl) {
                best = Some((s as u32, l));
            }
            s += l as usize;
        }
        best.map(|(s, _)| s)
    }

    /// Splits `v` off the front of its cell; returns the new singleton start.
    pub fn individualize(&mut self, v: u32) -> u32 {
        let s = self.start_of[v as usize];
        let l = self.len_at[s as usize];
        debug_assert!(l > 1);
        let pv = self.pos[v as usize];
        let first = self.elems[s as usize];
        self.elems.swap(s as usize, pv as usize);
        self.pos[first as usize] = pv;
        self.pos[v as usize] = s;
        self.len_at[s as usize] = 1;
        self.len_at[s as usize + 1] = l - 1;
        for i in s + 1..s + l {
            let u = self.elems[i as usize];
            self.start_of[u as usize] = s + 1;
        }
        self.cells += 1;
        s
    }

    /// Refines to the coarsest equitable partition using the given cells as
    /// initial splitters; returns the trace hash.
    pub fn refine(&mut self, g: &DenseGraph, splitters: &[u32], scratch: &mut Scratch) -> u64 {
        let n = self.elems.len();
        let words = g.row_words();
        scratch.ensure(n, words);
        let Scratch {
            counts,
            mask,
            in_queue,
            queue,
        } = scratch;
        queue.clear();
        for &s in splitters {
            if !in_queue[s as usize] {
                in_queue[s as usize] = true;
                queue.push_back(s);
            }
        }
        let mut trace = 0x51_7cc1_b727_220a_u64;
        while let Some(w) = queue.pop_front() {
            in_queue[w as usize] = false;
            if self.cells == n {
                continue;
            }
            let wlen = self.len_at[w as usize] as usize;
            trace = mix(trace, (w as u64) << 32 | wlen as u64);

            let ns_starts: Vec<u32> = self
                .cell_starts()
                .into_iter()
                .filter(|&s| self.len_at[s as usize] > 1)
                .collect();
            let ns_vertices: usize = ns_starts.iter().map(|&s| self.len_at[s as usize] as usize).sum();
            let scatter_cost = wlen * (words + g.degree(self.elems[w as usize] as usize));
            if scatter_cost < ns_vertices * words {
                for &s in &ns_starts {
                    for &v in self.cell(s) {
                        counts[v as usize] = 0;
                    }
                }
                for i in w as usize..w as usize + wlen {
                    for v in g.neighbours(self.elems[i] as usize) {
                        counts[v] += 1;
                    }
                }
            } else {
                mask.iter_mut().for_each(|m| *m = 0);
                for i in w as usize..w as usize + wlen {
                    let v = self.elems[i] as usize;
                    mask[v / 64] |= 1 << (v % 64);
                }
                for &s in &ns_starts {
                    for &v in self.cell(s) {
                        counts[v as usize] = g
                            .row(v as usize)
                            .iter()
                            .zip(mask.iter())
                            .map(|(a, b)| (a & b).count_ones())
                            .sum();
                    }
                }
            }

            for &s in &ns_starts {
                let (su, l) = (s as usize, self.len_at[s as usize] as usize);
                let c0 = counts[self.elems[su] as usize];
                if self.elems[su..su + l].iter().all(|&v| counts[v as usize] == c0) {
                    trace = mix(trace, (s as u64) << 32 | c0 as u64);
                    continue;
                }
                self.elems[su..su + l].sort_unstable_by_key(|&v| counts[v as usize]);
                let was_queued = in_queue[su];
                let mut pieces: Vec<(u32, u32)> = Vec::new();
                let mut ps = su;
                for i in su..=su + l {
                    let boundary = i == su + l
                        || counts[self.elems[i] as usize] != counts[self.elems[ps] as usize];
                    if boundary {
                        let c = counts[self.elems[ps] as usize];
                        pieces.push((ps as u32, (i - ps) as u32));
                        trace = mix(trace, (c as u64) << 32 | (i - ps) as u64);
                        ps = i;
                    }
                }
                for &(ps, pl) in &pieces {
                    self.len_at[ps as usize] = pl;
                    for i in ps..ps + pl {
                        let v = self.elems[i as usize];
                        self.pos[v as usize] = i;
                        self.start_of[v as usize] = ps;
                    }
                }
                self.cells += pieces.len() - 1;
                let largest = pieces
                    .iter()
                    .enumerate()
                    .max_by_key(|&(i, &(_, pl))| (pl, std::cmp::Reverse(i)))
                    .map(|(i, _)| i)
                    .unwrap();
                for (i, &(ps, _)) in pieces.iter().enumerate() {
                    let add = if was_queued { i > 0 } else { i != largest };
                    if add && !in_queue[ps as usize] {
                        in_queue[ps as usize] = true;
                        queue.push_back(ps);
                    }
                }
            }
        }
        mix(trace, self.cells as u64)
    }
}

/// Reusable buffers for [`Partition::refine`].
#[derive(Debug, Default)]
pub(crate) struct Scratch {
    counts: Vec<u32>,
    mask: Vec<u64>,
    in_queue: Vec<bool>,
    queue: std::collections::VecDeque<u32>,
}

impl Scratch {
    fn ensure(&mut self, n: usize, words: usize) {
        if self.counts.len() < n {
            self.counts.resize(n, 0);
            self.in_queue.resize(n, false);
        }
        if self.mask.len() != words {
            self.mask = vec![0; words];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_equitable(g: &DenseGraph, p: &Partition) -> bool {
        let starts = p.cell_starts();
        starts.iter().all(|&a| {
            starts.iter().all(|&b| {
                let counts: Vec<usize> = p
                    .cell(a)
                    .iter()
                    .map(|&v| p.cell(b).iter().filter(|&&u| g.has_edge(v as usize, u as usize)).count())
                    .collect();
                counts.windows(2).all(|w| w[0] == w[1])
            })
        })
    }

    #[test]
    fn path_splits_by_degree() {
        let g = DenseGraph::from_edges(3, [(0, 1), (1, 2)]);
        let mut p = Partition::unit(3);
        let mut sc = Scratch::default();
        p.refine(&g, &[0], &mut sc);
        assert_eq!(p.cell_count(), 2);
        assert_eq!(p.colors(), vec![0, 1, 0]);
    }

    #[test]
    fn individualized_refinement_is_equitable() {
        let g = DenseGraph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 5)]);
        let mut p = Partition::unit(7);
        let mut sc = Scratch::default();
        p.refine(&g, &[0], &mut sc);
        assert!(is_equitable(&g, &p));
        let t = p.target_cell().unwrap();
        let v = p.cell(t)[0];
        let s = p.individualize(v);
        p.refine(&g, &[s], &mut sc);
        assert!(is_equitable(&g, &p));
    }

    #[test]
    fn traces_are_label_invariant() {
        let g = DenseGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]);
        let relabel = [4u32, 2, 5, 0, 3, 1];
        let h = DenseGraph::from_edges(
            6,
            g.edges().map(|(u, v)| (relabel[u] as usize, relabel[v] as usize)),
        );
        let mut sc = Scratch::default();
        let (mut a, mut b) = (Partition::unit(6), Partition::unit(6));
        let ta = a.refine(&g, &[0], &mut sc);
        let tb = b.refine(&h, &[0], &mut sc);
        assert_eq!(ta, tb);
        let sa = a.individualize(a.cell(a.target_cell().unwrap())[0]);
        let va = a.elems[sa as usize];
        let sb = b.individualize(relabel[va as usize]);
        assert_eq!(
            a.refine(&g, &[sa], &mut sc),
            b.refine(&h, &[sb], &mut sc)
        );
    }
}
