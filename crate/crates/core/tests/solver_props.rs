mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rank3::autsolve::{are_isomorphic, automorphism_group, brute_force_aut, refine, Coloring, IsoOutcome};
use rank3::graphs::DenseGraph;

fn small_graph(max_n: usize) -> impl Strategy<Value = DenseGraph> {
    (0usize..=max_n, any::<u64>(), 0.1f64..0.9).prop_map(|(n, seed, p)| {
        common::random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, p)
    })
}

fn shuffled(n: usize, seed: u64) -> Vec<u32> {
    let mut v: Vec<u32> = (0..n as u32).collect();
    v.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    v
}

proptest! {
    #[test]
    fn order_matches_brute_force(g in small_graph(7)) {
        let r = automorphism_group(&g).unwrap();
        let oracle = common::count_automorphisms(&g);
        prop_assert_eq!(r.order, oracle.into());
        prop_assert_eq!(brute_force_aut(&g).unwrap().len() as u64, oracle);
        for h in r.generators.gens() {
            prop_assert!(g.is_automorphism(h.images()));
        }
    }

    #[test]
    fn order_is_invariant(g in small_graph(40), seed in any::<u64>()) {
        let perm = shuffled(g.order(), seed);
        let h = common::relabel(&g, &perm);
        let a = automorphism_group(&g).unwrap().order;
        prop_assert_eq!(&automorphism_group(&h).unwrap().order, &a);
        prop_assert_eq!(&automorphism_group(&g.complement()).unwrap().order, &a);
    }

    #[test]
    fn relabelled_copies_are_isomorphic(g in small_graph(40), seed in any::<u64>()) {
        let perm = shuffled(g.order(), seed);
        let h = common::relabel(&g, &perm);
        match are_isomorphic(&g, &h).unwrap() {
            IsoOutcome::Isomorphic(map) => prop_assert!(g.is_isomorphism_to(&h, &map)),
            other => prop_assert!(false, "expected an isomorphism, got {:?}", other),
        }
    }

    #[test]
    fn edge_flip_matches_brute_force_isomorphism(g in small_graph(7), u in 0usize..7, v in 0usize..7) {
        let n = g.order();
        prop_assume!(n > 1 && u < n && v < n && u != v);
        let mut h = g.clone();
        if g.has_edge(u, v) { h.remove_edge(u, v) } else { h.add_edge(u, v) }
        let expected = common::all_permutations(n).iter().any(|p| g.is_isomorphism_to(&h, p));
        prop_assert_eq!(are_isomorphic(&g, &h).unwrap().is_isomorphic(), expected);
    }

    #[test]
    fn refinement_is_equitable_and_invariant(g in small_graph(30), seed in any::<u64>()) {
        let n = g.order();
        let c = refine(&g, &Coloring::trivial(n));
        let colors = c.colors();
        for a in 0..n {
            for b in 0..n {
                if colors[a] != colors[b] { continue; }
                let mut ca = vec![0usize; c.classes()];
                let mut cb = vec![0usize; c.classes()];
                for w in g.neighbours(a) { ca[colors[w] as usize] += 1; }
                for w in g.neighbours(b) { cb[colors[w] as usize] += 1; }
                prop_assert_eq!(ca, cb);
            }
        }
        let perm = shuffled(n, seed);
        let h = common::relabel(&g, &perm);
        let d = refine(&h, &Coloring::trivial(n));
        for v in 0..n {
            prop_assert_eq!(colors[v], d.colors()[perm[v] as usize]);
        }
    }
}
