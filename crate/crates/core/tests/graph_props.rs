mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rank3::graphs::{from_adjacency_list, from_graph6, to_adjacency_list, to_graph6, DenseGraph};

fn graph() -> impl Strategy<Value = DenseGraph> {
    (0usize..90, any::<u64>(), 0.05f64..0.95).prop_map(|(n, seed, p)| {
        common::random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, p)
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph()) {
        let text = to_graph6(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn adjacency_list_round_trip(g in graph()) {
        prop_assert_eq!(from_adjacency_list(&to_adjacency_list(&g)).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph()) {
        let c = g.complement();
        prop_assert!(c.is_symmetric() && c.is_irreflexive());
        let n = g.order();
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * n.saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn relabelling_is_an_isomorphism(g in graph(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<u32> = (0..g.order() as u32).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = common::relabel(&g, &perm);
        prop_assert!(g.is_isomorphism_to(&h, &perm));
        let mut dg = g.degrees();
        let mut dh = h.degrees();
        dg.sort_unstable();
        dh.sort_unstable();
        prop_assert_eq!(dg, dh);
    }

    #[test]
    fn srg_check_agrees_with_naive_count(g in (0usize..14, any::<u64>()).prop_map(|(n, s)| {
        common::random_graph(&mut ChaCha8Rng::seed_from_u64(s), n, 0.5)
    })) {
        let naive = common::naive_srg(&g).filter(|&(n, k, _, _)| n >= 3 && k > 0 && k < n - 1);
        let lib = g.srg_params().ok().map(|p| (p.n, p.k, p.lambda, p.mu));
        prop_assert_eq!(lib, naive);
    }
}

#[test]
fn known_graph6_strings() {
    // Reference strings for the 5-cycle and K4.
    let c5 = DenseGraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5)));
    assert_eq!(to_graph6(&c5), "Dhc");
    assert_eq!(to_graph6(&DenseGraph::complete(4)), "C~");
    assert_eq!(to_graph6(&DenseGraph::empty(0)), "?");
}
