//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or exceeds its time limit.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rank3::autsolve::{are_isomorphic, automorphism_group, IsoOutcome};
use rank3::catalog::{builtin_catalog, verify_all, TierFilter, Verdict};
use rank3::families::{nonzero_orbits, FamilyId};
use rank3::graphs::DenseGraph;
use rank3::permgrp::{
    central_product_with_scalars, find_sl25_in_gl2, rank_and_subdegrees, DEFAULT_SL25_BUDGET, DEFAULT_SL25_SEED,
};

type Check = Result<String, String>;

fn graph(descriptor: &str) -> DenseGraph {
    descriptor.parse::<FamilyId>().unwrap().graph().unwrap()
}

fn check(ok: bool, msg: String) -> Check {
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn oracle_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    for i in 0..200 {
        let n = rng.gen_range(1..=7);
        let density = rng.gen_range(0.1..0.9);
        let g = common::random_graph(&mut rng, n, density);
        let solver = automorphism_group(&g).map_err(|e| e.to_string())?.order;
        let oracle = common::count_automorphisms(&g);
        if solver != oracle.into() {
            return Err(format!("graph {i} (n = {n}): solver {solver}, brute force {oracle}"));
        }
    }
    Ok("200 of 200 orders agree".into())
}

fn paley_srg_suite() -> Check {
    for q in [5u64, 9, 13, 17, 25, 29, 37, 41, 49, 81] {
        let g = graph(&format!("paley:{q}"));
        let want = (q as usize, (q as usize - 1) / 2, (q as usize - 5) / 4, (q as usize - 1) / 4);
        let lib = g.srg_params().map_err(|e| format!("paley:{q}: {e}"))?;
        let naive = common::naive_srg(&g);
        if (lib.n, lib.k, lib.lambda, lib.mu) != want || naive != Some(want) {
            return Err(format!("paley:{q}: library {lib}, naive {naive:?}, expected {want:?}"));
        }
        if common::is_prime(q) && g != common::prime_paley(q as usize) {
            return Err(format!("paley:{q} differs from the residue graph on Z_{q}"));
        }
    }
    Ok("10 Paley graphs have the expected parameters".into())
}

fn expect_iso(a: &DenseGraph, b: &DenseGraph, want: bool, label: &str) -> Result<(), String> {
    match are_isomorphic(a, b).map_err(|e| format!("{label}: {e}"))? {
        IsoOutcome::Isomorphic(map) if want && a.is_isomorphism_to(b, &map) => Ok(()),
        IsoOutcome::NotIsomorphic(_) if !want => Ok(()),
        other => Err(format!("{label}: got {other:?}")),
    }
}

fn self_complementary() -> Check {
    for q in [9, 49, 81] {
        for fam in ["paley", "peisert"] {
            let g = graph(&format!("{fam}:{q}"));
            expect_iso(&g, &g.complement(), true, &format!("{fam}:{q}"))?;
        }
    }
    Ok("6 graphs isomorphic to their complements".into())
}

fn paley_peisert_dichotomy() -> Check {
    expect_iso(&graph("paley:9"), &graph("peisert:9"), true, "q = 9")?;
    expect_iso(&graph("paley:49"), &graph("peisert:49"), false, "q = 49")?;
    expect_iso(&graph("paley:81"), &graph("peisert:81"), false, "q = 81")?;
    Ok("9 isomorphic; 49 and 81 not".into())
}

fn aut_orders() -> Check {
    let rows: [(&str, u64); 7] = [
        ("vls:16:3", 1920),
        ("vls:25:3", 28800),
        ("peisert:49", 3528),
        ("vls:64:3", 64512),
        ("orbital:q8:13", 48672),
        ("paley:9", 72),
        ("paley:49", 2352),
    ];
    let mut bad = Vec::new();
    for (d, want) in rows {
        let got = automorphism_group(&graph(d)).map_err(|e| format!("{d}: {e}"))?.order;
        if got != want.into() {
            bad.push(format!("{d}: solver {got}, expected {want}"));
        }
    }
    check(bad.is_empty(), if bad.is_empty() { "7 orders exact".into() } else { bad.join("; ") })
}

fn isomorphism_claims() -> Check {
    expect_iso(&graph("vls:16:3"), &graph("vo:-:4:2"), true, "vls16 vs VO-(4,2)")?;
    expect_iso(&graph("vls:25:3"), &graph("hamming2:5"), true, "vls25 vs H(2,5)")?;
    expect_iso(&graph("vls:64:3"), &graph("hq:2:3"), true, "vls64 vs H_2(2,3)")?;
    Ok("3 isomorphisms found and verified".into())
}

fn rank_checks() -> Check {
    let rows: [(&str, [usize; 2]); 9] = [
        ("vls:16:3", [5, 10]),
        ("vls:25:3", [8, 16]),
        ("peisert:49", [24, 24]),
        ("vls:64:3", [21, 42]),
        ("vls:81:5", [16, 64]),
        ("peisert:81", [40, 40]),
        ("vo:+:4:3", [32, 48]),
        ("orbital:q8:13", [72, 96]),
        ("vls:256:5", [51, 204]),
    ];
    for (d, want) in rows {
        let c = d.parse::<FamilyId>().unwrap().build().map_err(|e| format!("{d}: {e}"))?;
        let gs = c.group.ok_or(format!("{d}: no group"))?;
        let r = rank_and_subdegrees(&gs).map_err(|e| format!("{d}: {e}"))?;
        if r.rank != 3 || r.subdegrees != want {
            return Err(format!("{d}: rank {}, subdegrees {:?}", r.rank, r.subdegrees));
        }
    }
    Ok("9 groups of rank 3 with the expected subdegrees".into())
}

fn params_only_rows() -> Check {
    let hq25 = graph("hq:2:5");
    let p = hq25.srg_params().map_err(|e| format!("hq:2:5: {e}"))?;
    if p.n != 1024 || p.k != 93 {
        return Err(format!("hq:2:5 gives {p}"));
    }
    let a52 = graph("a52");
    let pa = a52.srg_params().map_err(|e| format!("a52: {e}"))?;
    if pa.n != 1024 {
        return Err(format!("a52 gives {pa}"));
    }
    let hq43 = graph("hq:4:3");
    let k: Vec<usize> = hq43.degrees();
    if hq43.order() != 4096 || k.iter().any(|&d| d != 315) {
        return Err(format!("hq:4:3 on {} vertices is not 315-regular", hq43.order()));
    }
    Ok(format!("hq:2:5 {p}; a52 {pa}; hq:4:3 4096 vertices, valency 315"))
}

fn class_c_constructions() -> Check {
    for (p, z, want) in [(41u32, 40u64, vec![480, 1200]), (31, 15, vec![360, 600])] {
        let s = find_sl25_in_gl2(p, DEFAULT_SL25_SEED, DEFAULT_SL25_BUDGET).map_err(|e| format!("p = {p}: {e}"))?;
        let g0 = central_product_with_scalars(&s, z).map_err(|e| format!("p = {p}: {e}"))?;
        let sizes: Vec<usize> = nonzero_orbits(&g0).map_err(|e| e.to_string())?.iter().map(Vec::len).collect();
        if sizes != want {
            return Err(format!("p = {p}, {z} scalars: orbits {sizes:?}"));
        }
    }
    Ok("SL_2(5) with scalars: 480,1200 mod 41; 360,600 mod 31".into())
}

fn slow_tier() -> Check {
    let run = verify_all(&builtin_catalog(), TierFilter::Slow, Duration::from_secs(120), DEFAULT_SL25_SEED);
    let failed: Vec<String> = run
        .reports
        .iter()
        .filter(|r| r.verdict == Verdict::Fail)
        .map(|r| format!("{} ({:?})", r.id, r.stages.aut_order.as_ref().map(|s| &s.detail)))
        .collect();
    let s = &run.summary;
    check(
        failed.is_empty(),
        if failed.is_empty() {
            format!("{} entries: {} pass, {} downgraded", s.total, s.pass, s.pass_downgraded)
        } else {
            format!("failed: {}", failed.join(", "))
        },
    )
}

type Criterion = (&'static str, u64, fn() -> Check);

fn main() {
    let criteria: [Criterion; 10] = [
        ("oracle equivalence on 200 random graphs", 30, oracle_equivalence),
        ("Paley SRG parameters", 5, paley_srg_suite),
        ("self-complementary Paley and Peisert graphs", 60, self_complementary),
        ("Paley/Peisert dichotomy", 120, paley_peisert_dichotomy),
        ("exact automorphism group orders", 600, aut_orders),
        ("isomorphism claims", 300, isomorphism_claims),
        ("rank 3 subdegrees by pair closure", 300, rank_checks),
        ("params-only rows", 600, params_only_rows),
        ("class (C) constructions", 300, class_c_constructions),
        ("slow tier has no failures", 1800, slow_tier),
    ];
    let mut failures = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = f();
        let secs = t.elapsed().as_secs_f64();
        let (ok, msg) = match result {
            Ok(m) if secs <= *limit as f64 => (true, m),
            Ok(m) => (false, format!("{m}, but over the {limit} s limit")),
            Err(m) => (false, m),
        };
        failures += usize::from(!ok);
        println!(
            "{} [{:>2}] {name}: {msg} ({secs:.2} s, limit {limit} s)",
            if ok { "PASS" } else { "FAIL" },
            i + 1
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
