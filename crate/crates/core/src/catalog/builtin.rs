use num_bigint::BigUint;

use super::{CatalogEntry, IsoClaim, Tier};

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(big(1), |acc, i| acc * big(i))
}

struct Row {
    id: &'static str,
    family: &'static str,
    degree: usize,
    subdegrees: [usize; 2],
    order: Option<BigUint>,
    name: &'static str,
    tier: Tier,
    source: &'static str,
}

impl Row {
    fn entry(self, claims: &[(&str, bool)], verify_by_solver: bool) -> CatalogEntry {
        CatalogEntry {
            id: self.id.to_string(),
            family: self.family.parse().expect("builtin descriptors parse"),
            degree: self.degree,
            subdegrees: self.subdegrees,
            expected_aut_order: self.order,
            order_candidates: Vec::new(),
            group_name: self.name.to_string(),
            iso_claims: claims
                .iter()
                .map(|&(other, isomorphic)| IsoClaim {
                    other: other.to_string(),
                    isomorphic,
                })
                .collect(),
            tier: self.tier,
            source: self.source.to_string(),
            verify_by_solver,
        }
    }
}

macro_rules! row {
    ($id:expr, $fam:expr, $n:expr, [$a:expr, $b:expr], $ord:expr, $name:expr, $tier:ident, $src:expr) => {
        Row {
            id: $id,
            family: $fam,
            degree: $n,
            subdegrees: [$a, $b],
            order: $ord,
            name: $name,
            tier: Tier::$tier,
            source: $src,
        }
    };
}

/// The built-in verification targets, in report order.
pub fn builtin_catalog() -> Vec<CatalogEntry> {
    let t4 = "one-dimensional exceptions table";
    let t5 = "class (B) closures table";
    let t6 = "class (C) closures table";
    let mut out = vec![
        // Degree <= 256: full automorphism group computation.
        row!("paley9", "paley:9", 9, [4, 4], Some(big(9 * 8)), "3^2:D_8", Full,
            "one-dimensional case q = 9; |D_8| = 8")
        .entry(&[("peisert:9", true)], false),
        row!("paley13", "paley:13", 13, [6, 6], Some(big(13 * 6)), "13:6", Full,
            "Paley control inside AGammaL_1(13)")
        .entry(&[], false),
        row!("paley17", "paley:17", 17, [8, 8], Some(big(17 * 8)), "17:8", Full,
            "Paley control inside AGammaL_1(17)")
        .entry(&[], false),
        row!("paley25", "paley:25", 25, [12, 12], Some(big(25 * 12 * 2)), "5^2:(12:2)", Full,
            "Paley control inside AGammaL_1(25)")
        .entry(&[], false),
        row!("vls16", "vls:16:3", 16, [5, 10], Some(big(16 * 120)), "2^4:Sym(5)", Full, t4)
            .entry(&[("vo:-:4:2", true)], false),
        row!("vo-4-2", "vo:-:4:2", 16, [5, 10], Some(big(16 * 120)), "2^4:GammaO^-_4(2)", Full,
            "affine polar graph, same graph as the 16-vertex VLS row")
        .entry(&[], false),
        row!("vls25", "vls:25:3", 25, [8, 16], Some(big(120 * 120 * 2)), "(Sym(5) x Sym(5)):2", Full, t4)
            .entry(&[("hamming2:5", true)], false),
        row!("hamming5", "hamming2:5", 25, [8, 16], Some(big(120 * 120 * 2)), "(Sym(5) x Sym(5)):2", Full,
            "5 x 5 rook's graph")
        .entry(&[], false),
        row!("peisert49", "peisert:49", 49, [24, 24], Some(big(49 * 3 * 24)), "7^2:(3 x SL_2(3))", Full, t4)
            .entry(&[("paley:49", false)], false),
        row!("paley49", "paley:49", 49, [24, 24], Some(big(49 * 3 * 16)), "7^2:(3 x D_16)", Full,
            "one-dimensional case q = 49; D_16 read as dihedral of order 16")
        .entry(&[], true),
        row!("b49", "orbital:b49", 49, [24, 24], Some(big(49 * 3 * 24)), "7^2:(3 x SL_2(3))", Full, t5)
            .entry(&[("peisert:49", true)], false),
        row!("vls64", "vls:64:3", 64, [21, 42], Some(big(64 * 6 * 168)), "2^6:(Sym(3) x L_3(2))", Full, t4)
            .entry(&[("hq:2:3", true)], false),
        row!("hq-2-3", "hq:2:3", 64, [21, 42], Some(big(64 * 6 * 168)), "2^6:(Sym(3) x L_3(2))", Full,
            "bilinear forms graph H_2(2,3)")
        .entry(&[], false),
        row!("vo-6-2", "vo:-:6:2", 64, [27, 36], Some(big(64 * 51840)), "2^6:GammaO^-_6(2)", Full,
            "class (B) row 64 with R = 3^{1+2}; |GammaO^-_6(2)| = 51840")
        .entry(&[], false),
        row!("b169", "orbital:b169", 169, [72, 96], Some(big(169 * 3 * 96)), "13^2:(3 x (SL_2(3):4))", Full, t5)
            .entry(&[("orbital:q8:13", true)], false),
        row!("q8-13", "orbital:q8:13", 169, [72, 96], Some(big(169 * 3 * 96)), "13^2:(3 x (SL_2(3):4))", Full,
            "class (B) row 169, built from the normaliser of Q_8 in GL_2(13)")
        .entry(&[], false),
        // Solver runs that may time out on slow machines.
        row!("hamming9", "hamming2:9", 81, [16, 64], Some(factorial(9) * factorial(9) * big(2)),
            "(Sym(9) x Sym(9)):2", Slow, t4)
        .entry(&[("vls:81:5", true)], false),
        row!("vls81", "vls:81:5", 81, [16, 64], Some(factorial(9) * factorial(9) * big(2)),
            "(Sym(9) x Sym(9)):2", Slow, "one-dimensional exceptions table; e = 5 gives subdegrees 16,64")
        .entry(&[], false),
        row!("peisert81", "peisert:81", 81, [40, 40], Some(big(81 * 120 * 4)), "3^4:(SL_2(5):2^2)", Slow, t4)
            .entry(&[("paley:81", false)], false),
        row!("paley81", "paley:81", 81, [40, 40], Some(big(81 * 40 * 4)), "3^4:(40:4)", Slow,
            "Paley graph with Aut inside AGammaL_1(81)")
        .entry(&[], false),
        row!("vo+4-3", "vo:+:4:3", 81, [32, 48], Some(big(81 * 2304)), "3^4:GammaO^+_4(3)", Slow,
            "class (B) rows 81 (32,48); |GammaO^+_4(3)| = 2304, confirmed by a solver run")
        .entry(&[], true),
        row!("vls256", "vls:256:5", 256, [51, 204], Some(big(256 * 3 * 4080 * 4)), "2^8:(3 x SL_2(2^4)):4", Slow,
            "one-dimensional exceptions table; e = 5 gives subdegrees 51,204")
        .entry(&[("vo:-:4:4", true)], false),
        row!("b289", "orbital:b289", 289, [96, 192], Some(big(289 * 8 * 24 * 2)), "17^2:(8.Sym(4):2)", Slow, t5)
            .entry(&[], false),
        row!("hq-3-3", "hq:3:3", 729, [104, 624], Some(big(729 * 5616 * 48)), "3^6:(L_3(3) x GL_2(3))", Slow, t4)
            .entry(&[("vls:729:7", true)], false),
        row!("sl25-41", "orbital:sl25:41:40", 1681, [480, 1200], Some(big(1681 * 40 * 120 / 2)),
            "41^2:(40 o SL_2(5))", Slow, "class (C) closures table; central product shares the involution -I")
        .entry(&[], true),
        // Construction, parameters and subdegrees only.
        row!("hq-2-5", "hq:2:5", 1024, [93, 930], Some(big(1024 * 9_999_360 * 6)), "2^10:(L_5(2) x Sym(3))",
            ParamsOnly, t4)
        .entry(&[("vls:1024:11", true)], false),
        row!("vls1024", "vls:1024:11", 1024, [93, 930], Some(big(1024 * 9_999_360 * 6)),
            "2^10:(L_5(2) x Sym(3))", ParamsOnly, t4)
        .entry(&[], false),
        row!("a52", "a52", 1024, [155, 868], Some(big(1024 * 9_999_360)), "2^10:GammaL_5(2)", ParamsOnly,
            "alternating forms graph A(5,2)")
        .entry(&[], false),
        row!("vls729", "vls:729:7", 729, [104, 624], Some(big(729 * 5616 * 48)), "3^6:(L_3(3) x GL_2(3))",
            ParamsOnly, t4)
        .entry(&[], false),
        row!("b361", "orbital:b361", 361, [144, 216], Some(big(361 * 9 * 48)), "19^2:(9 x GL_2(3))", ParamsOnly, t5)
            .entry(&[], false),
        row!("b529", "orbital:b529", 529, [264, 264], Some(big(529 * 11 * 24)), "23^2:(11 x SL_2(3))",
            ParamsOnly, t5)
        .entry(&[], false),
        row!("b841", "orbital:b841", 841, [168, 672], Some(big(841 * 7 * 96)), "29^2:(7 x (SL_2(3):4))",
            ParamsOnly, t5)
        .entry(&[], false),
        row!("b961", "orbital:b961", 961, [240, 720], Some(big(961 * 15 * 48)), "31^2:(15 x 2.Sym(4))",
            ParamsOnly, t5)
        .entry(&[], false),
        row!("b2209", "orbital:b2209", 2209, [1104, 1104], Some(big(2209 * 23 * 48)), "47^2:(23 x GL_2(3))",
            ParamsOnly, "class (B) closures table; printed as the zero stabiliser 23 x GL_2(3)")
        .entry(&[], false),
        row!("sl25-31", "orbital:sl25:31:15", 961, [360, 600], Some(big(961 * 15 * 120)), "31^2:(15 x SL_2(5))",
            ParamsOnly, t6)
        .entry(&[], false),
        row!("sl25-71", "orbital:sl25:71:35", 5041, [840, 4200], Some(big(5041 * 35 * 120)), "71^2:(35 x SL_2(5))",
            ParamsOnly, "class (C) closures table; printed group prefix 79^2 conflicts with degree 71^2, suspected typo")
        .entry(&[], false),
        row!("sl25-79", "orbital:sl25:79:39", 6241, [1560, 4680], Some(big(6241 * 39 * 120)),
            "79^2:(39 x SL_2(5))", ParamsOnly, t6)
        .entry(&[], false),
        row!("sl25-89", "orbital:sl25:89:88", 7921, [2640, 5280], Some(big(7921 * 88 * 120 / 2)),
            "89^2:(88 o SL_2(5))", ParamsOnly, t6)
        .entry(&[], true),
        row!("vls4096", "vls:4096:13", 4096, [315, 3780], None, "2^12:(GL_2(4) x GL_3(4)):2", ParamsOnly,
            "one-dimensional exceptions table; degree printed as 4098, stored as 4096 = 2^12")
        .entry(&[], false),
        row!("hq-4-3", "hq:4:3", 4096, [315, 3780], None, "2^12:(GL_2(4) x GL_3(4)):2", ParamsOnly,
            "bilinear forms graph H_4(2,3); degree printed as 4098, stored as 4096 = 2^12")
        .entry(&[], false),
    ];
    // Direct product versus central product of GL_2(4) and GL_3(4): both
    // readings are recorded and neither is checked.
    let (gl2, gl3) = (big(180), big(181_440));
    let direct = big(4096) * &gl2 * &gl3 * big(2);
    let central = big(4096) * &gl2 * &gl3 * big(2) / big(3);
    for e in out.iter_mut().filter(|e| e.degree == 4096) {
        e.order_candidates = vec![direct.clone(), central.clone()];
    }
    out
}
