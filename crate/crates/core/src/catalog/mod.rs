//! Verification catalog: known rank 3 graphs with their expected parameters,
//! subdegrees and automorphism group orders, plus the pipeline that checks
//! each entry and reports the outcome.

mod builtin;

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Duration;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use web_time::Instant;

use crate::autsolve::{are_isomorphic_with, automorphism_group_with, IsoOutcome, SearchStats, SolverError, SolverOptions};
use crate::families::{FamilyError, FamilyId};
use crate::permgrp::{group_order, rank_and_subdegrees, Bsgs, GeneratorSet, MAX_PAIR_DEGREE};

pub use builtin::builtin_catalog;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("entry {id}: {reason}")]
    Invalid { id: String, reason: String },
    #[error("entry {id}: {source}")]
    Family {
        id: String,
        #[source]
        source: FamilyError,
    },
    #[error("catalog file: {0}")]
    Io(#[from] std::io::Error),
    #[error("catalog file: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Tier {
    Full,
    Slow,
    ParamsOnly,
}

impl Tier {
    /// Default tier for a degree when an entry does not set one.
    pub fn for_degree(n: usize) -> Tier {
        match n {
            0..=256 => Tier::Full,
            257..=1681 => Tier::Slow,
            _ => Tier::ParamsOnly,
        }
    }

    fn runs_solver(self) -> bool {
        self != Tier::ParamsOnly
    }
}

/// Which tiers a verification run includes. Each filter includes the ones
/// before it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TierFilter {
    Full,
    Slow,
    All,
}

impl TierFilter {
    pub fn includes(self, tier: Tier) -> bool {
        match self {
            TierFilter::Full => tier == Tier::Full,
            TierFilter::Slow => tier != Tier::ParamsOnly,
            TierFilter::All => true,
        }
    }
}

/// A claim that this entry's graph is (or is not) isomorphic to another.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoClaim {
    pub other: String,
    pub isomorphic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: String,
    pub family: FamilyId,
    pub degree: usize,
    pub subdegrees: [usize; 2],
    /// `None` when the order is unknown.
    #[serde(with = "decimal_opt", default)]
    pub expected_aut_order: Option<BigUint>,
    /// Competing readings of the group name, recorded but not checked.
    #[serde(with = "decimal_vec", default, skip_serializing_if = "Vec::is_empty")]
    pub order_candidates: Vec<BigUint>,
    pub group_name: String,
    #[serde(default)]
    pub iso_claims: Vec<IsoClaim>,
    pub tier: Tier,
    pub source: String,
    /// The expected order rests on a reading of a group name that the
    /// solver result should confirm.
    #[serde(default)]
    pub verify_by_solver: bool,
}

impl CatalogEntry {
    /// Self-consistency: subdegrees sum to `n - 1`; a known order is a
    /// multiple of `n` and divides `n!`.
    pub fn validate(&self) -> Result<(), CatalogError> {
        let bad = |reason: String| {
            Err(CatalogError::Invalid {
                id: self.id.clone(),
                reason,
            })
        };
        let n = self.degree;
        if n == 0 || self.subdegrees[0] + self.subdegrees[1] != n - 1 {
            return bad(format!("subdegrees {:?} do not sum to {} - 1", self.subdegrees, n));
        }
        if let Some(order) = &self.expected_aut_order {
            if order % BigUint::from(n) != BigUint::ZERO {
                return bad(format!("order {order} is not a multiple of the degree"));
            }
            let fact = (1..=n as u64).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(i));
            if fact % order != BigUint::ZERO {
                return bad(format!("order {order} does not divide {n}!"));
            }
        }
        Ok(())
    }
}

/// Reads a JSON list of entries and validates each one.
pub fn load_catalog(path: &Path) -> Result<Vec<CatalogEntry>, CatalogError> {
    let text = std::fs::read_to_string(path)?;
    let entries: Vec<CatalogEntry> = serde_json::from_str(&text)?;
    for e in &entries {
        e.validate()?;
    }
    Ok(entries)
}

/// Finds an entry by id or by family descriptor.
pub fn lookup<'a>(entries: &'a [CatalogEntry], key: &str) -> Option<&'a CatalogEntry> {
    entries
        .iter()
        .find(|e| e.id == key)
        .or_else(|| entries.iter().find(|e| e.family.to_string() == key))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StageStatus {
    Pass,
    Fail,
    /// The solver ran out of time before the stage finished.
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageOutcome {
    pub status: StageStatus,
    pub detail: String,
}

impl StageOutcome {
    fn new(ok: bool, detail: String) -> Self {
        StageOutcome {
            status: if ok { StageStatus::Pass } else { StageStatus::Fail },
            detail,
        }
    }

    fn timeout(detail: String) -> Self {
        StageOutcome {
            status: StageStatus::Timeout,
            detail,
        }
    }
}

/// Outcome of each pipeline stage; stages not attempted are absent.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stages {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub construct: Option<StageOutcome>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub srg: Option<StageOutcome>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub subdegrees: Option<StageOutcome>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub aut_order: Option<StageOutcome>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub iso_claims: Option<StageOutcome>,
}

impl Stages {
    fn all(&self) -> impl Iterator<Item = &StageOutcome> {
        [&self.construct, &self.srg, &self.subdegrees, &self.aut_order, &self.iso_claims]
            .into_iter()
            .flatten()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    PassDowngraded,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub id: String,
    pub family: String,
    pub stages: Stages,
    pub timings_ms: BTreeMap<String, u64>,
    /// Order computed by the solver, when it finished.
    #[serde(with = "decimal_opt", default)]
    pub aut_order: Option<BigUint>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub solver_stats: Option<SearchStats>,
    pub verdict: Verdict,
}

impl Report {
    fn new(entry: &CatalogEntry) -> Self {
        Report {
            id: entry.id.clone(),
            family: entry.family.to_string(),
            stages: Stages::default(),
            timings_ms: BTreeMap::new(),
            aut_order: None,
            solver_stats: None,
            verdict: Verdict::Pass,
        }
    }

    /// FAIL if any stage failed, else PASS_DOWNGRADED if any timed out.
    fn finish(&mut self) {
        let statuses: Vec<StageStatus> = self.stages.all().map(|s| s.status).collect();
        self.verdict = if statuses.contains(&StageStatus::Fail) {
            Verdict::Fail
        } else if statuses.contains(&StageStatus::Timeout) {
            Verdict::PassDowngraded
        } else {
            Verdict::Pass
        };
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub pass_downgraded: usize,
    pub fail: usize,
}

impl Summary {
    pub fn of(reports: &[Report]) -> Self {
        let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
        Summary {
            total: reports.len(),
            pass: count(Verdict::Pass),
            pass_downgraded: count(Verdict::PassDowngraded),
            fail: count(Verdict::Fail),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRun {
    pub reports: Vec<Report>,
    pub summary: Summary,
}

impl VerifyRun {
    pub fn any_fail(&self) -> bool {
        self.summary.fail > 0
    }
}

fn ms(since: Instant) -> u64 {
    since.elapsed().as_millis() as u64
}

fn remaining(deadline: Instant) -> SolverOptions {
    SolverOptions::with_budget(deadline.saturating_duration_since(Instant::now()))
}

/// Runs the pipeline on one entry: construct, SRG parameters, rank and
/// subdegrees, then (outside the params-only tier) the automorphism group
/// order and the isomorphism claims. `budget` bounds the solver time for
/// the whole entry. Family descriptors are re-read with `seed`.
pub fn verify_entry(entry: &CatalogEntry, budget: Duration, seed: u64) -> Result<Report, CatalogError> {
    let fam_err = |source| CatalogError::Family {
        id: entry.id.clone(),
        source,
    };
    let mut report = Report::new(entry);
    let family = FamilyId::parse_with_seed(&entry.family.to_string(), seed).map_err(fam_err)?;

    let t = Instant::now();
    let construction = family.build().map_err(fam_err)?;
    let g = &construction.graph;
    report.timings_ms.insert("construct".into(), ms(t));
    report.stages.construct = Some(StageOutcome::new(
        g.order() == entry.degree,
        format!("{} vertices, {} edges", g.order(), g.edge_count()),
    ));

    let t = Instant::now();
    let [s0, s1] = entry.subdegrees;
    report.stages.srg = Some(match g.srg_params() {
        Ok(p) => StageOutcome::new(p.k == s0 || p.k == s1, p.to_string()),
        Err(e) => StageOutcome::new(false, e.to_string()),
    });
    report.timings_ms.insert("srg".into(), ms(t));

    let deadline = Instant::now() + budget;
    let mut aut = None;
    if entry.tier.runs_solver() {
        let t = Instant::now();
        match automorphism_group_with(g, &remaining(deadline)) {
            Ok(a) => aut = Some(a),
            Err(SolverError::Timeout { budget_ms }) => {
                report.stages.aut_order = Some(StageOutcome::timeout(format!(
                    "no result within {budget_ms} ms"
                )));
            }
            Err(e) => report.stages.aut_order = Some(StageOutcome::new(false, e.to_string())),
        }
        report.timings_ms.insert("aut".into(), ms(t));
    }

    // Subdegrees come from the constructed group when there is one, else
    // from the automorphism group found by the solver.
    let t = Instant::now();
    let group: Option<&GeneratorSet> = construction
        .group
        .as_ref()
        .or(aut.as_ref().map(|a| &a.generators));
    report.stages.subdegrees = Some(match group {
        Some(gs) => check_subdegrees(gs, g, entry.subdegrees),
        None => StageOutcome::new(false, "no rank 3 group available".into()),
    });
    report.timings_ms.insert("subdegrees".into(), ms(t));

    if let Some(a) = &aut {
        let mut ok = true;
        let mut detail = format!("solver order {}", a.order);
        if let Some(expected) = &entry.expected_aut_order {
            ok &= a.order == *expected;
            if !ok {
                detail.push_str(&format!(", expected {expected}"));
            }
        }
        if let Some(gs) = &construction.group {
            let sub = group_order(gs);
            if &a.order % &sub != BigUint::ZERO {
                ok = false;
                detail.push_str(&format!(", not a multiple of the rank 3 group order {sub}"));
            }
        }
        report.stages.aut_order = Some(StageOutcome::new(ok, detail));
        report.aut_order = Some(a.order.clone());
        report.solver_stats = Some(a.stats.clone());
    }

    if entry.tier.runs_solver() && !entry.iso_claims.is_empty() {
        let t = Instant::now();
        report.stages.iso_claims = Some(check_claims(entry, g, seed, deadline).map_err(fam_err)?);
        report.timings_ms.insert("iso".into(), ms(t));
    }

    report.finish();
    Ok(report)
}

fn check_subdegrees(gs: &GeneratorSet, g: &crate::graphs::DenseGraph, expected: [usize; 2]) -> StageOutcome {
    let n = g.order();
    if !gs.is_transitive() {
        return StageOutcome::new(false, "group is not transitive".into());
    }
    // Orbits of the stabiliser of vertex 0.
    let bsgs = Bsgs::new(gs, &[0]);
    let stab = GeneratorSet::new(n, bsgs.stabilizer_gens(1)).expect("same degree");
    let orbits: Vec<Vec<u32>> = stab.orbits().into_iter().filter(|o| o[0] != 0).collect();
    let mut sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    let mut want = expected.to_vec();
    want.sort_unstable();
    let mut ok = sizes == want;
    let mut detail = format!("rank {}, subdegrees {:?}", sizes.len() + 1, sizes);

    // The neighbourhood of 0 must be exactly one suborbit.
    let k = g.degree(0);
    let nbrs_form_orbit = orbits
        .iter()
        .any(|o| o.len() == k && o.iter().all(|&v| g.has_edge(0, v as usize)));
    if !nbrs_form_orbit {
        ok = false;
        detail.push_str("; neighbourhood of 0 is not a suborbit");
    }

    if n <= MAX_PAIR_DEGREE {
        match rank_and_subdegrees(gs) {
            Ok(r) if r.subdegrees == sizes => detail.push_str("; pair closure agrees"),
            Ok(r) => {
                ok = false;
                detail.push_str(&format!("; pair closure gives {:?}", r.subdegrees));
            }
            Err(e) => {
                ok = false;
                detail.push_str(&format!("; pair closure failed: {e}"));
            }
        }
    }
    StageOutcome::new(ok, detail)
}

fn check_claims(
    entry: &CatalogEntry,
    g: &crate::graphs::DenseGraph,
    seed: u64,
    deadline: Instant,
) -> Result<StageOutcome, FamilyError> {
    let mut ok = true;
    let mut parts = Vec::new();
    for claim in &entry.iso_claims {
        let h = FamilyId::parse_with_seed(&claim.other, seed)?.graph()?;
        let rel = if claim.isomorphic { "~=" } else { "!~=" };
        match are_isomorphic_with(g, &h, &remaining(deadline)) {
            Ok(out) => {
                let holds = out.is_isomorphic() == claim.isomorphic;
                ok &= holds;
                let why = match out {
                    IsoOutcome::Isomorphic(_) => "isomorphism found".to_string(),
                    IsoOutcome::NotIsomorphic(r) => format!("{r:?}"),
                };
                parts.push(format!("{rel} {}: {} ({why})", claim.other, if holds { "holds" } else { "FAILS" }));
            }
            Err(SolverError::Timeout { .. }) => {
                return Ok(StageOutcome::timeout(format!("timed out on {rel} {}", claim.other)));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("{rel} {}: {e}", claim.other));
            }
        }
    }
    Ok(StageOutcome::new(ok, parts.join("; ")))
}

fn failed_report(entry: &CatalogEntry, err: &CatalogError) -> Report {
    let mut r = Report::new(entry);
    r.stages.construct = Some(StageOutcome::new(false, err.to_string()));
    r.finish();
    r
}

/// Verifies every entry the filter selects. Entries run in parallel;
/// reports come back in catalog order.
pub fn verify_all(entries: &[CatalogEntry], filter: TierFilter, budget: Duration, seed: u64) -> VerifyRun {
    let selected: Vec<&CatalogEntry> = entries.iter().filter(|e| filter.includes(e.tier)).collect();
    let reports: Vec<Report> = selected
        .par_iter()
        .map(|e| verify_entry(e, budget, seed).unwrap_or_else(|err| failed_report(e, &err)))
        .collect();
    let summary = Summary::of(&reports);
    VerifyRun { reports, summary }
}

mod decimal_opt {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_some(&x.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| t.parse().map_err(D::Error::custom))
            .transpose()
    }
}

mod decimal_vec {
    use num_bigint::BigUint;
    use serde::{de::Error, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| t.parse().map_err(D::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_entries_are_consistent() {
        let cat = builtin_catalog();
        assert!(cat.len() >= 25);
        let mut ids: Vec<&str> = cat.iter().map(|e| e.id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), cat.len(), "duplicate ids");
        for e in &cat {
            e.validate().unwrap();
            if e.tier == Tier::Full {
                assert!(e.degree <= 256, "{}", e.id);
            }
        }
        assert_eq!(lookup(&cat, "peisert:49").unwrap().subdegrees, [24, 24]);
    }

    #[test]
    fn validation_rejects_bad_rows() {
        let mut e = lookup(&builtin_catalog(), "vls16").unwrap().clone();
        e.subdegrees = [5, 9];
        assert!(e.validate().is_err());
        e.subdegrees = [5, 10];
        e.expected_aut_order = Some(BigUint::from(1921u32));
        assert!(e.validate().is_err());
    }

    #[test]
    fn entry_json_round_trip() {
        for e in builtin_catalog() {
            let text = serde_json::to_string(&e).unwrap();
            let back: CatalogEntry = serde_json::from_str(&text).unwrap();
            assert_eq!(back, e);
        }
    }

    #[test]
    fn vls16_passes() {
        let cat = builtin_catalog();
        let r = verify_entry(lookup(&cat, "vls16").unwrap(), Duration::from_secs(60), 0).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert_eq!(r.aut_order, Some(BigUint::from(1920u32)));
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<Report>(&text).unwrap(), r);
    }

    #[test]
    fn corrupted_order_fails() {
        let mut e = lookup(&builtin_catalog(), "paley13").unwrap().clone();
        e.expected_aut_order = Some(BigUint::from(13u32 * 12));
        let r = verify_entry(&e, Duration::from_secs(60), 0).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.stages.aut_order.unwrap().detail.contains("solver order 78"));
    }

    #[test]
    fn empty_selection() {
        let cat: Vec<CatalogEntry> = builtin_catalog().into_iter().filter(|e| e.tier == Tier::Slow).collect();
        let run = verify_all(&cat, TierFilter::Full, Duration::from_secs(1), 0);
        assert!(run.reports.is_empty());
        assert!(!run.any_fail());
    }
}
