//! Bundled verification suites.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use super::RunConfig;
use crate::classifier::{classify, eval_finite_conditions, match_table1_profiles, Reason};
use crate::finite_field::{
    closure_order, enumerate_flags, enumerate_orbits, expected_flag_count, group_generators,
    lemma_key_check, rank_matrix, PrimeField, StandardForm,
};
use crate::flag_model::{
    Block, ChainOrder, GeneralizedFlagDescriptor, LambdaProfile, LieType, ParabolicSignature,
};
use crate::orbit_combinatorics::{
    count_double_orbits, orbit_growth_sequence, qc_bound, MarginPair,
};
use crate::truncation::{
    embed_shape, truncate, EmbeddingPlan, TruncatedFlagShape, TruncationPolicy,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Table1,
    Negative,
    Crosscheck,
    Oracle,
    LemmaKey,
    Growth,
    Bound,
    Sanity,
    FieldIndependence,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Table1,
        Suite::Negative,
        Suite::Crosscheck,
        Suite::Oracle,
        Suite::LemmaKey,
        Suite::Growth,
        Suite::Bound,
        Suite::Sanity,
        Suite::FieldIndependence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::Negative => "negative",
            Suite::Crosscheck => "crosscheck",
            Suite::Oracle => "oracle",
            Suite::LemmaKey => "lemma-key",
            Suite::Growth => "growth",
            Suite::Bound => "bound",
            Suite::Sanity => "sanity",
            Suite::FieldIndependence => "field-independence",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseReport {
    pub id: String,
    pub pass: bool,
    pub detail: Value,
}

impl CaseReport {
    fn new(id: impl Into<String>, pass: bool, detail: Value) -> Self {
        CaseReport {
            id: id.into(),
            pass,
            detail,
        }
    }

    fn error(id: impl Into<String>, err: impl std::fmt::Display) -> Self {
        CaseReport::new(id, false, json!({ "error": err.to_string() }))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseReport>,
}

impl SuiteReport {
    fn from_cases(suite: Suite, mut cases: Vec<CaseReport>) -> Self {
        cases.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = cases.iter().filter(|c| c.pass).count();
        SuiteReport {
            suite: suite.name().to_string(),
            passed,
            failed: cases.len() - passed,
            cases,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.passed > 0
    }
}

pub fn run_suite(suite: Suite, config: &RunConfig) -> SuiteReport {
    let cases = match suite {
        Suite::Table1 => table1_cases(),
        Suite::Negative => negative_cases(),
        Suite::Crosscheck => crosscheck_cases(),
        Suite::Oracle => oracle_cases(config),
        Suite::LemmaKey => lemma_key_cases(config),
        Suite::Growth => growth_cases(config),
        Suite::Bound => bound_cases(),
        Suite::Sanity => sanity_cases(config),
        Suite::FieldIndependence => field_independence_cases(config),
    };
    SuiteReport::from_cases(suite, cases)
}

fn sig(t: LieType, text: &str) -> ParabolicSignature {
    ParabolicSignature::parse_blocks(t, text).expect("suite signatures are valid")
}

fn descriptors(t: LieType, list: &[&str]) -> Vec<GeneralizedFlagDescriptor> {
    list.iter()
        .map(|s| {
            if *s == "dense" {
                GeneralizedFlagDescriptor::InfiniteChain {
                    order: ChainOrder::Dense,
                    lie_type: t,
                }
            } else {
                sig(t, s).into()
            }
        })
        .collect()
}

/// One instance per row of the triple table, with the expected row id.
pub const TABLE1_INSTANCES: [(&str, LieType, [&str; 3]); 17] = [
    ("GL-1", LieType::A, ["3,inf", "inf,4", "inf,inf"]),
    ("GL-2", LieType::A, ["3,inf", "2,inf,2", "inf,inf,inf,inf"]),
    ("GL-3", LieType::A, ["inf,2", "1,inf,1", "inf,inf,inf"]),
    ("GL-4", LieType::A, ["3,inf", "1,inf,2", "inf,inf,2,2,2,2"]),
    ("GL-5", LieType::A, ["1,inf", "4,inf,7", "inf,inf,2"]),
    ("Sp-1", LieType::C, ["inf,inf", "2,inf,2", "1,1,inf,1,1"]),
    ("Sp-2", LieType::C, ["inf,inf", "1,inf,1", "2,2,inf,2,2"]),
    ("Sp-3", LieType::C, ["1,inf,1", "inf,2,inf", "2,inf,2"]),
    (
        "Sp-4",
        LieType::C,
        ["1,inf,1", "2,inf,2", "inf,inf,inf,inf"],
    ),
    ("O-1", LieType::D, ["inf,inf", "3,inf,3", "2,inf,2"]),
    ("O-2", LieType::D, ["inf,inf", "1,1,inf,1,1", "4,inf,4"]),
    ("O-3", LieType::D, ["inf,inf", "4,inf,4", "2,inf,2"]),
    ("O-4", LieType::D, ["inf,inf", "4,inf,4", "1,1,1,inf,1,1,1"]),
    (
        "O-5",
        LieType::D,
        ["inf,inf", "4,inf,4", "1,1,1,1,inf,1,1,1,1"],
    ),
    ("O-6", LieType::B, ["2,inf,2", "inf,1,inf", "1,1,inf,1,1"]),
    ("O-7", LieType::B, ["1,inf,1", "3,inf,3", "inf,1,inf"]),
    ("O-8", LieType::D, ["1,inf,1", "inf,inf,inf,inf", "2,inf,2"]),
];

fn table1_cases() -> Vec<CaseReport> {
    TABLE1_INSTANCES
        .iter()
        .map(
            |(row, t, sigs)| match classify(*t, &descriptors(*t, sigs)) {
                Ok(v) => {
                    let got = v.witness().map(|w| w.row.clone());
                    CaseReport::new(
                        *row,
                        got.as_deref() == Some(*row),
                        json!({ "type": t, "sigs": sigs, "verdict": v }),
                    )
                }
                Err(e) => CaseReport::error(*row, e),
            },
        )
        .collect()
}

/// Perturbed instances that must be infinite, with the expected reason.
pub const NEGATIVE_INSTANCES: [(&str, LieType, &[&str], Reason); 27] = [
    (
        "A-both-not-large",
        LieType::A,
        &["inf,inf", "inf,inf"],
        Reason::BothNotLarge,
    ),
    (
        "A-one-large",
        LieType::A,
        &["1,inf", "inf,inf", "inf,inf,inf"],
        Reason::FewerThanTwoLarge,
    ),
    (
        "A-ell-4",
        LieType::A,
        &["1,inf", "1,inf", "1,inf", "1,inf"],
        Reason::EllGe4,
    ),
    (
        "A-ell-4-mixed",
        LieType::A,
        &["1,inf", "inf,1", "2,inf", "inf,2"],
        Reason::EllGe4,
    ),
    (
        "A-no-row-333",
        LieType::A,
        &["2,inf,3", "1,inf,4", "5,inf,6"],
        Reason::NoTableRow,
    ),
    (
        "A-no-row-333b",
        LieType::A,
        &["2,inf,3", "3,inf,2", "4,inf,4"],
        Reason::NoTableRow,
    ),
    (
        "A-gl1-drop-large",
        LieType::A,
        &["3,inf", "inf,inf", "inf,inf"],
        Reason::FewerThanTwoLarge,
    ),
    (
        "A-gl2-m6",
        LieType::A,
        &["3,inf", "2,inf,2", "inf,inf,inf,inf,inf,inf"],
        Reason::NoTableRow,
    ),
    (
        "A-gl3-drop-large",
        LieType::A,
        &["inf,2", "inf,1,inf", "inf,inf,inf"],
        Reason::FewerThanTwoLarge,
    ),
    (
        "A-gl5-dense",
        LieType::A,
        &["1,inf", "4,inf,7", "dense"],
        Reason::NotSemilarge,
    ),
    (
        "C-both-not-large",
        LieType::C,
        &["inf,inf", "inf,inf"],
        Reason::BothNotLarge,
    ),
    (
        "C-ell-4",
        LieType::C,
        &["1,inf,1", "1,inf,1", "1,inf,1", "1,inf,1"],
        Reason::EllGe4,
    ),
    (
        "C-one-large",
        LieType::C,
        &["inf,inf", "inf,inf", "2,inf,2"],
        Reason::FewerThanTwoLarge,
    ),
    (
        "C-sp1-m7",
        LieType::C,
        &["inf,inf", "2,inf,2", "1,1,1,inf,1,1,1"],
        Reason::NoTableRow,
    ),
    (
        "C-sp2-drop-large",
        LieType::C,
        &["inf,inf", "1,inf,1", "inf,2,inf"],
        Reason::FewerThanTwoLarge,
    ),
    (
        "C-sp4-m5",
        LieType::C,
        &["1,inf,1", "2,1,inf,1,2", "inf,inf,inf,inf"],
        Reason::NoTableRow,
    ),
    (
        "C-no-row-large",
        LieType::C,
        &["2,inf,2", "2,inf,2", "2,inf,2"],
        Reason::NoTableRow,
    ),
    (
        "C-dense",
        LieType::C,
        &["dense", "1,inf,1"],
        Reason::NotSemilarge,
    ),
    (
        "D-o1-b4",
        LieType::D,
        &["inf,inf", "4,inf,4", "1,2,2,inf,2,2,1"],
        Reason::NoTableRow,
    ),
    (
        "D-o2-drop-large",
        LieType::D,
        &["inf,inf", "1,1,inf,1,1", "inf,1,1,inf"],
        Reason::FewerThanTwoLarge,
    ),
    (
        "D-o5-ten-ones",
        LieType::D,
        &["inf,inf", "4,inf,4", "1,1,1,1,1,inf,1,1,1,1,1"],
        Reason::NoTableRow,
    ),
    (
        "D-o8-m5",
        LieType::D,
        &["1,inf,1", "3,3,inf,3,3", "inf,inf,2,inf,inf"],
        Reason::NoTableRow,
    ),
    (
        "D-ell-4",
        LieType::D,
        &["1,inf,1", "1,inf,1", "1,inf,1", "1,inf,1"],
        Reason::EllGe4,
    ),
    (
        "D-dense",
        LieType::D,
        &["inf,inf", "dense", "2,inf,2"],
        Reason::NotSemilarge,
    ),
    (
        "B-o6-m7",
        LieType::B,
        &["2,inf,2", "inf,1,inf", "1,1,1,inf,1,1,1"],
        Reason::NoTableRow,
    ),
    (
        "B-o7-drop-large",
        LieType::B,
        &["1,inf,1", "inf,1,inf", "inf,3,inf"],
        Reason::FewerThanTwoLarge,
    ),
    (
        "B-no-row-large",
        LieType::B,
        &["3,inf,3", "3,inf,3", "3,inf,3"],
        Reason::NoTableRow,
    ),
];

fn negative_cases() -> Vec<CaseReport> {
    NEGATIVE_INSTANCES
        .iter()
        .map(
            |(id, t, sigs, reason)| match classify(*t, &descriptors(*t, sigs)) {
                Ok(v) => CaseReport::new(
                    *id,
                    v.reason() == Some(*reason),
                    json!({ "type": t, "sigs": sigs, "expected": reason, "verdict": v }),
                ),
                Err(e) => CaseReport::error(*id, e),
            },
        )
        .collect()
}

/// Distinct profiles of valid signatures of type `t` with at most `max_m`
/// blocks, finite blocks at most `max_block` and at most `max_inf` infinite
/// blocks.
pub fn profiles_of_type(
    t: LieType,
    max_m: usize,
    max_block: u32,
    max_inf: usize,
) -> Vec<LambdaProfile> {
    let choices: Vec<Block> = (1..=max_block)
        .map(Block::Finite)
        .chain(std::iter::once(Block::Inf))
        .collect();
    let mut out = BTreeSet::new();
    for m in 2..=max_m {
        let mut digits = vec![0usize; m];
        loop {
            let blocks: Vec<Block> = digits.iter().map(|&d| choices[d]).collect();
            let inf = blocks.iter().filter(|b| b.is_inf()).count();
            if inf <= max_inf {
                if let Ok(s) = ParabolicSignature::new(t, blocks) {
                    out.insert(s.lambda_profile());
                }
            }
            let mut pos = 0;
            while pos < m {
                digits[pos] += 1;
                if digits[pos] < choices.len() {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == m {
                break;
            }
        }
    }
    out.into_iter().collect()
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CrosscheckTally {
    pub triples: usize,
    pub finite: usize,
    pub disagreements: Vec<String>,
}

/// Compares the table matcher (behind the two-large gate) with the condition
/// lists over every multiset of three profiles of type `t`.
pub fn crosscheck_type(t: LieType) -> CrosscheckTally {
    let profiles = profiles_of_type(t, 5, 4, 2);
    let family = t.family();
    let parity = t.parity();
    let mut tally = CrosscheckTally::default();
    let n = profiles.len();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let triple = [
                    profiles[i].clone(),
                    profiles[j].clone(),
                    profiles[k].clone(),
                ];
                let two_large = triple.iter().filter(|p| p.is_large()).count() >= 2;
                let table = two_large && match_table1_profiles(family, &triple).is_some();
                let lists = eval_finite_conditions(family, &triple, parity).is_some();
                tally.triples += 1;
                tally.finite += usize::from(table);
                if table != lists {
                    tally.disagreements.push(format!(
                        "{} {} {}: table {table}, lists {lists}",
                        triple[0], triple[1], triple[2]
                    ));
                }
            }
        }
    }
    tally
}

fn crosscheck_cases() -> Vec<CaseReport> {
    LieType::ALL
        .iter()
        .map(|&t| {
            let tally = crosscheck_type(t);
            let shown: Vec<&String> = tally.disagreements.iter().take(10).collect();
            CaseReport::new(
                format!("type-{t}"),
                tally.disagreements.is_empty() && tally.triples > 0,
                json!({
                    "triples": tally.triples,
                    "finite": tally.finite,
                    "disagreements": tally.disagreements.len(),
                    "examples": shown,
                }),
            )
        })
        .collect()
}

/// All compositions of `n`.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Type-A double-flag shapes over `GF(p)` with at most `limit` product points.
pub fn oracle_shapes(p: u32, limit: u64) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for n in 2..=5 {
        let comps: Vec<Vec<usize>> = compositions(n)
            .into_iter()
            .filter(|c| c.len() >= 2)
            .collect();
        for c in &comps {
            for d in &comps {
                let sc = TruncatedFlagShape::from_dims(LieType::A, c.clone()).expect("composition");
                let sd = TruncatedFlagShape::from_dims(LieType::A, d.clone()).expect("composition");
                let points =
                    expected_flag_count(&sc, p as u64) * expected_flag_count(&sd, p as u64);
                if points <= BigUint::from(limit) {
                    out.push((c.clone(), d.clone()));
                }
            }
        }
    }
    out
}

/// Orbit count, contingency count and number of distinct rank matrices.
pub fn oracle_triple(
    c: &[usize],
    d: &[usize],
    p: u32,
    budget: u64,
) -> Result<(usize, BigUint, usize), String> {
    let f = PrimeField::new(p).map_err(|e| e.to_string())?;
    let sc = TruncatedFlagShape::from_dims(LieType::A, c.to_vec()).map_err(|e| e.to_string())?;
    let sd = TruncatedFlagShape::from_dims(LieType::A, d.to_vec()).map_err(|e| e.to_string())?;
    let n = sc.total();
    let form = StandardForm::new(LieType::A, n, f).map_err(|e| e.to_string())?;
    let (summary, space, part) =
        enumerate_orbits(&[sc, sd], &form, budget).map_err(|e| e.to_string())?;
    let mut classes = HashSet::new();
    let mut per_orbit: Vec<Option<Vec<Vec<usize>>>> = vec![None; summary.orbits];
    for point in 0..space.points() {
        let fl = space.flags_at(point);
        let r = rank_matrix(f, n, fl[0], fl[1]);
        let slot = &mut per_orbit[part.labels[point] as usize];
        match slot {
            None => *slot = Some(r.clone()),
            Some(prev) => assert_eq!(*prev, r, "rank matrix is not constant on an orbit"),
        }
        classes.insert(r);
    }
    let mp = MarginPair::from_dims(c, d).map_err(|e| e.to_string())?;
    Ok((summary.orbits, count_double_orbits(&mp), classes.len()))
}

fn oracle_cases(config: &RunConfig) -> Vec<CaseReport> {
    let limit = config.budget.min(5000);
    let mut cases = Vec::new();
    for &p in &config.primes {
        for (c, d) in oracle_shapes(p, limit) {
            let id = format!("p{p}-{c:?}x{d:?}");
            cases.push(match oracle_triple(&c, &d, p, config.budget) {
                Ok((orbits, dp, ranks)) => CaseReport::new(
                    id,
                    BigUint::from(orbits) == dp && ranks == orbits,
                    json!({ "orbits": orbits, "count_double": dp.to_string(), "rank_classes": ranks }),
                ),
                Err(e) => CaseReport::error(id, e),
            });
        }
    }
    cases
}

/// Shape tuples for the orbit-injection check, as `(id, signatures, N, delta)`.
pub const LEMMA_CONFIGS: [(&str, LieType, &[&str], usize, usize); 13] = [
    ("A-1inf-1inf", LieType::A, &["1,inf", "1,inf"], 3, 1),
    ("A-1inf-inf1", LieType::A, &["1,inf", "inf,1"], 3, 1),
    ("A-infinf-1inf", LieType::A, &["inf,inf", "1,inf"], 3, 1),
    (
        "A-1inf-cubed",
        LieType::A,
        &["1,inf", "1,inf", "1,inf"],
        3,
        1,
    ),
    ("C-1inf1-1inf1", LieType::C, &["1,inf,1", "1,inf,1"], 4, 2),
    ("C-1inf1-infinf", LieType::C, &["1,inf,1", "inf,inf"], 4, 2),
    ("C-infinf-infinf", LieType::C, &["inf,inf", "inf,inf"], 4, 2),
    ("D-1inf1-1inf1", LieType::D, &["1,inf,1", "1,inf,1"], 4, 2),
    ("D-1inf1-infinf", LieType::D, &["1,inf,1", "inf,inf"], 4, 2),
    ("D-infinf-infinf", LieType::D, &["inf,inf", "inf,inf"], 4, 2),
    ("B-1inf1-1inf1", LieType::B, &["1,inf,1", "1,inf,1"], 5, 2),
    (
        "B-1inf1-inf1inf",
        LieType::B,
        &["1,inf,1", "inf,1,inf"],
        5,
        2,
    ),
    (
        "B-inf1inf-inf1inf",
        LieType::B,
        &["inf,1,inf", "inf,1,inf"],
        5,
        2,
    ),
];

pub fn lemma_plans(
    t: LieType,
    sigs: &[&str],
    n: usize,
    delta: usize,
) -> Result<Vec<EmbeddingPlan>, String> {
    sigs.iter()
        .map(|s| {
            let shape =
                truncate(&sig(t, s), n, &TruncationPolicy::Balanced).map_err(|e| e.to_string())?;
            embed_shape(&shape, delta).map_err(|e| e.to_string())
        })
        .collect()
}

fn lemma_key_cases(config: &RunConfig) -> Vec<CaseReport> {
    let mut cases = Vec::new();
    for &p in &config.primes {
        let f = match PrimeField::new(p) {
            Ok(f) => f,
            Err(e) => {
                cases.push(CaseReport::error(format!("p{p}"), e));
                continue;
            }
        };
        for (id, t, sigs, n, delta) in LEMMA_CONFIGS {
            let id = format!("p{p}-{id}");
            let outcome = lemma_plans(t, sigs, n, delta).and_then(|plans| {
                lemma_key_check(&plans, f, config.budget).map_err(|e| e.to_string())
            });
            cases.push(match outcome {
                Ok(o) => {
                    CaseReport::new(id, o.holds, serde_json::to_value(&o).expect("serializable"))
                }
                Err(e) => CaseReport::error(id, e),
            });
        }
    }
    cases
}

fn growth_cases(config: &RunConfig) -> Vec<CaseReport> {
    let mut cases = Vec::new();
    let a = |s| sig(LieType::A, s);
    match orbit_growth_sequence(&a("inf,inf"), &a("inf,inf"), &[2, 4, 6, 8]) {
        Ok(g) => {
            let expect: Vec<BigUint> = (2u32..=5).map(BigUint::from).collect();
            cases.push(CaseReport::new(
                "infinf-infinf",
                g.counts == expect && g.is_growing(),
                json!({ "totals": g.totals, "counts": counts_json(&g.counts), "growing": g.is_growing() }),
            ));
        }
        Err(e) => cases.push(CaseReport::error("infinf-infinf", e)),
    }
    let totals: Vec<usize> = if config.totals.is_empty() {
        (3..=12).collect()
    } else {
        config.totals.iter().copied().filter(|&n| n >= 3).collect()
    };
    match orbit_growth_sequence(&a("1,inf"), &a("1,inf"), &totals) {
        Ok(g) => cases.push(CaseReport::new(
            "1inf-1inf",
            !g.counts.is_empty() && g.counts.iter().all(|c| *c == BigUint::from(2u32)),
            json!({ "totals": g.totals, "counts": counts_json(&g.counts), "growing": g.is_growing() }),
        )),
        Err(e) => cases.push(CaseReport::error("1inf-1inf", e)),
    }
    // Growth agrees with the pair classification.
    for (x, y) in [
        ("inf,inf", "inf,inf"),
        ("1,inf", "inf,2"),
        ("inf,inf,inf", "1,inf"),
        ("inf,2,inf", "inf,inf"),
    ] {
        let id = format!("verdict-{x}|{y}");
        let (s1, s2) = (a(x), a(y));
        let totals: Vec<usize> = (12..=20).step_by(2).collect();
        let g = orbit_growth_sequence(&s1, &s2, &totals);
        let v = classify(LieType::A, &[s1.into(), s2.into()]);
        cases.push(match (g, v) {
            (Ok(g), Ok(v)) => CaseReport::new(
                id,
                g.is_nondecreasing()
                    && (v.is_finite() == g.is_stable())
                    && (v.is_finite() != g.is_growing()),
                json!({ "finite": v.is_finite(), "counts": counts_json(&g.counts) }),
            ),
            (Err(e), _) => CaseReport::error(id, e),
            (_, Err(e)) => CaseReport::error(id, e),
        });
    }
    cases
}

pub fn counts_json(counts: &[BigUint]) -> Vec<Value> {
    counts.iter().map(biguint_json).collect()
}

/// A JSON number when it fits in `u64`, a decimal string otherwise.
pub fn biguint_json(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

/// All partitions of `n` into positive parts, nonincreasing.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            acc.push(part);
            go(n - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Checks `count <= q^C` for every margin pair with total at most
/// `max_total` (up to reordering, which changes neither side) and every
/// choice of designated block. Returns `(pairs checked, violations)`.
pub fn bound_check(max_total: usize) -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=max_total {
        let parts = partitions(n);
        for c in &parts {
            for d in &parts {
                let mp = MarginPair::from_dims(c, d).expect("partitions");
                let count = count_double_orbits(&mp);
                let mut seen = HashSet::new();
                for p0 in 0..c.len() {
                    if !seen.insert(c[p0]) {
                        continue;
                    }
                    checked += 1;
                    let bound = qc_bound(&mp, p0).expect("index in range");
                    if count > bound {
                        bad.push(format!("{c:?} {d:?} p0={p0}: {count} > {bound}"));
                    }
                }
            }
        }
    }
    (checked, bad)
}

/// Signatures used for the monotonicity sweep.
pub fn monotonicity_signatures() -> Vec<ParabolicSignature> {
    let mut out = Vec::new();
    let choices = [
        Block::Finite(1),
        Block::Finite(2),
        Block::Finite(3),
        Block::Inf,
    ];
    for m in 2..=3 {
        let mut digits = vec![0usize; m];
        'outer: loop {
            let blocks: Vec<Block> = digits.iter().map(|&d| choices[d]).collect();
            if blocks.iter().filter(|b| b.is_inf()).count() <= 2 {
                if let Ok(s) = ParabolicSignature::new(LieType::A, blocks) {
                    out.push(s);
                }
            }
            for d in digits.iter_mut() {
                *d += 1;
                if *d < choices.len() {
                    continue 'outer;
                }
                *d = 0;
            }
            break;
        }
    }
    out
}

fn bound_cases() -> Vec<CaseReport> {
    let (checked, bad) = bound_check(12);
    let mut cases = vec![CaseReport::new(
        "qc-bound-total-le-12",
        bad.is_empty() && checked > 0,
        json!({ "checked": checked, "violations": bad.len(), "examples": bad.iter().take(5).collect::<Vec<_>>() }),
    )];
    let sigs = monotonicity_signatures();
    let mut pairs = 0;
    let mut bad = Vec::new();
    for s1 in &sigs {
        for s2 in &sigs {
            let start =
                crate::truncation::minimum_total(s1).max(crate::truncation::minimum_total(s2));
            let totals: Vec<usize> = (start..=start + 8).collect();
            match orbit_growth_sequence(s1, s2, &totals) {
                Ok(g) if g.is_nondecreasing() => pairs += 1,
                Ok(g) => bad.push(format!("{s1} {s2}: {:?}", g.counts)),
                Err(e) => bad.push(format!("{s1} {s2}: {e}")),
            }
        }
    }
    cases.push(CaseReport::new(
        "monotone-growth",
        bad.is_empty() && pairs > 0,
        json!({ "pairs": pairs, "violations": bad.len(), "examples": bad.iter().take(5).collect::<Vec<_>>() }),
    ));
    cases
}

/// `(type, dims)` shapes whose enumerated flag counts are compared with the
/// point-count formulas.
pub const SANITY_SHAPES: [(LieType, &[usize]); 12] = [
    (LieType::A, &[1, 2]),
    (LieType::A, &[1, 1, 1]),
    (LieType::A, &[2, 2]),
    (LieType::A, &[1, 2, 1]),
    (LieType::C, &[2, 2]),
    (LieType::C, &[1, 2, 1]),
    (LieType::C, &[1, 1, 1, 1]),
    (LieType::C, &[3, 3]),
    (LieType::D, &[2, 2]),
    (LieType::D, &[1, 2, 1]),
    (LieType::D, &[1, 1, 2, 1, 1]),
    (LieType::B, &[2, 1, 2]),
];

/// `(type, N, p, |G|)` group orders reached by generator closure.
pub const GROUP_ORDERS: [(LieType, usize, u32, usize); 8] = [
    (LieType::A, 2, 2, 6),
    (LieType::A, 3, 2, 168),
    (LieType::C, 2, 3, 24),
    (LieType::C, 4, 2, 720),
    (LieType::D, 2, 3, 4),
    (LieType::B, 3, 3, 48),
    (LieType::D, 4, 2, 72),
    (LieType::B, 5, 2, 720),
];

fn sanity_cases(config: &RunConfig) -> Vec<CaseReport> {
    let mut cases = Vec::new();
    for &p in &config.primes {
        for (t, dims) in SANITY_SHAPES {
            let id = format!("flags-p{p}-{t}{dims:?}");
            let result = PrimeField::new(p).map_err(|e| e.to_string()).and_then(|f| {
                let shape =
                    TruncatedFlagShape::from_dims(t, dims.to_vec()).map_err(|e| e.to_string())?;
                let form = StandardForm::new(t, shape.total(), f).map_err(|e| e.to_string())?;
                let flags =
                    enumerate_flags(&shape, &form, config.budget).map_err(|e| e.to_string())?;
                Ok((flags.len(), expected_flag_count(&shape, p as u64)))
            });
            cases.push(match result {
                Ok((got, want)) => CaseReport::new(
                    id,
                    BigUint::from(got) == want,
                    json!({ "enumerated": got, "formula": biguint_json(&want) }),
                ),
                Err(e) => CaseReport::error(id, e),
            });
        }
    }
    for (t, n, p, order) in GROUP_ORDERS {
        let id = format!("group-{t}{n}-p{p}");
        let result = PrimeField::new(p).map_err(|e| e.to_string()).and_then(|f| {
            let form = StandardForm::new(t, n, f).map_err(|e| e.to_string())?;
            let gens = group_generators(&form).map_err(|e| e.to_string())?;
            Ok(closure_order(f, &gens, order * 2))
        });
        cases.push(match result {
            Ok(got) => CaseReport::new(
                id,
                got == Some(order),
                json!({ "closure": got, "expected": order }),
            ),
            Err(e) => CaseReport::error(id, e),
        });
    }
    cases
}

/// Finite-type triples of type A whose orbit counts are compared across
/// primes.
pub const FIELD_INDEPENDENCE_SHAPES: [(&str, &[&[usize]]); 3] = [
    ("lines-dim4", &[&[1, 3], &[1, 3], &[1, 3]]),
    ("lines-dim3", &[&[1, 2], &[1, 2], &[1, 2]]),
    ("line-line-plane-dim3", &[&[1, 2], &[1, 2], &[2, 1]]),
];

/// Self-dual double flags whose counts are compared at `p = 3` and `p = 5`.
/// Agreement here is an empirical observation, not a theorem.
pub const STABILITY_SHAPES: [(&str, LieType, &[&[usize]]); 4] = [
    ("heuristic-C-lines", LieType::C, &[&[1, 2, 1], &[1, 2, 1]]),
    ("heuristic-C-lagrangians", LieType::C, &[&[2, 2], &[2, 2]]),
    ("heuristic-D-lines", LieType::D, &[&[1, 2, 1], &[1, 2, 1]]),
    ("heuristic-D-lagrangians", LieType::D, &[&[2, 2], &[2, 2]]),
];

fn orbit_count(t: LieType, dims: &[&[usize]], p: u32, budget: u64) -> Result<usize, String> {
    let f = PrimeField::new(p).map_err(|e| e.to_string())?;
    let shapes: Vec<TruncatedFlagShape> = dims
        .iter()
        .map(|d| TruncatedFlagShape::from_dims(t, d.to_vec()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let form = StandardForm::new(t, shapes[0].total(), f).map_err(|e| e.to_string())?;
    enumerate_orbits(&shapes, &form, budget)
        .map(|r| r.0.orbits)
        .map_err(|e| e.to_string())
}

fn compare_across(
    id: &str,
    t: LieType,
    dims: &[&[usize]],
    primes: &[u32],
    budget: u64,
) -> CaseReport {
    let mut counts = Vec::new();
    for &p in primes {
        match orbit_count(t, dims, p, budget) {
            Ok(c) => counts.push(c),
            Err(e) => return CaseReport::error(id, e),
        }
    }
    CaseReport::new(
        id,
        counts.windows(2).all(|w| w[0] == w[1]),
        json!({ "type": t, "primes": primes, "orbits": counts }),
    )
}

fn field_independence_cases(config: &RunConfig) -> Vec<CaseReport> {
    let primes: Vec<u32> = if config.primes.len() >= 2 {
        config.primes.clone()
    } else {
        vec![2, 3]
    };
    let mut cases: Vec<CaseReport> = FIELD_INDEPENDENCE_SHAPES
        .iter()
        .map(|(id, dims)| compare_across(id, LieType::A, dims, &primes, config.budget))
        .collect();
    for (id, t, dims) in STABILITY_SHAPES {
        cases.push(compare_across(id, t, dims, &[3, 5], config.budget));
    }
    cases
}
