//! Deciding whether a product of flag ind-varieties has finitely many orbits.
//!
//! * one factor: always a single orbit;
//! * two factors: finite iff one parabolic is large and the other semilarge;
//! * three factors: all semilarge, at least two large, and the triple fits a
//!   row of the triple table for the group family (up to permutation);
//! * four or more factors: never finite.
//!
//! The triple table is stored as data in [`table1_rows`]. A second, independent
//! route, [`eval_finite_conditions`], evaluates the finite-dimensional
//! finite-type lists directly on `(m_i, c_{i,k})` data; the two must agree.

use serde::Serialize;

use crate::error::ClassifyError;
use crate::flag_model::{
    is_semilarge, Block, Family, GeneralizedFlagDescriptor, LambdaProfile, LieType,
    ParabolicSignature, Parity,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decision {
    Finite,
    Infinite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    NotSemilarge,
    FewerThanTwoLarge,
    NoTableRow,
    EllGe4,
    BothNotLarge,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::NotSemilarge => "not-semilarge",
            Reason::FewerThanTwoLarge => "fewer-than-two-large",
            Reason::NoTableRow => "no-table-row",
            Reason::EllGe4 => "ell-ge-4",
            Reason::BothNotLarge => "both-not-large",
        }
    }
}

/// The rule that made a product finite, and how the inputs were ordered to
/// fit it: `perm[k]` is the input index placed in slot `k` of the rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub row: String,
    pub perm: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "decision", rename_all = "kebab-case")]
pub enum Verdict {
    Finite { witness: Witness },
    Infinite { reason: Reason },
}

impl Verdict {
    pub fn decision(&self) -> Decision {
        match self {
            Verdict::Finite { .. } => Decision::Finite,
            Verdict::Infinite { .. } => Decision::Infinite,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.decision() == Decision::Finite
    }

    pub fn reason(&self) -> Option<Reason> {
        match self {
            Verdict::Infinite { reason } => Some(*reason),
            Verdict::Finite { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Finite { witness } => Some(witness),
            Verdict::Infinite { .. } => None,
        }
    }

    /// `0` for finite, `3` for infinite.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Finite { .. } => 0,
            Verdict::Infinite { .. } => 3,
        }
    }
}

/// All six permutations of three slots in lexicographic order.
pub const PERMS3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

pub fn classify(
    lie_type: LieType,
    flags: &[GeneralizedFlagDescriptor],
) -> Result<Verdict, ClassifyError> {
    if flags.is_empty() {
        return Err(ClassifyError::NoFlags);
    }
    if let Some(found) = flags.iter().map(|f| f.lie_type()).find(|t| *t != lie_type) {
        return Err(ClassifyError::MixedTypes {
            expected: lie_type,
            found,
        });
    }
    if flags.len() == 1 {
        return Ok(Verdict::Finite {
            witness: Witness {
                row: "single-factor".into(),
                perm: vec![0],
            },
        });
    }
    if !flags.iter().all(is_semilarge) {
        return Ok(Verdict::Infinite {
            reason: Reason::NotSemilarge,
        });
    }
    let sigs: Vec<&ParabolicSignature> = flags.iter().filter_map(|f| f.signature()).collect();
    match sigs.len() {
        2 => Ok(classify_pair(sigs[0], sigs[1])),
        3 => {
            let large = sigs.iter().filter(|s| s.is_large()).count();
            if large < 2 {
                return Ok(Verdict::Infinite {
                    reason: Reason::FewerThanTwoLarge,
                });
            }
            let triple = [sigs[0].clone(), sigs[1].clone(), sigs[2].clone()];
            Ok(match match_table1(lie_type.family(), &triple) {
                Some(witness) => Verdict::Finite { witness },
                None => Verdict::Infinite {
                    reason: Reason::NoTableRow,
                },
            })
        }
        _ => Ok(Verdict::Infinite {
            reason: Reason::EllGe4,
        }),
    }
}

fn classify_pair(a: &ParabolicSignature, b: &ParabolicSignature) -> Verdict {
    let perm = if a.is_large() {
        vec![0, 1]
    } else if b.is_large() {
        vec![1, 0]
    } else {
        return Verdict::Infinite {
            reason: Reason::BothNotLarge,
        };
    };
    Verdict::Finite {
        witness: Witness {
            row: "large-semilarge".into(),
            perm,
        },
    }
}

/// Constraint on the shape of `Λ(P)` beyond its length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeRule {
    /// `Λ(P)` equals `(∞^inf, parts…)` exactly.
    Exact { inf: usize, parts: &'static [u32] },
    /// `(∞, b, b)` with `b ≤ max_b` (unbounded when `None`).
    InfBB { max_b: Option<u32> },
    /// `(∞, c, c, 1, 1, 1, 1)` for some finite `c`.
    InfCCOnes4,
    /// `1` occurs in `Λ(P)`.
    ContainsOne,
}

impl ShapeRule {
    fn holds(self, p: &LambdaProfile) -> bool {
        match self {
            ShapeRule::Exact { inf, parts } => {
                p.infinite_count == inf && p.finite_parts.as_slice() == parts
            }
            ShapeRule::InfBB { max_b } => {
                p.infinite_count == 1
                    && p.finite_parts.len() == 2
                    && p.finite_parts[0] == p.finite_parts[1]
                    && max_b.is_none_or(|mb| p.finite_parts[0] <= mb)
            }
            ShapeRule::InfCCOnes4 => {
                p.infinite_count == 1
                    && p.finite_parts.len() == 6
                    && p.finite_parts[0] == p.finite_parts[1]
                    && p.finite_parts[2..].iter().all(|&c| c == 1)
            }
            ShapeRule::ContainsOne => p.finite_parts.contains(&1),
        }
    }
}

/// What one slot of a table row asks of its parabolic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlotRule {
    /// Allowed values of `ℓ(P) = m`; `None` for any.
    pub lengths: Option<&'static [usize]>,
    pub large: bool,
    pub shape: Option<ShapeRule>,
}

impl SlotRule {
    const SEMILARGE: SlotRule = SlotRule {
        lengths: None,
        large: false,
        shape: None,
    };
    const LARGE: SlotRule = SlotRule {
        lengths: None,
        large: true,
        shape: None,
    };

    const fn len(lengths: &'static [usize]) -> SlotRule {
        SlotRule {
            lengths: Some(lengths),
            large: false,
            shape: None,
        }
    }

    const fn len_large(lengths: &'static [usize]) -> SlotRule {
        SlotRule {
            lengths: Some(lengths),
            large: true,
            shape: None,
        }
    }

    const fn shape(shape: ShapeRule) -> SlotRule {
        SlotRule {
            lengths: None,
            large: false,
            shape: Some(shape),
        }
    }

    const fn exact(inf: usize, parts: &'static [u32]) -> SlotRule {
        Self::shape(ShapeRule::Exact { inf, parts })
    }

    fn holds(&self, p: &LambdaProfile) -> bool {
        self.lengths.is_none_or(|ls| ls.contains(&p.len()))
            && (!self.large || p.is_large())
            && self.shape.is_none_or(|s| s.holds(p))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideCondition {
    None,
    TwoLarge,
    SecondOrThirdLarge,
}

impl SideCondition {
    fn holds(self, slots: [&LambdaProfile; 3]) -> bool {
        match self {
            SideCondition::None => true,
            SideCondition::TwoLarge => slots.iter().filter(|p| p.is_large()).count() >= 2,
            SideCondition::SecondOrThirdLarge => slots[1].is_large() || slots[2].is_large(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub family: Family,
    /// 1-based row number within the family's table.
    pub number: usize,
    pub slots: [SlotRule; 3],
    pub side: SideCondition,
}

impl Table1Row {
    pub fn id(&self) -> String {
        format!("{}-{}", self.family.label(), self.number)
    }

    pub fn matches(&self, slots: [&LambdaProfile; 3]) -> bool {
        self.slots.iter().zip(slots).all(|(rule, p)| rule.holds(p)) && self.side.holds(slots)
    }

    /// Rows pinning down an exact `Λ` come first, then membership rows, then
    /// rows that only fix lengths.
    fn specificity(&self) -> u8 {
        let shapes = self.slots.iter().filter_map(|s| s.shape);
        let mut rank = 2;
        for s in shapes {
            rank = rank.min(match s {
                ShapeRule::ContainsOne => 1,
                _ => 0,
            });
        }
        rank
    }
}

const GL_ROWS: [Table1Row; 5] = [
    Table1Row {
        family: Family::Gl,
        number: 1,
        slots: [
            SlotRule::len(&[2]),
            SlotRule::len(&[2]),
            SlotRule::SEMILARGE,
        ],
        side: SideCondition::TwoLarge,
    },
    Table1Row {
        family: Family::Gl,
        number: 2,
        slots: [
            SlotRule::len(&[2]),
            SlotRule::len(&[3]),
            SlotRule::len(&[3, 4, 5]),
        ],
        side: SideCondition::TwoLarge,
    },
    Table1Row {
        family: Family::Gl,
        number: 3,
        slots: [
            SlotRule::exact(1, &[2]),
            SlotRule::len(&[3]),
            SlotRule::SEMILARGE,
        ],
        side: SideCondition::SecondOrThirdLarge,
    },
    Table1Row {
        family: Family::Gl,
        number: 4,
        slots: [
            SlotRule::len(&[2]),
            SlotRule {
                lengths: Some(&[3]),
                large: false,
                shape: Some(ShapeRule::ContainsOne),
            },
            SlotRule::SEMILARGE,
        ],
        side: SideCondition::TwoLarge,
    },
    Table1Row {
        family: Family::Gl,
        number: 5,
        slots: [
            SlotRule::exact(1, &[1]),
            SlotRule::LARGE,
            SlotRule::SEMILARGE,
        ],
        side: SideCondition::None,
    },
];

const SP_ROWS: [Table1Row; 4] = [
    Table1Row {
        family: Family::Sp,
        number: 1,
        slots: [
            SlotRule::len(&[2]),
            SlotRule::len_large(&[3]),
            SlotRule::len_large(&[3, 5]),
        ],
        side: SideCondition::None,
    },
    Table1Row {
        family: Family::Sp,
        number: 2,
        slots: [
            SlotRule::len(&[2]),
            SlotRule::exact(1, &[1, 1]),
            SlotRule::LARGE,
        ],
        side: SideCondition::None,
    },
    Table1Row {
        family: Family::Sp,
        number: 3,
        slots: [
            SlotRule::exact(1, &[1, 1]),
            SlotRule::len(&[3]),
            SlotRule::LARGE,
        ],
        side: SideCondition::None,
    },
    Table1Row {
        family: Family::Sp,
        number: 4,
        slots: [
            SlotRule::exact(1, &[1, 1]),
            SlotRule::len_large(&[3]),
            SlotRule::SEMILARGE,
        ],
        side: SideCondition::None,
    },
];

const O_ROWS: [Table1Row; 8] = [
    Table1Row {
        family: Family::O,
        number: 1,
        slots: [
            SlotRule::len(&[2]),
            SlotRule::shape(ShapeRule::InfBB { max_b: Some(3) }),
            SlotRule::LARGE,
        ],
        side: SideCondition::None,
    },
    Table1Row {
        family: Family::O,
        number: 2,
        slots: [
            SlotRule::len(&[2]),
            SlotRule::exact(1, &[1, 1, 1, 1]),
            SlotRule::LARGE,
        ],
        side: SideCondition::None,
    },
    Table1Row {
        family: Family::O,
        number: 3,
        slots: [
            SlotRule::len(&[2]),
            SlotRule::len_large(&[3]),
            SlotRule::len_large(&[3, 5]),
        ],
        side: SideCondition::None,
    },
    Table1Row {
        family: Family::O,
        number: 4,
        slots: [
            SlotRule::len(&[2]),
            SlotRule::len_large(&[3]),
            SlotRule::shape(ShapeRule::InfCCOnes4),
        ],
        side: SideCondition::None,
    },
    Table1Row {
        family: Family::O,
        number: 5,
        slots: [
            SlotRule::len(&[2]),
            SlotRule::len_large(&[3]),
            SlotRule::exact(1, &[1, 1, 1, 1, 1, 1, 1, 1]),
        ],
        side: SideCondition::None,
    },
    Table1Row {
        family: Family::O,
        number: 6,
        slots: [
            SlotRule::shape(ShapeRule::InfBB { max_b: None }),
            SlotRule::exact(2, &[1]),
            SlotRule::len_large(&[3, 5]),
        ],
        side: SideCondition::None,
    },
    Table1Row {
        family: Family::O,
        number: 7,
        slots: [
            SlotRule::exact(1, &[1, 1]),
            SlotRule::len_large(&[3]),
            SlotRule::SEMILARGE,
        ],
        side: SideCondition::None,
    },
    Table1Row {
        family: Family::O,
        number: 8,
        slots: [
            SlotRule::exact(1, &[1, 1]),
            SlotRule::len(&[3, 4]),
            SlotRule::LARGE,
        ],
        side: SideCondition::None,
    },
];

/// The triple table for one family, in table order.
pub fn table1_rows(family: Family) -> &'static [Table1Row] {
    match family {
        Family::Gl => &GL_ROWS,
        Family::Sp => &SP_ROWS,
        Family::O => &O_ROWS,
    }
}

/// Rows in scan order: most specific first, table order within a tier.
fn scan_order(family: Family) -> Vec<&'static Table1Row> {
    let mut rows: Vec<&Table1Row> = table1_rows(family).iter().collect();
    rows.sort_by_key(|r| (r.specificity(), r.number));
    rows
}

/// Finds a row of the triple table matched by some ordering of `sigs`.
///
/// Permutations are scanned in lexicographic order; for each, rows are tried
/// most specific first. The first hit is reported.
pub fn match_table1(family: Family, sigs: &[ParabolicSignature; 3]) -> Option<Witness> {
    let profiles = sigs.each_ref().map(|s| s.lambda_profile());
    match_table1_profiles(family, &profiles)
}

pub fn match_table1_profiles(family: Family, profiles: &[LambdaProfile; 3]) -> Option<Witness> {
    let rows = scan_order(family);
    for perm in PERMS3 {
        let slots = perm.map(|i| &profiles[i]);
        if let Some(row) = rows.iter().find(|r| r.matches(slots)) {
            return Some(Witness {
                row: row.id(),
                perm: perm.to_vec(),
            });
        }
    }
    None
}

/// A matched finite-type condition from the finite-dimensional lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionMatch {
    pub label: &'static str,
    pub perm: [usize; 3],
}

/// `(m_1, m_2, m_3)` and `c_{i,k}` read off the profiles of a permuted triple.
struct Triple<'a>([&'a LambdaProfile; 3]);

impl Triple<'_> {
    /// `m_i`, 1-based.
    fn m(&self, i: usize) -> usize {
        self.0[i - 1].len()
    }

    /// `c_{i,k}`: entry `k` of `Λ(P_i)`; entries up to `ℓ_i` are infinite.
    fn c(&self, i: usize, k: usize) -> Option<Block> {
        self.0[i - 1].entry(k)
    }

    fn c_is(&self, i: usize, k: usize, v: u32) -> bool {
        self.c(i, k) == Some(Block::Finite(v))
    }

    /// `Λ(P_i) = (∞, b, b)` for some finite `b`; returns `b`.
    fn inf_b_b(&self, i: usize) -> Option<u32> {
        let p = self.0[i - 1];
        (p.infinite_count == 1
            && p.finite_parts.len() == 2
            && p.finite_parts[0] == p.finite_parts[1])
            .then(|| p.finite_parts[0])
    }

    fn is_lambda(&self, i: usize, inf: usize, parts: &[u32]) -> bool {
        let p = self.0[i - 1];
        p.infinite_count == inf && p.finite_parts == parts
    }
}

type Condition = (&'static str, fn(&Triple) -> bool);

const A1_CONDITIONS: [Condition; 5] = [
    ("A.1 (S_{q,r})", |t| t.m(1) == 2 && t.c_is(1, 2, 1)),
    ("A.1 (E^{(a)}_{r+3})", |t| {
        t.m(1) == 2 && t.m(2) == 3 && t.c_is(1, 2, 2)
    }),
    ("A.1 (E^{(b)}_{r+3})", |t| {
        t.m(1) == 2 && t.m(2) == 3 && t.c_is(2, 3, 1)
    }),
    ("A.1 (E_6/E_7/E_8)", |t| {
        t.m(1) == 2 && t.m(2) == 3 && (3..=5).contains(&t.m(3))
    }),
    ("A.1 (D_{r+2})", |t| t.m(1) == 2 && t.m(2) == 2),
];

const A2_CONDITIONS: [Condition; 3] = [
    ("A.2 (SpE^{(b)}_{r+3})", |t| {
        t.m(1) == 2 && t.m(2) == 3 && t.c_is(2, 2, 1) && t.c_is(2, 3, 1)
    }),
    ("A.2 (SpY_{r+4})", |t| {
        t.m(1) == 3 && t.m(2) == 3 && t.c_is(1, 2, 1) && t.c_is(1, 3, 1)
    }),
    ("A.2 (SpE_6/SpE_8)", |t| {
        t.m(1) == 2 && t.m(2) == 3 && matches!(t.m(3), 3 | 5)
    }),
];

const A3_ODD_CONDITIONS: [Condition; 2] = [
    ("A.3 odd (II)", |t| {
        t.m(1) == 3 && t.m(2) == 3 && t.c_is(1, 2, 1) && t.c_is(1, 3, 1)
    }),
    // Λ(P_2(n)) = (m, m, 1) at finite level; P_1 and P_3 then carry the two
    // large slots, so Λ(P_1) = (∞, b, b).
    ("A.3 odd (III/IV)", |t| {
        t.m(1) == 3
            && t.m(2) == 3
            && matches!(t.m(3), 3 | 5)
            && t.is_lambda(2, 2, &[1])
            && t.inf_b_b(1).is_some()
    }),
];

const A3_EVEN_CONDITIONS: [Condition; 4] = [
    ("A.3 even (II)", |t| {
        t.m(1) == 2 && (t.inf_b_b(2).is_some_and(|b| b <= 3) || t.is_lambda(2, 1, &[1, 1, 1, 1]))
    }),
    ("A.3 even (III-3/III-4)", |t| {
        let p3 = t.0[2];
        let c_c_ones = p3.infinite_count == 1
            && p3.finite_parts.len() == 6
            && p3.finite_parts[0] == p3.finite_parts[1]
            && p3.finite_parts[2..].iter().all(|&c| c == 1);
        t.m(1) == 2
            && t.m(2) == 3
            && t.inf_b_b(2).is_some_and(|b| b >= 4)
            && (c_c_ones || t.is_lambda(3, 1, &[1; 8]))
    }),
    ("A.3 even (I-1/I-2)", |t| {
        t.m(1) == 3 && matches!(t.m(2), 2..=4) && t.c_is(1, 2, 1) && t.c_is(1, 3, 1)
    }),
    ("A.3 even (III-1/III-2)", |t| {
        t.m(1) == 2
            && t.m(2) == 3
            && t.inf_b_b(2).is_some_and(|b| b >= 4)
            && matches!(t.m(3), 3 | 5)
    }),
];

/// Evaluates the finite-type condition lists on three profiles, up to
/// permutation.
///
/// The lists presuppose that at least two of the parabolics are large; when
/// that fails there is nothing to evaluate and `None` is returned. For the
/// orthogonal family `parity` picks the odd or even list; `NotApplicable`
/// yields `None` there.
pub fn eval_finite_conditions(
    family: Family,
    profiles: &[LambdaProfile; 3],
    parity: Parity,
) -> Option<ConditionMatch> {
    if profiles.iter().filter(|p| p.is_large()).count() < 2 {
        return None;
    }
    let conditions: &[Condition] = match (family, parity) {
        (Family::Gl, _) => &A1_CONDITIONS,
        (Family::Sp, _) => &A2_CONDITIONS,
        (Family::O, Parity::Odd) => &A3_ODD_CONDITIONS,
        (Family::O, Parity::Even) => &A3_EVEN_CONDITIONS,
        (Family::O, Parity::NotApplicable) => return None,
    };
    for perm in PERMS3 {
        let t = Triple(perm.map(|i| &profiles[i]));
        if let Some((label, _)) = conditions.iter().find(|(_, cond)| cond(&t)) {
            return Some(ConditionMatch { label, perm });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(t: LieType, s: &str) -> ParabolicSignature {
        ParabolicSignature::parse_blocks(t, s).unwrap()
    }

    fn flags(t: LieType, list: &[&str]) -> Vec<GeneralizedFlagDescriptor> {
        list.iter().map(|s| sig(t, s).into()).collect()
    }

    fn prof(inf: usize, parts: &[u32]) -> LambdaProfile {
        LambdaProfile::new(inf, parts.to_vec())
    }

    #[test]
    fn classify_examples() {
        let v = classify(LieType::A, &flags(LieType::A, &["3,inf", "inf,2,5"])).unwrap();
        assert!(v.is_finite());
        let v = classify(LieType::A, &flags(LieType::A, &["inf,inf", "inf,inf"])).unwrap();
        assert_eq!(v.reason(), Some(Reason::BothNotLarge));
        let v = classify(
            LieType::A,
            &flags(LieType::A, &["1,inf", "4,inf,7", "inf,inf,2"]),
        )
        .unwrap();
        assert_eq!(v.witness().unwrap().row, "GL-5");
        let v = classify(LieType::A, &flags(LieType::A, &["1,inf"; 4])).unwrap();
        assert_eq!(v.reason(), Some(Reason::EllGe4));
        let v = classify(
            LieType::C,
            &flags(LieType::C, &["inf,inf", "2,inf,2", "1,1,inf,1,1"]),
        )
        .unwrap();
        assert_eq!(v.witness().unwrap().row, "Sp-1");
        let v = classify(
            LieType::A,
            &flags(LieType::A, &["2,inf,3", "1,inf,4", "5,inf,6"]),
        )
        .unwrap();
        assert_eq!(v.reason(), Some(Reason::NoTableRow));
    }

    #[test]
    fn classify_edge_cases() {
        assert_eq!(classify(LieType::A, &[]), Err(ClassifyError::NoFlags));
        let one = classify(LieType::A, &flags(LieType::A, &["inf,inf"])).unwrap();
        assert!(one.is_finite());
        let mixed = vec![
            GeneralizedFlagDescriptor::from(sig(LieType::A, "1,inf")),
            sig(LieType::C, "1,inf,1").into(),
        ];
        assert!(matches!(
            classify(LieType::A, &mixed),
            Err(ClassifyError::MixedTypes { .. })
        ));
        let with_dense = vec![
            GeneralizedFlagDescriptor::from(sig(LieType::A, "1,inf")),
            GeneralizedFlagDescriptor::InfiniteChain {
                order: crate::flag_model::ChainOrder::Dense,
                lie_type: LieType::A,
            },
        ];
        assert_eq!(
            classify(LieType::A, &with_dense).unwrap().reason(),
            Some(Reason::NotSemilarge)
        );
        let v = classify(
            LieType::A,
            &flags(LieType::A, &["1,inf", "inf,inf", "inf,inf"]),
        )
        .unwrap();
        assert_eq!(v.reason(), Some(Reason::FewerThanTwoLarge));
    }

    #[test]
    fn match_table1_examples() {
        let t = [
            sig(LieType::A, "inf,2"),
            sig(LieType::A, "1,inf,1"),
            sig(LieType::A, "inf,inf,inf"),
        ];
        let w = match_table1(Family::Gl, &t).unwrap();
        assert_eq!(
            (w.row.as_str(), w.perm.as_slice()),
            ("GL-3", &[0, 1, 2][..])
        );

        let t = [
            sig(LieType::D, "inf,inf"),
            sig(LieType::D, "3,inf,3"),
            sig(LieType::D, "2,inf,2"),
        ];
        let w = match_table1(Family::O, &t).unwrap();
        assert_eq!((w.row.as_str(), w.perm.as_slice()), ("O-1", &[0, 1, 2][..]));

        let t = [
            sig(LieType::D, "inf,inf"),
            sig(LieType::D, "4,inf,4"),
            sig(LieType::D, "2,inf,2"),
        ];
        assert_eq!(match_table1(Family::O, &t).unwrap().row, "O-3");

        let t = [
            sig(LieType::D, "inf,inf"),
            sig(LieType::D, "4,inf,4"),
            sig(LieType::D, "1,1,1,inf,1,1,1"),
        ];
        assert_eq!(match_table1(Family::O, &t).unwrap().row, "O-4");

        let t = [
            sig(LieType::D, "inf,inf"),
            sig(LieType::D, "4,inf,4"),
            sig(LieType::D, "2,2,1,inf,1,2,2"),
        ];
        assert_eq!(match_table1(Family::O, &t), None);
    }

    #[test]
    fn evaluator_examples() {
        let ps = [
            prof(1, &[3]),
            prof(2, &[]),
            prof(1, &[4, 4, 3, 3, 2, 2, 2, 2]),
        ];
        assert_eq!(
            eval_finite_conditions(Family::Gl, &ps, Parity::NotApplicable)
                .unwrap()
                .label,
            "A.1 (D_{r+2})"
        );
        let ps = [prof(2, &[]), prof(1, &[1, 1]), prof(1, &[1, 1, 1, 1, 1, 1])];
        assert_eq!(
            eval_finite_conditions(Family::Sp, &ps, Parity::NotApplicable)
                .unwrap()
                .label,
            "A.2 (SpE^{(b)}_{r+3})"
        );
        let ps = [prof(1, &[1, 1]), prof(2, &[2, 2]), prof(1, &[3, 3])];
        assert_eq!(
            eval_finite_conditions(Family::O, &ps, Parity::Even)
                .unwrap()
                .label,
            "A.3 even (I-1/I-2)"
        );
        // two large are presupposed
        let ps = [prof(1, &[1]), prof(2, &[]), prof(2, &[])];
        assert_eq!(
            eval_finite_conditions(Family::Gl, &ps, Parity::NotApplicable),
            None
        );
    }

    #[test]
    fn orthogonal_odd_list_needs_the_inf_inf_one_factor() {
        let ps = [prof(1, &[2, 2]), prof(2, &[1]), prof(1, &[3, 3])];
        assert_eq!(
            eval_finite_conditions(Family::O, &ps, Parity::Odd)
                .unwrap()
                .label,
            "A.3 odd (III/IV)"
        );
        assert_eq!(eval_finite_conditions(Family::O, &ps, Parity::Even), None);
        assert_eq!(match_table1_profiles(Family::O, &ps).unwrap().row, "O-6");
    }

    #[test]
    fn verdict_json() {
        let v = classify(
            LieType::A,
            &flags(LieType::A, &["1,inf", "inf,2,5", "inf,inf"]),
        )
        .unwrap();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"decision":"finite","witness":{"row":"GL-5","perm":[0,1,2]}}"#
        );
        let v = classify(LieType::A, &flags(LieType::A, &["inf,inf", "inf,inf"])).unwrap();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"decision":"infinite","reason":"both-not-large"}"#
        );
    }
}
