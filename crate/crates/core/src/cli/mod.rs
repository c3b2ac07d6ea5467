//! Command implementations behind the `flagorbits` binary.
//!
//! Every command returns a JSON value plus an exit code; the binary only
//! parses arguments and prints.

pub mod verify;

use serde_json::{json, Value};
use thiserror::Error;

use crate::classifier::{classify, Verdict};
use crate::error::{FieldError, MarginError, SignatureError, TruncationError};
use crate::finite_field::{enumerate_orbits, PrimeField, StandardForm, DEFAULT_BUDGET};
use crate::flag_model::{ChainOrder, GeneralizedFlagDescriptor, LieType, ParabolicSignature};
use crate::orbit_combinatorics::{count_double_orbits, orbit_growth_sequence, MarginPair};
use crate::truncation::{truncate, TruncatedFlagShape, TruncationPolicy};

pub use verify::{run_suite, CaseReport, Suite, SuiteReport};

pub const BUDGET_ENV: &str = "FLAGORBITS_BUDGET";

pub const EXIT_FINITE: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INFINITE: i32 = 3;
pub const EXIT_FAILED: i32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error(transparent)]
    Truncation(#[from] TruncationError),
    #[error(transparent)]
    Margin(#[from] MarginError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_INVALID
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": self.to_string() })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Table,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub budget: u64,
    pub primes: Vec<u32>,
    pub totals: Vec<usize>,
    pub output: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            budget: DEFAULT_BUDGET,
            primes: vec![2],
            totals: Vec::new(),
            output: OutputFormat::Json,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.budget == 0 {
            return Err(CliError::Invalid("budget must be positive".into()));
        }
        if self.primes.is_empty() {
            return Err(CliError::Invalid("at least one prime is required".into()));
        }
        for &p in &self.primes {
            PrimeField::new(p)?;
        }
        Ok(())
    }
}

/// The budget from `FLAGORBITS_BUDGET` if set, else `fallback`.
pub fn budget_from_env(fallback: u64) -> Result<u64, CliError> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .ok()
            .filter(|&b| b > 0)
            .ok_or_else(|| {
                CliError::Invalid(format!(
                    "{BUDGET_ENV} must be a positive integer, got `{v}`"
                ))
            }),
        Err(_) => Ok(fallback),
    }
}

/// Type names accepted on the command line; `O` leaves the parity open.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeArg {
    Exact(LieType),
    Orthogonal,
}

impl std::str::FromStr for TypeArg {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("o") {
            return Ok(TypeArg::Orthogonal);
        }
        s.parse::<LieType>()
            .map(TypeArg::Exact)
            .map_err(|_| CliError::Invalid(format!("unknown type `{s}`; use A, B, C, D or O")))
    }
}

fn parse_descriptor(t: LieType, text: &str) -> Result<GeneralizedFlagDescriptor, SignatureError> {
    let body = match text.split_once(':') {
        Some((prefix, rest)) => {
            let matches = if prefix.eq_ignore_ascii_case("o") {
                matches!(t, LieType::B | LieType::D)
            } else {
                prefix.parse::<LieType>()? == t
            };
            if !matches {
                return Err(SignatureError::UnknownType(format!(
                    "{prefix} (expected {t})"
                )));
            }
            rest
        }
        None => text,
    };
    if body.trim().eq_ignore_ascii_case("dense") {
        return Ok(GeneralizedFlagDescriptor::InfiniteChain {
            order: ChainOrder::Dense,
            lie_type: t,
        });
    }
    Ok(ParabolicSignature::parse_blocks(t, body.trim())?.into())
}

/// Parses every signature as type `t`.
pub fn parse_descriptors(
    t: LieType,
    sigs: &[String],
) -> Result<Vec<GeneralizedFlagDescriptor>, SignatureError> {
    sigs.iter().map(|s| parse_descriptor(t, s)).collect()
}

/// Resolves `O` to `D` when every signature is valid there, else to `B`.
pub fn resolve_type(
    arg: TypeArg,
    sigs: &[String],
) -> Result<(LieType, Vec<GeneralizedFlagDescriptor>), CliError> {
    match arg {
        TypeArg::Exact(t) => Ok((t, parse_descriptors(t, sigs)?)),
        TypeArg::Orthogonal => match parse_descriptors(LieType::D, sigs) {
            Ok(d) => Ok((LieType::D, d)),
            Err(even) => match parse_descriptors(LieType::B, sigs) {
                Ok(b) => Ok((LieType::B, b)),
                Err(_) => Err(even.into()),
            },
        },
    }
}

pub fn cmd_classify(arg: TypeArg, sigs: &[String]) -> Result<Verdict, CliError> {
    let (t, flags) = resolve_type(arg, sigs)?;
    classify(t, &flags).map_err(|e| CliError::Invalid(e.to_string()))
}

pub fn cmd_truncate(
    sig: &str,
    total: usize,
    explicit: Option<&[usize]>,
) -> Result<Value, CliError> {
    let sig: ParabolicSignature = sig.parse()?;
    let policy = match explicit {
        Some(dims) => TruncationPolicy::Explicit(dims.to_vec()),
        None => TruncationPolicy::Balanced,
    };
    let shape = truncate(&sig, total, &policy)?;
    Ok(serde_json::to_value(shape.to_json()).expect("serializable"))
}

pub fn cmd_count_double(c: &[u32], d: &[u32]) -> Result<Value, CliError> {
    let mp = MarginPair::new(c.to_vec(), d.to_vec())?;
    Ok(json!({ "count": verify::biguint_json(&count_double_orbits(&mp)) }))
}

#[derive(serde::Serialize)]
struct GrowthJson {
    totals: Vec<usize>,
    counts: Vec<Value>,
    growing: bool,
}

pub fn cmd_growth(sig1: &str, sig2: &str, totals: &[usize]) -> Result<Value, CliError> {
    let s1: ParabolicSignature = sig1.parse()?;
    let s2: ParabolicSignature = sig2.parse()?;
    if totals.is_empty() {
        return Err(CliError::Invalid("at least one total is required".into()));
    }
    let g = orbit_growth_sequence(&s1, &s2, totals)?;
    let out = GrowthJson {
        growing: g.is_growing(),
        counts: verify::counts_json(&g.counts),
        totals: g.totals,
    };
    Ok(serde_json::to_value(out).expect("serializable"))
}

pub fn cmd_enumerate(
    lie_type: LieType,
    dims: &[Vec<usize>],
    p: u32,
    budget: u64,
    with_reps: bool,
) -> Result<Value, CliError> {
    if dims.is_empty() {
        return Err(CliError::Invalid("at least one --dims is required".into()));
    }
    let f = PrimeField::new(p)?;
    let shapes = dims
        .iter()
        .map(|d| TruncatedFlagShape::from_dims(lie_type, d.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let form = StandardForm::new(lie_type, shapes[0].total(), f)?;
    let (mut summary, _, _) = enumerate_orbits(&shapes, &form, budget)?;
    if !with_reps {
        summary.representatives = None;
    }
    Ok(serde_json::to_value(summary).expect("serializable"))
}

/// Runs the suites in order; the exit code is 0 iff every case passed.
pub fn cmd_verify(
    suites: &[Suite],
    config: &RunConfig,
) -> Result<(Vec<SuiteReport>, i32), CliError> {
    config.validate()?;
    let reports: Vec<SuiteReport> = suites.iter().map(|&s| run_suite(s, config)).collect();
    let code = if reports.iter().all(SuiteReport::all_passed) {
        0
    } else {
        EXIT_FAILED
    };
    Ok((reports, code))
}

/// One line per case: `PASS|FAIL suite id`.
pub fn render_table(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        for c in &r.cases {
            let status = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {} {}\n", r.suite, c.id));
        }
        out.push_str(&format!(
            "{}: {} passed, {} failed\n",
            r.suite, r.passed, r.failed
        ));
    }
    out
}

/// Compact JSON followed by a newline.
pub fn to_line(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn classify_commands() {
        let v = cmd_classify(
            TypeArg::Exact(LieType::A),
            &strings(&["1,inf", "inf,2,5", "inf,inf"]),
        )
        .unwrap();
        assert_eq!(
            to_line(&v),
            "{\"decision\":\"finite\",\"witness\":{\"row\":\"GL-5\",\"perm\":[0,1,2]}}\n"
        );
        let v = cmd_classify(
            TypeArg::Exact(LieType::A),
            &strings(&["inf,inf", "inf,inf"]),
        )
        .unwrap();
        assert_eq!(v.exit_code(), EXIT_INFINITE);
        let e = cmd_classify(TypeArg::Exact(LieType::C), &strings(&["0,inf"])).unwrap_err();
        assert_eq!(e.exit_code(), EXIT_INVALID);
        let v = cmd_classify(
            TypeArg::Orthogonal,
            &strings(&["2,inf,2", "inf,1,inf", "1,1,inf,1,1"]),
        )
        .unwrap();
        assert_eq!(v.witness().unwrap().row, "O-6");
        let v = cmd_classify(
            TypeArg::Orthogonal,
            &strings(&["inf,inf", "4,inf,4", "2,inf,2"]),
        )
        .unwrap();
        assert_eq!(v.witness().unwrap().row, "O-3");
        let e = cmd_classify(TypeArg::Exact(LieType::A), &strings(&["1,x"])).unwrap_err();
        assert!(e.to_string().contains("position 1"));
    }

    #[test]
    fn other_commands() {
        assert_eq!(
            to_line(&cmd_truncate("C:1,inf,1", 6, None).unwrap()),
            "{\"dims\":[1,4,1],\"total\":6}\n"
        );
        assert_eq!(
            to_line(&cmd_count_double(&[1, 2], &[1, 2]).unwrap()),
            "{\"count\":2}\n"
        );
        assert_eq!(
            to_line(&cmd_growth("A:inf,inf", "A:inf,inf", &[2, 4, 6, 8]).unwrap()),
            "{\"totals\":[2,4,6,8],\"counts\":[2,3,4,5],\"growing\":true}\n"
        );
        assert_eq!(
            to_line(&cmd_enumerate(LieType::A, &[vec![1, 2], vec![1, 2]], 2, 1000, false).unwrap()),
            "{\"orbits\":2,\"points\":49}\n"
        );
        assert!(matches!(
            cmd_enumerate(LieType::A, &[vec![2, 2], vec![2, 2]], 3, 100, false),
            Err(CliError::Field(FieldError::BudgetExceeded { .. }))
        ));
    }

    #[test]
    fn config_validation() {
        assert!(RunConfig::default().validate().is_ok());
        let bad = RunConfig {
            primes: vec![7],
            ..RunConfig::default()
        };
        assert!(bad.validate().is_err());
        let bad = RunConfig {
            budget: 0,
            ..RunConfig::default()
        };
        assert!(bad.validate().is_err());
    }
}
