//! Deterministic report rendering: text, CSV and JSON bodies.
//!
//! Identical invocations must produce identical bytes, so timing fields
//! are the only nondeterministic values and are dropped under
//! `--no-timing`; everything else is rendered from exact integers and
//! rationals in a fixed field order.

use serde::Serialize;
use serde_json::{json, Value};

use diagcount::{
    CountResult, DiagonalEquation, ExponentBound, LowerBound, RepCount, SeedSolution, SweepPoint,
};

#[derive(Clone, Copy)]
pub(crate) enum Direction {
    Lower,
    Upper,
}

impl Direction {
    fn as_str(self) -> &'static str {
        match self {
            Direction::Lower => "lower",
            Direction::Upper => "upper",
        }
    }
}

#[derive(Clone, Copy)]
pub(crate) enum SweepFormat {
    Csv,
    Json,
}

#[derive(Serialize)]
struct EquationJson {
    coeffs: Vec<i64>,
    degree: u32,
}

impl EquationJson {
    fn of(eq: &DiagonalEquation) -> Self {
        Self {
            coeffs: eq.coeffs().to_vec(),
            degree: eq.degree(),
        }
    }
}

/// Counts fit u64 under every budget this tool accepts; fall back to a
/// decimal string rather than lose digits if that ever changes.
fn count_value(count: u128) -> Value {
    match u64::try_from(count) {
        Ok(v) => json!(v),
        Err(_) => json!(count.to_string()),
    }
}

fn ms(result: &CountResult) -> u64 {
    result.elapsed.as_millis() as u64
}

pub(crate) fn render_count(
    eq: &DiagonalEquation,
    result: &CountResult,
    no_timing: bool,
    as_json: bool,
) -> String {
    if as_json {
        let mut obj = json!({
            "schema_version": 1,
            "equation": serde_json::to_value(EquationJson::of(eq)).expect("serializable"),
            "N": result.box_side,
            "count": count_value(result.count),
            "method": result.method.as_str(),
        });
        if !no_timing {
            obj["elapsed_ms"] = json!(ms(result));
        }
        format!("{}\n", serde_json::to_string_pretty(&obj).expect("serializable"))
    } else if no_timing {
        format!("count={} method={}\n", result.count, result.method.as_str())
    } else {
        format!(
            "count={} method={} elapsed_ms={}\n",
            result.count,
            result.method.as_str(),
            ms(result)
        )
    }
}

pub(crate) fn render_bound_text(lower: &LowerBound, upper: Option<&ExponentBound>) -> String {
    match upper {
        Some(bound) => {
            format!(
                "upper_exponent={} rule={}\ncondition: {}\n",
                bound.render(),
                bound.rule.as_str(),
                bound.condition
            )
        }
        None => {
            let mut out = format!("lower_bound={} rule={}\n", lower.value, lower.rule.as_str());
            for step in &lower.trace {
                out.push_str(&format!(
                    "trace: rule={} factor={} sub={}\n",
                    step.rule.as_str(),
                    step.factor,
                    step.subequation
                ));
            }
            if let Some(diag) = &lower.diagnosis {
                out.push_str(&format!("diagnosis: {diag}\n"));
            }
            out
        }
    }
}

pub(crate) fn render_bound_json(
    eq: &DiagonalEquation,
    n: Option<u64>,
    direction: Direction,
    lower: &LowerBound,
    upper: Option<&ExponentBound>,
) -> String {
    let (value, rule, plus_epsilon, trace, diagnosis) = match upper {
        Some(bound) => (
            bound.exponent.to_string(),
            bound.rule.as_str().to_string(),
            bound.plus_epsilon,
            Vec::new(),
            None,
        ),
        None => (
            lower.value.to_string(),
            lower.rule.as_str().to_string(),
            false,
            lower
                .trace
                .iter()
                .map(|step| {
                    json!({
                        "subequation": step.subequation,
                        "rule": step.rule.as_str(),
                        "factor": step.factor.to_string(),
                    })
                })
                .collect::<Vec<Value>>(),
            lower.diagnosis.clone(),
        ),
    };
    let mut obj = json!({
        "schema_version": 1,
        "equation": serde_json::to_value(EquationJson::of(eq)).expect("serializable"),
        "N": n,
        "direction": direction.as_str(),
        "value": value,
        "rule": rule,
        "plus_epsilon": plus_epsilon,
        "trace": trace,
    });
    if let Some(diag) = diagnosis {
        obj["diagnosis"] = json!(diag);
    }
    format!("{}\n", serde_json::to_string_pretty(&obj).expect("serializable"))
}

pub(crate) const SWEEP_HEADER: &str =
    "N,s,k,exact_count,method,elapsed_ms,lower_bound,lower_rule,upper_exponent,upper_rule,slope";

pub(crate) fn render_sweep(
    eq: &DiagonalEquation,
    points: &[SweepPoint],
    lower: &[LowerBound],
    upper: Option<&ExponentBound>,
    no_timing: bool,
    format: SweepFormat,
) -> String {
    let s = eq.s();
    let k = eq.degree();
    let upper_exp = upper.map(|b| b.exponent.to_string()).unwrap_or_default();
    let upper_rule = upper.map(|b| b.rule.as_str().to_string()).unwrap_or_default();
    match format {
        SweepFormat::Csv => {
            let mut out = String::from(SWEEP_HEADER);
            out.push('\n');
            for (point, bound) in points.iter().zip(lower) {
                let elapsed = if no_timing {
                    String::new()
                } else {
                    ms(&point.result).to_string()
                };
                let slope = point
                    .slope
                    .map(|v| format!("{v:.4}"))
                    .unwrap_or_default();
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{}\n",
                    point.n,
                    s,
                    k,
                    point.result.count,
                    point.result.method.as_str(),
                    elapsed,
                    bound.value,
                    bound.rule.as_str(),
                    upper_exp,
                    upper_rule,
                    slope
                ));
            }
            out
        }
        SweepFormat::Json => {
            let rows: Vec<Value> = points
                .iter()
                .zip(lower)
                .map(|(point, bound)| {
                    let mut row = json!({
                        "N": point.n,
                        "s": s,
                        "k": k,
                        "exact_count": count_value(point.result.count),
                        "method": point.result.method.as_str(),
                        "lower_bound": bound.value.to_string(),
                        "lower_rule": bound.rule.as_str(),
                        "upper_exponent": upper_exp,
                        "upper_rule": upper_rule,
                        "slope": point.slope,
                    });
                    if !no_timing {
                        row["elapsed_ms"] = json!(ms(&point.result));
                    }
                    row
                })
                .collect();
            let obj = json!({
                "schema_version": 1,
                "equation": serde_json::to_value(EquationJson::of(eq)).expect("serializable"),
                "rows": rows,
            });
            format!("{}\n", serde_json::to_string_pretty(&obj).expect("serializable"))
        }
    }
}

pub(crate) fn render_search(
    eq: &DiagonalEquation,
    budget: u64,
    seed: Option<&SeedSolution>,
    as_json: bool,
) -> String {
    if as_json {
        let obj = match seed {
            Some(seed) => json!({
                "schema_version": 1,
                "equation": serde_json::to_value(EquationJson::of(eq)).expect("serializable"),
                "budget": budget,
                "seed": seed.values,
                "sup": seed.sup,
                "multiplier": count_value(seed.multiplier),
            }),
            None => json!({
                "schema_version": 1,
                "equation": serde_json::to_value(EquationJson::of(eq)).expect("serializable"),
                "budget": budget,
                "seed": Value::Null,
            }),
        };
        return format!("{}\n", serde_json::to_string_pretty(&obj).expect("serializable"));
    }
    match seed {
        Some(seed) => {
            let values: Vec<String> = seed.values.iter().map(|v| v.to_string()).collect();
            format!(
                "seed=({}) sup={} multiplier={} ray_bound={}*floor(N/{})\n",
                values.join(","),
                seed.sup,
                seed.multiplier,
                seed.multiplier,
                seed.sup
            )
        }
        None => format!("none within budget {budget}\n"),
    }
}

pub(crate) fn render_reps(rep: &RepCount, as_json: bool) -> String {
    if as_json {
        let obj = json!({
            "schema_version": 1,
            "n": rep.n,
            "s": rep.s,
            "k": rep.k,
            "count": count_value(rep.count),
        });
        format!("{}\n", serde_json::to_string_pretty(&obj).expect("serializable"))
    } else {
        format!("count={}\n", rep.count)
    }
}
