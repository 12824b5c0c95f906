//! Deterministic JSON and table rendering.
//!
//! The JSON emitter keeps insertion order, prints every float with 17
//! significant digits (`{:.16e}`), and never touches a hash map, so a given
//! report renders to the same bytes on every run.

use std::fmt::Write as _;

use crate::analysis::{BoundCheck, SpectralReport};
use crate::suite::{InstanceSummary, OracleOutcome, SuiteOutcome};

/// A JSON value with deterministic field order.
#[derive(Clone, Debug)]
pub enum JsonValue {
    Null,
    Bool(bool),
    UInt(u64),
    Float(f64),
    Str(String),
    Array(Vec<JsonValue>),
    Object(Vec<(&'static str, JsonValue)>),
}

impl JsonValue {
    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        self.write(&mut out, 0);
        out.push('\n');
        out
    }

    fn write(&self, out: &mut String, indent: usize) {
        match self {
            JsonValue::Null => out.push_str("null"),
            JsonValue::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            JsonValue::UInt(v) => {
                let _ = write!(out, "{v}");
            }
            JsonValue::Float(v) => {
                if v.is_finite() {
                    let _ = write!(out, "{v:.16e}");
                } else {
                    out.push_str("null");
                }
            }
            JsonValue::Str(s) => escape_into(s, out),
            JsonValue::Array(items) => {
                if items.is_empty() {
                    out.push_str("[]");
                    return;
                }
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('\n');
                    push_indent(out, indent + 1);
                    item.write(out, indent + 1);
                }
                out.push('\n');
                push_indent(out, indent);
                out.push(']');
            }
            JsonValue::Object(fields) => {
                if fields.is_empty() {
                    out.push_str("{}");
                    return;
                }
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('\n');
                    push_indent(out, indent + 1);
                    escape_into(key, out);
                    out.push_str(": ");
                    value.write(out, indent + 1);
                }
                out.push('\n');
                push_indent(out, indent);
                out.push('}');
            }
        }
    }
}

fn push_indent(out: &mut String, indent: usize) {
    for _ in 0..indent {
        out.push_str("  ");
    }
}

fn escape_into(s: &str, out: &mut String) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

fn floats(values: &[f64]) -> JsonValue {
    JsonValue::Array(values.iter().map(|&v| JsonValue::Float(v)).collect())
}

fn uints(values: &[usize]) -> JsonValue {
    JsonValue::Array(values.iter().map(|&v| JsonValue::UInt(v as u64)).collect())
}

fn strings<S: AsRef<str>>(values: &[S]) -> JsonValue {
    JsonValue::Array(
        values
            .iter()
            .map(|s| JsonValue::Str(s.as_ref().to_string()))
            .collect(),
    )
}

fn check_to_json(check: &BoundCheck) -> JsonValue {
    JsonValue::Object(vec![
        ("name", JsonValue::Str(check.name.to_string())),
        ("formula", JsonValue::Str(check.formula.to_string())),
        ("relation", JsonValue::Str(check.relation.as_str().to_string())),
        ("lhs", JsonValue::Float(check.lhs)),
        ("rhs", JsonValue::Float(check.rhs)),
        ("slack", JsonValue::Float(check.slack)),
        ("satisfied", JsonValue::Bool(check.satisfied)),
        ("equality", JsonValue::Bool(check.equality)),
        ("notes", strings(&check.notes)),
    ])
}

/// Structures a report as a JSON value with a fixed schema.
pub fn report_to_json(report: &SpectralReport) -> JsonValue {
    let labels = match &report.labels {
        Some(labels) => strings(labels),
        None => JsonValue::Null,
    };
    let edge = match &report.edge {
        Some(ep) => JsonValue::Object(vec![
            ("values", floats(&ep.values)),
            ("min", JsonValue::Float(ep.min)),
            ("max", JsonValue::Float(ep.max)),
            ("big_gamma", JsonValue::Float(ep.big_gamma)),
            ("argmin", uints(&ep.argmin)),
            ("argmax", uints(&ep.argmax)),
        ]),
        None => JsonValue::Null,
    };
    JsonValue::Object(vec![
        ("n", JsonValue::UInt(report.n as u64)),
        ("m", JsonValue::UInt(report.m as u64)),
        ("order", JsonValue::UInt(report.order as u64)),
        ("rank", JsonValue::UInt(report.rank as u64)),
        ("uniform", JsonValue::Bool(report.uniform)),
        ("labels", labels),
        (
            "degrees",
            JsonValue::Object(vec![
                ("values", uints(&report.degrees.degrees)),
                ("max", JsonValue::UInt(report.degrees.max as u64)),
                ("min", JsonValue::UInt(report.degrees.min as u64)),
                ("average", JsonValue::Float(report.degrees.average)),
            ]),
        ),
        ("rho", JsonValue::Float(report.rho)),
        ("iterations", JsonValue::UInt(report.iterations as u64)),
        (
            "bracket",
            JsonValue::Object(vec![
                ("lower", JsonValue::Float(report.bracket.0)),
                ("upper", JsonValue::Float(report.bracket.1)),
            ]),
        ),
        ("residual", JsonValue::Float(report.residual)),
        ("x", floats(&report.x)),
        (
            "vertex",
            JsonValue::Object(vec![
                ("x_min", JsonValue::Float(report.vertex.x_min)),
                ("x_max", JsonValue::Float(report.vertex.x_max)),
                ("sigma", JsonValue::Float(report.vertex.sigma)),
                ("gamma", JsonValue::Float(report.vertex.gamma)),
                ("argmin", uints(&report.vertex.argmin)),
                ("argmax", uints(&report.vertex.argmax)),
            ]),
        ),
        ("edge", edge),
        (
            "checks",
            JsonValue::Array(report.checks.iter().map(check_to_json).collect()),
        ),
        (
            "not_applicable",
            JsonValue::Array(
                report
                    .not_applicable
                    .iter()
                    .map(|na| {
                        JsonValue::Object(vec![
                            ("name", JsonValue::Str(na.name.to_string())),
                            ("reason", JsonValue::Str(na.reason.clone())),
                        ])
                    })
                    .collect(),
            ),
        ),
        ("all_satisfied", JsonValue::Bool(report.all_satisfied())),
    ])
}

pub fn render_report_json(report: &SpectralReport) -> String {
    report_to_json(report).to_pretty()
}

fn check_status(check: &BoundCheck) -> &'static str {
    if !check.satisfied {
        "FAIL "
    } else if check.equality {
        "TIGHT"
    } else {
        "PASS "
    }
}

/// Human-oriented table of one report.
pub fn render_report_table(report: &SpectralReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "hypergraph: n={} m={} order={} rank={} uniform={}",
        report.n,
        report.m,
        report.order,
        report.rank,
        if report.uniform { "yes" } else { "no" }
    );
    let _ = writeln!(
        out,
        "degrees: max={} min={} average={:.6}",
        report.degrees.max, report.degrees.min, report.degrees.average
    );
    let _ = writeln!(
        out,
        "rho = {:.12e}   bracket [{:.12e}, {:.12e}]   residual {:.3e}   {} iterations",
        report.rho, report.bracket.0, report.bracket.1, report.residual, report.iterations
    );
    out.push_str("eigenvector (unit l^k norm):\n");
    for (i, &value) in report.x.iter().enumerate() {
        let label = match &report.labels {
            Some(labels) => labels[i].clone(),
            None => i.to_string(),
        };
        let mark = if report.vertex.argmax.contains(&i) {
            "  <- max"
        } else if report.vertex.argmin.contains(&i) {
            "  <- min"
        } else {
            ""
        };
        let _ = writeln!(out, "  {i:>4}  {label:<12} {value:.12e}{mark}");
    }
    let _ = writeln!(
        out,
        "vertex spread: x_min={:.12e} x_max={:.12e} sigma={:.12e} gamma={:.12e}",
        report.vertex.x_min, report.vertex.x_max, report.vertex.sigma, report.vertex.gamma
    );
    if let Some(ep) = &report.edge {
        let _ = writeln!(
            out,
            "edge values: min={:.12e} max={:.12e} Gamma={:.12e}",
            ep.min, ep.max, ep.big_gamma
        );
    }
    out.push_str("checks:\n");
    let name_width = report
        .checks
        .iter()
        .map(|c| c.name.len())
        .max()
        .unwrap_or(4);
    for check in &report.checks {
        let _ = writeln!(
            out,
            "  [{}] {:<name_width$}  lhs={:+.9e}  {}  rhs={:+.9e}  slack={:+.3e}",
            check_status(check),
            check.name,
            check.lhs,
            check.relation.as_str(),
            check.rhs,
            check.slack
        );
        for note in &check.notes {
            let _ = writeln!(out, "          note: {note}");
        }
    }
    if !report.not_applicable.is_empty() {
        out.push_str("not applicable:\n");
        for na in &report.not_applicable {
            let _ = writeln!(out, "  {:<name_width$}  {}", na.name, na.reason);
        }
    }
    let _ = writeln!(
        out,
        "summary: {} checks, {} violations",
        report.checks.len(),
        report.violations()
    );
    out
}

fn instance_to_json(summary: &InstanceSummary) -> JsonValue {
    JsonValue::Object(vec![
        ("name", JsonValue::Str(summary.name.clone())),
        ("n", JsonValue::UInt(summary.n as u64)),
        ("m", JsonValue::UInt(summary.m as u64)),
        ("order", JsonValue::UInt(summary.order as u64)),
        ("uniform", JsonValue::Bool(summary.uniform)),
        ("rho", JsonValue::Float(summary.rho)),
        ("iterations", JsonValue::UInt(summary.iterations as u64)),
        ("checks", JsonValue::UInt(summary.checks as u64)),
        ("violations", JsonValue::UInt(summary.violations as u64)),
        ("worst_slack", JsonValue::Float(summary.worst_slack)),
        ("worst_check", JsonValue::Str(summary.worst_check.clone())),
        ("failed", strings(&summary.failed)),
    ])
}

/// Structures a suite outcome as JSON with a fixed schema.
pub fn suite_to_json(outcome: &SuiteOutcome) -> JsonValue {
    JsonValue::Object(vec![
        ("seed", JsonValue::UInt(outcome.seed)),
        ("count", JsonValue::UInt(outcome.count as u64)),
        (
            "instances",
            JsonValue::Array(outcome.instances.iter().map(instance_to_json).collect()),
        ),
        ("total_checks", JsonValue::UInt(outcome.total_checks as u64)),
        (
            "total_violations",
            JsonValue::UInt(outcome.total_violations as u64),
        ),
        ("worst_slack", JsonValue::Float(outcome.worst_slack)),
        ("worst_instance", JsonValue::Str(outcome.worst_instance.clone())),
        ("worst_check", JsonValue::Str(outcome.worst_check.clone())),
        ("all_satisfied", JsonValue::Bool(outcome.all_satisfied())),
    ])
}

pub fn render_suite_json(outcome: &SuiteOutcome) -> String {
    suite_to_json(outcome).to_pretty()
}

/// Human-oriented table of a suite outcome.
pub fn render_suite_table(outcome: &SuiteOutcome) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "audit suite: seed={} random_count={} instances={}",
        outcome.seed,
        outcome.count,
        outcome.instances.len()
    );
    let name_width = outcome
        .instances
        .iter()
        .map(|i| i.name.len())
        .max()
        .unwrap_or(4)
        .max(4);
    let _ = writeln!(
        out,
        "{:<name_width$}   n   m  k  uniform  {:<22} checks  viol  worst_slack    worst_check",
        "name", "rho"
    );
    for s in &outcome.instances {
        let _ = writeln!(
            out,
            "{:<name_width$}  {:>2}  {:>2}  {}  {:<7}  {:<22} {:>6}  {:>4}  {:+.3e}     {}",
            s.name,
            s.n,
            s.m,
            s.order,
            if s.uniform { "yes" } else { "no" },
            format!("{:.12e}", s.rho),
            s.checks,
            s.violations,
            s.worst_slack,
            s.worst_check
        );
        for failed in &s.failed {
            let _ = writeln!(out, "{:name_width$}  FAILED: {failed}", "");
        }
    }
    let _ = writeln!(
        out,
        "total: {} checks, {} violations; worst slack {:+.3e} ({} / {})",
        outcome.total_checks,
        outcome.total_violations,
        outcome.worst_slack,
        outcome.worst_instance,
        outcome.worst_check
    );
    out
}

/// Structures an oracle outcome as JSON with a fixed schema.
pub fn oracle_to_json(outcome: &OracleOutcome) -> JsonValue {
    JsonValue::Object(vec![
        ("trials", JsonValue::UInt(outcome.trials as u64)),
        ("seed", JsonValue::UInt(outcome.seed)),
        ("n", JsonValue::UInt(outcome.n as u64)),
        ("m", JsonValue::UInt(outcome.m as u64)),
        ("order", JsonValue::UInt(outcome.order as u64)),
        ("from_deviation", JsonValue::Float(outcome.from_deviation)),
        ("total_deviation", JsonValue::Float(outcome.total_deviation)),
        ("split_deviation", JsonValue::Float(outcome.split_deviation)),
        (
            "dense_deviation",
            match outcome.dense_deviation {
                Some(d) => JsonValue::Float(d),
                None => JsonValue::Null,
            },
        ),
        ("max_deviation", JsonValue::Float(outcome.max_deviation)),
    ])
}

pub fn render_oracle_json(outcome: &OracleOutcome) -> String {
    oracle_to_json(outcome).to_pretty()
}

/// Human-oriented table of an oracle outcome.
pub fn render_oracle_table(outcome: &OracleOutcome) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "oracle cross-validation: n={} m={} order={} trials={} seed={}",
        outcome.n, outcome.m, outcome.order, outcome.trials, outcome.seed
    );
    let _ = writeln!(
        out,
        "  per-vertex edge sums vs enumeration: {:.3e}",
        outcome.from_deviation
    );
    let _ = writeln!(
        out,
        "  per-edge totals vs enumeration:      {:.3e}",
        outcome.total_deviation
    );
    let _ = writeln!(
        out,
        "  total vs sum of per-vertex splits:   {:.3e}",
        outcome.split_deviation
    );
    match outcome.dense_deviation {
        Some(d) => {
            let _ = writeln!(out, "  implicit apply vs dense contraction: {d:.3e}");
        }
        None => out.push_str("  implicit apply vs dense contraction: skipped (tensor too large)\n"),
    }
    let _ = writeln!(out, "  max relative deviation: {:.3e}", outcome.max_deviation);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::star;
    use crate::solver::SolverConfig;
    use crate::suite::{cross_validate, run_audit, OracleConfig, SuiteConfig};

    #[test]
    fn json_escapes_and_formats() {
        let value = JsonValue::Object(vec![
            ("text", JsonValue::Str("line\n\"quote\"\\".to_string())),
            ("num", JsonValue::Float(0.5)),
            ("flag", JsonValue::Bool(true)),
            ("none", JsonValue::Null),
            ("list", JsonValue::Array(vec![JsonValue::UInt(3)])),
            ("empty", JsonValue::Array(vec![])),
        ]);
        let rendered = value.to_pretty();
        assert!(rendered.contains("\"line\\n\\\"quote\\\"\\\\\""));
        assert!(rendered.contains("5.0000000000000000e-1"));
        assert!(rendered.contains("\"none\": null"));
        assert!(rendered.contains("\"empty\": []"));
    }

    #[test]
    fn float_formatting_round_trips_exactly() {
        for &v in &[
            1.0,
            std::f64::consts::SQRT_2 / 2.0,
            3.0f64.sqrt(),
            1e-300,
            -0.1234567890123456,
        ] {
            let text = format!("{v:.16e}");
            let back: f64 = text.parse().unwrap();
            assert_eq!(back.to_bits(), v.to_bits(), "{text} must round-trip");
        }
    }

    #[test]
    fn report_json_has_fixed_shape() {
        let h = star(4).unwrap();
        let report = crate::analysis::full_report(&h, &SolverConfig::default()).unwrap();
        let json = render_report_json(&report);
        for key in [
            "\"n\": 4",
            "\"uniform\": true",
            "\"rho\":",
            "\"bracket\":",
            "\"checks\":",
            "\"all_satisfied\": true",
            "\"gamma_vs_max_degree\"",
            "\"degree_product_characterization\"",
        ] {
            assert!(json.contains(key), "missing {key}");
        }
        let again = render_report_json(&report);
        assert_eq!(json, again, "rendering must be deterministic");
    }

    #[test]
    fn report_table_mentions_every_check() {
        let h = star(4).unwrap();
        let report = crate::analysis::full_report(&h, &SolverConfig::default()).unwrap();
        let table = render_report_table(&report);
        for check in &report.checks {
            assert!(table.contains(check.name), "table missing {}", check.name);
        }
        assert!(table.contains("TIGHT"));
        assert!(table.contains("summary: 19 checks, 0 violations"));
    }

    #[test]
    fn suite_json_is_byte_identical_across_runs() {
        let cfg = SuiteConfig {
            seed: 3,
            count: 2,
            solver: SolverConfig::default(),
        };
        let a = render_suite_json(&run_audit(&cfg).unwrap());
        let b = render_suite_json(&run_audit(&cfg).unwrap());
        assert_eq!(a, b);
        assert!(a.contains("\"all_satisfied\": true"));
    }

    #[test]
    fn oracle_renderings_cover_both_formats() {
        let h = star(3).unwrap();
        let outcome = cross_validate(&h, &OracleConfig { trials: 3, seed: 1 }).unwrap();
        let json = render_oracle_json(&outcome);
        assert!(json.contains("\"max_deviation\""));
        let table = render_oracle_table(&outcome);
        assert!(table.contains("max relative deviation"));
    }
}
