//! Output rendering. Every renderer is a pure function of its input, so
//! identical invocations produce byte-identical output.
//!
//! JSON wire forms:
//! - polynomial: sorted `[half_exponent, coefficient_string]` pairs
//!   (for brackets the exponent counts whole powers of `A`);
//! - cyclotomic value: `[c0, c1, c2, c3]` decimal strings in the
//!   `1, ζ, ζ², ζ³` basis, plus a `pretty` rendering;
//! - invariant report: a flat object of the report fields.

use clap::ValueEnum;
use serde_json::{json, Value};

use weave_core::cyclo::CycloInt;
use weave_core::laurent::LaurentPoly;
use weave_core::weaving::InvariantReport;

use crate::error::CliError;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[value(name = "text")]
    Text,
    #[value(name = "md")]
    Md,
    #[value(name = "csv")]
    Csv,
    #[value(name = "json")]
    Json,
}

/// Rejects table-oriented formats for scalar commands.
pub fn require_text_or_json(format: Format, command: &str) -> Result<(), CliError> {
    match format {
        Format::Text | Format::Json => Ok(()),
        Format::Md | Format::Csv => Err(CliError::usage(format!(
            "{command} supports --format text or json only"
        ))),
    }
}

pub fn poly_json(poly: &LaurentPoly) -> Value {
    Value::Array(
        poly.json_terms()
            .into_iter()
            .map(|(e, c)| json!([e, c]))
            .collect(),
    )
}

pub fn cyclo_json(v: &CycloInt) -> Value {
    Value::Array((0..4).map(|k| json!(v.coeff(k).to_string())).collect())
}

pub fn json_line(value: &Value) -> String {
    format!("{value}\n")
}

/// `u` bounds in interval notation.
pub fn bounds_text(lower: Option<u32>, upper: Option<u32>) -> String {
    match (lower, upper) {
        (Some(l), Some(u)) => format!("{l} ≤ u ≤ {u}"),
        (Some(l), None) => format!("u ≥ {l}"),
        (None, Some(u)) => format!("u ≤ {u}"),
        (None, None) => "none".to_string(),
    }
}

pub fn report_text(r: &InvariantReport) -> String {
    let jones = match &r.jones {
        Some(v) => v.to_string(),
        None => "(not computed)".to_string(),
    };
    format!(
        "{}\n  μ (components): {}\n  V(t): {}\n  det: {}\n  V(ω): {} (sign {}, n_L = {})\n  u bounds: {}\n",
        r.label,
        r.mu,
        jones,
        r.determinant,
        r.v_at_w,
        if r.sign_at_w >= 0 { "+1" } else { "-1" },
        r.n_l,
        bounds_text(r.unknotting_lower, r.unknotting_upper),
    )
}

pub fn report_md(r: &InvariantReport) -> String {
    let jones = match &r.jones {
        Some(v) => v.to_string(),
        None => "(not computed)".to_string(),
    };
    let mut out = String::new();
    out.push_str(&format!("### {}\n\n", r.label));
    out.push_str("| invariant | value |\n|---|---|\n");
    out.push_str(&format!("| μ (components) | {} |\n", r.mu));
    out.push_str(&format!("| V(t) | {jones} |\n"));
    out.push_str(&format!("| det | {} |\n", r.determinant));
    out.push_str(&format!("| V(ω) | {} |\n", r.v_at_w));
    out.push_str(&format!(
        "| sign at ω | {} |\n",
        if r.sign_at_w >= 0 { "+1" } else { "-1" }
    ));
    out.push_str(&format!("| n_L | {} |\n", r.n_l));
    out.push_str(&format!(
        "| u bounds | {} |\n",
        bounds_text(r.unknotting_lower, r.unknotting_upper)
    ));
    out
}

pub fn report_json(r: &InvariantReport) -> Value {
    json!({
        "label": r.label,
        "mu": r.mu,
        "jones": r.jones.as_ref().map(poly_json),
        "determinant": r.determinant.to_string(),
        "v_at_w": cyclo_json(&r.v_at_w),
        "v_at_w_pretty": r.v_at_w.to_string(),
        "n_l": r.n_l,
        "sign_at_w": r.sign_at_w,
        "unknotting_lower": r.unknotting_lower,
        "unknotting_upper": r.unknotting_upper,
    })
}

/// Character-count padding; the value alphabet is short enough that
/// terminal width quirks don't matter.
pub fn pad_left(s: &str, width: usize) -> String {
    let len = s.chars().count();
    if len >= width {
        s.to_string()
    } else {
        format!("{}{}", " ".repeat(width - len), s)
    }
}

pub fn pad_right(s: &str, width: usize) -> String {
    let len = s.chars().count();
    if len >= width {
        s.to_string()
    } else {
        format!("{}{}", s, " ".repeat(width - len))
    }
}
