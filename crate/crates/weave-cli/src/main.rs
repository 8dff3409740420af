//! `weave` — exact invariants of weaving knots and links from the command
//! line.
//!
//! ```text
//! weave jones --family w3n --n 2
//! weave jones --braid "3; 1 -2 1 -2" --format json
//! weave invariants --family wp2 --p 7
//! weave table --which 1 --format md
//! weave verify --max-n 8 --max-p 10
//! ```
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
//! 3 oracle state budget exhausted.

mod error;
mod input;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use weave_core::bracket::{jones_via_bracket, state_sum, BracketOptions};
use weave_core::braid::{weaving_word, BraidWord};
use weave_core::checks::{run_all, VerifyConfig};
use weave_core::cyclo::CycloInt;
use weave_core::laurent::LaurentPoly;
use weave_core::weaving::{
    det_w3n, det_wp2, eval_w3n_at_w, eval_wp2_at_w, invariant_report, jones_w3n, jones_wp2,
    KnotInput,
};

use error::CliError;
use input::{family_label, resolve, InputArgs, ResolvedInput};
use render::{
    cyclo_json, json_line, pad_left, pad_right, poly_json, report_json, report_md, report_text,
    require_text_or_json, Format,
};

#[derive(Parser)]
#[command(
    name = "weave",
    version,
    about = "Exact Jones polynomials, determinants, and unknotting bounds for weaving knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Use the mirror image of the input (t ↦ 1/t on the polynomial).
    #[arg(long, global = true)]
    mirror: bool,

    /// Worker threads for the state-sum oracle (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Maximum number of smoothing states the oracle may enumerate.
    #[arg(long, global = true, default_value_t = BracketOptions::default().state_budget)]
    budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Jones polynomial of a weaving-family member or a braid closure.
    Jones(InputArgs),
    /// Kauffman bracket state sum of a braid closure (exponents in A).
    Bracket {
        /// Raw braid word "strands; letters", e.g. "2; 1 1".
        #[arg(long)]
        braid: String,
    },
    /// Knot determinant |V(−1)|.
    Det(InputArgs),
    /// Evaluate the Jones polynomial at a root of unity, exactly.
    Eval {
        #[command(flatten)]
        input: InputArgs,
        /// Evaluation point: omega is t = e^{iπ/3}; minus-one is t = −1.
        #[arg(long, value_enum)]
        at: EvalPoint,
    },
    /// Determinant, V(ω), n_L, and unknotting bounds in one report.
    Invariants(InputArgs),
    /// Reference tables: 1 = determinants and V(ω) for both families,
    /// 2 = full Jones polynomials of W(p,2) for p = 2..9.
    Table {
        #[arg(long)]
        which: u32,
    },
    /// Re-derive every recurrence and closed form against the state-sum
    /// oracle; exits 1 on the first counterexample.
    Verify {
        /// Largest n for the W(3,n) checks.
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        /// Largest p for the W(p,2) checks.
        #[arg(long, default_value_t = 10)]
        max_p: u32,
        /// Number of randomized Markov-move trials.
        #[arg(long, default_value_t = 50)]
        trials: u32,
        /// Seed for the randomized trials.
        #[arg(long, default_value_t = 0x5eed_cafe)]
        seed: u64,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum EvalPoint {
    /// t = e^{iπ/3}, the sixth root of unity ω.
    #[value(name = "omega")]
    Omega,
    /// t = −1 (with the branch t^{1/2} = i).
    #[value(name = "minus-one")]
    MinusOne,
}

struct CmdOutput {
    text: String,
    code: u8,
}

impl CmdOutput {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: &Cli) -> Result<CmdOutput, CliError> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(CliError::usage("--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::usage(format!("thread pool: {e}")))?;
    }
    if cli.budget == 0 {
        return Err(CliError::usage("--budget must be at least 1"));
    }
    let options = BracketOptions {
        state_budget: cli.budget,
    };
    match &cli.command {
        Command::Jones(args) => cmd_jones(cli, args, &options),
        Command::Bracket { braid } => cmd_bracket(cli, braid, &options),
        Command::Det(args) => cmd_det(cli, args, &options),
        Command::Eval { input, at } => cmd_eval(cli, input, *at, &options),
        Command::Invariants(args) => cmd_invariants(cli, args, &options),
        Command::Table { which } => cmd_table(cli, *which),
        Command::Verify {
            max_n,
            max_p,
            trials,
            seed,
        } => cmd_verify(cli, *max_n, *max_p, *trials, *seed),
    }
}

/// Jones polynomial of a resolved input: exact recurrences for family
/// members, the bracket oracle for everything else.
fn knot_jones(res: &ResolvedInput, options: &BracketOptions) -> Result<LaurentPoly, CliError> {
    let poly = match &res.knot {
        KnotInput::Weaving { p, n } => {
            if *p == 3 {
                jones_w3n(*n)?
            } else if *n == 2 {
                jones_wp2(*p)?
            } else {
                jones_via_bracket(&weaving_word(*p, *n)?, options)?
            }
        }
        KnotInput::Braid(b) => jones_via_bracket(b, options)?,
    };
    Ok(if res.mirror_family {
        poly.mirror()
    } else {
        poly
    })
}

fn cmd_jones(cli: &Cli, args: &InputArgs, options: &BracketOptions) -> Result<CmdOutput, CliError> {
    require_text_or_json(cli.format, "jones")?;
    let res = resolve(args, cli.mirror)?;
    let poly = knot_jones(&res, options)?;
    let text = match cli.format {
        Format::Text => format!("{poly}\n"),
        Format::Json => json_line(&json!({
            "label": res.label,
            "polynomial": poly_json(&poly),
            "rendered": poly.to_string(),
        })),
        _ => unreachable!(),
    };
    Ok(CmdOutput::ok(text))
}

fn cmd_bracket(cli: &Cli, braid: &str, options: &BracketOptions) -> Result<CmdOutput, CliError> {
    require_text_or_json(cli.format, "bracket")?;
    let mut word = BraidWord::parse(braid)?;
    if cli.mirror {
        word = word.mirror();
    }
    let result = state_sum(&word, options)?;
    let text = match cli.format {
        Format::Text => format!(
            "closure of {word}\n  bracket ⟨D⟩: {}\n  writhe: {}\n  states: {}\n  V(t): {}\n",
            result.bracket.format_whole("A"),
            result.writhe,
            result.states,
            result.jones,
        ),
        Format::Json => json_line(&json!({
            "label": format!("closure of {word}"),
            "bracket": poly_json(&result.bracket),
            "writhe": result.writhe,
            "states": result.states,
            "jones": poly_json(&result.jones),
        })),
        _ => unreachable!(),
    };
    Ok(CmdOutput::ok(text))
}

fn cmd_det(cli: &Cli, args: &InputArgs, options: &BracketOptions) -> Result<CmdOutput, CliError> {
    require_text_or_json(cli.format, "det")?;
    let res = resolve(args, cli.mirror)?;
    let det = match &res.knot {
        KnotInput::Weaving { p, n } => {
            if *p == 3 {
                det_w3n(*n)?
            } else if *n == 2 {
                det_wp2(*p)?
            } else {
                let v = jones_via_bracket(&weaving_word(*p, *n)?, options)?;
                CycloInt::eval_at(&v, 3).abs_if_real_integerlike()?
            }
        }
        KnotInput::Braid(b) => {
            let v = jones_via_bracket(b, options)?;
            CycloInt::eval_at(&v, 3).abs_if_real_integerlike()?
        }
    };
    let text = match cli.format {
        Format::Text => format!("{det}\n"),
        Format::Json => json_line(&json!({
            "label": res.label,
            "determinant": det.to_string(),
        })),
        _ => unreachable!(),
    };
    Ok(CmdOutput::ok(text))
}

fn cmd_eval(
    cli: &Cli,
    args: &InputArgs,
    at: EvalPoint,
    options: &BracketOptions,
) -> Result<CmdOutput, CliError> {
    require_text_or_json(cli.format, "eval")?;
    let res = resolve(args, cli.mirror)?;
    let poly = knot_jones(&res, options)?;
    let (h, at_name) = match at {
        EvalPoint::Omega => (1, "omega"),
        EvalPoint::MinusOne => (3, "minus-one"),
    };
    let value = CycloInt::eval_at(&poly, h);
    let text = match cli.format {
        Format::Text => format!("{value}\n"),
        Format::Json => json_line(&json!({
            "label": res.label,
            "at": at_name,
            "value": cyclo_json(&value),
            "pretty": value.to_string(),
        })),
        _ => unreachable!(),
    };
    Ok(CmdOutput::ok(text))
}

fn cmd_invariants(
    cli: &Cli,
    args: &InputArgs,
    options: &BracketOptions,
) -> Result<CmdOutput, CliError> {
    if cli.format == Format::Csv {
        return Err(CliError::usage(
            "invariants supports --format text, md, or json",
        ));
    }
    let res = resolve(args, cli.mirror)?;
    let mut report = invariant_report(&res.knot, options)?;
    if res.mirror_family {
        report = report.mirrored()?;
    }
    report.label = res.label.clone();
    let text = match cli.format {
        Format::Text => report_text(&report),
        Format::Md => report_md(&report),
        Format::Json => json_line(&report_json(&report)),
        Format::Csv => unreachable!(),
    };
    Ok(CmdOutput::ok(text))
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

struct ValueRow {
    p: u32,
    n: u32,
    label: String,
    det: String,
    v: CycloInt,
}

fn table1_rows() -> Result<(Vec<ValueRow>, Vec<ValueRow>), CliError> {
    let mut wp2 = Vec::new();
    for p in 2..=15 {
        wp2.push(ValueRow {
            p,
            n: 2,
            label: family_label(p, 2),
            det: det_wp2(p)?.to_string(),
            v: eval_wp2_at_w(p)?,
        });
    }
    let mut w3n = Vec::new();
    for n in 2..=15 {
        w3n.push(ValueRow {
            p: 3,
            n,
            label: family_label(3, n),
            det: det_w3n(n)?.to_string(),
            v: eval_w3n_at_w(n)?,
        });
    }
    Ok((wp2, w3n))
}

fn value_table_text(title: &str, rows: &[ValueRow]) -> String {
    let label_w = rows
        .iter()
        .map(|r| r.label.chars().count())
        .chain(["K".len()])
        .max()
        .unwrap();
    let det_w = rows
        .iter()
        .map(|r| r.det.chars().count())
        .chain(["det(K)".chars().count()])
        .max()
        .unwrap();
    let v_w = rows
        .iter()
        .map(|r| r.v.to_string().chars().count())
        .chain(["V_K(ω)".chars().count()])
        .max()
        .unwrap();
    let mut out = format!("{title}\n");
    out.push_str(&format!(
        "{}  {}  {}\n",
        pad_right("K", label_w),
        pad_left("det(K)", det_w),
        pad_left("V_K(ω)", v_w),
    ));
    for r in rows {
        out.push_str(&format!(
            "{}  {}  {}\n",
            pad_right(&r.label, label_w),
            pad_left(&r.det, det_w),
            pad_left(&r.v.to_string(), v_w),
        ));
    }
    out
}

fn value_table_md(title: &str, rows: &[ValueRow]) -> String {
    let mut out = format!("### {title}\n\n| K | det(K) | V_K(ω) |\n|---|---:|---:|\n");
    for r in rows {
        out.push_str(&format!("| {} | {} | {} |\n", r.label, r.det, r.v));
    }
    out
}

fn value_row_json(r: &ValueRow) -> serde_json::Value {
    json!({
        "p": r.p,
        "n": r.n,
        "label": r.label,
        "determinant": r.det,
        "v_at_w": cyclo_json(&r.v),
        "v_at_w_pretty": r.v.to_string(),
    })
}

fn table1(format: Format) -> Result<CmdOutput, CliError> {
    let (wp2, w3n) = table1_rows()?;
    let text = match format {
        Format::Text => format!(
            "{}\n{}",
            value_table_text("W(p,2), p = 2..15: determinant and V(ω)", &wp2),
            value_table_text("W(3,n), n = 2..15: determinant and V(ω)", &w3n),
        ),
        Format::Md => format!(
            "{}\n{}",
            value_table_md("W(p,2), p = 2..15", &wp2),
            value_table_md("W(3,n), n = 2..15", &w3n),
        ),
        Format::Csv => {
            let mut out = String::from("family,knot,det,v_at_w\n");
            for r in &wp2 {
                out.push_str(&format!("wp2,{},{},{}\n", r.label, r.det, r.v));
            }
            for r in &w3n {
                out.push_str(&format!("w3n,{},{},{}\n", r.label, r.det, r.v));
            }
            out
        }
        Format::Json => json_line(&json!({
            "which": 1,
            "wp2": wp2.iter().map(value_row_json).collect::<Vec<_>>(),
            "w3n": w3n.iter().map(value_row_json).collect::<Vec<_>>(),
        })),
    };
    Ok(CmdOutput::ok(text))
}

fn table2(format: Format) -> Result<CmdOutput, CliError> {
    let mut rows = Vec::new();
    for p in 2..=9 {
        rows.push((p, family_label(p, 2), jones_wp2(p)?));
    }
    let text = match format {
        Format::Text => {
            let mut out = String::from("W(p,2), p = 2..9: Jones polynomials\n");
            for (_, label, poly) in &rows {
                out.push_str(&format!("{label}: {poly}\n"));
            }
            out
        }
        Format::Md => {
            let mut out = String::from("### W(p,2), p = 2..9\n\n| K | V_K(t) |\n|---|---|\n");
            for (_, label, poly) in &rows {
                out.push_str(&format!("| {label} | {poly} |\n"));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("knot,jones\n");
            for (_, label, poly) in &rows {
                out.push_str(&format!("{label},{poly}\n"));
            }
            out
        }
        Format::Json => json_line(&json!({
            "which": 2,
            "rows": rows
                .iter()
                .map(|(p, label, poly)| json!({
                    "p": p,
                    "label": label,
                    "polynomial": poly_json(poly),
                    "rendered": poly.to_string(),
                }))
                .collect::<Vec<_>>(),
        })),
    };
    Ok(CmdOutput::ok(text))
}

fn cmd_table(cli: &Cli, which: u32) -> Result<CmdOutput, CliError> {
    if cli.mirror {
        return Err(CliError::usage("--mirror does not apply to table"));
    }
    match which {
        1 => table1(cli.format),
        2 => table2(cli.format),
        other => Err(CliError::usage(format!(
            "--which must be 1 (determinants and V(ω)) or 2 (Jones polynomials), got {other}"
        ))),
    }
}

fn cmd_verify(
    cli: &Cli,
    max_n: u32,
    max_p: u32,
    trials: u32,
    seed: u64,
) -> Result<CmdOutput, CliError> {
    if cli.mirror {
        return Err(CliError::usage("--mirror does not apply to verify"));
    }
    require_text_or_json(cli.format, "verify")?;
    if max_n < 1 {
        return Err(CliError::usage("--max-n must be at least 1"));
    }
    if max_p < 2 {
        return Err(CliError::usage("--max-p must be at least 2"));
    }
    let config = VerifyConfig {
        max_n,
        max_p,
        state_budget: cli.budget,
        markov_trials: trials,
        seed,
    };
    let results = run_all(&config).map_err(|e| CliError::budget(e.to_string()))?;
    let failed = results.iter().filter(|r| !r.passed).count();
    let text = match cli.format {
        Format::Text => {
            let mut out = String::new();
            for r in &results {
                if r.passed {
                    out.push_str(&format!("{} — OK ({})\n", r.name, r.detail));
                } else {
                    out.push_str(&format!("{} — FAIL: {}\n", r.name, r.detail));
                }
            }
            if failed == 0 {
                out.push_str(&format!("all {} checks passed\n", results.len()));
            } else {
                out.push_str(&format!("{failed} of {} checks FAILED\n", results.len()));
            }
            out
        }
        Format::Json => json_line(&json!({
            "checks": results
                .iter()
                .map(|r| json!({
                    "name": r.name,
                    "passed": r.passed,
                    "detail": r.detail,
                }))
                .collect::<Vec<_>>(),
            "passed": failed == 0,
        })),
        _ => unreachable!(),
    };
    Ok(CmdOutput {
        text,
        code: if failed == 0 { 0 } else { 1 },
    })
}
