//! `plucker` — command-line front end for the exact exterior-algebra
//! toolkit: relation and simplicity checks, decomposition, skew normal
//! forms, n-ary bracket diagnostics, the metric Lie algebra catalog, and
//! the seeded verification harness.
//!
//! Exit codes: 0 = pass/holds, 1 = fail/violated/indeterminate,
//! 2 = usage or input error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use plucker_core::ansatz::{builtin_cases, case_by_name};
use plucker_core::decomp::{decompose, DecomposeOutcome, IndeterminateReason};
use plucker_core::harness::{run_case, run_conjecture_direction, CaseReport, TrialConfig};
use plucker_core::io;
use plucker_core::nlie::{
    bracket_from_form, jacobi_residual, metric_invariance_residual, catalog, Signature,
};
use plucker_core::normal_form::{
    classify_case, rational_block_decomposition, skew_normal_form, DEFAULT_TOL,
    SNAP_DENOMINATOR_BOUND,
};
use plucker_core::plucker::{
    coordinate_residual, is_simple, orthogonal_relation_check,
};
use plucker_core::scalar::rint;
use plucker_core::{AlgebraError, Form, Rat};

#[derive(Parser)]
#[command(name = "plucker", version, about = "Exact exterior-algebra toolkit")]
struct Cli {
    /// Write a JSON report of the run to this file.
    #[arg(long, global = true)]
    report: Option<PathBuf>,

    /// Suppress normal output (exit code still reflects the verdict).
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the orthogonal contraction relation on a form file.
    CheckRelation {
        file: PathBuf,
        /// Use the coordinate (classical quadratic) residual instead.
        #[arg(long)]
        coordinate: bool,
    },
    /// Check whether a form is simple (decomposable).
    CheckSimple { file: PathBuf },
    /// Decompose a form into at most N mutually orthogonal simple parts.
    Decompose {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_parts: usize,
        /// Write the decomposition JSON here on success.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Skew normal form of a 2-form (float, with exact block fallback).
    NormalForm {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// n-ary bracket diagnostics.
    Nlie {
        #[command(subcommand)]
        command: NlieCommand,
    },
    /// Metric Lie algebra catalog.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Run builtin verification cases.
    VerifyCase {
        /// Case name, or `all`.
        name: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        coeff_height: i64,
    },
    /// Sample random forms for one direction of the simple-sum
    /// characterization.
    Conjecture {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 0)]
        time: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        coeff_height: i64,
    },
}

#[derive(Subcommand)]
enum NlieCommand {
    /// Check the n-ary Jacobi (fundamental) identity of a bracket file.
    Jacobi { file: PathBuf },
    /// Check invariance of the diagonal metric under a bracket file.
    Invariance {
        file: PathBuf,
        /// Number of leading timelike (−1) directions in the metric.
        #[arg(long, default_value_t = 0)]
        time: usize,
    },
    /// Derive the bracket of a form and print it as bracket JSON.
    FromForm { file: PathBuf },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List catalog algebras up to a dimension bound.
    List {
        #[arg(long, value_enum, default_value_t = SignatureArg::Euclidean)]
        signature: SignatureArg,
        #[arg(long, default_value_t = 7)]
        max_dim: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SignatureArg {
    Euclidean,
    Lorentzian,
}

impl From<SignatureArg> for Signature {
    fn from(s: SignatureArg) -> Self {
        match s {
            SignatureArg::Euclidean => Signature::Euclidean,
            SignatureArg::Lorentzian => Signature::Lorentzian,
        }
    }
}

/// What a subcommand produced: verdict drives the exit code, the report
/// value is written to `--report`.
struct Outcome {
    pass: bool,
    lines: Vec<String>,
    report: Value,
}

fn load_form(path: &PathBuf) -> Result<Form<Rat>, AlgebraError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AlgebraError::ParseError(format!("{}: {e}", path.display())))?;
    io::form_from_str(&text)
}

fn load_bracket(path: &PathBuf) -> Result<plucker_core::nlie::NBracket<Rat>, AlgebraError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AlgebraError::ParseError(format!("{}: {e}", path.display())))?;
    io::bracket_from_str(&text)
}

fn case_report_lines(reports: &[CaseReport]) -> Vec<String> {
    reports
        .iter()
        .map(|r| {
            let mut line = format!(
                "{}: {} ({} trials, {} satisfied, {} violated-and-failed, {} failures, {} ms)",
                r.case,
                if r.passed() { "pass" } else { "FAIL" },
                r.trials,
                r.satisfied_and_decomposed,
                r.constraint_violated_and_relation_failed,
                r.failures.len(),
                r.elapsed_ms
            );
            for f in &r.flagged {
                line.push_str(&format!("\n  flagged: {f}"));
            }
            line
        })
        .collect()
}

fn run(cli: &Cli) -> Result<Outcome, AlgebraError> {
    match &cli.command {
        Command::CheckRelation { file, coordinate } => {
            let f = load_form(file)?;
            let report = if *coordinate {
                coordinate_residual(&f)?
            } else {
                orthogonal_relation_check(&f)?
            };
            let pass = report.is_zero;
            let nonzero = report.violations().count();
            let mut lines = vec![format!(
                "relation {} ({} nonzero residual entr{})",
                if pass { "holds" } else { "violated" },
                nonzero,
                if nonzero == 1 { "y" } else { "ies" }
            )];
            if report.outside_hypothesis {
                lines.push("note: metric signature outside the covered hypothesis".into());
            }
            Ok(Outcome {
                pass,
                lines,
                report: serde_json::to_value(io::residual_report_to_json(&report)).unwrap(),
            })
        }
        Command::CheckSimple { file } => {
            let f = load_form(file)?;
            let simple = is_simple(&f)?;
            Ok(Outcome {
                pass: simple,
                lines: vec![format!(
                    "form is {}",
                    if simple { "simple" } else { "not simple" }
                )],
                report: json!({ "simple": simple }),
            })
        }
        Command::Decompose {
            file,
            max_parts,
            out,
        } => {
            let f = load_form(file)?;
            match decompose(&f, *max_parts)? {
                DecomposeOutcome::Decomposed(dec) => {
                    let j = io::decomposition_to_json(*f.space(), &dec);
                    if let Some(path) = out {
                        std::fs::write(path, serde_json::to_string_pretty(&j).unwrap())
                            .map_err(|e| AlgebraError::ParseError(e.to_string()))?;
                    }
                    Ok(Outcome {
                        pass: true,
                        lines: vec![format!(
                            "decomposed into {} orthogonal simple part{}",
                            dec.parts.len(),
                            if dec.parts.len() == 1 { "" } else { "s" }
                        )],
                        report: serde_json::to_value(&j).unwrap(),
                    })
                }
                DecomposeOutcome::Indeterminate(reason) => {
                    let text = match reason {
                        IndeterminateReason::DimensionBound { support_rank } => format!(
                            "indeterminate: support rank {support_rank} exceeds 2p, \
                             no two-part orthogonal split exists"
                        ),
                        IndeterminateReason::NoVerifiedSplit => {
                            "indeterminate: no verified split found".to_string()
                        }
                    };
                    Ok(Outcome {
                        pass: false,
                        lines: vec![text.clone()],
                        report: json!({ "indeterminate": text }),
                    })
                }
            }
        }
        Command::NormalForm { file, tol } => {
            let f = load_form(file)?;
            let nf = skew_normal_form(&f, *tol)?;
            let mut lines = vec![
                format!("kind: {:?}", nf.kind),
                format!("angles: {:?}", nf.angles),
                format!("residual: {:.3e}", nf.residual),
            ];
            if let Ok(label) = classify_case(&f) {
                lines.push(format!("classification: {label}"));
            }
            let (_, blocks) =
                rational_block_decomposition(&nf, *f.space(), SNAP_DENOMINATOR_BOUND)?;
            lines.push(format!("rational blocks: {}", blocks.parts.len()));
            Ok(Outcome {
                pass: nf.residual.abs() <= *tol,
                lines,
                report: json!({
                    "kind": format!("{:?}", nf.kind),
                    "angles": nf.angles,
                    "residual": nf.residual,
                    "rational_blocks": blocks.parts.len(),
                }),
            })
        }
        Command::Nlie { command } => match command {
            NlieCommand::Jacobi { file } => {
                let b = load_bracket(file)?;
                let violations = jacobi_residual(&b);
                Ok(Outcome {
                    pass: violations.is_empty(),
                    lines: vec![format!(
                        "jacobi identity {} ({} violation{})",
                        if violations.is_empty() { "holds" } else { "violated" },
                        violations.len(),
                        if violations.len() == 1 { "" } else { "s" }
                    )],
                    report: json!({ "violations": violations.len() }),
                })
            }
            NlieCommand::Invariance { file, time } => {
                let b = load_bracket(file)?;
                if *time > b.dim {
                    return Err(AlgebraError::ParseError(format!(
                        "--time {time} exceeds bracket dimension {}",
                        b.dim
                    )));
                }
                let metric: Vec<Vec<Rat>> = (0..b.dim)
                    .map(|i| {
                        (0..b.dim)
                            .map(|j| {
                                if i == j {
                                    rint(if i < *time { -1 } else { 1 })
                                } else {
                                    rint(0)
                                }
                            })
                            .collect()
                    })
                    .collect();
                let violations = metric_invariance_residual(&b, &metric);
                Ok(Outcome {
                    pass: violations.is_empty(),
                    lines: vec![format!(
                        "metric invariance {} ({} violation{})",
                        if violations.is_empty() { "holds" } else { "violated" },
                        violations.len(),
                        if violations.len() == 1 { "" } else { "s" }
                    )],
                    report: json!({ "violations": violations.len() }),
                })
            }
            NlieCommand::FromForm { file } => {
                let f = load_form(file)?;
                let b = bracket_from_form(&f)?;
                let j = io::bracket_to_json(&b);
                Ok(Outcome {
                    pass: true,
                    lines: vec![serde_json::to_string_pretty(&j).unwrap()],
                    report: serde_json::to_value(&j).unwrap(),
                })
            }
        },
        Command::Catalog { command } => match command {
            CatalogCommand::List { signature, max_dim } => {
                let mut lines = Vec::new();
                let mut entries = Vec::new();
                for dim in 1..=*max_dim {
                    for alg in catalog((*signature).into(), dim)? {
                        lines.push(format!(
                            "{} (dim {}, {} timelike)",
                            alg.name,
                            alg.dim(),
                            alg.time_dims
                        ));
                        entries.push(json!({
                            "name": alg.name,
                            "dim": alg.dim(),
                            "time_dims": alg.time_dims,
                        }));
                    }
                }
                Ok(Outcome {
                    pass: true,
                    lines,
                    report: Value::Array(entries),
                })
            }
        },
        Command::VerifyCase {
            name,
            trials,
            seed,
            coeff_height,
        } => {
            let cases = if name == "all" {
                builtin_cases()
            } else {
                vec![case_by_name(name).ok_or_else(|| {
                    AlgebraError::AmbiguousCase(format!("unknown case `{name}`"))
                })?]
            };
            let mut reports = Vec::new();
            for case in &cases {
                let cfg = TrialConfig::new(case.dim, case.time_dims, case.degree)
                    .trials(*trials)
                    .seed(*seed)
                    .coefficient_height(*coeff_height);
                reports.push(run_case(case, &cfg)?);
            }
            let pass = reports.iter().all(|r| r.passed());
            Ok(Outcome {
                pass,
                lines: case_report_lines(&reports),
                report: serde_json::to_value(&reports).unwrap(),
            })
        }
        Command::Conjecture {
            dim,
            degree,
            time,
            trials,
            seed,
            coeff_height,
        } => {
            let cfg = TrialConfig::new(*dim, *time, *degree)
                .trials(*trials)
                .seed(*seed)
                .coefficient_height(*coeff_height);
            cfg.space()?;
            if *degree > *dim {
                return Err(AlgebraError::ParseError(format!(
                    "--degree {degree} exceeds --dim {dim}"
                )));
            }
            let report = run_conjecture_direction(&cfg)?;
            let pass = report.passed();
            Ok(Outcome {
                pass,
                lines: case_report_lines(std::slice::from_ref(&report)),
                report: serde_json::to_value(&report).unwrap(),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if !cli.quiet {
                for line in &outcome.lines {
                    println!("{line}");
                }
            }
            if let Some(path) = &cli.report {
                if let Err(e) =
                    std::fs::write(path, serde_json::to_string_pretty(&outcome.report).unwrap())
                {
                    eprintln!("error writing report: {e}");
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(if outcome.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
