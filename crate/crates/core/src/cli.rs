//! Command-line front end.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::battery;
use crate::error::{Error, Result};
use crate::homext::{all_covers, dim_identity, ext_table, incomplete};
use crate::quiverrt::{rep_type, separated, Quiver};
use crate::repmod::{composition_factors, enumerate_simples, is_simple, ModuleRep, DEFAULT_SEED};
use crate::scalars::{parse_scalar, ParamSet};
use crate::smash::build_algebra;
use crate::tenscat::{check_tensor_formula, decompose, tensor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "hopfrep", version, about = "Exact representation theory of A(lambda, mu) over C3 x| C2l")]
pub struct Cli {
    /// Half the order of t.
    #[arg(long, global = true, default_value_t = 2)]
    pub ell: usize,
    /// hbar with lambda = 3 hbar^2; rational or q*z^k with z = zeta_n.
    #[arg(long, global = true, default_value = "1", allow_hyphen_values = true)]
    pub hbar: String,
    /// mu; rational or q*z^k.
    #[arg(long, global = true, default_value = "1", allow_hyphen_values = true)]
    pub mu: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized isomorphism searches.
    #[arg(long, global = true, env = "HOPFREP_SEED")]
    pub seed: Option<u64>,
    /// Write the main output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Load module files without checking the relations.
    #[arg(long, global = true)]
    pub unchecked: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the simple modules.
    Simples,
    /// Check a module file against the defining relations.
    Verify { file: PathBuf },
    /// Tensor two module files and describe the product.
    Tensor { left: PathBuf, right: PathBuf },
    /// Dimensions of Ext^1 between simples.
    ExtTable,
    /// Projective covers and the dimension identity.
    Projectives,
    /// The Ext quiver and its separated graph.
    Quiver,
    /// Separated-diagram classification and representation type.
    Type,
    /// Run the full verification battery.
    CheckPaper,
}

/// A failure with a machine-readable report.
struct Failure {
    kind: &'static str,
    message: String,
    claims: Vec<String>,
    code: i32,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let (kind, code) = match &e {
            Error::Parse(_) | Error::Json(_) | Error::Io(_) | Error::ParamViolation(_) | Error::ContextMismatch(..) => {
                ("input", 2)
            }
            Error::NeedsSquareRoot { .. } => ("needs-square-root", 3),
            _ => ("verification", 1),
        };
        let mut claims = Vec::new();
        if let Error::NeedsSquareRoot { value, n } = &e {
            claims.push(format!(
                "pick hbar and mu so that {value} is a square in Q(zeta_{n}), or load modules with explicit roots from JSON"
            ));
        }
        Failure { kind, message: e.to_string(), claims, code }
    }
}

type Outcome = std::result::Result<String, Failure>;

fn params(cli: &Cli) -> Result<ParamSet> {
    if cli.ell == 0 {
        return Err(Error::ParamViolation("--ell must be at least 1".into()));
    }
    let ctx = ParamSet::context_for(cli.ell);
    let hbar = parse_scalar(ctx, &cli.hbar)?;
    let mu = parse_scalar(ctx, &cli.mu)?;
    ParamSet::new(cli.ell, hbar, mu)
}

fn load(path: &Path, unchecked: bool) -> Result<ModuleRep> {
    let text = fs::read_to_string(path)?;
    let v: Value = serde_json::from_str(&text)?;
    ModuleRep::from_json(&v, unchecked)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn cmd_simples(cli: &Cli, p: &ParamSet) -> Outcome {
    let cat = enumerate_simples(p);
    if let Some(e) = incomplete(&cat) {
        return Err(e.into());
    }
    Ok(match cli.format {
        Format::Json => pretty(&Value::Array(cat.simples.iter().map(ModuleRep::to_json).collect())),
        _ => {
            let mut out = format!("{} simple modules for {}\n", cat.simples.len(), p.describe());
            for m in &cat.simples {
                out.push_str(&format!("{:<10} dim {}\n", m.name(), m.dim()));
            }
            out
        }
    })
}

fn cmd_verify(cli: &Cli, file: &Path) -> Outcome {
    let m = load(file, true)?;
    let violated = m.violations();
    if !violated.is_empty() {
        return Err(Failure {
            kind: "relations",
            message: format!("{} violates {} relation(s)", file.display(), violated.len()),
            claims: violated.iter().map(|s| s.to_string()).collect(),
            code: 1,
        });
    }
    let simple = is_simple(&m);
    Ok(match cli.format {
        Format::Json => pretty(&json!({ "file": file.display().to_string(), "dim": m.dim(), "valid": true, "simple": simple })),
        _ => format!("{}: valid module of dimension {}{}\n", file.display(), m.dim(), if simple { ", simple" } else { "" }),
    })
}

fn cmd_tensor(cli: &Cli, left: &Path, right: &Path, seed: u64) -> Outcome {
    let m = load(left, cli.unchecked)?;
    let n = load(right, cli.unchecked)?;
    if m.params.ell != n.params.ell || m.params.hbar != n.params.hbar || m.params.mu != n.params.mu {
        return Err(Error::ParamViolation("both modules must use the same parameters".into()).into());
    }
    let prod = tensor(&m, &n)?;
    if cli.format == Format::Json {
        return Ok(pretty(&prod.to_json()));
    }
    let mut out = format!("{} (x) {}: dimension {}\n", m.name(), n.name(), prod.dim());
    match check_tensor_formula(&m, &n) {
        Ok(_) => out.push_str("closed-form product: isomorphic\n"),
        Err(e) => out.push_str(&format!("closed-form product: {e}\n")),
    }
    let cat = enumerate_simples(&m.params);
    if cat.is_complete() {
        let alg = build_algebra(&m.params)?;
        let mut known: Vec<ModuleRep> = cat.simples.clone();
        known.extend(all_covers(&alg, &cat)?.into_iter().map(|c| c.cover));
        let d = decompose(&prod, &known, &cat.simples, seed)?;
        let names: Vec<String> = d.summands.iter().map(ToString::to_string).collect();
        out.push_str(&format!("summands: {}\n", if names.is_empty() { "-".into() } else { names.join(" + ") }));
        for (r, cf) in &d.remainder {
            let factors = match cf {
                Some(v) => v.iter().map(|(l, k)| format!("{l}x{k}")).collect::<Vec<_>>().join(" "),
                None => composition_factors(r, &cat.simples).map_or_else(|e| e.to_string(), |_| String::new()),
            };
            out.push_str(&format!("undecomposed part of dimension {}: factors {factors}\n", r.dim()));
        }
    }
    Ok(out)
}

fn cmd_ext_table(cli: &Cli, p: &ParamSet) -> Outcome {
    let t = ext_table(&enumerate_simples(p), false)?;
    Ok(match cli.format {
        Format::Json => pretty(&t.to_json()),
        Format::Dot => Quiver::from_table(&t).to_dot(),
        Format::Text => t.to_text(),
    })
}

fn cmd_projectives(cli: &Cli, p: &ParamSet) -> Outcome {
    let alg = build_algebra(p)?;
    let cat = enumerate_simples(p);
    let covers = all_covers(&alg, &cat)?;
    let id = dim_identity(p, &covers)?;
    Ok(match cli.format {
        Format::Json => pretty(&json!({
            "covers": covers.iter().map(|c| json!({
                "label": c.label.to_string(), "dim": c.dim, "cover_dim": c.cover_dim,
                "degree": c.label.degree(),
            })).collect::<Vec<_>>(),
            "per_degree": id.per_degree,
            "total": id.total,
        })),
        _ => {
            let mut out = String::new();
            for c in &covers {
                out.push_str(&format!("{:<10} dim {}  cover dim {:>2}\n", c.label.to_string(), c.dim, c.cover_dim));
            }
            for (j, s) in &id.per_degree {
                out.push_str(&format!("degree {j}: sum dim L dim P(L) = {s}\n"));
            }
            out.push_str(&format!("total {} = 72 * {}\n", id.total, p.ell));
            out
        }
    })
}

fn cmd_quiver(cli: &Cli, p: &ParamSet) -> Outcome {
    let report = rep_type(p)?;
    Ok(match cli.format {
        Format::Json => pretty(&report.to_json()),
        Format::Dot => format!("{}{}", report.quiver.to_dot(), separated(&report.quiver).to_dot()),
        Format::Text => {
            let q = &report.quiver;
            let mut out = format!("{} vertices, {} arrows\n", q.vertices.len(), q.arrow_count());
            for (i, k, m) in &q.arrows {
                out.push_str(&format!("{} -> {}{}\n", q.vertices[*i], q.vertices[*k], if *m > 1 { format!(" x{m}") } else { String::new() }));
            }
            out
        }
    })
}

fn cmd_type(cli: &Cli, p: &ParamSet) -> Outcome {
    let report = rep_type(p)?;
    Ok(match cli.format {
        Format::Json => pretty(&report.to_json()),
        Format::Dot => report.separated.to_dot(),
        Format::Text => {
            let mut out = String::new();
            for (vs, k) in &report.components {
                let names: Vec<&str> = vs.iter().map(|&v| report.separated.names[v].as_str()).collect();
                out.push_str(&format!("{k}: {}\n", names.join(" ")));
            }
            out.push_str(&format!("separated diagram: {}\n{}\n", report.summary(), report.verdict));
            out
        }
    })
}

fn cmd_check_paper(cli: &Cli, seed: u64) -> Outcome {
    let reports = battery::run_all(seed);
    let failed: Vec<&battery::CriterionReport> = reports.iter().filter(|r| !r.passed).collect();
    let body = match cli.format {
        Format::Json => {
            pretty(&json!({ "criteria": reports.iter().map(battery::CriterionReport::to_json).collect::<Vec<_>>() }))
        }
        _ => {
            let mut out = String::new();
            for r in &reports {
                out.push_str(&format!("criterion {:>2} {}: {}\n", r.id, if r.passed { "PASS" } else { "FAIL" }, r.title));
                for d in &r.details {
                    out.push_str(&format!("    {d}\n"));
                }
            }
            out
        }
    };
    if failed.is_empty() {
        return Ok(body);
    }
    emit(cli, &body).map_err(Failure::from)?;
    Err(Failure {
        kind: "claims",
        message: format!("{} of {} criteria failed", failed.len(), reports.len()),
        claims: failed.iter().flat_map(|r| r.details.iter().map(move |d| format!("criterion {}: {d}", r.id))).collect(),
        code: 1,
    })
}

fn emit(cli: &Cli, body: &str) -> Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, body)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
        }
    }
    Ok(())
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    run_with(&cli)
}

pub fn run_with(cli: &Cli) -> i32 {
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    let outcome = (|| -> Outcome {
        let needs_params = !matches!(cli.command, Command::Verify { .. } | Command::Tensor { .. } | Command::CheckPaper);
        let p = if needs_params { Some(params(cli)?) } else { None };
        match &cli.command {
            Command::Simples => cmd_simples(cli, p.as_ref().expect("params")),
            Command::Verify { file } => cmd_verify(cli, file),
            Command::Tensor { left, right } => cmd_tensor(cli, left, right, seed),
            Command::ExtTable => cmd_ext_table(cli, p.as_ref().expect("params")),
            Command::Projectives => cmd_projectives(cli, p.as_ref().expect("params")),
            Command::Quiver => cmd_quiver(cli, p.as_ref().expect("params")),
            Command::Type => cmd_type(cli, p.as_ref().expect("params")),
            Command::CheckPaper => cmd_check_paper(cli, seed),
        }
    })();
    match outcome {
        Ok(body) => match emit(cli, &body) {
            Ok(()) => 0,
            Err(e) => report(&Failure::from(e)),
        },
        Err(f) => report(&f),
    }
}

fn report(f: &Failure) -> i32 {
    let v = json!({ "status": "failed", "kind": f.kind, "message": f.message, "claims": f.claims });
    eprintln!("{}", serde_json::to_string(&v).expect("json values serialize"));
    f.code
}
