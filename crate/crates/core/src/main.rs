use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde::Serialize;
use serde_json::json;

use berger_lab::berger::{theorem1_decision_in, BergerReport};
use berger_lab::cache::DiskCache;
use berger_lab::context::Context;
use berger_lab::curvature::{WedgeConvention, R0_CONVENTION};
use berger_lab::harness::{run_suite, SuiteOptions, VerificationReport};
use berger_lab::liealg::REGISTRY;
use berger_lab::prolong::{first_prolongation, second_prolongation, LinearAlgebra};
use berger_lab::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Command {
    /// Dimension of an algebra (and of its curvature space with --curvature)
    Dim,
    /// Basis of the space of algebraic curvature tensors
    CurvatureSpace,
    /// First and second prolongations of an algebra acting on W
    Prolongation,
    /// Berger closure of one algebra, or of all algebras plus the case analysis
    Berger,
    /// Run the full verification suite
    VerifyPaper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Convention {
    PlusXz,
    PlusYz,
}

#[derive(Parser, Debug)]
#[command(
    name = "berger-lab",
    version,
    about = "Exact curvature and holonomy algebra computations over pseudo-quaternionic spaces"
)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Number of negative quaternionic directions
    #[arg(long, default_value_t = 1)]
    r: usize,
    /// Number of positive quaternionic directions
    #[arg(long, default_value_t = 1)]
    s: usize,
    /// Quaternionic dimension of the isotropic subspace W
    #[arg(long, default_value_t = 1)]
    t: usize,
    /// One of sp, sp_w, sp1, glq, h0, sp1+sp, sp1+sp_w
    #[arg(long)]
    algebra: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Directory for cached curvature-space bases
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// 1: signatures (1,1,1) and (1,2,1); 2: adds (2,2,2)
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    tier: u8,
    /// With `dim`: also compute the curvature space dimension
    #[arg(long)]
    curvature: bool,
    /// Include per-check wall time in verify-paper reports (breaks byte-identical output)
    #[arg(long)]
    timings: bool,
    /// Wedge convention used to build R0 (fault injection)
    #[arg(long, value_enum, hide = true)]
    r0_convention: Option<Convention>,
}

enum Failure {
    Usage(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let mut ctx = Context::with_cache(cli.cache_dir.as_ref().map(DiskCache::new));
    let (r, s, t) = (cli.r, cli.s, cli.t);
    let algebra = || {
        cli.algebra
            .as_deref()
            .ok_or_else(|| Failure::Usage(format!("--algebra is required (one of {})", REGISTRY.join(", "))))
    };
    let out: String;
    match cli.command {
        Command::Dim => {
            let name = algebra()?;
            let g = ctx.algebra(r, s, t, name)?;
            let dim_curvature = if cli.curvature {
                Some(ctx.curvature(r, s, t, name)?.dim())
            } else {
                None
            };
            let mut row = json!({ "algebra": name, "r": r, "s": s, "t": t, "dim": g.dim() });
            if let Some(d) = dim_curvature {
                row["dim_curvature"] = json!(d);
            }
            out = match cli.format {
                Format::Json => to_json(&row)?,
                Format::Csv => {
                    let mut header = vec!["algebra", "r", "s", "t", "dim"];
                    let mut fields = vec![
                        name.to_string(),
                        r.to_string(),
                        s.to_string(),
                        t.to_string(),
                        g.dim().to_string(),
                    ];
                    if let Some(d) = dim_curvature {
                        header.push("dim_curvature");
                        fields.push(d.to_string());
                    }
                    to_csv(&header, &[fields])?
                }
                Format::Text => match dim_curvature {
                    Some(d) => format!("dim {name} = {}\ndim R({name}) = {d}\n", g.dim()),
                    None => format!("dim {name} = {}\n", g.dim()),
                },
            };
        }
        Command::CurvatureSpace => {
            let name = algebra()?;
            let rs = ctx.curvature(r, s, t, name)?;
            out = match cli.format {
                Format::Json => {
                    let mut v = serde_json::to_value(rs.to_record()).map_err(Error::from)?;
                    v["r"] = json!(r);
                    v["s"] = json!(s);
                    v["t"] = json!(t);
                    to_json(&v)?
                }
                Format::Csv => to_csv(
                    &["algebra", "r", "s", "t", "dim"],
                    &[vec![
                        name.into(),
                        r.to_string(),
                        s.to_string(),
                        t.to_string(),
                        rs.dim().to_string(),
                    ]],
                )?,
                Format::Text => format!("dim R({name}) = {}\n", rs.dim()),
            };
        }
        Command::Prolongation => {
            let name = algebra()?;
            let g = ctx.algebra(r, s, t, name)?;
            let w = ctx.space(r, s, t)?.isotropic_subspace_w()?;
            let lin = LinearAlgebra::restricted(&g, &w)?;
            let first = first_prolongation(&lin);
            let second = second_prolongation(&lin, &first);
            let row = json!({
                "algebra": name, "r": r, "s": s, "t": t,
                "dim_v": lin.dim_v(),
                "dim_algebra_on_v": lin.dim(),
                "first_prolongation": first.dim(),
                "second_prolongation": second.dim(),
            });
            out = match cli.format {
                Format::Json => to_json(&row)?,
                Format::Csv => to_csv(
                    &[
                        "algebra",
                        "r",
                        "s",
                        "t",
                        "dim_v",
                        "dim_algebra_on_v",
                        "first_prolongation",
                        "second_prolongation",
                    ],
                    &[vec![
                        name.into(),
                        r.to_string(),
                        s.to_string(),
                        t.to_string(),
                        lin.dim_v().to_string(),
                        lin.dim().to_string(),
                        first.dim().to_string(),
                        second.dim().to_string(),
                    ]],
                )?,
                Format::Text => format!(
                    "{name} on W (dim {}): first prolongation {}, second prolongation {}\n",
                    lin.dim_v(),
                    first.dim(),
                    second.dim()
                ),
            };
        }
        Command::Berger => {
            let names: Vec<&str> = match cli.algebra.as_deref() {
                Some(name) => vec![name],
                None => REGISTRY
                    .iter()
                    .copied()
                    .filter(|n| ctx.algebra(r, s, t, n).is_ok())
                    .collect(),
            };
            let mut reports = Vec::new();
            for name in &names {
                reports.push(BergerReport::of(&*ctx.curvature(r, s, t, name)?));
            }
            let theorem1 = if cli.algebra.is_none() && t >= 1 {
                Some(theorem1_decision_in(&mut ctx, r, s, t)?)
            } else {
                None
            };
            out = match cli.format {
                Format::Json => match &theorem1 {
                    Some(th) => to_json(&json!({ "algebras": reports, "theorem1": th }))?,
                    None if reports.len() == 1 => to_json(&reports[0])?,
                    None => to_json(&json!({ "algebras": reports }))?,
                },
                Format::Csv => {
                    let rows: Vec<Vec<String>> = reports
                        .iter()
                        .map(|b| {
                            vec![
                                b.algebra.clone(),
                                r.to_string(),
                                s.to_string(),
                                t.to_string(),
                                b.dim_algebra.to_string(),
                                b.dim_curvature.to_string(),
                                b.dim_closure.to_string(),
                                b.is_berger.to_string(),
                            ]
                        })
                        .collect();
                    to_csv(
                        &[
                            "algebra",
                            "r",
                            "s",
                            "t",
                            "dim_algebra",
                            "dim_curvature",
                            "dim_closure",
                            "is_berger",
                        ],
                        &rows,
                    )?
                }
                Format::Text => {
                    let mut text = String::new();
                    for b in &reports {
                        text += &format!(
                            "{}: dim {}, dim R {}, closure {}, {}\n",
                            b.algebra,
                            b.dim_algebra,
                            b.dim_curvature,
                            b.dim_closure,
                            if b.is_berger { "Berger" } else { "not Berger" }
                        );
                    }
                    if let Some(th) = &theorem1 {
                        text += &format!("case analysis at ({r},{s},{t}), case {:?}: {}\n", th.case, th.note);
                        for c in &th.checks {
                            text += &format!(
                                "  {} {}: {}\n",
                                if c.passed { "pass" } else { "FAIL" },
                                c.name,
                                c.detail
                            );
                        }
                        for c in &th.candidates {
                            text += &format!("  {}: {}\n", c.algebra, c.verdict);
                        }
                        if let Some(f) = &th.falsified {
                            text += &format!("{f}\n");
                        }
                    }
                    text
                }
            };
            let falsified = theorem1.as_ref().is_some_and(|th| !th.passed());
            emit(cli, &out)?;
            return if falsified { Err(Failure::Checks) } else { Ok(()) };
        }
        Command::VerifyPaper => {
            let opts = SuiteOptions {
                tier: cli.tier,
                r0_convention: match cli.r0_convention {
                    None => R0_CONVENTION,
                    Some(Convention::PlusXz) => WedgeConvention::PlusXz,
                    Some(Convention::PlusYz) => WedgeConvention::PlusYz,
                },
                timings: cli.timings,
            };
            let report = run_suite(&mut ctx, &opts)?;
            out = match cli.format {
                Format::Json => to_json(&report)?,
                Format::Csv => to_csv(
                    &["id", "status", "claim"],
                    &report
                        .checks
                        .iter()
                        .map(|c| vec![c.id.to_string(), status(c.status).to_string(), c.claim.to_string()])
                        .collect::<Vec<_>>(),
                )?,
                Format::Text => suite_text(&report),
            };
            emit(cli, &out)?;
            return if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Checks)
            };
        }
    }
    emit(cli, &out)
}

fn status(s: berger_lab::harness::CheckStatus) -> &'static str {
    use berger_lab::harness::CheckStatus::*;
    match s {
        Pass => "pass",
        Fail => "fail",
        Vacuous => "vacuous",
        Skipped => "skipped",
    }
}

fn suite_text(report: &VerificationReport) -> String {
    let mut text = format!("{} {} tier {}\n", report.tool, report.version, report.config.tier);
    for c in &report.checks {
        text += &format!("{:<4} {:<7} {}\n", c.id, status(c.status), c.claim);
        if let Some(ms) = c.wall_time_ms {
            text += &format!("     {ms} ms\n");
        }
    }
    for th in &report.theorem1 {
        let verdict = th.falsified.clone().unwrap_or_else(|| "all sub-checks pass".into());
        text += &format!(
            "case analysis ({},{},{}): case {:?}: {verdict}\n",
            th.r, th.s, th.t, th.case
        );
    }
    let s = &report.summary;
    text += &format!(
        "pass {} fail {} vacuous {} skipped {}\n",
        s.pass, s.fail, s.vacuous, s.skipped
    );
    text
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value).map_err(Error::from)?;
    s.push('\n');
    Ok(s)
}

fn to_csv(header: &[&str], rows: &[Vec<String>]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| Failure::Usage(e.to_string()))?;
    for row in rows {
        w.write_record(row).map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}
