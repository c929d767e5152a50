use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use bigon_cli::export::{graph_for, json_for, to_dot, Subject};
use bigon_cli::report::{verify_small, verify_t, VerificationReport};
use bigon_core::cutmodel::{build_standard_cut_model, enumerate_completions, max_extension};
use bigon_core::smallcases::corr2_scan;
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

#[derive(Parser)]
#[command(name = "bigon", version, about = "Build and check the M_t family of graphs of intersection")]
struct Cli {
    /// Output directory [default: $OUTPUT_DIR or ./out]
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
    /// Worker threads for range sweeps
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the invariants of M_t and S for one t or a range
    Verify {
        #[arg(long, conflicts_with = "t_range", required_unless_present = "t_range")]
        t: Option<usize>,
        /// `A..B` (B excluded) or `A..=B`
        #[arg(long)]
        t_range: Option<String>,
    },
    /// List the completions of the standard cut model
    Enumerate {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        alpha: usize,
    },
    /// Write a graph as DOT or JSON
    Emit {
        #[arg(value_enum)]
        subject: SubjectArg,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The annulus cases t = 2, 3
    Smallcase {
        #[arg(long)]
        t: usize,
    },
    /// Solve 6t <= Δt <= n(t+2) over 4 <= t <= t-max
    Scan {
        #[arg(long, default_value_t = 1000)]
        t_max: usize,
        #[arg(long, default_value_t = 6)]
        delta_min: usize,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SubjectArg {
    Gts,
    Gs,
    Mt,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
}

/// Bad input rather than a failed check.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Usage(msg.into()).into())
}

fn parse_range(s: &str) -> Result<Vec<usize>> {
    let (a, b, inclusive) = if let Some((a, b)) = s.split_once("..=") {
        (a, b, true)
    } else if let Some((a, b)) = s.split_once("..") {
        (a, b, false)
    } else {
        return usage(format!("bad range {s:?}; expected A..B or A..=B"));
    };
    let (Ok(a), Ok(b)) = (a.trim().parse::<usize>(), b.trim().parse::<usize>()) else {
        return usage(format!("bad range {s:?}"));
    };
    let ts: Vec<usize> = if inclusive { (a..=b).collect() } else { (a..b).collect() };
    if ts.is_empty() {
        return usage(format!("range {s:?} is empty"));
    }
    Ok(ts)
}

fn out_dir(cli: &Cli) -> PathBuf {
    cli.out_dir
        .clone()
        .or_else(|| std::env::var_os("OUTPUT_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("out"))
}

fn write(dir: &Path, name: &str, body: &str) -> Result<PathBuf> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let path = dir.join(name);
    fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
    Ok(path)
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn small_t_hint(t: usize) -> Result<()> {
    if t < 4 {
        return usage(format!("t = {t} is a small case; use `bigon smallcase --t {t}` (t = 2 or 3)"));
    }
    Ok(())
}

fn verify(cli: &Cli, t: Option<usize>, range: Option<&str>) -> Result<bool> {
    let ts = match (t, range) {
        (Some(t), _) => vec![t],
        (None, Some(r)) => parse_range(r)?,
        (None, None) => return usage("give --t or --t-range"),
    };
    for &t in &ts {
        small_t_hint(t)?;
    }
    let runs: Vec<(VerificationReport, f64)> = ts
        .par_iter()
        .map(|&t| {
            let start = Instant::now();
            let r = verify_t(t);
            (r, start.elapsed().as_secs_f64() * 1e3)
        })
        .collect();
    let dir = out_dir(cli).join("verify");
    let mut reports = Vec::with_capacity(runs.len());
    for (mut r, ms) in runs {
        let name = format!("{}.json", r.subject.replace('=', ""));
        r.artifacts.push(format!("verify/{name}"));
        write(&dir, &name, &pretty(&r))?;
        println!("{}: {} ({}/{} checks)", r.subject, if r.pass { "pass" } else { "FAIL" }, r.passed(), r.checks.len());
        for c in r.checks.iter().filter(|c| !c.pass) {
            println!("  {}: expected {}, got {}", c.name, c.expected, c.actual);
        }
        eprintln!("{} took {ms:.1} ms", r.subject);
        reports.push(r);
    }
    if reports.len() > 1 {
        let name = format!("range_{}_{}.json", ts[0], ts[ts.len() - 1]);
        write(&dir, &name, &pretty(&reports))?;
    }
    Ok(reports.iter().all(|r| r.pass))
}

fn enumerate(cli: &Cli, t: usize, alpha: usize) -> Result<bool> {
    let m = match build_standard_cut_model(t, alpha) {
        Ok(m) => m,
        Err(e) => return usage(e.to_string()),
    };
    let completions = enumerate_completions(&m)?;
    let rows: Vec<_> = completions
        .iter()
        .map(|c| {
            json!({
                "placement": c.placement,
                "slidable": c.slidable,
                "delta": c.delta,
                "extension": (!c.slidable).then(|| max_extension(c)),
                "top": c.top,
            })
        })
        .collect();
    println!("t={t} alpha={alpha}: {} completion(s)", rows.len());
    for (i, c) in completions.iter().enumerate() {
        println!("  #{i}: {}, delta {}", if c.slidable { "slidable" } else { "non-slidable" }, c.delta);
    }
    let doc = json!({ "t": t, "alpha": alpha, "completions": rows });
    write(&out_dir(cli).join("enumerate"), &format!("t{t}_alpha{alpha}.json"), &pretty(&doc))?;
    Ok(true)
}

fn emit(cli: &Cli, subject: SubjectArg, t: usize, format: Format) -> Result<bool> {
    small_t_hint(t)?;
    let subject = match subject {
        SubjectArg::Gts => Subject::Gts,
        SubjectArg::Gs => Subject::Gs,
        SubjectArg::Mt => Subject::Mt,
    };
    let stem = format!("{}_t{t}", subject.name());
    let (name, body) = match format {
        Format::Dot => (format!("{stem}.dot"), to_dot(&stem, &graph_for(subject, t)?)),
        Format::Json => (format!("{stem}.json"), pretty(&json_for(subject, t)?)),
    };
    let path = write(&out_dir(cli).join("emit"), &name, &body)?;
    println!("{}", path.display());
    Ok(true)
}

fn smallcase(cli: &Cli, t: usize) -> Result<bool> {
    if t != 2 && t != 3 {
        return usage(format!("small cases are t = 2 and t = 3 (got {t}); use `bigon verify` for t >= 4"));
    }
    let r = verify_small(t);
    let case = bigon_core::smallcases::build_annulus_case(t)?;
    let doc = json!({ "report": r, "case": case });
    write(&out_dir(cli).join("smallcase"), &format!("t{t}.json"), &pretty(&doc))?;
    let lengths: Vec<String> = case.faces.iter().map(|f| f.length.to_string()).collect();
    println!(
        "{}: {} ({}/{} checks); faces [{}], {} Scharlemann",
        r.subject,
        if r.pass { "pass" } else { "FAIL" },
        r.passed(),
        r.checks.len(),
        lengths.join(","),
        case.faces.iter().filter(|f| f.scharlemann).count()
    );
    Ok(r.pass)
}

fn scan(cli: &Cli, t_max: usize, delta_min: usize, n_max: usize) -> Result<bool> {
    let sols = corr2_scan(4..=t_max, n_max, delta_min);
    let doc = json!({ "t_min": 4, "t_max": t_max, "n_max": n_max, "delta_min": delta_min, "solutions": sols });
    write(&out_dir(cli).join("scan"), "scan.json", &pretty(&doc))?;
    if sols.is_empty() {
        println!("no solutions");
    }
    for (n, t, d) in &sols {
        println!("n={n} t={t} delta={d}");
    }
    Ok(true)
}

fn run(cli: &Cli) -> Result<bool> {
    if let Some(n) = cli.jobs {
        if n == 0 {
            return usage("--jobs must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    match &cli.cmd {
        Cmd::Verify { t, t_range } => verify(cli, *t, t_range.as_deref()),
        Cmd::Enumerate { t, alpha } => enumerate(cli, *t, *alpha),
        Cmd::Emit { subject, t, format } => emit(cli, *subject, *t, *format),
        Cmd::Smallcase { t } => smallcase(cli, *t),
        Cmd::Scan { t_max, delta_min, n_max } => scan(cli, *t_max, *delta_min, *n_max),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
