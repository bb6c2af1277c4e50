use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lopsided::ample::{cross_check_only, sample_families};
use lopsided::convexity::DEFAULT_TOLERANCE;
use lopsided::cubihedron::{barycenter_dot, complex_json, grid_edges, skeleton_dot, skeleton_edges};
use lopsided::oracle;
use lopsided::prelude::*;

mod input;

#[derive(Parser)]
#[command(name = "lopsided", version, about = "Inspect sign-vector families and test them for ampleness")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for enumeration (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Seed for sampling
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Coordinates with magnitude at most this count as zero
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Run one characterization, or all of them, on a family file
    Check {
        file: PathBuf,
        /// Characterization id, or `all`
        #[arg(default_value = "all")]
        id: String,
    },
    /// Invariants and cube complex summary of a family file
    Report { file: PathBuf },
    /// Count the families in dimension n satisfying a characterization
    Enumerate {
        n: usize,
        id: String,
        /// Test this many random families instead of all of them
        #[arg(long)]
        sample: Option<u64>,
    },
    /// Orthant and region patterns of a point cloud (CSV or JSON)
    Orthants { file: PathBuf },
    /// Export the 1-skeleton or the barycenter grid graph (DOT unless --format json)
    Export { file: PathBuf, what: ExportKind },
    /// Naive reference computations
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportKind {
    Skeleton,
    Baryc,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Number of ample families in dimension n
    Count { n: usize },
    /// Shattering counts and ampleness of a family file
    Invariants { file: PathBuf },
}

struct Outcome {
    text: String,
    success: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, success: true }
    }
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data");
    s.push('\n');
    s
}

fn no_dot(format: Format, command: &str) -> Result<()> {
    if format == Format::Dot {
        bail!("--format dot is only available for export, not {command}");
    }
    Ok(())
}

fn check(cli: &Cli, file: &Path, id: &str) -> Result<Outcome> {
    no_dot(cli.format, "check")?;
    let family = input::read_family(file)?;
    let ids: Vec<Characterization> = if id.eq_ignore_ascii_case("all") {
        Characterization::ALL.to_vec()
    } else {
        vec![id.parse()?]
    };
    let report = cross_check_only(&family, &ids);
    let success = report.agree && report.verdicts.iter().all(|(_, v)| v.holds);
    let text = match cli.format {
        Format::Json => pretty(&report.to_json()),
        _ => report.to_text(),
    };
    Ok(Outcome { text, success })
}

fn report(cli: &Cli, file: &Path) -> Result<Outcome> {
    no_dot(cli.format, "report")?;
    let family = input::read_family(file)?;
    let (lo, mid, hi) = dress_pajor(&family);
    let complex = complex_json(&family);
    let shattered = shattered(&family);
    let strong = strongly_shattered(&family);
    let value = json!({
        "n": family.dim(),
        "labels": family.ground().labels(),
        "members": mid,
        "ample": mid == hi,
        "dress_pajor": [lo, mid, hi],
        "vc_dimension": vc_dimension(&family),
        "shattered": shattered.iter().map(|a| a.describe(family.ground())).collect::<Vec<_>>(),
        "strongly_shattered": strong.iter().map(|a| a.describe(family.ground())).collect::<Vec<_>>(),
        "dimension": complex["dimension"],
        "f_vector": complex["f_vector"],
        "euler_characteristic": complex["euler_characteristic"],
        "edges": skeleton_edges(&family).len(),
        "cocircuits": complex["cocircuits"],
        "circuits": complex["circuits"],
    });
    if cli.format == Format::Json {
        return Ok(Outcome::ok(pretty(&value)));
    }
    let list = |v: &serde_json::Value| {
        let items: Vec<String> = v
            .as_array()
            .expect("array")
            .iter()
            .map(|x| x.as_str().map_or_else(|| x.to_string(), str::to_string))
            .collect();
        if items.is_empty() {
            "(none)".to_string()
        } else {
            items.join(" ")
        }
    };
    let mut text = String::new();
    text.push_str(&format!("n: {}\n", family.dim()));
    text.push_str(&format!("labels: {}\n", family.ground().labels().join(" ")));
    text.push_str(&format!("members: {mid}\n"));
    text.push_str(&format!("ample: {}\n", mid == hi));
    text.push_str(&format!("dress_pajor: {lo} {mid} {hi}\n"));
    text.push_str(&format!("vc_dimension: {}\n", value["vc_dimension"]));
    text.push_str(&format!("shattered: {}\n", list(&value["shattered"])));
    text.push_str(&format!("strongly_shattered: {}\n", list(&value["strongly_shattered"])));
    text.push_str(&format!("dimension: {}\n", value["dimension"]));
    text.push_str(&format!("f_vector: {}\n", list(&value["f_vector"])));
    text.push_str(&format!("euler_characteristic: {}\n", value["euler_characteristic"]));
    text.push_str(&format!("edges: {}\n", value["edges"]));
    text.push_str(&format!("cocircuits: {}\n", list(&value["cocircuits"])));
    text.push_str(&format!("circuits: {}\n", list(&value["circuits"])));
    Ok(Outcome::ok(text))
}

fn enumerate(cli: &Cli, n: usize, id: &str, sample: Option<u64>) -> Result<Outcome> {
    no_dot(cli.format, "enumerate")?;
    let which: Characterization = id.parse()?;
    let start = Instant::now();
    let (count, families) = match sample {
        Some(k) => (sample_families(n, which, k, cli.seed, cli.jobs)?, k),
        None => (enumerate_families(n, which, cli.jobs)?, 1u64 << (1u64 << n)),
    };
    let seconds = start.elapsed().as_secs_f64();
    let text = match cli.format {
        Format::Json => pretty(&json!({
            "n": n,
            "id": which.name(),
            "mode": if sample.is_some() { "sample" } else { "exhaustive" },
            "families": families,
            "count": count,
            "seconds": seconds,
        })),
        _ => {
            eprintln!("{which} on {families} families with n = {n}: {seconds:.3}s");
            format!("{count}\n")
        }
    };
    Ok(Outcome::ok(text))
}

fn orthants(cli: &Cli, file: &Path) -> Result<Outcome> {
    no_dot(cli.format, "orthants")?;
    let cloud = input::read_cloud(file, cli.tolerance)?;
    let orthants = orthant_pattern(&cloud);
    let regions = region_pattern(&cloud);
    let sca = satisfies_sca(&regions);
    let sign_convex = is_sign_convex(&regions);
    let ample = is_ample(&orthants);
    let text = match cli.format {
        Format::Json => pretty(&json!({
            "n": cloud.ground().len(),
            "points": cloud.len(),
            "orthant_pattern": orthants.to_strings(),
            "region_pattern": regions.to_strings(),
            "sca": sca,
            "sign_convex": sign_convex,
            "ample": ample,
        })),
        _ => format!(
            "n: {}\npoints: {}\northant_pattern: {}\nregion_pattern: {}\nsca: {sca}\nsign_convex: {sign_convex}\nample: {ample}\n",
            cloud.ground().len(),
            cloud.len(),
            orthants.to_strings().join(" "),
            regions.to_strings().join(" "),
        ),
    };
    Ok(Outcome::ok(text))
}

fn export(cli: &Cli, file: &Path, what: ExportKind) -> Result<Outcome> {
    let family = input::read_family(file)?;
    let text = match (what, cli.format) {
        (ExportKind::Skeleton, Format::Json) => {
            let edges: Vec<[String; 2]> = skeleton_edges(&family)
                .into_iter()
                .map(|(s, t)| [s.to_string(), t.to_string()])
                .collect();
            pretty(&json!({ "nodes": family.to_strings(), "edges": edges }))
        }
        (ExportKind::Baryc, Format::Json) => {
            let bary = barycentric_completion(&family);
            let edges: Vec<[String; 2]> = grid_edges(bary.barycenters())
                .into_iter()
                .map(|(s, t)| [s.to_string(), t.to_string()])
                .collect();
            pretty(&json!({ "nodes": bary.barycenters().to_strings(), "edges": edges }))
        }
        (ExportKind::Skeleton, _) => skeleton_dot(&family),
        (ExportKind::Baryc, _) => barycenter_dot(&family),
    };
    Ok(Outcome::ok(text))
}

fn run_oracle(cli: &Cli, command: &OracleCommand) -> Result<Outcome> {
    no_dot(cli.format, "oracle")?;
    match command {
        OracleCommand::Count { n } => {
            if *n > 4 {
                bail!("the naive count is limited to n <= 4");
            }
            let count = oracle::count_ample(*n);
            Ok(Outcome::ok(match cli.format {
                Format::Json => pretty(&json!({ "n": n, "ample_families": count })),
                _ => format!("{count}\n"),
            }))
        }
        OracleCommand::Invariants { file } => {
            let family = input::read_family(file)?;
            if family.dim() > 10 {
                bail!("the naive invariants are limited to n <= 10");
            }
            let inv = oracle::invariants(&family);
            let value = json!({
                "n": family.dim(),
                "strongly_shattered": inv.strongly_shattered,
                "members": inv.members,
                "shattered": inv.shattered,
                "vc_dimension": inv.vc_dimension,
                "ample": inv.ample,
                "barycenters": inv.barycenters,
            });
            Ok(Outcome::ok(match cli.format {
                Format::Json => pretty(&value),
                _ => format!(
                    "dress_pajor: {} {} {}\nvc_dimension: {}\nample: {}\nbarycenters: {}\n",
                    inv.strongly_shattered,
                    inv.members,
                    inv.shattered,
                    inv.vc_dimension,
                    inv.ample,
                    inv.barycenters
                ),
            }))
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    if let Some(0) = cli.jobs {
        bail!("--jobs must be positive");
    }
    match &cli.command {
        Command::Check { file, id } => check(cli, file, id),
        Command::Report { file } => report(cli, file),
        Command::Enumerate { n, id, sample } => enumerate(cli, *n, id, *sample),
        Command::Orthants { file } => orthants(cli, file),
        Command::Export { file, what } => export(cli, file, *what),
        Command::Oracle { command } => run_oracle(cli, command),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|outcome| {
        emit(&cli, &outcome.text)?;
        Ok(outcome.success)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
