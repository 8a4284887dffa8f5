//! `systolic`: bound tables, identity verification, and construction runs.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 search or equalization precondition failure.

mod construct;
mod grid;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use systolic::{
    bound_report, complete_graph_embedding_with, npod_systole_report, read_rotation_system,
    rotation_report, BoundQuery, Error as LibError, Length,
};

#[derive(Parser)]
#[command(
    name = "systolic",
    version,
    about = "Systole-count bound tables, identity verification sweeps, and \
             combinatorial surface construction reports"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate every bound quantity over a (genus, length) grid
    Bounds(BoundsArgs),
    /// Sweep the trigonometric identities and bound inequalities
    Verify(VerifyArgs),
    /// Build or load an embedding and run the short-cycle pipeline
    Construct(ConstructArgs),
}

#[derive(Args)]
struct BoundsArgs {
    /// Genus grid: `2`, `2..10`, or `2..20:2`
    #[arg(long)]
    genus: String,
    /// Systole-length grid: `4`, `2..6:0.5`, or `0.1..30:log50`
    #[arg(long)]
    length: String,
    /// Auxiliary radius R' of the per-ball estimate (default arcsinh 1)
    #[arg(long)]
    r_prime: Option<f64>,
    /// Slack added to the 2 log g length-warning threshold
    #[arg(long, default_value_t = 0.0)]
    slack: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Length grid swept by the identity checks
    #[arg(long, default_value = "0.1..30:log50")]
    grid: String,
    /// Multiply identity left-hand sides by 1 + 1e-6 (negative control)
    #[arg(long)]
    perturb: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).multiple(false)))]
struct ConstructArgs {
    /// Complete-graph order (catalog for n <= 8, seeded search beyond)
    #[arg(long, group = "source")]
    n: Option<usize>,
    /// Single-vertex surface with 4m opposite-paired half-edges
    #[arg(long, group = "source")]
    npod: Option<usize>,
    /// Rotation-system file to load instead of building one
    #[arg(long, group = "source")]
    rotation: Option<PathBuf>,
    /// Ribbon width parameter, in (0, 1/6)
    #[arg(long, default_value_t = 0.05)]
    epsilon: f64,
    /// Seed for embedding search and initial-length sampling
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Json,
    Csv,
}

enum Failure {
    Verification(String),
    Usage(String),
    Precondition(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Usage(m) | Failure::Precondition(m) => m,
        }
    }
}

fn lib_failure(err: LibError) -> Failure {
    match err {
        LibError::SearchFailed { .. } | LibError::EqualizationDisconnected => {
            Failure::Precondition(err.to_string())
        }
        other => Failure::Usage(other.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Bounds(args) => cmd_bounds(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Construct(args) => cmd_construct(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn cmd_bounds(args: BoundsArgs) -> Result<(), Failure> {
    let genus_grid = grid::parse_genus_grid(&args.genus).map_err(Failure::Usage)?;
    let length_grid = grid::parse_f64_grid(&args.length).map_err(Failure::Usage)?;
    let r_prime = args
        .r_prime
        .map(Length::new)
        .transpose()
        .map_err(|e| Failure::Usage(e.to_string()))?;

    let mut rows = Vec::with_capacity(genus_grid.len() * length_grid.len());
    let mut warnings = 0usize;
    for &g in &genus_grid {
        for &l in &length_grid {
            let length = Length::new(l).map_err(|e| Failure::Usage(e.to_string()))?;
            let mut query = BoundQuery::new(g, length)
                .map_err(|e| Failure::Usage(e.to_string()))?
                .with_area_slack(args.slack);
            if let Some(rp) = r_prime {
                query = query.with_r_prime(rp);
            }
            let report = bound_report(&query).map_err(|e| Failure::Usage(e.to_string()))?;
            if report.length_warning {
                warnings += 1;
            }
            rows.push(report);
        }
    }
    if warnings > 0 {
        eprintln!(
            "warning: {warnings} of {} rows exceed the 2 log g + {} systole-length bound",
            rows.len(),
            args.slack
        );
    }

    let text = match args.format {
        Format::Json => {
            let value = serde_json::json!({ "rows": rows });
            output::json_text(value)
        }
        Format::Csv => bounds_csv(&rows),
    };
    output::emit(&text, args.out.as_deref()).map_err(|e| Failure::Usage(e.to_string()))
}

fn bounds_csv(rows: &[systolic::BoundReport64]) -> String {
    let mut out = String::from(
        "genus,length,collar_w,systolic_r,theta_min,intersection_r,cover_f,per_ball_g,\
         per_ball_g_sinh_form,balls_per_systole_h,composite_bound,effective_bound,kiss_upper,\
         short_regime,length_warning\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.genus,
            output::fmt12(r.sys_length.value()),
            output::fmt12(r.collar_w.value()),
            output::fmt12(r.systolic_r.value()),
            output::fmt12(r.theta_min.value()),
            output::fmt12(r.intersection_r.value()),
            output::fmt12(r.cover_f),
            output::fmt12(r.per_ball_g),
            output::fmt12(r.per_ball_g_sinh_form),
            output::fmt12(r.balls_per_systole_h),
            output::fmt12(r.composite_bound),
            output::fmt12(r.effective_bound),
            output::fmt12(r.kiss_upper),
            r.short_regime,
            r.length_warning,
        ));
    }
    out
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let grid = grid::parse_f64_grid(&args.grid).map_err(Failure::Usage)?;
    let outcome = verify::run(&grid, args.perturb).map_err(Failure::Usage)?;
    for line in &outcome.lines {
        println!("{line}");
    }
    if outcome.all_passed {
        println!("verify: all checks passed");
        Ok(())
    } else {
        Err(Failure::Verification("verification checks failed".into()))
    }
}

fn cmd_construct(args: ConstructArgs) -> Result<(), Failure> {
    if args.epsilon <= 0.0 || args.epsilon >= 1.0 / 6.0 {
        return Err(Failure::Usage(format!(
            "epsilon must lie in (0, 1/6), got {}",
            args.epsilon
        )));
    }

    let text = if let Some(m) = args.npod {
        let report = npod_systole_report(m).map_err(lib_failure)?;
        match args.format {
            Format::Json => output::json_text(serde_json::to_value(&report).unwrap()),
            Format::Csv => construct::npod_csv(&report),
        }
    } else {
        let rs = if let Some(n) = args.n {
            complete_graph_embedding_with(n, args.seed, systolic::ribbon::DEFAULT_SEARCH_BUDGET)
                .map_err(lib_failure)?
        } else {
            let path = args.rotation.as_ref().expect("clap enforces one source");
            let content = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            read_rotation_system(&content).map_err(lib_failure)?
        };
        let report = rotation_report(&rs, args.epsilon, args.seed).map_err(lib_failure)?;
        if !report.intersection_graph_connected {
            eprintln!("warning: intersection graph is disconnected; equalization skipped");
        }
        match args.format {
            Format::Json => output::json_text(serde_json::to_value(&report).unwrap()),
            Format::Csv => construct::construction_csv(&report),
        }
    };
    output::emit(&text, args.out.as_deref()).map_err(|e| Failure::Usage(e.to_string()))
}
