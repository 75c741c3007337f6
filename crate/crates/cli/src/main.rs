use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use detcx::complexes::{build_cia, build_classical};
use detcx::differentials::{HookSource, Tamper};
use detcx::homology::{homology_graded, homology_numeric, HomologyTable};
use detcx::io::load_matrix;
use detcx::multilinear::{HookCache, CACHE_DIR_ENV};
use detcx::polyring::PolyMatrix;
use detcx::verify::{run_suite, Profile, DEFAULT_SEED};
use detcx::Error;

#[derive(Parser)]
#[command(name = "detcx", version, about = "Build and verify the canonical complexes C^{i,a} of a matrix")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    /// Hook-basis cache directory (overrides the environment variable).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Seed for the randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build C^{i,a} (or the classical C^i) and print its shape.
    Build {
        #[command(flatten)]
        job: JobArgs,
        /// Build the classical complex C^i instead; `--a` is ignored.
        #[arg(long)]
        classical: bool,
        /// Also write the complex as JSON to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Homology table of C^{i,a}: numeric, or strandwise up to a degree cutoff.
    Homology {
        #[command(flatten)]
        job: JobArgs,
        /// Highest internal degree; defaults to g + 3.
        #[arg(long)]
        degree_cutoff: Option<i64>,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value = "quick")]
        profile: Profile,
        /// Also write the JSON report to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Inspect or maintain the hook-basis cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    /// Print the cache directory.
    Path,
    /// Validate every cache file, rebuilding damaged ones.
    Check,
    /// Delete every cache file.
    Clear,
}

#[derive(Args)]
struct JobArgs {
    #[arg(long)]
    f: Option<usize>,
    #[arg(long)]
    g: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    i: i64,
    #[arg(long, default_value_t = 1)]
    a: i64,
    /// `generic`, inline matrix JSON, or a path to a JSON file.
    #[arg(long, default_value = "generic")]
    matrix: String,
    /// Allow a = 0, a = g + 1 and i outside -1..=f-g.
    #[arg(long)]
    allow_degenerate: bool,
}

enum Failure {
    Usage(String),
    Verification,
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) | Error::RankFormulaMismatch { .. } | Error::NotInSpan => {
                Failure::Internal(e.to_string())
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn cache_for(cli: &Cli) -> HookCache {
    let dir = cli.cache_dir.clone().unwrap_or_else(HookCache::default_dir);
    HookCache::new(Some(dir))
}

impl JobArgs {
    fn matrix(&self) -> Result<PolyMatrix, Failure> {
        let m = load_matrix(&self.matrix, self.f, self.g)?;
        let (f, g) = m.shape();
        if g > f {
            return Err(Failure::Usage(format!("need g <= f, got {f}x{g}")));
        }
        let (fi, gi) = (f as i64, g as i64);
        if self.allow_degenerate {
            if !(0..=gi + 1).contains(&self.a) || !(-gi - 1..=fi + 1).contains(&self.i) {
                return Err(Failure::Usage(format!(
                    "i = {}, a = {} out of range even for degenerate complexes",
                    self.i, self.a
                )));
            }
        } else if !(1..=gi).contains(&self.a) || !(-1..=fi - gi).contains(&self.i) {
            return Err(Failure::Usage(format!(
                "need 1 <= a <= {gi} and -1 <= i <= {}; got i = {}, a = {} (use --allow-degenerate for the end cases)",
                fi - gi,
                self.i,
                self.a
            )));
        }
        Ok(m)
    }
}

fn emit_table(table: &HomologyTable, format: Format) -> Result<(), Failure> {
    match format {
        Format::Json => {
            let text = serde_json::to_string_pretty(table).map_err(|e| Failure::Internal(e.to_string()))?;
            println!("{text}");
        }
        Format::Csv => print!("{}", table.to_csv()),
        Format::Text => {
            let width = table.dims.first().map_or(0, Vec::len);
            let mut header = format!("{:>8}", "j \\ deg");
            match table.cutoff {
                Some(_) => (0..width).for_each(|d| header.push_str(&format!(" {d:>6}"))),
                None => header.push_str(&format!(" {:>6}", "dim")),
            }
            println!("{}", table.name);
            println!("{header}");
            for (j, row) in table.positions.iter().zip(&table.dims).rev() {
                let cells: String = row.iter().map(|x| format!(" {x:>6}")).collect();
                println!("{j:>8}{cells}");
            }
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let cache = cache_for(cli);
    let hooks = HookSource::new(&cache, Tamper::None);
    match &cli.command {
        Command::Build { job, classical, output } => {
            let phi = job.matrix()?;
            let c =
                if *classical { build_classical(&phi, job.i, &hooks)? } else { build_cia(&phi, job.i, job.a, &hooks)? };
            let json = serde_json::to_string_pretty(&c.to_json()).map_err(|e| Failure::Internal(e.to_string()))?;
            if let Some(path) = output {
                std::fs::write(path, &json).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            match cli.format {
                Format::Json => println!("{json}"),
                Format::Csv => {
                    println!("position,rank,twist,module");
                    for p in &c.positions {
                        println!("{},{},{},\"{}\"", p.index, p.rank, p.twist, p.module);
                    }
                }
                Format::Text => {
                    println!("{} for a {}x{} matrix", c.name, c.f, c.g);
                    for line in c.summary_lines() {
                        println!("{line}");
                    }
                }
            }
        }
        Command::Homology { job, degree_cutoff } => {
            let phi = job.matrix()?;
            let c = build_cia(&phi, job.i, job.a, &hooks)?;
            let (table, summary) = match c.to_numeric() {
                Ok(numeric) => {
                    let t = homology_numeric(&numeric);
                    let s = format!("acyclic: {}", if t.is_acyclic() { "yes" } else { "no" });
                    (t, s)
                }
                Err(_) => {
                    c.check_homogeneous()?;
                    let cutoff = degree_cutoff.unwrap_or(c.g as i64 + 3);
                    let t = homology_graded(&c, cutoff)?;
                    let s = format!("acyclic up to degree {cutoff}: {}", if t.is_acyclic() { "yes" } else { "no" });
                    (t, s)
                }
            };
            emit_table(&table, cli.format)?;
            if cli.format == Format::Text {
                println!("{summary}");
            } else {
                eprintln!("{summary}");
            }
        }
        Command::Verify { profile, output } => {
            let report = run_suite(*profile, cli.seed, &cache);
            for event in cache.integrity_events() {
                eprintln!("cache integrity: {event} (rebuilt)");
            }
            let json = serde_json::to_string_pretty(&report.to_json()).map_err(|e| Failure::Internal(e.to_string()))?;
            if let Some(path) = output {
                std::fs::write(path, &json).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            match cli.format {
                Format::Json => println!("{json}"),
                Format::Csv => {
                    println!("claim,status,runtime_ms");
                    for r in &report.reports {
                        println!("{},{},{}", r.claim, r.status(), r.runtime_ms);
                    }
                }
                Format::Text => print!("{}", report.to_text()),
            }
            if !report.all_passed() {
                return Err(Failure::Verification);
            }
        }
        Command::Cache { action } => match action {
            CacheAction::Path => {
                let dir = cache.dir().map(|d| d.display().to_string()).unwrap_or_default();
                println!("{dir}");
                if cli.cache_dir.is_none() && std::env::var_os(CACHE_DIR_ENV).is_none() {
                    eprintln!("set {CACHE_DIR_ENV} or --cache-dir to choose another location");
                }
            }
            CacheAction::Check => {
                let audit = cache.audit()?;
                for reason in &audit.rebuilt {
                    eprintln!("cache integrity: {reason} (rebuilt)");
                }
                for path in &audit.removed {
                    eprintln!("cache integrity: {path}: unrecognized file (removed)");
                }
                println!("valid {}  rebuilt {}  removed {}", audit.valid, audit.rebuilt.len(), audit.removed.len());
            }
            CacheAction::Clear => println!("removed {} files", cache.clear_disk()?),
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
