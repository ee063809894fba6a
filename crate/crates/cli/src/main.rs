//! `armw`: build, check and explore abstract rigidity matroids from the command line.
//!
//! Exit codes: 0 success, 1 failed check or counterexample, 2 usage,
//! 3 enumeration cap or exhausted budget, 4 I/O or parse error.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use arm_core::checks::{run_suite, SUITES};
use arm_core::explore::{check_closing_corollary, confirm_theorem_2dim, search_question, Verdict};
use arm_core::families::{bigstar_family, hm1_family, hm_family, stars_minus};
use arm_core::rigidity::{
    cycle_matroid_arm, generic_rigidity_matroid, rigidity_matroid_of, Embedding,
};
use arm_core::{EdgeSet, Error, Matroid, Scope};

#[derive(Parser)]
#[command(name = "armw", version, about = "Abstract rigidity matroid workbench")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the generic m-dimensional rigidity matroid on K_n (the cycle matroid for m = 1).
    Build {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Use this embedding instead of a random one.
        #[arg(long)]
        embedding: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run checker suites on a matroid file, one JSON report per line.
    Check {
        matroid: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long, value_delimiter = ',')]
        suites: Option<Vec<String>>,
        /// `exhaustive` or `sampled:COUNT`.
        #[arg(long, default_value = "exhaustive")]
        scope: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stream a family of a matroid file as JSON lines.
    Enumerate {
        matroid: PathBuf,
        #[arg(long, value_enum)]
        what: What,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a prescribed edge-set family with a count header.
    #[command(group(ArgGroup::new("family").required(true).args(["hm", "hm1", "bigstar", "stars"])))]
    Families {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        hm: bool,
        #[arg(long)]
        hm1: bool,
        #[arg(long)]
        bigstar: bool,
        /// Vertex stars minus m - 1 edges.
        #[arg(long)]
        stars: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search small matroids and write a finding.
    Explore {
        #[arg(long, value_enum)]
        mode: ExploreMode,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Bases,
    Circuits,
    Cocircuits,
    Hyperplanes,
    Flats,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExploreMode {
    #[value(name = "confirm-2dim")]
    Confirm2dim,
    Question,
    Corollary,
}

#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Usage>().is_some() {
        return 2;
    }
    if let Some(e) = err.downcast_ref::<Error>() {
        return match e {
            Error::CapExceeded { .. } => 3,
            Error::DimensionTooLarge { .. }
            | Error::UnknownSuite(_)
            | Error::VertexOutOfRange { .. }
            | Error::TooManyVertices(_)
            | Error::LoopEdge(..) => 2,
            Error::GenericityNotCertified { .. } | Error::PreconditionNotMet { .. } => 1,
            _ => 4,
        };
    }
    4
}

fn sink(out: Option<&Path>) -> anyhow::Result<BufWriter<Box<dyn Write>>> {
    let w: Box<dyn Write> = match out {
        Some(p) => {
            Box::new(fs::File::create(p).with_context(|| format!("cannot create {}", p.display()))?)
        }
        None => Box::new(io::stdout().lock()),
    };
    Ok(BufWriter::new(w))
}

fn read_matroid(path: &Path) -> anyhow::Result<Matroid> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Ok(Matroid::from_json_str(&text)?)
}

fn parse_scope(scope: &str, seed: Option<u64>) -> anyhow::Result<Scope> {
    if scope == "exhaustive" {
        return Ok(Scope::Exhaustive);
    }
    let Some(count) = scope.strip_prefix("sampled:") else {
        return Err(usage(format!(
            "invalid scope {scope:?}; expected exhaustive or sampled:COUNT"
        )));
    };
    let count = count
        .parse()
        .map_err(|_| usage(format!("invalid sample count in {scope:?}")))?;
    let seed = seed.ok_or_else(|| usage("--seed is required with a sampled scope"))?;
    Ok(Scope::Sampled { seed, count })
}

fn build(
    n: Option<usize>,
    m: Option<usize>,
    seed: u64,
    embedding: Option<&Path>,
) -> anyhow::Result<Matroid> {
    if let Some(path) = embedding {
        let text =
            fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        let p = Embedding::from_json_str(&text)?;
        if n.is_some_and(|n| n != p.n()) || m.is_some_and(|m| m != p.m()) {
            return Err(usage("--n/--m disagree with the embedding"));
        }
        if p.n() < p.m() + 1 {
            return Err(Error::DimensionTooLarge { n: p.n(), m: p.m() }.into());
        }
        return Ok(rigidity_matroid_of(&p, seed)?);
    }
    let (Some(n), Some(m)) = (n, m) else {
        return Err(usage("build needs --n and --m, or --embedding"));
    };
    if m == 0 || n < m + 1 {
        return Err(Error::DimensionTooLarge { n, m }.into());
    }
    if m == 1 {
        return Ok(cycle_matroid_arm(n));
    }
    Ok(generic_rigidity_matroid(n, m, seed)?)
}

fn check(
    path: &Path,
    m: usize,
    suites: Option<Vec<String>>,
    scope: Scope,
    out: Option<&Path>,
) -> anyhow::Result<u8> {
    let matroid = read_matroid(path)?;
    let suites = suites.unwrap_or_else(|| SUITES.iter().map(|s| s.to_string()).collect());
    let mut w = sink(out)?;
    let mut failed = false;
    for suite in &suites {
        match run_suite(suite, &matroid, m, scope) {
            Ok(report) => {
                failed |= !report.passed;
                writeln!(w, "{}", serde_json::to_string(&report)?)?;
            }
            Err(e @ Error::PreconditionNotMet { .. }) => {
                failed = true;
                writeln!(
                    w,
                    "{}",
                    serde_json::json!({ "suite": suite, "passed": false, "error": e.to_string() })
                )?;
            }
            Err(e) => return Err(e.into()),
        }
    }
    w.flush()?;
    Ok(u8::from(failed))
}

fn enumerate(path: &Path, what: What, out: Option<&Path>) -> anyhow::Result<()> {
    let matroid = read_matroid(path)?;
    let family = match what {
        What::Bases => matroid.bases(),
        What::Circuits => matroid.circuits(),
        What::Cocircuits => matroid.cocircuits(),
        What::Hyperplanes => matroid.hyperplanes(),
        What::Flats => matroid.flats(),
    }?;
    let mut w = sink(out)?;
    for e in &family.members {
        writeln!(w, "{}", serde_json::to_string(e)?)?;
    }
    w.flush()?;
    Ok(())
}

fn families(n: usize, m: usize, which: &str, out: Option<&Path>) -> anyhow::Result<()> {
    if m == 0 || n < m + 1 {
        return Err(Error::DimensionTooLarge { n, m }.into());
    }
    let family: Vec<EdgeSet> = match which {
        "hm" => hm_family(n, m)?,
        "hm1" => hm1_family(n, m)?,
        "bigstar" => bigstar_family(n, m),
        "stars" => stars_minus(n, m - 1),
        _ => unreachable!("clap enforces one family flag"),
    };
    let mut w = sink(out)?;
    writeln!(
        w,
        "{}",
        serde_json::json!({ "family": which, "n": n, "m": m, "count": family.len() })
    )?;
    for e in &family {
        writeln!(w, "{}", serde_json::to_string(e)?)?;
    }
    w.flush()?;
    Ok(())
}

fn explore(
    mode: ExploreMode,
    n: usize,
    m: usize,
    budget: usize,
    seed: u64,
    out: Option<&Path>,
) -> anyhow::Result<u8> {
    let finding = match mode {
        ExploreMode::Confirm2dim => confirm_theorem_2dim(n, m)?,
        ExploreMode::Question => search_question(n, m, budget, seed)?,
        ExploreMode::Corollary => check_closing_corollary(n, m, budget, seed)?,
    };
    let mut w = sink(out)?;
    writeln!(w, "{}", finding.to_json_string())?;
    w.flush()?;
    eprintln!("{}", finding.verdict.as_str());
    Ok(match finding.verdict {
        Verdict::EquivalenceConfirmed | Verdict::ExhaustedNoCounterexample => 0,
        Verdict::Counterexample | Verdict::Discrepancy => 1,
        Verdict::BudgetExhausted => 3,
    })
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    if let Some(t) = cli.threads {
        if t == 0 {
            bail!(usage("--threads must be positive"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()?;
    }
    match cli.command {
        Command::Build {
            n,
            m,
            seed,
            embedding,
            out,
        } => {
            let matroid = build(n, m, seed, embedding.as_deref())?;
            let mut w = sink(out.as_deref())?;
            writeln!(w, "{}", matroid.to_json_string())?;
            w.flush()?;
            Ok(0)
        }
        Command::Check {
            matroid,
            m,
            suites,
            scope,
            seed,
            out,
        } => {
            let scope = parse_scope(&scope, seed)?;
            check(&matroid, m, suites, scope, out.as_deref())
        }
        Command::Enumerate { matroid, what, out } => {
            enumerate(&matroid, what, out.as_deref()).map(|()| 0)
        }
        Command::Families {
            n,
            m,
            hm,
            hm1,
            bigstar,
            stars: _,
            out,
        } => {
            let which = if hm {
                "hm"
            } else if hm1 {
                "hm1"
            } else if bigstar {
                "bigstar"
            } else {
                "stars"
            };
            families(n, m, which, out.as_deref()).map(|()| 0)
        }
        Command::Explore {
            mode,
            n,
            m,
            budget,
            seed,
            out,
        } => explore(mode, n, m, budget, seed, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("armw: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
