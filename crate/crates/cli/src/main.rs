use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;

use cyclefree::birkhoff::{
    appendix_enumerate, appendix_level_sizes, appendix_member, appendix_samples, best_fiber,
    bound_check, verify_independent, BlockSystem, PermSet,
};
use cyclefree::cycles::{count_simple_cycles, enumerate_simple_cycles};
use cyclefree::labeling::{
    construct_random, construct_recursive, search_min_d, verify_cycle_free, Labeling, Mode,
};
use cyclefree::repcheck::series_bound;

mod report;

/// Listing individual cycles is refused above this count.
const MAX_LISTED_CYCLES: u64 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "cyclefree",
    version,
    about = "Cycle-free labelings, Birkhoff graph independent sets, S_n characters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recursive labeling with d = 3n over Z_2.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Uniformly random labeling over Z_q^d.
    RandomLabel {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that no simple cycle has zero sum.
    Verify {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// List or count the simple cycles of K_{n,n}.
    Cycles {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Largest fiber of the matching-sum map, as a permutation set.
    Reduce {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dyadic block-checksum independent sets.
    Indep {
        #[command(subcommand)]
        command: IndepCommand,
    },
    /// Smallest binary dimension admitting a cycle-free labeling (n <= 3).
    Mind {
        #[arg(long)]
        n: usize,
    },
    /// Hook characters on the n-cycle, or the full character table.
    Chars {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        table: bool,
    },
    /// Character report for a permutation set.
    Analyze {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        k_max: usize,
    },
    /// Evaluate the alternating hook series bound.
    Series {
        #[arg(long)]
        c: f64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        terms: usize,
    },
}

#[derive(Subcommand)]
enum IndepCommand {
    /// Enumerate the full set (n a power of two, n <= 8).
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that no two members differ by a cycle.
    Verify {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Draw uniform members (duplicates removed).
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ModeArgs {
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    #[arg(long, requires = "seed")]
    samples: Option<u64>,
    #[arg(long, requires = "samples")]
    seed: Option<u64>,
}

impl ModeArgs {
    fn mode(&self) -> Mode {
        match (self.samples, self.seed) {
            (Some(count), Some(seed)) => Mode::Sampled { count, seed },
            _ => Mode::Exhaustive,
        }
    }
}

fn mode_line(mode: Mode) -> String {
    match mode {
        Mode::Exhaustive => "mode=exhaustive".into(),
        Mode::Sampled { count, seed } => format!("mode=sampled samples={count} seed={seed}"),
    }
}

fn read_input(path: Option<&Path>) -> anyhow::Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading stdin")?;
            Ok(s)
        }
    }
}

/// Writes `body` to the file, or to stdout when no file is given.
/// Returns whether stdout was used.
fn write_output(path: Option<&Path>, body: &str) -> anyhow::Result<bool> {
    match path {
        Some(p) => {
            fs::write(p, body).with_context(|| format!("writing {}", p.display()))?;
            Ok(false)
        }
        None => {
            io::stdout().write_all(body.as_bytes())?;
            Ok(true)
        }
    }
}

/// Verdict: `true` when every check passed.
fn run(cli: Cli) -> anyhow::Result<bool> {
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Construct { n, out: path } => {
            let labeling = construct_recursive(n)?;
            if !write_output(path.as_deref(), &labeling.encode())? {
                writeln!(
                    out,
                    "n={} d={} q={}",
                    labeling.n(),
                    labeling.d(),
                    labeling.q()
                )?;
            }
            Ok(true)
        }
        Command::RandomLabel {
            n,
            d,
            q,
            seed,
            out: path,
        } => {
            let labeling = construct_random(n, d, q, seed)?;
            if !write_output(path.as_deref(), &labeling.encode())? {
                writeln!(out, "n={n} d={d} q={q} seed={seed}")?;
            }
            Ok(true)
        }
        Command::Verify { input, mode } => {
            let labeling = Labeling::decode(&read_input(input.as_deref())?)?;
            let mode = mode.mode();
            let report = verify_cycle_free(&labeling, mode)?;
            writeln!(
                out,
                "n={} d={} q={}",
                labeling.n(),
                labeling.d(),
                labeling.q()
            )?;
            writeln!(out, "{}", mode_line(mode))?;
            writeln!(out, "{report}")?;
            Ok(report.passed)
        }
        Command::Cycles { n, count_only } => {
            let total = count_simple_cycles(n);
            if !count_only {
                if total > BigUint::from(MAX_LISTED_CYCLES) {
                    return Err(cyclefree::Error::BudgetExceeded {
                        what: "cycle listing",
                        needed: total.to_string(),
                        limit: MAX_LISTED_CYCLES.to_string(),
                    }
                    .into());
                }
                for c in enumerate_simple_cycles(n) {
                    writeln!(out, "{}", c.traversal_string())?;
                }
            }
            writeln!(out, "count={total}")?;
            Ok(true)
        }
        Command::Reduce { input, out: path } => {
            let labeling = Labeling::decode(&read_input(input.as_deref())?)?;
            let (label, fiber) = best_fiber(&labeling)?;
            let report = verify_independent(&fiber, Mode::Exhaustive)?;
            let summary = format!("label={label} {report}");
            if write_output(path.as_deref(), &fiber.encode())? {
                eprintln!("{summary}");
            } else {
                writeln!(out, "{summary}")?;
            }
            Ok(report.passed)
        }
        Command::Indep { command } => run_indep(command, &mut out),
        Command::Mind { n } => {
            writeln!(out, "n={n} min_d={}", search_min_d(n)?)?;
            Ok(true)
        }
        Command::Chars { n, table } => {
            report::chars(&mut out, n, table)?;
            Ok(true)
        }
        Command::Analyze { input, k_max } => {
            let set = PermSet::decode(&read_input(input.as_deref())?)?;
            report::analyze(&mut out, &set, k_max)
        }
        Command::Series { c, n, terms } => {
            if c.is_nan() || c < 1.0 || terms == 0 {
                bail!("series needs c >= 1 and terms >= 1");
            }
            let refined = if n >= 8 { "on" } else { "off" };
            writeln!(out, "c={c} n={n} terms={terms} refinement={refined}")?;
            writeln!(out, "bound={:.10}", series_bound(c, n, terms))?;
            Ok(true)
        }
    }
}

fn run_indep(command: IndepCommand, out: &mut impl Write) -> anyhow::Result<bool> {
    match command {
        IndepCommand::Build { n, out: path } => {
            let sys = BlockSystem::new(n)?;
            let set = appendix_enumerate(&sys)?;
            if !write_output(path.as_deref(), &set.encode())? {
                let levels = appendix_level_sizes(&sys)?;
                let levels: Vec<String> = levels.iter().map(u64::to_string).collect();
                writeln!(out, "n={n} size={} levels={}", set.len(), levels.join(","))?;
            }
            Ok(true)
        }
        IndepCommand::Verify { input, mode } => {
            let set = PermSet::decode(&read_input(input.as_deref())?)?;
            let mode = mode.mode();
            let report = verify_independent(&set, mode)?;
            let bound = bound_check(&BigUint::from(set.len()), set.n());
            writeln!(out, "n={}", set.n())?;
            writeln!(out, "{}", mode_line(mode))?;
            writeln!(out, "{report}")?;
            writeln!(out, "bound={}", pass_fail(bound))?;
            if let Ok(sys) = BlockSystem::new(set.n()) {
                let mut members = true;
                for p in set.members() {
                    members &= appendix_member(p, &sys)?;
                }
                writeln!(out, "block_member={}", pass_fail(members))?;
            }
            Ok(report.passed && bound)
        }
        IndepCommand::Sample {
            n,
            count,
            seed,
            out: path,
        } => {
            let sys = BlockSystem::new(n)?;
            let set = PermSet::new(n, appendix_samples(&sys, count, seed))?;
            if !write_output(path.as_deref(), &set.encode())? {
                writeln!(
                    out,
                    "n={n} draws={count} distinct={} seed={seed}",
                    set.len()
                )?;
            }
            Ok(true)
        }
    }
}

pub(crate) fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<cyclefree::Error>() {
        Some(cyclefree::Error::BudgetExceeded { .. }) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
