//! `uul`: build reference 2-groups, sweep their modular group algebras, and
//! verify the classification claims against exhaustive computation.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

mod claims;
mod docs;

use claims::{run_claim, Claim};
use docs::{bicyclic_doc, classify_doc, info_doc, scan_doc, units_doc};
use uul_core::catalog;
use uul_core::FiniteGroup;

#[derive(Parser)]
#[command(name = "uul", version, about = "verification runner for units of modular group algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Selector {
    /// Builtin group, e.g. `dihedral(8)`, `H245`, `P(2)`
    #[arg(long, group = "sel", required = true)]
    group: Option<String>,
    /// A `.grp` group file
    #[arg(long, group = "sel")]
    file: Option<PathBuf>,
    /// A directory of `.grp` files
    #[arg(long, group = "sel")]
    catalog: Option<PathBuf>,
}

impl Selector {
    fn load(&self) -> Result<Vec<FiniteGroup>> {
        if let Some(spec) = &self.group {
            return Ok(vec![catalog::builtin_from_spec(spec)?]);
        }
        if let Some(path) = &self.file {
            return Ok(vec![catalog::load_group_file(path)?.group]);
        }
        if let Some(dir) = &self.catalog {
            let entries = catalog::load_catalog(dir)?;
            return Ok(entries.into_iter().map(|e| e.group).collect());
        }
        bail!("exactly one of --group, --file, --catalog is required");
    }
}

#[derive(Args)]
struct OutputOpts {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepOpts {
    /// Sweep every normalized unit (the default)
    #[arg(long, conflicts_with = "sample")]
    exhaustive: bool,
    /// Sample this many pseudo-random units instead of sweeping all
    #[arg(long)]
    sample: Option<u64>,
    /// Seed for sampled sweeps
    #[arg(long, default_value = "1")]
    seed: u64,
}

impl SweepOpts {
    fn config(&self) -> uul_core::units::UnitSweepConfig {
        match self.sample {
            Some(n) => uul_core::units::UnitSweepConfig::sample(n, self.seed),
            None => uul_core::units::UnitSweepConfig::exhaustive(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScanPredicate {
    /// Frattini and Omega subgroups equal, central, of order 4
    #[value(name = "lemma4.1")]
    Lemma41,
    /// Every <g^2> normal with abelian-or-dihedral two-generator quotients
    Good,
    /// The structural class behind normality of the unitary subgroup
    #[value(name = "thm1.1")]
    Thm11,
    /// The structural class behind all bicyclic units being unitary
    #[value(name = "thm1.2")]
    Thm12,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a claim on one group or a whole catalog
    Verify {
        /// One of: thm1.1, thm1.2, lemma1.3, lemma1.4, lemma2.1, lemma2.3,
        /// lemma4.1, lemma4.14, normal-algebra
        claim: Claim,
        #[command(flatten)]
        selector: Selector,
        /// Field characteristic
        #[arg(long, default_value = "2")]
        p: u32,
        #[command(flatten)]
        sweep: SweepOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Run the structural classifiers and print the verdicts
    Classify {
        #[command(flatten)]
        selector: Selector,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Count normalized units and unitary units
    Units {
        #[command(flatten)]
        selector: Selector,
        #[arg(long, default_value = "2")]
        p: u32,
        #[command(flatten)]
        sweep: SweepOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Build a bicyclic unit, or sweep all of them
    Bicyclic {
        #[command(flatten)]
        selector: Selector,
        #[arg(long, default_value = "2")]
        p: u32,
        /// Element label or word for g
        #[arg(long, requires = "h")]
        g: Option<String>,
        /// Element label or word for h
        #[arg(long, requires = "g")]
        h: Option<String>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Scan groups for a structural predicate
    Scan {
        #[command(flatten)]
        selector: Selector,
        #[arg(long, value_enum)]
        predicate: ScanPredicate,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Orders, characteristic subgroups, shape flags, and the E x H split
    Info {
        #[command(flatten)]
        selector: Selector,
        #[command(flatten)]
        output: OutputOpts,
    },
}

fn init_thread_pool() {
    if let Ok(n) = std::env::var("UUL_THREADS") {
        if let Ok(n) = n.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

struct Sink {
    out: Option<std::fs::File>,
}

impl Sink {
    fn new(opts: &OutputOpts) -> Result<Sink> {
        let out = match &opts.out {
            Some(path) => Some(
                std::fs::File::create(path)
                    .with_context(|| format!("cannot create {}", path.display()))?,
            ),
            None => None,
        };
        Ok(Sink { out })
    }

    fn emit(&mut self, line: &str) -> Result<()> {
        let result = match &mut self.out {
            Some(f) => writeln!(f, "{line}"),
            None => writeln!(std::io::stdout(), "{line}"),
        };
        match result {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {
                // downstream consumer closed the pipe; stop quietly
                std::process::exit(0);
            }
            other => Ok(other?),
        }
    }
}

fn emit_json_or_text<T: serde::Serialize>(
    sink: &mut Sink,
    format: Format,
    value: &T,
    text: String,
) -> Result<()> {
    match format {
        Format::Json => sink.emit(&serde_json::to_string(value)?),
        Format::Text => sink.emit(text.trim_end()),
    }
}

fn run() -> Result<ExitCode> {
    init_thread_pool();
    let cli = Cli::parse();
    let mut falsified = false;
    match cli.command {
        Command::Verify {
            claim,
            selector,
            p,
            sweep,
            output,
        } => {
            let groups = selector.load()?;
            let cfg = sweep.config();
            let results: Vec<_> = {
                use rayon::prelude::*;
                groups
                    .par_iter()
                    .map(|g| run_claim(claim, g, p, &cfg))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let mut sink = Sink::new(&output)?;
            for outcome in results {
                falsified |= outcome.falsifying;
                emit_json_or_text(&mut sink, output.format, &outcome.report, outcome.report.to_text())?;
            }
        }
        Command::Classify { selector, output } => {
            let groups = selector.load()?;
            let mut sink = Sink::new(&output)?;
            for g in &groups {
                let (doc, text) = classify_doc(g)?;
                emit_json_or_text(&mut sink, output.format, &doc, text)?;
            }
        }
        Command::Units {
            selector,
            p,
            sweep,
            output,
        } => {
            let groups = selector.load()?;
            let cfg = sweep.config();
            let mut sink = Sink::new(&output)?;
            for g in groups {
                let (doc, text) = units_doc(g, p, &cfg)?;
                emit_json_or_text(&mut sink, output.format, &doc, text)?;
            }
        }
        Command::Bicyclic {
            selector,
            p,
            g,
            h,
            output,
        } => {
            let groups = selector.load()?;
            let mut sink = Sink::new(&output)?;
            for grp in groups {
                let (doc, text) = bicyclic_doc(grp, p, g.as_deref(), h.as_deref())?;
                emit_json_or_text(&mut sink, output.format, &doc, text)?;
            }
        }
        Command::Scan {
            selector,
            predicate,
            output,
        } => {
            let groups = selector.load()?;
            let (doc, text) = scan_doc(&groups, predicate)?;
            let mut sink = Sink::new(&output)?;
            emit_json_or_text(&mut sink, output.format, &doc, text)?;
        }
        Command::Info { selector, output } => {
            let groups = selector.load()?;
            let mut sink = Sink::new(&output)?;
            for g in &groups {
                let (doc, text) = info_doc(g)?;
                emit_json_or_text(&mut sink, output.format, &doc, text)?;
            }
        }
    }
    Ok(if falsified {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
