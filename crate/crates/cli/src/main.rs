//! `fpure`: F-purity criteria, symbolic powers and blowup algebras from the
//! command line.

mod compute;
mod instance;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use fpure::budget;
use fpure::fsing::{self, Outcome, Verdict};

use crate::compute::{ComputeArgs, Quantity};
use crate::instance::{Instance, InstanceArgs};

#[derive(Parser)]
#[command(name = "fpure", version, about = "Exact F-purity checks over prime fields")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Global {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text, env = "FPURE_FORMAT")]
    format: Format,
    /// S-pairs allowed per Gröbner basis.
    #[arg(long, global = true, env = "FPURE_MAX_SPAIRS")]
    max_spairs: Option<usize>,
    /// Wall-clock limit for the whole run.
    #[arg(long, global = true, env = "FPURE_TIME_LIMIT_S")]
    time_limit_s: Option<f64>,
    /// Worker threads (default: logical cores).
    #[arg(long, global = true, env = "FPURE_JOBS")]
    jobs: Option<usize>,
    /// Longest free resolution attempted.
    #[arg(long, global = true, env = "FPURE_MAX_PD")]
    max_pd: Option<usize>,
    /// Most free generators in a resolution frame.
    #[arg(long, global = true, env = "FPURE_MAX_BETTI")]
    max_betti: Option<usize>,
    /// Zero all timings so reports compare byte for byte.
    #[arg(long, global = true, env = "FPURE_NO_TIMINGS")]
    no_timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run one criterion on an instance.
    Check {
        #[arg(value_enum)]
        criterion: Criterion,
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Compute an ideal, invariant or bound.
    Compute {
        #[arg(value_enum)]
        quantity: Quantity,
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        range: RangeArgs,
        #[command(flatten)]
        extra: ComputeArgs,
    },
    /// Run the built-in reproduction corpus.
    Reproduce {
        #[arg(value_enum)]
        corpus: Corpus,
        /// Comma-separated item ids.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Criterion {
    Fedder,
    SymbolicFpure,
    Corh,
    ReesFpure,
    SymbolicReesFpure,
    ComparePowers,
    InitialEquality,
    InitialFiltration,
    SfrWitness,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Corpus {
    PaperExamples,
}

#[derive(Args, Debug, Clone, Default)]
pub struct RangeArgs {
    /// Power `n`.
    #[arg(short)]
    pub n: Option<u32>,
    /// Check or tabulate `n = 1..=N`.
    #[arg(long, value_name = "N")]
    pub max_n: Option<u32>,
    /// Allow checks outside the proven range.
    #[arg(long)]
    pub experimental: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let g = &cli.global;
    if let Some(n) = g.max_spairs {
        budget::set_max_spairs(n);
    }
    if let Some(s) = g.time_limit_s {
        budget::set_deadline(Some(Instant::now() + Duration::from_secs_f64(s)));
    }
    if g.max_pd.is_some() || g.max_betti.is_some() {
        let (pd, betti) = budget::resolution_limits();
        budget::set_resolution_limits(g.max_pd.unwrap_or(pd), g.max_betti.unwrap_or(betti));
    }
    if let Some(j) = g.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global()?;
    }
    match &cli.command {
        Command::Check { criterion, instance, range } => {
            let initial = matches!(criterion, Criterion::InitialEquality | Criterion::InitialFiltration);
            let inst = instance.build(initial)?;
            let mut v = check(*criterion, &inst, range)?;
            if g.no_timings {
                v.elapsed_ms = 0;
            }
            emit(g.format, &serde_json::to_value(&v)?, &verdict_text(&v));
            Ok(match v.verdict {
                o if o.is_positive() => 0,
                Outcome::Fails => 1,
                _ => 2,
            })
        }
        Command::Compute { quantity, instance, range, extra } => {
            let inst = instance.build(matches!(quantity, Quantity::InitialIdeal))?;
            let (json, text) = compute::run(*quantity, &inst, range, extra)?;
            emit(g.format, &json, &text);
            Ok(0)
        }
        Command::Reproduce { corpus: Corpus::PaperExamples, only } => {
            let mut report = fpure::corpus::run(only)?;
            if g.no_timings {
                report.elapsed_ms = 0;
                report.records.iter_mut().for_each(|r| r.elapsed_ms = 0);
            }
            emit(g.format, &serde_json::to_value(&report)?, &report.to_text());
            Ok(if report.passed { 0 } else { 1 })
        }
    }
}

fn check(c: Criterion, inst: &Instance, r: &RangeArgs) -> Result<Verdict> {
    let mut v = match c {
        Criterion::Fedder => fsing::fedder_fpure(&inst.ideal())?,
        Criterion::SymbolicFpure => {
            let s = inst.provider()?;
            match r.max_n {
                Some(n) => fsing::symbolic_fpure_range(&s, n)?,
                None => fsing::symbolic_fpure(&s, None)?,
            }
        }
        Criterion::Corh => fsing::corh_sufficient(&inst.provider()?, None)?,
        Criterion::SymbolicReesFpure => fsing::symbolic_rees_fpure_sufficient(&inst.provider()?, None)?,
        Criterion::ComparePowers => fsing::compare_powers(&inst.provider()?)?,
        Criterion::ReesFpure => fsing::rees_fpure_witness(inst.family()?, r.max_n.unwrap_or(2))?,
        Criterion::InitialEquality => {
            fsing::initial_symbolic_equality(inst.family()?, r.n.unwrap_or(2), r.experimental)?
        }
        Criterion::InitialFiltration => fsing::initial_filtration_fpure(inst.family()?, r.max_n.unwrap_or(2))?,
        Criterion::SfrWitness => fsing::sfr_localization_witness(inst.family()?)?,
    };
    if let Instance::Ideal(u) = inst {
        v.instance = u.name.clone();
    }
    Ok(v)
}

fn verdict_text(v: &Verdict) -> String {
    let mut out = v.summary();
    out.push('\n');
    if let Some(w) = &v.witness {
        if w.len() > 80 {
            out.push_str(&format!("  witness: {w}\n"));
        }
    }
    for n in &v.notes {
        out.push_str(&format!("  note: {n}\n"));
    }
    out
}

fn emit(format: Format, json: &Value, text: &str) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(json).unwrap()),
        Format::Text => print!("{text}"),
    }
}
