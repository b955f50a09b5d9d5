//! `rainbow` — command-line front end for the family toolkit.
//!
//! Exit codes: 0 = found/verified/accepted, 1 = not found/refuted/rejected
//! (including a threshold result that is only a lower bound), 2 = error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use rainbow_core::graph::{self, CycleFamily, Parity, ParityFilter};
use rainbow_core::search::{exhaustive_rainbow_cycle, find_rainbow_cycle, find_rainbow_odd_cycle};
use rainbow_core::structures::{
    gen_glued_squares, gen_linkleaf, gen_pruned_cactus, gen_saguaro, is_linkleaf,
    is_pruned_cactus, is_saguaro,
};
use rainbow_harness::io::{
    self, CactusScriptDto, CertificateDto, GluedSquaresScriptDto, LinkleafScriptDto,
    SaguaroScriptDto,
};
use rainbow_harness::par::Parallelism;
use rainbow_harness::threshold::search_even_threshold;
use rainbow_harness::verify::{verify_theorem, TheoremId, VerifyMode};

#[derive(Parser)]
#[command(
    name = "rainbow",
    version,
    about = "Rainbow cycle search, structure recognition, theorem sweeps, and threshold search"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
    Any,
}

#[derive(Clone, Copy, ValueEnum)]
enum StructureArg {
    Cactus,
    Saguaro,
    Linkleaf,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Cactus,
    Saguaro,
    Linkleaf,
    GluedSquares,
}

#[derive(Subcommand)]
enum Cmd {
    /// Search a family for a rainbow cycle of the requested parity.
    Find {
        #[arg(long, value_enum)]
        parity: ParityArg,
        /// Family JSON file.
        #[arg(long = "in")]
        input: PathBuf,
        /// Write the certificate here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test a family against a structure class and emit the witness.
    Recognize {
        #[arg(long, value_enum)]
        structure: StructureArg,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the total cut-or-cycle procedure on an edge-disjoint family.
    DecideCut {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep a theorem exhaustively or by seeded sampling.
    Verify {
        /// One of: odd-cycles, woc, odd-char, rgc, cycles-char,
        /// edge-disjoint, linkleaf, even-cycles-bound, matroid-span.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: usize,
        /// Sample this many families instead of exhausting the space.
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON report here as well as to stdout.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Search for the least family size forcing a rainbow even cycle.
    Threshold {
        #[arg(long)]
        n: usize,
        /// Wall-clock budget in seconds; the result degrades to a lower
        /// bound when it runs out.
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a family from a build-plan JSON file.
    Gen {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        script: PathBuf,
        /// Restrict cactus blocks to odd lengths.
        #[arg(long)]
        odd: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a family (optionally clustered by a certificate) as DOT.
    ExportDot {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Certificate JSON whose structure becomes cluster subgraphs.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
}

fn emit_json<T: serde::Serialize>(value: &T, out: Option<&PathBuf>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => println!("{text}"),
    }
    Ok(())
}

fn emit_certificate(cert: &CertificateDto, out: Option<&PathBuf>) -> anyhow::Result<()> {
    emit_json(cert, out)
}

/// Returns whether the outcome counts as "found/verified" (exit 0).
fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.cmd {
        Cmd::Find { parity, input, out } => {
            let family = io::import_family(&input)?;
            let cert = match parity {
                // The odd-cycle search is constructive but contracts on
                // all-odd families; anything else goes to the oracle.
                ParityArg::Odd
                    if family
                        .members()
                        .iter()
                        .all(|m| graph::is_cycle(m) == Some(Parity::Odd)) =>
                {
                    find_rainbow_odd_cycle(&family)
                }
                ParityArg::Odd => exhaustive_rainbow_cycle(&family, ParityFilter::Odd),
                ParityArg::Any => find_rainbow_cycle(&family),
                ParityArg::Even => exhaustive_rainbow_cycle(&family, ParityFilter::Even),
            };
            match cert {
                Some(c) => {
                    c.validate(&family).map_err(anyhow::Error::msg)?;
                    emit_certificate(&CertificateDto::from(&c), out.as_ref())?;
                    Ok(true)
                }
                None => {
                    eprintln!("no rainbow cycle of the requested parity");
                    Ok(false)
                }
            }
        }
        Cmd::Recognize {
            structure,
            input,
            out,
        } => {
            let family = io::import_family(&input)?;
            let cert: Option<CertificateDto> = match structure {
                StructureArg::Cactus => is_pruned_cactus(&family).map(|c| (&c).into()),
                StructureArg::Saguaro => is_saguaro(&family).map(|c| (&c).into()),
                StructureArg::Linkleaf => is_linkleaf(&family)?.map(|c| (&c).into()),
            };
            match cert {
                Some(c) => {
                    emit_certificate(&c, out.as_ref())?;
                    Ok(true)
                }
                None => {
                    eprintln!("family is not in the requested class");
                    Ok(false)
                }
            }
        }
        Cmd::DecideCut { input, out } => {
            let family = io::import_family(&input)?;
            let outcome = rainbow_core::decide::cut_or_rainbow_cycle(&family)?;
            emit_certificate(&CertificateDto::from(&outcome), out.as_ref())?;
            Ok(true)
        }
        Cmd::Verify {
            theorem,
            n,
            sample,
            seed,
            report,
        } => {
            let id: TheoremId = theorem.parse()?;
            let mode = match sample {
                Some(count) => VerifyMode::Sample { count, seed },
                None => VerifyMode::Exhaustive,
            };
            let result = verify_theorem(id, n, mode, Parallelism::auto())?;
            emit_json(&result, None)?;
            if let Some(path) = report {
                result.save(path)?;
            }
            Ok(result.passed())
        }
        Cmd::Threshold { n, budget, out } => {
            let result = search_even_threshold(n, budget.map(Duration::from_secs_f64))?;
            emit_json(&result, out.as_ref())?;
            Ok(!result.lower_bound_only)
        }
        Cmd::Gen {
            kind,
            script,
            odd,
            out,
        } => {
            let text = std::fs::read_to_string(&script)?;
            let family: CycleFamily = match kind {
                KindArg::Cactus => {
                    let dto: CactusScriptDto = serde_json::from_str(&text)?;
                    gen_pruned_cactus(&dto.to_script(), odd)?
                }
                KindArg::Saguaro => {
                    let dto: SaguaroScriptDto = serde_json::from_str(&text)?;
                    gen_saguaro(&dto.to_script())?
                }
                KindArg::Linkleaf => {
                    let dto: LinkleafScriptDto = serde_json::from_str(&text)?;
                    gen_linkleaf(&dto.to_script())?
                }
                KindArg::GluedSquares => {
                    let dto: GluedSquaresScriptDto = serde_json::from_str(&text)?;
                    gen_glued_squares(dto.copies)
                }
            };
            emit_json(&io::FamilyDto::from_family(&family), out.as_ref())?;
            Ok(true)
        }
        Cmd::ExportDot { input, out, cert } => {
            let family = io::import_family(&input)?;
            let cert_dto = match cert {
                Some(path) => Some(io::import_certificate(&path)?),
                None => None,
            };
            io::export_dot(&family, cert_dto.as_ref(), &out)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
