//! Command line front end: decomposition analysis, infiniteness
//! certificates, independent oracles, and batch corpus processing.
//!
//! Exit codes: 0 success, 1 usage or input errors, 2 when `certify`
//! finds no applicable rule, 3 when independent results contradict each
//! other (which always means a bug somewhere).

mod corpus;
mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cycpres::presentation::normalize_span;
use cycpres::{
    abelian_invariants, abelian_order, abelian_order_by_resultant, analyze,
    assumptions_from_extras, certify, enumerate_cosets, AbelianOrder, Assumption, CertifyOutcome,
    CyclicPresentationSpec, CyclicWord, EnumerationOutcome, Int, OneRelatorSpec, SearchConfig,
    ENUMERATION_STRATEGY,
};

use num_integer::Integer as _;

const EXIT_USAGE: u8 = 1;
const EXIT_NO_CERTIFICATE: u8 = 2;
const EXIT_CONTRADICTION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cycpres",
    version,
    about = "Infiniteness certificates for cyclically presented groups G_n(w)"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Cap on component exponents in decompositions (default: relator length)
    #[arg(long, global = true, value_name = "N")]
    max_exponent: Option<u32>,

    /// Reduced cancellation allowed at piece junctions
    #[arg(long, global = true, value_name = "N", default_value_t = 0)]
    cancellation_budget: u32,

    /// Cap on total cosets defined during enumeration
    #[arg(long, global = true, value_name = "N", default_value_t = 100_000)]
    max_cosets: u64,

    /// Accepted for reproducibility bookkeeping; every analysis here is
    /// deterministic, so the value changes nothing
    #[arg(long, global = true, value_name = "SEED")]
    seed: Option<u64>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct AssumptionOpts {
    /// Pair assumed non-exceptional, as "i,j,...|p,q,...[: justification]";
    /// repeatable
    #[arg(long = "assume-nonexceptional", value_name = "PAIR")]
    nonexceptional: Vec<String>,

    /// Assume every triple intersection of Magnus subgroups is trivial,
    /// with an optional justification
    #[arg(
        long = "assume-triple-trivial",
        value_name = "JUSTIFICATION",
        num_args = 0..=1,
        default_missing_value = ""
    )]
    triple: Option<String>,
}

impl AssumptionOpts {
    fn parse(&self) -> Result<Vec<Assumption>, String> {
        let mut extras: Vec<(String, Option<String>)> = self
            .nonexceptional
            .iter()
            .map(|v| ("assume-nonexceptional".to_string(), Some(v.clone())))
            .collect();
        if let Some(j) = &self.triple {
            let key = if j.is_empty() {
                "assume-triple-trivial".to_string()
            } else {
                format!("assume-triple-trivial: {j}")
            };
            extras.push((key, None));
        }
        assumptions_from_extras(&extras).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run every pair check and the purity scan without issuing a certificate
    Analyze {
        /// Relator word, e.g. "x0^-1 x1 x0 x1^-2"
        word: String,
        #[command(flatten)]
        assume: AssumptionOpts,
    },
    /// Produce an infiniteness certificate (exit 2 when no rule applies)
    Certify {
        word: String,
        #[command(flatten)]
        assume: AssumptionOpts,
        /// Write the report to this file instead of stdout
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
        /// Re-run and byte-compare: against the --output file when given,
        /// otherwise against a second in-memory run
        #[arg(long)]
        check: bool,
    },
    /// Independent oracles for one concrete G_n(w): abelianization order
    /// two ways plus coset enumeration
    Oracle {
        word: String,
        /// Number of generators and relators
        #[arg(long)]
        n: u32,
    },
    /// Batch-process a file of "w = ...; n = ...; assume-..." lines
    Corpus { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let config = SearchConfig {
        max_exponent: cli.global.max_exponent,
        cancellation_budget: cli.global.cancellation_budget,
    };
    match &cli.command {
        Command::Analyze { word, assume } => {
            let sp = parse_span(word)?;
            let assumptions = assume.parse()?;
            let report = analyze(&sp, &assumptions, &config);
            match cli.global.format {
                Format::Json => println!("{}", to_pretty(&report)?),
                Format::Text => print!("{}", render::analysis(&report)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify { word, assume, output, check } => {
            let sp = parse_span(word)?;
            let assumptions = assume.parse()?;
            let outcome = certify(&sp, &assumptions, &config);
            let bytes = certify_bytes(&outcome, cli.global.format)?;
            let ok_code = match &outcome {
                CertifyOutcome::Certified(_) => ExitCode::SUCCESS,
                CertifyOutcome::NoCertificate(_) => ExitCode::from(EXIT_NO_CERTIFICATE),
            };
            if *check {
                let reference = match output {
                    Some(path) => fs::read(path)
                        .map_err(|e| format!("cannot read {}: {e}", path.display()))?,
                    None => certify_bytes(&certify(&sp, &assumptions, &config), cli.global.format)?,
                };
                if reference != bytes {
                    eprintln!("certificate check failed: stored and recomputed reports differ");
                    return Ok(ExitCode::from(EXIT_CONTRADICTION));
                }
                println!("certificate check passed");
                return Ok(ok_code);
            }
            match output {
                Some(path) => fs::write(path, &bytes)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
                None => print!("{}", String::from_utf8_lossy(&bytes)),
            }
            Ok(ok_code)
        }
        Command::Oracle { word, n } => {
            let w: CyclicWord = word.parse().map_err(|e| format!("invalid word: {e}"))?;
            let presentation = CyclicPresentationSpec::new(*n, w).map_err(|e| e.to_string())?;
            let report = oracle_report(&presentation, cli.global.max_cosets);
            match cli.global.format {
                Format::Json => println!("{}", to_pretty(&report)?),
                Format::Text => print!("{}", render::oracle(&report)),
            }
            if report.consistent {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("oracle contradiction: independent computations disagree");
                Ok(ExitCode::from(EXIT_CONTRADICTION))
            }
        }
        Command::Corpus { file } => corpus::run(file, &cli.global, &config),
    }
}

fn parse_span(word: &str) -> Result<OneRelatorSpec, String> {
    let w: CyclicWord = word.parse().map_err(|e| format!("invalid word: {e}"))?;
    let (sp, _) = normalize_span(&w).map_err(|e| format!("invalid relator: {e}"))?;
    Ok(sp)
}

fn to_pretty<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value).map_err(|e| e.to_string())
}

fn certify_bytes(outcome: &CertifyOutcome, format: Format) -> Result<Vec<u8>, String> {
    let text = match (outcome, format) {
        (CertifyOutcome::Certified(c), Format::Json) => format!("{}\n", to_pretty(c)?),
        (CertifyOutcome::NoCertificate(r), Format::Json) => format!("{}\n", to_pretty(r)?),
        (CertifyOutcome::Certified(c), Format::Text) => render::certificate(c),
        (CertifyOutcome::NoCertificate(r), Format::Text) => render::no_certificate(r),
    };
    Ok(text.into_bytes())
}

/// Everything the independent oracles say about one concrete group.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OracleReport {
    pub word: String,
    pub n: u32,
    pub invariants: Vec<String>,
    pub order_by_smith: String,
    pub order_by_resultant: String,
    pub enumeration: EnumerationOutcome,
    pub strategy: &'static str,
    pub max_cosets: u64,
    pub consistent: bool,
}

pub fn oracle_report(presentation: &CyclicPresentationSpec, max_cosets: u64) -> OracleReport {
    let invariants = abelian_invariants(presentation);
    let by_smith = abelian_order(presentation);
    let by_resultant = abelian_order_by_resultant(presentation);
    let enumeration = enumerate_cosets(presentation, max_cosets);
    let mut consistent = by_smith == by_resultant;
    if let EnumerationOutcome::Completed { cosets } = enumeration {
        // A finite group has a finite abelianization whose order divides
        // the group order.
        match &by_smith {
            AbelianOrder::Finite(order) => {
                consistent &= Int::from(cosets).is_multiple_of(order);
            }
            AbelianOrder::Infinite => consistent = false,
        }
    }
    OracleReport {
        word: presentation.word().to_string(),
        n: presentation.n(),
        invariants: invariants.iter().map(Int::to_string).collect(),
        order_by_smith: by_smith.to_string(),
        order_by_resultant: by_resultant.to_string(),
        enumeration,
        strategy: ENUMERATION_STRATEGY,
        max_cosets,
        consistent,
    }
}
