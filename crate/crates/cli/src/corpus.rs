//! Batch processing: one presentation per line, analyzed in parallel
//! with the output kept in file order.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use rayon::prelude::*;
use serde::Serialize;

use cycpres::{
    assumptions_from_extras, certify, Assumption, Certificate, CertifyOutcome,
    CyclicPresentationSpec, EnumerationOutcome, NoCertificate, OneRelatorSpec, PresentationLine,
    SearchConfig,
};

use crate::{oracle_report, Format, GlobalOpts, OracleReport, EXIT_CONTRADICTION};

struct Job {
    line_no: usize,
    spec: OneRelatorSpec,
    presentation: Option<CyclicPresentationSpec>,
    assumptions: Vec<Assumption>,
}

struct LineResult {
    line_no: usize,
    outcome: CertifyOutcome,
    oracle: Option<OracleReport>,
    contradiction: bool,
}

#[derive(Serialize)]
struct LineRecord<'a> {
    line: usize,
    certified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<&'a Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    no_certificate: Option<&'a NoCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<&'a OracleReport>,
    contradiction: bool,
}

pub fn run(file: &Path, global: &GlobalOpts, config: &SearchConfig) -> Result<ExitCode, String> {
    let text =
        fs::read_to_string(file).map_err(|e| format!("cannot read {}: {e}", file.display()))?;

    // Validate everything up front so malformed input fails fast with
    // line numbers, before any analysis runs.
    let mut jobs = Vec::new();
    let mut errors = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        match prepare(idx + 1, raw) {
            Ok(None) => {}
            Ok(Some(job)) => jobs.push(job),
            Err(msg) => errors.push(format!("line {}: {msg}", idx + 1)),
        }
    }
    if !errors.is_empty() {
        for e in &errors {
            eprintln!("{e}");
        }
        return Err(format!("{} malformed line(s) in {}", errors.len(), file.display()));
    }

    let results: Vec<LineResult> =
        jobs.par_iter().map(|job| process(job, global, config)).collect();

    match global.format {
        Format::Json => {
            let records: Vec<LineRecord<'_>> = results.iter().map(record).collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&records).map_err(|e| e.to_string())?
            );
        }
        Format::Text => {
            for r in &results {
                print!("{}", line_text(r));
            }
        }
    }

    if results.iter().any(|r| r.contradiction) {
        eprintln!("oracle contradiction detected; see the flagged lines");
        Ok(ExitCode::from(EXIT_CONTRADICTION))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn prepare(line_no: usize, raw: &str) -> Result<Option<Job>, String> {
    let Some(line) = PresentationLine::parse_opt(raw).map_err(|e| e.to_string())? else {
        return Ok(None);
    };
    let assumptions = assumptions_from_extras(&line.extras).map_err(|e| e.to_string())?;
    let (spec, _) = line.normalized_spec().map_err(|e| e.to_string())?;
    let presentation = match line.n {
        Some(n) => Some(
            CyclicPresentationSpec::new(n, spec.relator().clone()).map_err(|e| e.to_string())?,
        ),
        None => None,
    };
    Ok(Some(Job { line_no, spec, presentation, assumptions }))
}

fn process(job: &Job, global: &GlobalOpts, config: &SearchConfig) -> LineResult {
    let outcome = certify(&job.spec, &job.assumptions, config);
    let oracle = job.presentation.as_ref().map(|p| oracle_report(p, global.max_cosets));
    let mut contradiction = oracle.as_ref().is_some_and(|o| !o.consistent);
    if let (CertifyOutcome::Certified(cert), Some(o), Some(p)) =
        (&outcome, &oracle, &job.presentation)
    {
        // A certificate says G_n(w) is infinite from n_min on; a closed
        // coset table at such an n contradicts it.
        if p.n() >= cert.n_min
            && matches!(o.enumeration, EnumerationOutcome::Completed { .. })
        {
            contradiction = true;
        }
    }
    LineResult { line_no: job.line_no, outcome, oracle, contradiction }
}

fn record(r: &LineResult) -> LineRecord<'_> {
    let (certified, certificate, no_certificate) = match &r.outcome {
        CertifyOutcome::Certified(c) => (true, Some(c), None),
        CertifyOutcome::NoCertificate(n) => (false, None, Some(n)),
    };
    LineRecord {
        line: r.line_no,
        certified,
        certificate,
        no_certificate,
        oracle: r.oracle.as_ref(),
        contradiction: r.contradiction,
    }
}

fn line_text(r: &LineResult) -> String {
    let mut out = String::new();
    let (word, verdict) = match &r.outcome {
        CertifyOutcome::Certified(c) => {
            (c.word.as_str(), format!("infinite for n >= {} ({})", c.n_min, c.theorem))
        }
        CertifyOutcome::NoCertificate(n) => (n.word.as_str(), "no certificate".to_string()),
    };
    let _ = write!(out, "line {}: {word} | {verdict}", r.line_no);
    if let Some(o) = &r.oracle {
        let enumeration = match o.enumeration {
            EnumerationOutcome::Completed { cosets } => format!("completed with {cosets} cosets"),
            EnumerationOutcome::Overflow { .. } => "overflow".to_string(),
        };
        let _ = write!(out, " | G_{}: {enumeration}, ab order {}", o.n, o.order_by_smith);
    }
    let _ = writeln!(out, " | {}", if r.contradiction { "CONTRADICTION" } else { "ok" });
    out
}
