//! Plain-text rendering. The JSON side is plain serde; these functions
//! exist so the default output reads well in a terminal.

use std::fmt::Write as _;

use cycpres::{
    AnalysisReport, Assumption, Certificate, CheckRecord, NoCertificate, PairOutcome,
};

use crate::OracleReport;

pub fn outcome_label(outcome: &PairOutcome) -> String {
    match outcome {
        PairOutcome::CertifiedNonExceptional => "certified non-exceptional".into(),
        PairOutcome::FormMatch(w) => {
            let form = if w.is_form_i() { "I" } else { "II" };
            format!("decomposition found (form {form})")
        }
        PairOutcome::Inconclusive { reason } => format!("inconclusive ({reason:?})"),
    }
}

fn push_checks(out: &mut String, checks: &[CheckRecord]) {
    for c in checks {
        let _ = writeln!(
            out,
            "check {}: {} [max_exponent={}, cancellation_budget={}]",
            c.pair,
            outcome_label(&c.outcome),
            c.search_params.max_exponent,
            c.search_params.cancellation_budget,
        );
    }
}

fn assumption_label(a: &Assumption) -> String {
    match a {
        Assumption::NonExceptionalPair { y1, y2, justification } => {
            let set = |v: &[u32]| {
                v.iter().map(|i| format!("x{i}")).collect::<Vec<_>>().join(",")
            };
            let mut s = format!("pair ({{{}}},{{{}}}) non-exceptional", set(y1), set(y2));
            if let Some(j) = justification {
                let _ = write!(s, " ({j})");
            }
            s
        }
        Assumption::TripleIntersectionTrivial { justification } => {
            let mut s = "triple intersections trivial".to_string();
            if let Some(j) = justification {
                let _ = write!(s, " ({j})");
            }
            s
        }
    }
}

pub fn certificate(c: &Certificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "word: {}", c.word);
    let _ = writeln!(out, "k: {}", c.k);
    let _ = writeln!(out, "theorem: {}", c.theorem);
    if let Some(t) = c.t {
        let _ = writeln!(out, "t: {t}");
    }
    let _ = writeln!(out, "n_min: {}", c.n_min);
    push_checks(&mut out, &c.checks);
    for a in &c.assumptions {
        let _ = writeln!(out, "assumption: {}", assumption_label(a));
    }
    for n in &c.notes {
        let _ = writeln!(out, "note: {n}");
    }
    let _ = writeln!(out, "conclusion: {}", c.conclusion);
    out
}

pub fn no_certificate(r: &NoCertificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "word: {}", r.word);
    let _ = writeln!(out, "k: {}", r.k);
    push_checks(&mut out, &r.checks);
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    let _ = writeln!(out, "conclusion: {}", r.conclusion);
    out
}

pub fn analysis(report: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "word: {}", report.word);
    let _ = writeln!(out, "k: {}", report.k);
    let _ = writeln!(out, "involves all generators: {}", report.involves_all_generators);
    let _ = writeln!(out, "smallest admissible width: {}", report.min_window_width);
    for cand in &report.purity.candidates {
        let status = if cand.achieved { "achieved" } else { "failed" };
        let _ = writeln!(out, "width t={}: {status}", cand.t);
        for p in &cand.pairs {
            let how = match (p.positive, p.assumed) {
                (true, true) => "assumed",
                (true, false) => "certified",
                _ => "unsettled",
            };
            let _ = writeln!(out, "  pair {}: {how}", p.pair);
        }
    }
    match report.purity.certified_t {
        Some(t) => {
            let _ = writeln!(out, "purity certified at t={t}");
        }
        None => {
            let _ = writeln!(out, "purity not certified at any width");
        }
    }
    push_checks(&mut out, &report.checks);
    out
}

pub fn oracle(r: &OracleReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "presentation: G_{}({})", r.n, r.word);
    let _ = writeln!(out, "abelian invariants: {}", r.invariants.join(", "));
    let _ = writeln!(out, "abelian order (smith): {}", r.order_by_smith);
    let _ = writeln!(out, "abelian order (resultant): {}", r.order_by_resultant);
    let enumeration = match r.enumeration {
        cycpres::EnumerationOutcome::Completed { cosets } => format!("completed, {cosets} cosets"),
        cycpres::EnumerationOutcome::Overflow { max_cosets } => {
            format!("overflow past {max_cosets} cosets")
        }
    };
    let _ = writeln!(out, "enumeration ({}): {enumeration}", r.strategy);
    let _ = writeln!(out, "consistent: {}", r.consistent);
    out
}
