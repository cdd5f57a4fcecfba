//! Infiniteness certificates for the shift family `G_n(w)` of a
//! one-relator word.
//!
//! Everything rests on non-exceptionality of specific Magnus subgroup
//! pairs of `<x_0..x_k | w>`. A pair counts as settled when the
//! decomposition search certifies it, or failing that when the caller
//! supplies a matching [`Assumption`]; checks always run first so that a
//! listed assumption is only ever consumed where the search could not
//! decide. Four rules produce a bound `n_min` with
//! `G_n(w)` infinite for all `n >= n_min`:
//!
//! - `full_involvement`: every generator of the span occurs in the
//!   relator and the base pair is settled; `n_min = 2(k+1)`;
//! - `purity`: the width-`t` pair family is settled; `n_min = 2k + 2t`;
//! - `base_pair`: the base pair alone is settled; `n_min = 4k`;
//! - `triple_intersection`: the caller asserts that triple intersections
//!   of Magnus subgroups are trivial; `n_min = 4k`.
//!
//! The smallest bound wins, ties resolved in the order above. Output is
//! deterministic byte for byte: the relator is first rotated to its
//! canonical spelling, and every collection serializes in evaluation
//! order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formcheck::{
    check_pair, MagnusPair, PairOutcome, SearchConfig, SearchParams,
};
use crate::presentation::OneRelatorSpec;

/// A hypothesis supplied by the caller rather than established by the
/// search. Certificates list exactly the assumptions they consumed.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Assumption {
    /// The named Magnus pair has a non-exceptional intersection.
    NonExceptionalPair {
        y1: Vec<u32>,
        y2: Vec<u32>,
        #[serde(skip_serializing_if = "Option::is_none")]
        justification: Option<String>,
    },
    /// Every triple intersection of Magnus subgroups is trivial.
    TripleIntersectionTrivial {
        #[serde(skip_serializing_if = "Option::is_none")]
        justification: Option<String>,
    },
}

impl Assumption {
    pub fn non_exceptional_pair(
        y1: impl IntoIterator<Item = u32>,
        y2: impl IntoIterator<Item = u32>,
        justification: Option<String>,
    ) -> Assumption {
        let norm = |it: &mut dyn Iterator<Item = u32>| {
            let set: BTreeSet<u32> = it.collect();
            set.into_iter().collect::<Vec<u32>>()
        };
        Assumption::NonExceptionalPair {
            y1: norm(&mut y1.into_iter()),
            y2: norm(&mut y2.into_iter()),
            justification,
        }
    }

    pub fn triple_intersection_trivial(justification: Option<String>) -> Assumption {
        Assumption::TripleIntersectionTrivial { justification }
    }

    /// Whether this assumption settles the given pair; subsets match as
    /// an unordered pair of index sets.
    pub fn matches_pair(&self, pair: &MagnusPair) -> bool {
        match self {
            Assumption::NonExceptionalPair { y1, y2, .. } => {
                let a = pair.y1().index_vec();
                let b = pair.y2().index_vec();
                (*y1 == a && *y2 == b) || (*y1 == b && *y2 == a)
            }
            Assumption::TripleIntersectionTrivial { .. } => false,
        }
    }
}

/// Parses assumption clauses out of the free-form extras of a corpus
/// line: `assume-nonexceptional = i,j,...|p,q,...[: justification]` and
/// `assume-triple-trivial[: justification]`. Any other key is an error.
pub fn assumptions_from_extras(extras: &[(String, Option<String>)]) -> Result<Vec<Assumption>> {
    let mut out = Vec::new();
    for (key, value) in extras {
        let (base, key_just) = match key.find(':') {
            Some(i) => (key[..i].trim_end(), Some(key[i + 1..].trim())),
            None => (key.as_str(), None),
        };
        match base {
            "assume-nonexceptional" => {
                let text = value.as_deref().ok_or_else(|| Error::Parse {
                    position: 0,
                    message:
                        "expected 'assume-nonexceptional = i,j,...|p,q,...[: justification]'"
                            .into(),
                })?;
                let (sets, just) = match text.find(':') {
                    Some(i) => (&text[..i], Some(text[i + 1..].trim().to_string())),
                    None => (text, None),
                };
                let mut sides = sets.split('|');
                let (Some(lhs), Some(rhs), None) = (sides.next(), sides.next(), sides.next())
                else {
                    return Err(Error::Parse {
                        position: 0,
                        message: format!(
                            "assume-nonexceptional needs exactly two '|'-separated index lists, got {sets:?}"
                        ),
                    });
                };
                let parse_side = |side: &str| -> Result<Vec<u32>> {
                    side.split(',')
                        .map(|tok| {
                            tok.trim().parse::<u32>().map_err(|_| Error::Parse {
                                position: 0,
                                message: format!("invalid generator index {:?}", tok.trim()),
                            })
                        })
                        .collect()
                };
                out.push(Assumption::non_exceptional_pair(
                    parse_side(lhs)?,
                    parse_side(rhs)?,
                    just.filter(|s| !s.is_empty()),
                ));
            }
            "assume-triple-trivial" => {
                if value.is_some() {
                    return Err(Error::Parse {
                        position: 0,
                        message: "assume-triple-trivial takes no '=' value".into(),
                    });
                }
                out.push(Assumption::triple_intersection_trivial(
                    key_just.map(str::to_string).filter(|s| !s.is_empty()),
                ));
            }
            other => {
                return Err(Error::Parse {
                    position: 0,
                    message: format!("unknown clause {other:?}"),
                });
            }
        }
    }
    Ok(out)
}

/// One pair check as it appears in reports and certificates.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub pair: String,
    pub outcome: PairOutcome,
    pub search_params: SearchParams,
}

/// How a required pair ended up settled (or not).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Support {
    Certified,
    Assumed(usize),
    Failed,
}

impl Support {
    fn settled(self) -> bool {
        !matches!(self, Support::Failed)
    }
}

/// Runs pair checks at most once per subset pair, keeping records in
/// first-evaluation order.
struct Evaluator<'a> {
    config: &'a SearchConfig,
    assumptions: &'a [Assumption],
    cache: BTreeMap<(Vec<u32>, Vec<u32>), Support>,
    checks: Vec<CheckRecord>,
}

impl<'a> Evaluator<'a> {
    fn new(config: &'a SearchConfig, assumptions: &'a [Assumption]) -> Evaluator<'a> {
        Evaluator { config, assumptions, cache: BTreeMap::new(), checks: Vec::new() }
    }

    fn support(&mut self, pair: &MagnusPair) -> Support {
        let key = (pair.y1().index_vec(), pair.y2().index_vec());
        if let Some(s) = self.cache.get(&key) {
            return *s;
        }
        let verdict = check_pair(pair, self.config);
        let support = if verdict.is_positive() {
            Support::Certified
        } else {
            match self.assumptions.iter().position(|a| a.matches_pair(pair)) {
                Some(i) => Support::Assumed(i),
                None => Support::Failed,
            }
        };
        self.checks.push(CheckRecord {
            pair: pair.to_string(),
            outcome: verdict.outcome,
            search_params: verdict.search_params,
        });
        self.cache.insert(key, support);
        support
    }
}

/// The base pair: omit the top generator on one side, the bottom on the
/// other.
fn base_pair(spec: &OneRelatorSpec) -> MagnusPair {
    let k = spec.k();
    MagnusPair::from_indices(spec, 0..k, 1..=k)
        .expect("base subsets omit an involved generator by construction")
}

/// The pair family a width-`t` certificate has to settle: the base pair,
/// then for each interior window of width `t` the pair of its complement
/// against each base subset.
///
/// Fails with [`Error::Condition3Violated`] when some interior window of
/// width `t` misses every involved generator (the window complement would
/// not be a Magnus subset).
pub fn required_pairs(spec: &OneRelatorSpec, t: u32) -> Result<Vec<MagnusPair>> {
    let k = spec.k();
    debug_assert!(t >= 1 && t <= k, "window width {t} out of range for k = {k}");
    if t < spec.gap_profile().min_window_width() {
        let involved: Vec<u32> = spec.involved_indices().iter().map(|g| g.0).collect();
        for w in involved.windows(2) {
            if w[1] - w[0] > t {
                return Err(Error::Condition3Violated { start: w[0] + 1, end: w[0] + t });
            }
        }
        unreachable!("a gap of width >= t exists whenever t < g + 1");
    }
    let m_k: Vec<u32> = (0..k).collect();
    let m_0: Vec<u32> = (1..=k).collect();
    let mut out = vec![base_pair(spec)];
    for i in 1..=k.saturating_sub(t) {
        let x: Vec<u32> = (0..i).chain(i + t..=k).collect();
        out.push(MagnusPair::from_indices(spec, x.clone(), m_0.iter().copied())?);
        out.push(MagnusPair::from_indices(spec, x, m_k.iter().copied())?);
    }
    Ok(out)
}

/// Status of one required pair inside a purity candidate.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PairStatus {
    pub pair: String,
    pub positive: bool,
    pub assumed: bool,
}

/// One candidate window width with the fate of each required pair.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PurityCandidate {
    pub t: u32,
    pub pairs: Vec<PairStatus>,
    pub achieved: bool,
}

/// Outcome of scanning window widths from the structural minimum up to
/// `k`; `certified_t` is the smallest achieved width.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PurityReport {
    pub min_window_width: u32,
    pub candidates: Vec<PurityCandidate>,
    pub certified_t: Option<u32>,
}

fn purity_scan(
    spec: &OneRelatorSpec,
    eval: &mut Evaluator<'_>,
    stop_at_first_success: bool,
) -> PurityReport {
    let min_width = spec.gap_profile().min_window_width();
    let mut candidates = Vec::new();
    let mut certified_t = None;
    for t in min_width..=spec.k() {
        let pairs = required_pairs(spec, t).expect("width is at least the structural minimum");
        let mut statuses = Vec::with_capacity(pairs.len());
        let mut achieved = true;
        for p in &pairs {
            let s = eval.support(p);
            statuses.push(PairStatus {
                pair: p.to_string(),
                positive: s.settled(),
                assumed: matches!(s, Support::Assumed(_)),
            });
            achieved &= s.settled();
        }
        candidates.push(PurityCandidate { t, pairs: statuses, achieved });
        if achieved && certified_t.is_none() {
            certified_t = Some(t);
            if stop_at_first_success {
                break;
            }
        }
    }
    PurityReport { min_window_width: min_width, candidates, certified_t }
}

/// Standalone purity analysis over every admissible window width.
pub fn analyze_purity(
    spec: &OneRelatorSpec,
    assumptions: &[Assumption],
    config: &SearchConfig,
) -> PurityReport {
    let spec = canonical_spec(spec);
    let mut eval = Evaluator::new(config, assumptions);
    purity_scan(&spec, &mut eval, false)
}

/// Full diagnostic sweep: base pair plus every purity candidate, with all
/// pair verdicts in evaluation order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub word: String,
    pub k: u32,
    pub involves_all_generators: bool,
    pub min_window_width: u32,
    pub purity: PurityReport,
    pub checks: Vec<CheckRecord>,
}

pub fn analyze(
    spec: &OneRelatorSpec,
    assumptions: &[Assumption],
    config: &SearchConfig,
) -> AnalysisReport {
    let spec = canonical_spec(spec);
    let mut eval = Evaluator::new(config, assumptions);
    eval.support(&base_pair(&spec));
    let purity = purity_scan(&spec, &mut eval, false);
    AnalysisReport {
        word: spec.relator().to_string(),
        k: spec.k(),
        involves_all_generators: spec.involves_all_generators(),
        min_window_width: purity.min_window_width,
        purity,
        checks: eval.checks,
    }
}

/// Which rule issued a certificate.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremTag {
    FullInvolvement,
    Purity,
    BasePair,
    TripleIntersection,
}

impl TheoremTag {
    fn rank(self) -> u8 {
        match self {
            TheoremTag::FullInvolvement => 0,
            TheoremTag::Purity => 1,
            TheoremTag::BasePair => 2,
            TheoremTag::TripleIntersection => 3,
        }
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoremTag::FullInvolvement => "full_involvement",
            TheoremTag::Purity => "purity",
            TheoremTag::BasePair => "base_pair",
            TheoremTag::TripleIntersection => "triple_intersection",
        };
        f.write_str(s)
    }
}

/// A claim `G_n(w) is infinite for all n >= n_min`, with the checks and
/// assumptions that back it. Field order is the serialization contract.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub word: String,
    pub k: u32,
    pub theorem: TheoremTag,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    pub n_min: u32,
    pub checks: Vec<CheckRecord>,
    pub assumptions: Vec<Assumption>,
    pub notes: Vec<String>,
    pub conclusion: String,
}

/// The failed counterpart: what was tried, and that nothing applied.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NoCertificate {
    pub word: String,
    pub k: u32,
    pub checks: Vec<CheckRecord>,
    pub assumptions: Vec<Assumption>,
    pub notes: Vec<String>,
    pub conclusion: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CertifyOutcome {
    Certified(Certificate),
    NoCertificate(NoCertificate),
}

impl CertifyOutcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            CertifyOutcome::Certified(c) => Some(c),
            CertifyOutcome::NoCertificate(_) => None,
        }
    }
}

struct Candidate {
    tag: TheoremTag,
    n_min: u32,
    t: Option<u32>,
    consumed: BTreeSet<usize>,
}

/// Applies the four rules and returns the best certificate, or a report
/// of everything that was tried.
pub fn certify(
    spec: &OneRelatorSpec,
    assumptions: &[Assumption],
    config: &SearchConfig,
) -> CertifyOutcome {
    let spec = canonical_spec(spec);
    let k = spec.k();
    let mut eval = Evaluator::new(config, assumptions);

    let base = base_pair(&spec);
    let base_support = eval.support(&base);
    let purity = purity_scan(&spec, &mut eval, true);

    let consumed_of = |s: Support| -> BTreeSet<usize> {
        match s {
            Support::Assumed(i) => BTreeSet::from([i]),
            _ => BTreeSet::new(),
        }
    };

    let mut candidates: Vec<Candidate> = Vec::new();
    if spec.involves_all_generators() && base_support.settled() {
        candidates.push(Candidate {
            tag: TheoremTag::FullInvolvement,
            n_min: 2 * (k + 1),
            t: None,
            consumed: consumed_of(base_support),
        });
    }
    if let Some(t) = purity.certified_t {
        let mut consumed = BTreeSet::new();
        for p in required_pairs(&spec, t).expect("certified width stays admissible") {
            if let Support::Assumed(i) = eval.support(&p) {
                consumed.insert(i);
            }
        }
        candidates.push(Candidate { tag: TheoremTag::Purity, n_min: 2 * k + 2 * t, t: Some(t), consumed });
    }
    if base_support.settled() {
        candidates.push(Candidate {
            tag: TheoremTag::BasePair,
            n_min: 4 * k,
            t: None,
            consumed: consumed_of(base_support),
        });
    }
    if let Some(i) = assumptions
        .iter()
        .position(|a| matches!(a, Assumption::TripleIntersectionTrivial { .. }))
    {
        candidates.push(Candidate {
            tag: TheoremTag::TripleIntersection,
            n_min: 4 * k,
            t: None,
            consumed: BTreeSet::from([i]),
        });
    }

    let word = spec.relator().to_string();
    let Some(winner) = candidates.into_iter().min_by_key(|c| (c.n_min, c.tag.rank())) else {
        return CertifyOutcome::NoCertificate(NoCertificate {
            word,
            k,
            checks: eval.checks,
            assumptions: Vec::new(),
            notes: vec![
                "the base pair was not certified non-exceptional and no applicable assumption was supplied".into(),
            ],
            conclusion: "no certificate: every rule failed under the given parameters and assumptions".into(),
        });
    };

    let mut notes = Vec::new();
    if winner.tag == TheoremTag::Purity && winner.t.is_some_and(|t| t < k) {
        notes.push(format!(
            "width {} uses window-complement pairs in addition to the base pair",
            winner.t.unwrap()
        ));
    }
    if matches!(winner.tag, TheoremTag::BasePair | TheoremTag::TripleIntersection) {
        notes.push(
            "the 4k bound is conservative; full involvement or certified purity would lower it"
                .into(),
        );
    }
    let conclusion = format!("G_n({word}) is infinite for all n >= {}.", winner.n_min);
    CertifyOutcome::Certified(Certificate {
        word,
        k,
        theorem: winner.tag,
        t: winner.t,
        n_min: winner.n_min,
        checks: eval.checks,
        assumptions: winner.consumed.into_iter().map(|i| assumptions[i].clone()).collect(),
        notes,
        conclusion,
    })
}

/// Rotates the relator to its canonical spelling so that equal cyclic
/// words produce byte-identical reports.
fn canonical_spec(spec: &OneRelatorSpec) -> OneRelatorSpec {
    OneRelatorSpec::new(spec.relator().canonical())
        .expect("canonical rotation preserves the span")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeword::CyclicWord;

    fn spec(s: &str) -> OneRelatorSpec {
        OneRelatorSpec::new(s.parse::<CyclicWord>().unwrap()).unwrap()
    }

    #[test]
    fn required_pairs_enumerate_window_complements() {
        let sp = spec("x1^-1 x0^-1 x2 x0 x1 x2^-2");
        let t1: Vec<String> =
            required_pairs(&sp, 1).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(
            t1,
            vec![
                "({x0,x1},{x1,x2})".to_string(),
                "({x0,x2},{x1,x2})".to_string(),
                "({x0,x2},{x0,x1})".to_string(),
            ]
        );
        let t2: Vec<String> =
            required_pairs(&sp, 2).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(t2, vec!["({x0,x1},{x1,x2})".to_string()]);
    }

    #[test]
    fn narrow_windows_violate_the_gap_condition() {
        let sp = spec("x0 x4");
        // Gap between x0 and x4 spans indices 1..=3, so widths below 4
        // leave an involved-free window.
        let err = required_pairs(&sp, 2).unwrap_err();
        assert!(matches!(err, Error::Condition3Violated { start: 1, end: 2 }));
        assert!(required_pairs(&sp, 4).is_ok());
    }

    #[test]
    fn higman_words_get_no_certificate() {
        for w in ["x0^-1 x1 x0 x1^-2", "x0^-1 x2 x0 x2^-2", "x0^-1 x3 x0 x3^-2"] {
            let out = certify(&spec(w), &[], &SearchConfig::default());
            let CertifyOutcome::NoCertificate(report) = out else {
                panic!("{w} should not certify");
            };
            assert!(matches!(
                report.checks[0].outcome,
                PairOutcome::FormMatch(_)
            ));
            assert!(report.assumptions.is_empty());
        }
    }

    #[test]
    fn pair_assumption_unlocks_full_involvement() {
        let sp = spec("x1^-1 x0^-1 x2 x0 x1 x2^-2");
        let assumptions = [
            Assumption::non_exceptional_pair([0, 1], [1, 2], Some("external argument".into())),
            // Unused; must not appear in the certificate.
            Assumption::triple_intersection_trivial(None),
        ];
        let out = certify(&sp, &assumptions, &SearchConfig::default());
        let cert = out.certificate().expect("should certify").clone();
        assert_eq!(cert.theorem, TheoremTag::FullInvolvement);
        assert_eq!(cert.n_min, 6);
        assert_eq!(cert.t, None);
        assert_eq!(cert.k, 2);
        assert_eq!(cert.assumptions, vec![assumptions[0].clone()]);
        // The width-1 scan must have checked the generalized pair and
        // recorded its match.
        let gen_check = cert
            .checks
            .iter()
            .find(|c| c.pair == "({x0,x2},{x1,x2})")
            .expect("generalized pair should be in the checks");
        assert!(matches!(gen_check.outcome, PairOutcome::FormMatch(_)));
        assert!(cert.conclusion.ends_with("is infinite for all n >= 6."));
    }

    #[test]
    fn triple_assumption_gives_the_fallback_bound() {
        let sp = spec("x2^-1 x0^-1 x1 x0 x2 x1^-2");
        let out = certify(
            &sp,
            &[Assumption::triple_intersection_trivial(Some("assumed".into()))],
            &SearchConfig::default(),
        );
        let cert = out.certificate().expect("should certify");
        assert_eq!(cert.theorem, TheoremTag::TripleIntersection);
        assert_eq!(cert.n_min, 8);
        assert_eq!(cert.t, None);
        assert_eq!(cert.assumptions.len(), 1);
        assert!(matches!(cert.checks[0].outcome, PairOutcome::FormMatch(_)));
        assert!(!cert.notes.is_empty());
    }

    #[test]
    fn certified_pairs_alone_yield_purity() {
        // Involves x0, x1, x3 but not x2, so full involvement is out; the
        // base pair certifies, widths below k fail on window pairs, and
        // purity at t = k wins the 4k tie against the bare base rule.
        let sp = spec("x0 x3 x0 x1 x0 x3");
        let out = certify(&sp, &[], &SearchConfig::default());
        let cert = out.certificate().expect("should certify").clone();
        assert_eq!(cert.theorem, TheoremTag::Purity);
        assert_eq!(cert.t, Some(3));
        assert_eq!(cert.n_min, 12);
        assert!(cert.assumptions.is_empty());
        assert_eq!(cert.checks[0].pair, "({x0,x1,x2},{x1,x2,x3})");
        assert_eq!(cert.checks[0].outcome, PairOutcome::CertifiedNonExceptional);
    }

    #[test]
    fn reports_are_deterministic_and_spelling_invariant() {
        let a = spec("x1^-1 x0^-1 x2 x0 x1 x2^-2");
        // The same cyclic word entered from a different rotation.
        let b = spec("x2 x0 x1 x2^-2 x1^-1 x0^-1");
        let assumptions = [Assumption::non_exceptional_pair([0, 1], [1, 2], None)];
        let config = SearchConfig::default();
        let ja = serde_json::to_string(&certify(&a, &assumptions, &config).certificate()).unwrap();
        let jb = serde_json::to_string(&certify(&b, &assumptions, &config).certificate()).unwrap();
        assert_eq!(ja, jb);
        let again = serde_json::to_string(&certify(&a, &assumptions, &config).certificate()).unwrap();
        assert_eq!(ja, again);
        assert!(ja.starts_with("{\"word\":\"x0 x1 x2^-2 x1^-1 x0^-1 x2\""), "json was {ja}");
    }

    #[test]
    fn analysis_reports_every_candidate_width() {
        let sp = spec("x1^-1 x0^-1 x2 x0 x1 x2^-2");
        let report = analyze(&sp, &[], &SearchConfig::default());
        assert!(report.involves_all_generators);
        assert_eq!(report.min_window_width, 1);
        assert_eq!(report.purity.certified_t, None);
        let widths: Vec<u32> = report.purity.candidates.iter().map(|c| c.t).collect();
        assert_eq!(widths, vec![1, 2]);
        assert!(!report.checks.is_empty());
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.starts_with("{\"word\":"), "json was {json}");
    }

    #[test]
    fn extras_parse_into_assumptions() {
        let extras = vec![
            ("assume-nonexceptional".to_string(), Some("2,0 | 1,2 : trusted".to_string())),
            ("assume-triple-trivial: by inspection".to_string(), None),
        ];
        let parsed = assumptions_from_extras(&extras).unwrap();
        assert_eq!(
            parsed[0],
            Assumption::non_exceptional_pair([0, 2], [1, 2], Some("trusted".into()))
        );
        assert_eq!(
            parsed[1],
            Assumption::triple_intersection_trivial(Some("by inspection".into()))
        );

        let unknown = vec![("frobnicate".to_string(), Some("1".to_string()))];
        assert!(assumptions_from_extras(&unknown).is_err());
        let malformed = vec![("assume-nonexceptional".to_string(), Some("0,1".to_string()))];
        assert!(assumptions_from_extras(&malformed).is_err());
        let bad_index =
            vec![("assume-nonexceptional".to_string(), Some("0,x|1,2".to_string()))];
        assert!(assumptions_from_extras(&bad_index).is_err());
    }

    #[test]
    fn assumption_matches_pairs_unordered() {
        let sp = spec("x1^-1 x0^-1 x2 x0 x1 x2^-2");
        let p = MagnusPair::from_indices(&sp, [0, 1], [1, 2]).unwrap();
        let a = Assumption::non_exceptional_pair([1, 2], [1, 0], None);
        assert!(a.matches_pair(&p));
        let b = Assumption::non_exceptional_pair([0, 2], [1, 2], None);
        assert!(!b.matches_pair(&p));
    }
}
