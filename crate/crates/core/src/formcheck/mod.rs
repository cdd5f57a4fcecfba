//! The two-form decomposition test on a pair of Magnus subgroups.
//!
//! For Magnus subsets `Y1`, `Y2` of a one-relator group, the intersection
//! `<Y1> cap <Y2>` can only be exceptional (one extra infinite cyclic free
//! factor beyond `<Y1 cap Y2>`) if the relator, up to rotation and
//! inversion, decomposes in one of two shapes:
//!
//! - form I: `w1^a1 w2^b1 ... w1^al w2^bl` with `w1` over `Y1`, `w2` over
//!   `Y2`;
//! - form II: `w3^a1 (v1 v2)^b1 ... w3^al (v1 v2)^bl` with `w3` over
//!   `Y1 cap Y2`, `v1` over `Y1`, `v2` over `Y2`.
//!
//! This is a necessary condition only: a match ([`PairOutcome::FormMatch`])
//! says nothing either way, while an exhaustive refutation of both forms
//! certifies the intersection non-exceptional. Searches are bounded by the
//! parameters recorded in every verdict; with cancellation budget 0 the
//! decomposition must spell the relator letter for letter.

mod brute;
mod search;

pub use brute::{brute_force_oracle, DEFAULT_BRUTE_MAX_LEN};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freeword::{CyclicWord, Letter, Word};
use crate::presentation::{MagnusSubset, OneRelatorSpec};

/// A pair of distinct Magnus subsets over the same one-relator span.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MagnusPair {
    spec: OneRelatorSpec,
    y1: MagnusSubset,
    y2: MagnusSubset,
}

impl MagnusPair {
    pub fn new(spec: OneRelatorSpec, y1: MagnusSubset, y2: MagnusSubset) -> Result<MagnusPair> {
        if y1.alphabet_k() != spec.k() || y2.alphabet_k() != spec.k() {
            return Err(Error::NotMagnus("pair subsets come from a different span".into()));
        }
        if y1 == y2 {
            return Err(Error::NotMagnus("the two subsets of a pair must differ".into()));
        }
        Ok(MagnusPair { spec, y1, y2 })
    }

    /// Convenience constructor from raw index lists.
    pub fn from_indices(
        spec: &OneRelatorSpec,
        y1: impl IntoIterator<Item = u32>,
        y2: impl IntoIterator<Item = u32>,
    ) -> Result<MagnusPair> {
        let a = MagnusSubset::from_indices(spec, y1)?;
        let b = MagnusSubset::from_indices(spec, y2)?;
        MagnusPair::new(spec.clone(), a, b)
    }

    pub fn spec(&self) -> &OneRelatorSpec {
        &self.spec
    }

    pub fn relator(&self) -> &CyclicWord {
        self.spec.relator()
    }

    pub fn y1(&self) -> &MagnusSubset {
        &self.y1
    }

    pub fn y2(&self) -> &MagnusSubset {
        &self.y2
    }

    /// The same pair with the roles of `Y1` and `Y2` exchanged.
    pub fn swapped(&self) -> MagnusPair {
        MagnusPair { spec: self.spec.clone(), y1: self.y2.clone(), y2: self.y1.clone() }
    }

    /// Letter classification by generator index, indexed `0..=k`.
    pub(crate) fn class_table(&self) -> Vec<LetterClass> {
        (0..=self.spec.k())
            .map(|i| {
                let g = crate::freeword::GenIndex(i);
                match (self.y1.contains(g), self.y2.contains(g)) {
                    (true, false) => LetterClass::AnchorA,
                    (false, true) => LetterClass::AnchorB,
                    (true, true) => LetterClass::Flexible,
                    (false, false) => LetterClass::Outside,
                }
            })
            .collect()
    }
}

impl fmt::Display for MagnusPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.y1, self.y2)
    }
}

/// Classification of a relator letter relative to a pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LetterClass {
    /// Index in `Y1 \ Y2`: must land in a `Y1`-side component.
    AnchorA,
    /// Index in `Y2 \ Y1`: must land in a `Y2`-side component.
    AnchorB,
    /// Index in `Y1 cap Y2`: may land on either side.
    Flexible,
    /// Index in neither subset: no decomposition can place it.
    Outside,
}

impl LetterClass {
    pub fn allowed_in_y1(self) -> bool {
        matches!(self, LetterClass::AnchorA | LetterClass::Flexible)
    }

    pub fn allowed_in_y2(self) -> bool {
        matches!(self, LetterClass::AnchorB | LetterClass::Flexible)
    }
}

/// A maximal run of same-class anchor letters in the relator's designated
/// spelling.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AnchorBlock {
    pub class: LetterClass,
    pub start: usize,
    pub len: usize,
}

/// The anchor/flexible skeleton of a relator relative to a pair: any
/// decomposition must cover each anchor block on its own side, with the
/// flexible letters between blocks free to split either way.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlternationSkeleton {
    pub classes: Vec<LetterClass>,
    pub blocks: Vec<AnchorBlock>,
    pub has_outside: bool,
}

/// Classifies the relator's letters and collects the anchor blocks.
///
/// Fails with [`Error::DegeneratePair`] when every letter lies inside one
/// of the two subsets (the relator then sits inside a single Magnus
/// subgroup and the alternation analysis does not apply).
pub fn syllable_factorize(pair: &MagnusPair) -> Result<AlternationSkeleton> {
    let table = pair.class_table();
    let letters = pair.relator().letters();
    let classes: Vec<LetterClass> =
        letters.iter().map(|l| table[l.index.0 as usize]).collect();
    let inside_y1 = classes.iter().all(|c| c.allowed_in_y1());
    let inside_y2 = classes.iter().all(|c| c.allowed_in_y2());
    if inside_y1 || inside_y2 {
        return Err(Error::DegeneratePair);
    }
    let mut blocks: Vec<AnchorBlock> = Vec::new();
    for (i, &c) in classes.iter().enumerate() {
        if !matches!(c, LetterClass::AnchorA | LetterClass::AnchorB) {
            continue;
        }
        match blocks.last_mut() {
            Some(b) if b.class == c && b.start + b.len == i => b.len += 1,
            _ => blocks.push(AnchorBlock { class: c, start: i, len: 1 }),
        }
    }
    let has_outside = classes.iter().any(|c| matches!(c, LetterClass::Outside));
    Ok(AlternationSkeleton { classes, blocks, has_outside })
}

/// User-facing search knobs; `max_exponent` defaults to the relator length.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct SearchConfig {
    pub max_exponent: Option<u32>,
    pub cancellation_budget: u32,
}

impl SearchConfig {
    pub fn resolve(&self, relator_len: usize) -> SearchParams {
        SearchParams {
            max_exponent: self.max_exponent.unwrap_or(relator_len as u32),
            cancellation_budget: self.cancellation_budget,
        }
    }
}

/// The effective bounds a verdict was computed under.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SearchParams {
    pub max_exponent: u32,
    pub cancellation_budget: u32,
}

/// A decomposition matching one of the two forms, pinned to a designated
/// rotation: expanding the components with the exponents and freely
/// reducing reproduces `rotate(relator^(+-1), rotation_offset)` exactly.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "form")]
pub enum FormWitness {
    I {
        rotation_offset: usize,
        inverted: bool,
        w1: Word,
        w2: Word,
        exponents: Vec<(i64, i64)>,
    },
    II {
        rotation_offset: usize,
        inverted: bool,
        w3: Word,
        v1: Word,
        v2: Word,
        exponents: Vec<(i64, i64)>,
    },
}

impl FormWitness {
    pub fn is_form_i(&self) -> bool {
        matches!(self, FormWitness::I { .. })
    }

    pub fn rotation_offset(&self) -> usize {
        match self {
            FormWitness::I { rotation_offset, .. } | FormWitness::II { rotation_offset, .. } => {
                *rotation_offset
            }
        }
    }

    pub fn inverted(&self) -> bool {
        match self {
            FormWitness::I { inverted, .. } | FormWitness::II { inverted, .. } => *inverted,
        }
    }

    pub fn exponents(&self) -> &[(i64, i64)] {
        match self {
            FormWitness::I { exponents, .. } | FormWitness::II { exponents, .. } => exponents,
        }
    }

    /// Sum of the component lengths (the tie-break weight).
    pub fn total_component_len(&self) -> usize {
        match self {
            FormWitness::I { w1, w2, .. } => w1.len() + w2.len(),
            FormWitness::II { w3, v1, v2, .. } => w3.len() + v1.len() + v2.len(),
        }
    }

    /// Writes the alternating product out and freely reduces it.
    pub fn expand(&self) -> Word {
        let mut out = Word::empty();
        match self {
            FormWitness::I { w1, w2, exponents, .. } => {
                for &(a, b) in exponents {
                    out = out.concat(&w1.power(a)).concat(&w2.power(b));
                }
            }
            FormWitness::II { w3, v1, v2, exponents, .. } => {
                let unit = v1.concat(v2);
                for &(a, b) in exponents {
                    out = out.concat(&w3.power(a)).concat(&unit.power(b));
                }
            }
        }
        out
    }

    /// The rotation of `relator` (or its inverse) this witness spells.
    pub fn designated_rotation(&self, relator: &CyclicWord) -> Word {
        let base = if self.inverted() { relator.inverse() } else { relator.clone() };
        base.rotated(self.rotation_offset()).word().clone()
    }

    pub fn is_valid_for(&self, relator: &CyclicWord) -> bool {
        self.expand() == self.designated_rotation(relator)
    }
}

/// Why a check returned neither a match nor a refutation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InconclusiveReason {
    /// Degenerate pair: the relator lies inside one subgroup.
    RelatorInsideOneSubgroup,
    /// The internal node cap tripped before the search was exhaustive.
    SearchLimitExceeded,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairOutcome {
    /// Both forms exhaustively refuted under the recorded parameters.
    CertifiedNonExceptional,
    /// A decomposition exists; says nothing about actual exceptionality.
    FormMatch(FormWitness),
    Inconclusive { reason: InconclusiveReason },
}

/// Verdict for one Magnus pair, always carrying the bounds it was computed
/// under. `CertifiedNonExceptional` is only ever produced by a search that
/// ran to completion within those bounds.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PairVerdict {
    pub outcome: PairOutcome,
    pub search_params: SearchParams,
}

impl PairVerdict {
    /// True when the pair may be used as a non-exceptionality hypothesis.
    pub fn is_positive(&self) -> bool {
        matches!(self.outcome, PairOutcome::CertifiedNonExceptional)
    }
}

/// Result of a single-form search: the best witness under the tie-break
/// order, plus whether the enumeration ran to completion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchOutcome {
    pub witness: Option<FormWitness>,
    pub exhaustive: bool,
    pub params: SearchParams,
}

/// Searches form I only. Witnesses are minimal under
/// (total component length, rotation offset, inverted, alternation length,
/// components, exponents).
pub fn match_form_i(pair: &MagnusPair, config: &SearchConfig) -> Result<SearchOutcome> {
    let mut engine = search::Engine::new(pair, config)?;
    let (witness, exhaustive) = engine.run_form_i();
    Ok(SearchOutcome { witness, exhaustive, params: engine.params() })
}

/// Searches form II only; same tie-break order as [`match_form_i`].
pub fn match_form_ii(pair: &MagnusPair, config: &SearchConfig) -> Result<SearchOutcome> {
    let mut engine = search::Engine::new(pair, config)?;
    let (witness, exhaustive) = engine.run_form_ii();
    Ok(SearchOutcome { witness, exhaustive, params: engine.params() })
}

/// Runs both form searches and combines them into a verdict.
///
/// Form I is preferred when both match. A degenerate pair yields
/// `Inconclusive(RelatorInsideOneSubgroup)`; a tripped node cap yields
/// `Inconclusive(SearchLimitExceeded)` unless a witness was already found.
pub fn check_pair(pair: &MagnusPair, config: &SearchConfig) -> PairVerdict {
    let params = config.resolve(pair.relator().len());
    let mut engine = match search::Engine::new(pair, config) {
        Ok(e) => e,
        Err(Error::DegeneratePair) => {
            return PairVerdict {
                outcome: PairOutcome::Inconclusive {
                    reason: InconclusiveReason::RelatorInsideOneSubgroup,
                },
                search_params: params,
            }
        }
        Err(e) => unreachable!("unexpected engine construction error: {e}"),
    };
    let (witness_i, exhaustive_i) = engine.run_form_i();
    if let Some(w) = witness_i {
        debug_assert!(w.is_valid_for(pair.relator()));
        return PairVerdict { outcome: PairOutcome::FormMatch(w), search_params: params };
    }
    let (witness_ii, exhaustive_ii) = engine.run_form_ii();
    if let Some(w) = witness_ii {
        debug_assert!(w.is_valid_for(pair.relator()));
        return PairVerdict { outcome: PairOutcome::FormMatch(w), search_params: params };
    }
    if exhaustive_i && exhaustive_ii {
        PairVerdict { outcome: PairOutcome::CertifiedNonExceptional, search_params: params }
    } else {
        PairVerdict {
            outcome: PairOutcome::Inconclusive { reason: InconclusiveReason::SearchLimitExceeded },
            search_params: params,
        }
    }
}

/// Longest prefix of `u` whose letters all lie in `Y1`, longest suffix all
/// in `Y2`; `u` splits as a `Y1`-word followed by a `Y2`-word exactly when
/// the two overlap or meet.
pub(crate) fn split_point(u: &[Letter], table: &[LetterClass]) -> Option<usize> {
    let pre = u.iter().take_while(|l| table[l.index.0 as usize].allowed_in_y1()).count();
    let suf = u.iter().rev().take_while(|l| table[l.index.0 as usize].allowed_in_y2()).count();
    if pre + suf >= u.len() {
        // Minimal v1: push as much as possible into the Y2 side.
        Some(u.len() - suf)
    } else {
        None
    }
}
