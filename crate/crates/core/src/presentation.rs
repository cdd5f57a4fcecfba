//! Presentation-level structure on top of raw words: the one-relator group
//! `<x_0..x_k | w>` spanned by a relator, the cyclic family `G_n(w)` of its
//! subscript shifts, involvement gap profiles, Magnus subsets, and the
//! one-line text header (`w = ... ; n = ...`) used by the CLI and corpus
//! files.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::freeword::{cyclically_reduce, CyclicWord, GenIndex, Word};

/// A one-relator presentation `<x_0, ..., x_k | relator>` in normalized
/// span: the relator is nonempty, cyclically reduced, and involves both
/// `x_0` and `x_k` with `k >= 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OneRelatorSpec {
    k: u32,
    relator: CyclicWord,
}

impl OneRelatorSpec {
    /// Accepts a relator that is already based at `x_0`.
    pub fn new(relator: CyclicWord) -> Result<OneRelatorSpec> {
        let involved = relator.involved_indices();
        let (min, max) = match (involved.first(), involved.last()) {
            (Some(a), Some(b)) => (a.0, b.0),
            _ => return Err(Error::EmptyWord),
        };
        if min != 0 {
            return Err(Error::InvalidRelator(format!(
                "lowest involved generator is x{min}, not x0 (normalize the span first)"
            )));
        }
        if max == 0 {
            return Err(Error::InvalidRelator(
                "relator involves a single generator; distinct x_0 and x_k are required".into(),
            ));
        }
        Ok(OneRelatorSpec { k: max, relator })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn relator(&self) -> &CyclicWord {
        &self.relator
    }

    pub fn involved_indices(&self) -> BTreeSet<GenIndex> {
        self.relator.involved_indices()
    }

    /// True when every generator of the span occurs in the relator.
    pub fn involves_all_generators(&self) -> bool {
        self.relator.involved_indices().len() as u32 == self.k + 1
    }

    pub fn gap_profile(&self) -> GapProfile {
        let involved = self.involved_indices();
        let mut max_gap = 0u32;
        let mut run = 0u32;
        for i in 1..self.k {
            if involved.contains(&GenIndex(i)) {
                run = 0;
            } else {
                run += 1;
                max_gap = max_gap.max(run);
            }
        }
        GapProfile { k: self.k, involved, max_interior_gap: max_gap }
    }
}

/// Translates a cyclically reduced word so its lowest involved subscript
/// becomes 0, and returns the resulting span together with the subtracted
/// offset.
pub fn normalize_span(u: &CyclicWord) -> Result<(OneRelatorSpec, u32)> {
    let involved = u.involved_indices();
    let (min, max) = match (involved.first(), involved.last()) {
        (Some(a), Some(b)) => (a.0, b.0),
        _ => return Err(Error::EmptyWord),
    };
    // Shifting within the span never wraps: use the tight modulus.
    let shifted = u.shift_subscripts(-i64::from(min), max + 1)?;
    Ok((OneRelatorSpec::new(shifted)?, min))
}

/// Involvement summary of a normalized relator. `max_interior_gap` is the
/// length of the longest run of consecutive omitted generators strictly
/// between `x_0` and `x_k`; `g + 1` is the least window width `t` for which
/// every interior window of `t` consecutive generators meets the relator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GapProfile {
    pub k: u32,
    pub involved: BTreeSet<GenIndex>,
    pub max_interior_gap: u32,
}

impl GapProfile {
    pub fn min_window_width(&self) -> u32 {
        self.max_interior_gap + 1
    }
}

/// A Magnus subset of the span `x_0..x_k`: a set of generator indices that
/// omits at least one generator involved in the relator, so the subgroup it
/// generates in the one-relator group is free on it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MagnusSubset {
    alphabet_k: u32,
    indices: BTreeSet<GenIndex>,
}

impl MagnusSubset {
    pub fn new(spec: &OneRelatorSpec, indices: BTreeSet<GenIndex>) -> Result<MagnusSubset> {
        if let Some(out) = indices.iter().find(|g| g.0 > spec.k()) {
            return Err(Error::NotMagnus(format!(
                "index {} lies outside the span x0..x{}",
                out,
                spec.k()
            )));
        }
        if spec.involved_indices().iter().all(|g| indices.contains(g)) {
            return Err(Error::NotMagnus(
                "subset omits no generator involved in the relator".into(),
            ));
        }
        Ok(MagnusSubset { alphabet_k: spec.k(), indices })
    }

    pub fn from_indices(spec: &OneRelatorSpec, indices: impl IntoIterator<Item = u32>) -> Result<MagnusSubset> {
        MagnusSubset::new(spec, indices.into_iter().map(GenIndex).collect())
    }

    pub fn alphabet_k(&self) -> u32 {
        self.alphabet_k
    }

    pub fn indices(&self) -> &BTreeSet<GenIndex> {
        &self.indices
    }

    pub fn contains(&self, g: GenIndex) -> bool {
        self.indices.contains(&g)
    }

    pub fn index_vec(&self) -> Vec<u32> {
        self.indices.iter().map(|g| g.0).collect()
    }
}

impl fmt::Display for MagnusSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, g) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}

/// The cyclically presented group `G_n(w)`: generators `x_0..x_{n-1}`,
/// relators the `n` subscript shifts of `w`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclicPresentationSpec {
    n: u32,
    word: CyclicWord,
}

impl CyclicPresentationSpec {
    pub fn new(n: u32, word: CyclicWord) -> Result<CyclicPresentationSpec> {
        if n == 0 {
            return Err(Error::InvalidRelator("G_n(w) requires n >= 1".into()));
        }
        if let Some(g) = word.involved_indices().last() {
            if g.0 >= n {
                return Err(Error::IndexOutOfAlphabet { index: g.0, max: n - 1 });
            }
        }
        Ok(CyclicPresentationSpec { n, word })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn word(&self) -> &CyclicWord {
        &self.word
    }

    /// The `n` relators `w, w theta, ..., w theta^{n-1}` where `theta`
    /// shifts every subscript up by one modulo `n`.
    pub fn relator_family(&self) -> Vec<CyclicWord> {
        (0..self.n)
            .map(|i| {
                self.word
                    .shift_subscripts(i64::from(i), self.n)
                    .expect("indices validated at construction")
            })
            .collect()
    }
}

/// One parsed presentation line: `w = <word>` plus optional `n = <int>`,
/// with any further `;`-separated clauses handed back verbatim for the
/// caller to interpret (the CLI uses them for assumption annotations).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PresentationLine {
    pub word: Word,
    pub n: Option<u32>,
    pub extras: Vec<(String, Option<String>)>,
}

impl PresentationLine {
    /// Parses one line; returns `None` for blank lines and pure comments.
    /// `#` starts a comment anywhere in the line.
    pub fn parse_opt(line: &str) -> Result<Option<PresentationLine>> {
        let body = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        if body.trim().is_empty() {
            return Ok(None);
        }
        let mut word: Option<Word> = None;
        let mut n: Option<u32> = None;
        let mut extras = Vec::new();
        let mut clause_start = 0usize;
        for clause in body.split(';') {
            let pos_of = |offset_in_clause: usize| clause_start + offset_in_clause;
            let trimmed = clause.trim();
            if trimmed.is_empty() {
                return Err(Error::Parse {
                    position: pos_of(0),
                    message: "empty clause".into(),
                });
            }
            let lead = clause.len() - clause.trim_start().len();
            let (key, value) = match trimmed.find('=') {
                Some(eq) => (trimmed[..eq].trim_end(), Some(trimmed[eq + 1..].trim())),
                None => (trimmed, None),
            };
            match key {
                "w" => {
                    let text = value.ok_or_else(|| Error::Parse {
                        position: pos_of(lead),
                        message: "expected 'w = <word>'".into(),
                    })?;
                    if word.is_some() {
                        return Err(Error::Parse {
                            position: pos_of(lead),
                            message: "duplicate 'w' clause".into(),
                        });
                    }
                    // Re-anchor parse errors at the word text's position.
                    let word_pos = pos_of(clause.find(text).unwrap_or(lead));
                    word = Some(text.parse::<Word>().map_err(|e| match e {
                        Error::Parse { position, message } => Error::Parse {
                            position: word_pos + position,
                            message,
                        },
                        other => other,
                    })?);
                }
                "n" => {
                    let text = value.ok_or_else(|| Error::Parse {
                        position: pos_of(lead),
                        message: "expected 'n = <integer>'".into(),
                    })?;
                    if n.is_some() {
                        return Err(Error::Parse {
                            position: pos_of(lead),
                            message: "duplicate 'n' clause".into(),
                        });
                    }
                    n = Some(text.parse::<u32>().map_err(|_| Error::Parse {
                        position: pos_of(clause.find(text).unwrap_or(lead)),
                        message: format!("invalid n value {text:?}"),
                    })?);
                }
                _ => extras.push((key.to_string(), value.map(str::to_string))),
            }
            clause_start += clause.len() + 1;
        }
        let word = word.ok_or_else(|| Error::Parse {
            position: 0,
            message: "line is missing the 'w = <word>' clause".into(),
        })?;
        Ok(Some(PresentationLine { word, n, extras }))
    }

    /// Cyclically reduces the word and normalizes its span.
    pub fn normalized_spec(&self) -> Result<(OneRelatorSpec, u32)> {
        let (cyc, _) = cyclically_reduce(&self.word);
        normalize_span(&cyc)
    }
}
