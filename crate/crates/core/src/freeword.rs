//! Letters, freely reduced words and cyclic words over the free group on
//! generators `x0, x1, x2, ...`.
//!
//! Words are stored freely reduced: unreduced letter sequences exist only as
//! transient inputs to [`Word::reduce`]. [`CyclicWord`] additionally
//! guarantees cyclic reducedness. Equality on both types is literal;
//! rotation equivalence is a separate predicate so that callers never pay
//! for (or accidentally rely on) implicit canonicalization.
//!
//! Text form: `x0^-1 x2 x0 x2^-2` (exponents compress runs of one letter),
//! with the bare token `1` denoting the empty word.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Index of a free generator: `GenIndex(i)` names `x_i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GenIndex(pub u32);

impl fmt::Display for GenIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// Sign of a letter. `Plus` sorts before `Minus`, which fixes the letter
/// order used by canonical rotations: `x0 < x0^-1 < x1 < x1^-1 < ...`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// One occurrence of a generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub index: GenIndex,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: u32, sign: Sign) -> Letter {
        Letter { index: GenIndex(index), sign }
    }

    pub fn inverse(self) -> Letter {
        Letter { index: self.index, sign: self.sign.flip() }
    }

    /// True when `self` and `other` cancel as neighbours.
    pub fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.sign != other.sign
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "{}", self.index),
            Sign::Minus => write!(f, "{}^-1", self.index),
        }
    }
}

/// A freely reduced word. The letter sequence never contains a pair of
/// adjacent mutually inverse letters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    /// Freely reduces an arbitrary letter sequence (single stack pass).
    pub fn reduce(letters: impl IntoIterator<Item = Letter>) -> Word {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            match stack.last() {
                Some(&top) if top.cancels(l) => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        Word { letters: stack }
    }

    /// Wraps a sequence that is already reduced (contiguous slices of
    /// reduced words qualify). Debug builds verify the invariant.
    pub(crate) fn from_reduced(letters: Vec<Letter>) -> Word {
        debug_assert!(
            letters.windows(2).all(|w| !w[0].cancels(w[1])),
            "from_reduced received an unreduced sequence"
        );
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Reduced product `self * other`.
    pub fn concat(&self, other: &Word) -> Word {
        Word::reduce(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// Reduced product of `self` repeated `e` times (`e` may be negative).
    pub fn power(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..e.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Adds `shift` to every subscript modulo `n`.
    ///
    /// Every index of `self` must already lie in `0..n`.
    pub fn shift_subscripts(&self, shift: i64, n: u32) -> Result<Word> {
        let mut letters = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            if l.index.0 >= n {
                return Err(Error::IndexOutOfAlphabet { index: l.index.0, max: n - 1 });
            }
            let idx = (i64::from(l.index.0) + shift).rem_euclid(i64::from(n)) as u32;
            letters.push(Letter::new(idx, l.sign));
        }
        // Distinct indices stay distinct under a bijection of subscripts,
        // so reducedness is preserved.
        Ok(Word::from_reduced(letters))
    }

    /// The set of generator indices occurring in the word (either sign).
    pub fn involved_indices(&self) -> BTreeSet<GenIndex> {
        self.letters.iter().map(|l| l.index).collect()
    }

    /// Net exponent sum of `x_index`.
    pub fn exponent_sum(&self, index: GenIndex) -> i64 {
        self.letters.iter().filter(|l| l.index == index).map(|l| l.sign.as_i64()).sum()
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&a), Some(&b)) => self.len() == 1 || !b.cancels(a),
            _ => true,
        }
    }

    /// The primitive root: the unique `(p, m)` with `self == p^m` and `m`
    /// maximal. Requires a nonempty, cyclically reduced word, for which the
    /// free-group power decomposition coincides with literal periodicity.
    pub fn primitive_root(&self) -> Result<(Word, u32)> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        if !self.is_cyclically_reduced() {
            return Err(Error::NotCyclicallyReduced);
        }
        let (root, m) = literal_root(&self.letters);
        Ok((Word::from_reduced(root.to_vec()), m))
    }
}

/// Literal periodicity: the shortest prefix `p` of `s` with `s == p^m`.
/// Works on any letter sequence; for cyclically reduced words it agrees
/// with the free-group primitive root.
pub(crate) fn literal_root(s: &[Letter]) -> (&[Letter], u32) {
    let n = s.len();
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        if s.chunks_exact(d).all(|c| c == &s[..d]) {
            return (&s[..d], (n / d) as u32);
        }
    }
    unreachable!("d == n always divides");
}

/// A cyclically reduced word: freely reduced and, unless empty, its first
/// and last letters do not cancel.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct CyclicWord {
    base: Word,
}

impl CyclicWord {
    /// Wraps a word that is already cyclically reduced.
    pub fn new(base: Word) -> Result<CyclicWord> {
        if !base.is_cyclically_reduced() {
            return Err(Error::NotCyclicallyReduced);
        }
        Ok(CyclicWord { base })
    }

    pub fn empty() -> CyclicWord {
        CyclicWord { base: Word::empty() }
    }

    /// The designated spelling of this rotation.
    pub fn word(&self) -> &Word {
        &self.base
    }

    pub fn letters(&self) -> &[Letter] {
        self.base.letters()
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn inverse(&self) -> CyclicWord {
        CyclicWord { base: self.base.inverse() }
    }

    /// Rotation moving the letter at `offset` to the front.
    pub fn rotated(&self, offset: usize) -> CyclicWord {
        if self.is_empty() {
            return self.clone();
        }
        let s = self.base.letters();
        let o = offset % s.len();
        let mut letters = Vec::with_capacity(s.len());
        letters.extend_from_slice(&s[o..]);
        letters.extend_from_slice(&s[..o]);
        CyclicWord { base: Word::from_reduced(letters) }
    }

    /// All distinct rotations, in offset order starting from `self`.
    /// A word of period `p` has exactly `p` of them; the empty word one.
    pub fn rotations(&self) -> Vec<CyclicWord> {
        if self.is_empty() {
            return vec![self.clone()];
        }
        let (_, m) = literal_root(self.base.letters());
        let period = self.len() / m as usize;
        (0..period).map(|o| self.rotated(o)).collect()
    }

    /// The lexicographically least rotation (letter order: index, then
    /// sign with `+` before `-`). Used for hashing and deduplication;
    /// plain equality stays literal.
    pub fn canonical(&self) -> CyclicWord {
        self.rotations().into_iter().min().unwrap_or_else(CyclicWord::empty)
    }

    /// Rotation equivalence (same necklace).
    pub fn is_rotation_of(&self, other: &CyclicWord) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }

    /// Canonical form under rotation and inversion: the smaller of the two
    /// canonical rotations. This is the identity under which relators of a
    /// one-relator presentation are interchangeable.
    pub fn canonical_up_to_inversion(&self) -> CyclicWord {
        let a = self.canonical();
        let b = self.inverse().canonical();
        if a <= b { a } else { b }
    }

    pub fn involved_indices(&self) -> BTreeSet<GenIndex> {
        self.base.involved_indices()
    }

    pub fn shift_subscripts(&self, shift: i64, n: u32) -> Result<CyclicWord> {
        Ok(CyclicWord { base: self.base.shift_subscripts(shift, n)? })
    }
}

/// Peels matching conjugating letters off a word: returns `(c, g)` with
/// `u == g c g^-1`, `c` cyclically reduced and `g` the peeled prefix.
pub fn cyclically_reduce(u: &Word) -> (CyclicWord, Word) {
    let mut s = u.letters().to_vec();
    let mut prefix = Vec::new();
    while s.len() >= 2 && s[0].cancels(*s.last().unwrap()) {
        prefix.push(s[0]);
        s.pop();
        s.remove(0);
    }
    (CyclicWord { base: Word::from_reduced(s) }, Word::from_reduced(prefix))
}

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        let s = &self.letters;
        while i < s.len() {
            let mut j = i + 1;
            while j < s.len() && s[j] == s[i] {
                j += 1;
            }
            let run = (j - i) as i64;
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let e = run * s[i].sign.as_i64();
            if e == 1 {
                write!(f, "{}", s[i].index)?;
            } else {
                write!(f, "{}^{}", s[i].index, e)?;
            }
            i = j;
        }
        Ok(())
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.base.fmt(f)
    }
}

/// Parses the word grammar without reducing; exposed for callers that need
/// the written letter sequence (the parser for `Word` reduces afterwards).
pub fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    const MAX_EXPONENT_MAGNITUDE: u64 = 1_000_000;
    let err = |position: usize, message: &str| Error::Parse { position, message: message.into() };
    let b = s.as_bytes();
    let mut pos = 0;
    let mut letters = Vec::new();
    let mut term_count = 0usize;
    let mut saw_unit = false;
    while pos < b.len() {
        if b[pos].is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let term_start = pos;
        if b[pos] == b'1' {
            pos += 1;
            if pos < b.len() && !b[pos].is_ascii_whitespace() {
                return Err(err(pos, "unexpected character after '1'"));
            }
            saw_unit = true;
            term_count += 1;
            continue;
        }
        if b[pos] != b'x' {
            return Err(err(pos, "expected a term 'x<index>[^<exponent>]' or '1'"));
        }
        pos += 1;
        let digits_start = pos;
        while pos < b.len() && b[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == digits_start {
            return Err(err(pos, "expected a generator index after 'x'"));
        }
        let index: u32 = s[digits_start..pos]
            .parse()
            .map_err(|_| err(digits_start, "generator index out of range"))?;
        let mut sign = Sign::Plus;
        let mut magnitude: u64 = 1;
        if pos < b.len() && b[pos] == b'^' {
            pos += 1;
            let exp_start = pos;
            if pos < b.len() && b[pos] == b'-' {
                sign = Sign::Minus;
                pos += 1;
            }
            let mag_start = pos;
            while pos < b.len() && b[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == mag_start {
                return Err(err(exp_start, "expected an exponent after '^'"));
            }
            magnitude = s[mag_start..pos]
                .parse()
                .map_err(|_| err(mag_start, "exponent out of range"))?;
            if magnitude == 0 {
                return Err(err(mag_start, "exponent must be nonzero"));
            }
            if magnitude > MAX_EXPONENT_MAGNITUDE {
                return Err(err(mag_start, "exponent out of range"));
            }
        }
        if pos < b.len() && !b[pos].is_ascii_whitespace() {
            return Err(err(pos, "expected whitespace between terms"));
        }
        for _ in 0..magnitude {
            letters.push(Letter::new(index, sign));
        }
        let _ = term_start;
        term_count += 1;
    }
    if term_count == 0 {
        return Err(err(0, "empty input (write '1' for the empty word)"));
    }
    if saw_unit && term_count > 1 {
        return Err(err(0, "'1' denotes the empty word and must stand alone"));
    }
    Ok(letters)
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Ok(Word::reduce(parse_letters(s)?))
    }
}

impl FromStr for CyclicWord {
    type Err = Error;

    /// Parses and cyclically reduces (conjugator discarded).
    fn from_str(s: &str) -> Result<CyclicWord> {
        let w: Word = s.parse()?;
        Ok(cyclically_reduce(&w).0)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for CyclicWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CyclicWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        let w: Word = s.parse().map_err(serde::de::Error::custom)?;
        CyclicWord::new(w).map_err(serde::de::Error::custom)
    }
}
