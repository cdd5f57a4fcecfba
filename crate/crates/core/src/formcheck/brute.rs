//! Exhaustive cross-check for the form searches, written as a separate
//! route on purpose: it enumerates raw block compositions of each rotation
//! and only afterwards tests candidate components read off the first block
//! of each side, with no canonical roots, no shared accumulator state and
//! no pruning beyond the letter-membership the forms themselves demand.
//! Kept honest by a hard relator-length cap instead of a node budget.

use crate::error::{Error, Result};
use crate::formcheck::{MagnusPair, SearchConfig};
use crate::freeword::Letter;

/// Relators longer than this are rejected rather than ground through; the
/// composition enumeration is exponential by design.
pub const DEFAULT_BRUTE_MAX_LEN: usize = 12;

/// Returns whether any rotation of the relator or of its inverse admits a
/// form-I or form-II decomposition under the same bounds `check_pair`
/// uses. Fails with [`Error::TooLong`] above `max_len` letters and with
/// [`Error::DegeneratePair`] when the relator sits inside one subgroup.
pub fn brute_force_oracle(
    pair: &MagnusPair,
    config: &SearchConfig,
    max_len: usize,
) -> Result<bool> {
    let rel = pair.relator();
    if rel.len() > max_len {
        return Err(Error::TooLong { len: rel.len(), max: max_len });
    }
    let params = config.resolve(rel.len());
    let y1 = pair.y1();
    let y2 = pair.y2();
    let in1 = |l: Letter| y1.contains(l.index);
    let in2 = |l: Letter| y2.contains(l.index);
    if rel.letters().iter().all(|&l| in1(l)) || rel.letters().iter().all(|&l| in2(l)) {
        return Err(Error::DegeneratePair);
    }

    let mut flexible: Vec<Letter> = Vec::new();
    for i in 0..=pair.spec().k() {
        let probe = Letter::new(i, crate::freeword::Sign::Plus);
        if in1(probe) && in2(probe) {
            flexible.push(probe);
            flexible.push(probe.inverse());
        }
    }
    let phantoms = all_reduced_words(&flexible, params.cancellation_budget);

    let ctx = Brute { in1: &in1, in2: &in2, cap: params.max_exponent, phantoms };
    for inverted in [false, true] {
        let base = if inverted { rel.inverse() } else { rel.clone() };
        for offset in 0..base.len() {
            let r = base.rotated(offset).word().letters().to_vec();
            if ctx.form_i(&r) || ctx.form_ii(&r) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

struct Brute<'a> {
    in1: &'a dyn Fn(Letter) -> bool,
    in2: &'a dyn Fn(Letter) -> bool,
    cap: u32,
    phantoms: Vec<Vec<Letter>>,
}

impl Brute<'_> {
    fn form_i(&self, r: &[Letter]) -> bool {
        let mut pieces: Vec<Vec<Letter>> = Vec::new();
        self.compose(r, 0, 0, &[], &mut pieces, &|l, side| {
            if side == 0 {
                (self.in1)(l)
            } else {
                (self.in2)(l)
            }
        }, &|pieces| self.accept_form_i(pieces))
    }

    fn form_ii(&self, r: &[Letter]) -> bool {
        // Whole relator as a power of one splittable unit, no w3 factor.
        let n = r.len();
        for ulen in (1..=n).filter(|u| n.is_multiple_of(*u)) {
            let unit = &r[..ulen];
            if !r.chunks_exact(ulen).all(|c| c == unit) {
                continue;
            }
            if (n / ulen) as u32 > self.cap {
                continue;
            }
            let back: Vec<Letter> = unit.iter().rev().map(|l| l.inverse()).collect();
            if self.splits(unit) || self.splits(&back) {
                return true;
            }
        }
        let mut pieces: Vec<Vec<Letter>> = Vec::new();
        self.compose(r, 0, 0, &[], &mut pieces, &|l, side| {
            if side == 0 {
                (self.in1)(l) && (self.in2)(l)
            } else {
                (self.in1)(l) || (self.in2)(l)
            }
        }, &|pieces| self.accept_form_ii(pieces))
    }

    /// Enumerates every cut of `r` into alternating blocks whose letters
    /// pass `allowed`, inserting a phantom word and its inverse at each
    /// junction, and hands complete compositions to `accept`.
    #[allow(clippy::too_many_arguments)]
    fn compose(
        &self,
        r: &[Letter],
        pos: usize,
        side: usize,
        in_phantom: &[Letter],
        pieces: &mut Vec<Vec<Letter>>,
        allowed: &dyn Fn(Letter, usize) -> bool,
        accept: &dyn Fn(&[Vec<Letter>]) -> bool,
    ) -> bool {
        let n = r.len();
        let inv_in: Vec<Letter> = in_phantom.iter().rev().map(|l| l.inverse()).collect();
        for end in pos + 1..=n {
            if !allowed(r[end - 1], side) {
                break;
            }
            let closing = end == n;
            let outs: &[Vec<Letter>] =
                if closing { std::slice::from_ref(&self.phantoms[0]) } else { &self.phantoms };
            for out in outs {
                if cancels_at_seam(&inv_in, &r[pos..end]) || cancels_at_seam(&r[pos..end], out) {
                    continue;
                }
                let mut content = inv_in.clone();
                content.extend_from_slice(&r[pos..end]);
                content.extend_from_slice(out);
                pieces.push(content);
                let found = if closing {
                    side == 1 && accept(pieces)
                } else {
                    self.compose(r, end, 1 - side, out, pieces, allowed, accept)
                };
                pieces.pop();
                if found {
                    return true;
                }
            }
        }
        false
    }

    fn accept_form_i(&self, pieces: &[Vec<Letter>]) -> bool {
        let side1: Vec<&Vec<Letter>> = pieces.iter().step_by(2).collect();
        let side2: Vec<&Vec<Letter>> = pieces.iter().skip(1).step_by(2).collect();
        self.some_common_component(&side1, |_| true)
            && self.some_common_component(&side2, |_| true)
    }

    fn accept_form_ii(&self, pieces: &[Vec<Letter>]) -> bool {
        let side1: Vec<&Vec<Letter>> = pieces.iter().step_by(2).collect();
        let side2: Vec<&Vec<Letter>> = pieces.iter().skip(1).step_by(2).collect();
        self.some_common_component(&side1, |_| true)
            && self.some_common_component(&side2, |u| {
                let back: Vec<Letter> = u.iter().rev().map(|l| l.inverse()).collect();
                self.splits(u) || self.splits(&back)
            })
    }

    /// Tries every divisor-length prefix of the first block as the shared
    /// component: each block must be a literal repetition of it or of its
    /// inverse, within the exponent cap, and the component itself must
    /// pass `extra`.
    fn some_common_component(
        &self,
        blocks: &[&Vec<Letter>],
        extra: impl Fn(&[Letter]) -> bool,
    ) -> bool {
        let first = blocks[0];
        for d in (1..=first.len()).filter(|d| first.len().is_multiple_of(*d)) {
            let cand = &first[..d];
            let cand_inv: Vec<Letter> = cand.iter().rev().map(|l| l.inverse()).collect();
            let fits = blocks.iter().all(|b| {
                b.len() % d == 0
                    && (b.len() / d) as u32 <= self.cap
                    && (b.chunks_exact(d).all(|c| c == cand)
                        || b.chunks_exact(d).all(|c| c == cand_inv.as_slice()))
            });
            if fits && extra(cand) {
                return true;
            }
        }
        false
    }

    /// Whether `u` is a word over `Y1` followed by a word over `Y2`.
    fn splits(&self, u: &[Letter]) -> bool {
        (0..=u.len()).any(|cut| {
            u[..cut].iter().all(|&l| (self.in1)(l)) && u[cut..].iter().all(|&l| (self.in2)(l))
        })
    }
}

fn cancels_at_seam(left: &[Letter], right: &[Letter]) -> bool {
    match (left.last(), right.first()) {
        (Some(&a), Some(&b)) => a.cancels(b),
        _ => false,
    }
}

/// Reduced words over `alphabet` of length `0..=budget`, the empty word
/// first.
fn all_reduced_words(alphabet: &[Letter], budget: u32) -> Vec<Vec<Letter>> {
    let mut out: Vec<Vec<Letter>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..budget {
        let mut next = Vec::new();
        for w in &frontier {
            for &a in alphabet {
                if w.last().is_some_and(|&last| last.cancels(a)) {
                    continue;
                }
                let mut ext = w.clone();
                ext.push(a);
                next.push(ext);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
