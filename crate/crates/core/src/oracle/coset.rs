//! Coset enumeration for `G_n(w)` over the trivial subgroup: an HLT
//! style scan that fills relator gaps with fresh cosets and merges
//! coincidences immediately, smallest id surviving. Stale table entries
//! are never rewritten; reads resolve them through the merge forest.
//!
//! A `Completed` result is only reported once every live coset has been
//! scanned against every relator and its row is fully defined, which
//! makes the live count the exact group order.

use serde::{Deserialize, Serialize};

use crate::freeword::{Letter, Sign};
use crate::presentation::CyclicPresentationSpec;

/// Scan strategy identifier, recorded in oracle reports.
pub const ENUMERATION_STRATEGY: &str = "hlt-gap-filling";

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum EnumerationOutcome {
    /// The table closed; `cosets` is the order of the group.
    Completed { cosets: u64 },
    /// The cap on total cosets defined was hit before the table closed.
    Overflow { max_cosets: u64 },
}

impl EnumerationOutcome {
    pub fn completed(&self) -> Option<u64> {
        match self {
            EnumerationOutcome::Completed { cosets } => Some(*cosets),
            EnumerationOutcome::Overflow { .. } => None,
        }
    }
}

const UNDEF: u32 = u32::MAX;

struct Enumerator {
    width: usize,
    table: Vec<u32>,
    reps: Vec<u32>,
    live: u64,
    limit: usize,
}

fn column(l: &Letter) -> usize {
    2 * l.index.0 as usize + usize::from(l.sign == Sign::Minus)
}

impl Enumerator {
    fn new(n_gens: usize, limit: usize) -> Enumerator {
        Enumerator { width: 2 * n_gens, table: Vec::new(), reps: Vec::new(), live: 0, limit }
    }

    fn rows(&self) -> u32 {
        self.reps.len() as u32
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.reps[x as usize] != x {
            let up = self.reps[self.reps[x as usize] as usize];
            self.reps[x as usize] = up;
            x = up;
        }
        x
    }

    fn raw(&self, coset: u32, col: usize) -> u32 {
        self.table[coset as usize * self.width + col]
    }

    fn set_raw(&mut self, coset: u32, col: usize, to: u32) {
        self.table[coset as usize * self.width + col] = to;
    }

    /// Table lookup with stale targets resolved through the merge forest.
    fn get(&mut self, coset: u32, col: usize) -> Option<u32> {
        match self.raw(coset, col) {
            UNDEF => None,
            t => Some(self.find(t)),
        }
    }

    /// Records the edge in both directions.
    fn set(&mut self, a: u32, col: usize, b: u32) {
        self.set_raw(a, col, b);
        self.set_raw(b, col ^ 1, a);
    }

    fn define(&mut self) -> Option<u32> {
        if self.reps.len() >= self.limit {
            return None;
        }
        let id = self.rows();
        self.table.extend(std::iter::repeat_n(UNDEF, self.width));
        self.reps.push(id);
        self.live += 1;
        Some(id)
    }

    /// Merges the classes of `x` and `y`, queueing the coincidences the
    /// row union uncovers.
    fn coincide(&mut self, x: u32, y: u32) {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            let (x, y) = (self.find(x), self.find(y));
            if x == y {
                continue;
            }
            let (survivor, loser) = if x < y { (x, y) } else { (y, x) };
            self.reps[loser as usize] = survivor;
            self.live -= 1;
            for col in 0..self.width {
                let t = self.raw(loser, col);
                if t == UNDEF {
                    continue;
                }
                match self.raw(survivor, col) {
                    UNDEF => self.set_raw(survivor, col, t),
                    s => queue.push((s, t)),
                }
            }
        }
    }

    /// Scans one relator at `a`, defining cosets across gaps. `false`
    /// means the coset cap was hit.
    fn trace(&mut self, a: u32, r: &[usize]) -> bool {
        let m = r.len();
        let mut f = self.find(a);
        let mut i = 0;
        loop {
            while i < m {
                match self.get(f, r[i]) {
                    Some(t) => {
                        f = t;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i == m {
                let back = self.find(a);
                if f != back {
                    self.coincide(f, back);
                }
                return true;
            }
            let mut b = self.find(a);
            let mut j = m;
            while j > i + 1 {
                match self.get(b, r[j - 1] ^ 1) {
                    Some(t) => {
                        b = t;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j == i + 1 {
                // A single undefined edge; filling it closes the scan.
                self.set(f, r[i], b);
                return true;
            }
            let Some(c) = self.define() else { return false };
            self.set(f, r[i], c);
            f = c;
            i += 1;
        }
    }
}

/// Enumerates the cosets of the trivial subgroup, capping the total
/// number of cosets ever defined at `max_cosets`.
pub fn enumerate_cosets(spec: &CyclicPresentationSpec, max_cosets: u64) -> EnumerationOutcome {
    let n = spec.n() as usize;
    let relators: Vec<Vec<usize>> = spec
        .relator_family()
        .iter()
        .map(|w| w.letters().iter().map(column).collect())
        .collect();
    let limit = usize::try_from(max_cosets).unwrap_or(usize::MAX);
    let mut e = Enumerator::new(n, limit.max(1));
    e.define().expect("limit is at least one");
    let mut next = 0u32;
    loop {
        while next < e.rows() {
            if e.find(next) == next {
                for r in &relators {
                    if !e.trace(next, r) {
                        return EnumerationOutcome::Overflow { max_cosets };
                    }
                    if e.find(next) != next {
                        // The scanned coset just merged away; its
                        // survivor has already been or will be scanned.
                        break;
                    }
                }
            }
            next += 1;
        }
        // Defensive completeness pass: relator scans fill every row of a
        // genuine presentation, but a degenerate relator family (for
        // example an empty word) can leave holes that must not be
        // mistaken for a closed table.
        let mut hole = None;
        'search: for a in 0..e.rows() {
            if e.find(a) != a {
                continue;
            }
            for col in 0..e.width {
                if e.get(a, col).is_none() {
                    hole = Some((a, col));
                    break 'search;
                }
            }
        }
        match hole {
            None => return EnumerationOutcome::Completed { cosets: e.live },
            Some((a, col)) => {
                let Some(c) = e.define() else {
                    return EnumerationOutcome::Overflow { max_cosets };
                };
                e.set(a, col, c);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeword::CyclicWord;

    fn group(n: u32, w: &str) -> CyclicPresentationSpec {
        CyclicPresentationSpec::new(n, w.parse::<CyclicWord>().unwrap()).unwrap()
    }

    #[test]
    fn cyclic_group_of_order_five() {
        let out = enumerate_cosets(&group(1, "x0^5"), 1000);
        assert_eq!(out, EnumerationOutcome::Completed { cosets: 5 });
    }

    #[test]
    fn shifted_product_relators_collapse_to_order_two() {
        // x0 x1, x1 x2, x2 x0 force x1 = x0^-1, x2 = x0, x0^2 = 1.
        let out = enumerate_cosets(&group(3, "x0 x1"), 1000);
        assert_eq!(out, EnumerationOutcome::Completed { cosets: 2 });
    }

    #[test]
    fn conjugation_squaring_word_is_trivial_at_three_strands() {
        let out = enumerate_cosets(&group(3, "x0^-1 x1 x0 x1^-2"), 10_000);
        assert_eq!(out, EnumerationOutcome::Completed { cosets: 1 });
    }

    #[test]
    fn free_abelian_presentation_overflows() {
        let out = enumerate_cosets(&group(2, "x0 x1 x0^-1 x1^-1"), 200);
        assert_eq!(out, EnumerationOutcome::Overflow { max_cosets: 200 });
    }

    #[test]
    fn empty_relator_does_not_close() {
        // G_n of the empty word is free; the completeness pass must keep
        // defining rather than report a closed table.
        let out = enumerate_cosets(&group(2, "1"), 64);
        assert_eq!(out, EnumerationOutcome::Overflow { max_cosets: 64 });
    }

    #[test]
    fn serializes_with_a_status_tag() {
        let json = serde_json::to_string(&EnumerationOutcome::Completed { cosets: 5 }).unwrap();
        assert_eq!(json, "{\"status\":\"completed\",\"cosets\":5}");
    }
}
