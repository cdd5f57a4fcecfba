//! Independent cross-checks on `G_n(w)`: the abelianization order
//! computed two unrelated ways (Smith form of the shift relation matrix,
//! and a resultant against `x^n - 1`), plus direct coset enumeration.
//! None of this shares code with the decomposition search, which is the
//! point: disagreement between any two of these means a bug.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::freeword::{CyclicWord, GenIndex};
use crate::presentation::CyclicPresentationSpec;
use crate::{Int, IntMatrix, IntPoly};

pub mod coset;
pub mod matrix;
pub mod poly;

pub use coset::{enumerate_cosets, EnumerationOutcome, ENUMERATION_STRATEGY};
pub use matrix::{determinant, smith_normal_form, Matrix};
pub use poly::{power_minus_one, resultant, sylvester, Poly};

/// Square matrix whose row `i` is `first_row` rotated right by `i`.
pub fn circulant<I: Zero + Clone>(first_row: &[I]) -> Matrix<I> {
    let n = first_row.len();
    let mut m = Matrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            *m.at_mut(i, j) = first_row[(j + n - i) % n].clone();
        }
    }
    m
}

/// Relation matrix of the abelianized `G_n(w)`: the circulant whose
/// first row holds the exponent sum of each generator in `w`.
pub fn relation_matrix(spec: &CyclicPresentationSpec) -> IntMatrix {
    let n = spec.n() as usize;
    let mut row = vec![Int::from(0); n];
    for g in spec.word().involved_indices() {
        row[g.0 as usize] = Int::from(spec.word().word().exponent_sum(g));
    }
    circulant(&row)
}

/// Invariant factor diagonal of the abelianized group.
pub fn abelian_invariants(spec: &CyclicPresentationSpec) -> Vec<Int> {
    smith_normal_form(&relation_matrix(spec))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AbelianOrder {
    Finite(Int),
    Infinite,
}

impl fmt::Display for AbelianOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbelianOrder::Finite(o) => write!(f, "{o}"),
            AbelianOrder::Infinite => f.write_str("infinite"),
        }
    }
}

/// Order of the abelianized group via the Smith form.
pub fn abelian_order(spec: &CyclicPresentationSpec) -> AbelianOrder {
    let inv = abelian_invariants(spec);
    if inv.iter().any(Zero::is_zero) {
        return AbelianOrder::Infinite;
    }
    AbelianOrder::Finite(inv.into_iter().product())
}

/// The polynomial `sum_j e_j x^j` where `e_j` is the exponent sum of
/// `x_j` in the word.
pub fn representer_polynomial(word: &CyclicWord) -> IntPoly {
    let top = word.involved_indices().last().map_or(0, |g| g.0);
    Poly::new(
        (0..=top)
            .map(|j| Int::from(word.word().exponent_sum(GenIndex(j))))
            .collect(),
    )
}

/// Order of the abelianized group via `|Res(x^n - 1, f)|`, which equals
/// the determinant of the relation matrix. Zero means infinite.
pub fn abelian_order_by_resultant(spec: &CyclicPresentationSpec) -> AbelianOrder {
    let f = representer_polynomial(spec.word());
    let r = resultant(&power_minus_one::<Int>(spec.n() as usize), &f);
    if r.is_zero() {
        return AbelianOrder::Infinite;
    }
    AbelianOrder::Finite(r.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    use crate::freeword::{Letter, Sign, Word};

    fn group(n: u32, w: &str) -> CyclicPresentationSpec {
        CyclicPresentationSpec::new(n, w.parse().unwrap()).unwrap()
    }

    fn big(v: i64) -> Int {
        Int::from(v)
    }

    #[test]
    fn circulant_rotates_each_row_right() {
        let m = circulant(&[1i64, 2, 3]);
        assert_eq!(
            (0..3).map(|i| (0..3).map(|j| *m.at(i, j)).collect()).collect::<Vec<Vec<i64>>>(),
            vec![vec![1, 2, 3], vec![3, 1, 2], vec![2, 3, 1]],
        );
    }

    #[test]
    fn conjugation_squaring_word_has_trivial_abelianization_at_three() {
        // Exponent row (0, -1, 0): the circulant is unimodular.
        let spec = group(3, "x0^-1 x1 x0 x1^-2");
        assert_eq!(abelian_invariants(&spec), vec![big(1), big(1), big(1)]);
        assert_eq!(abelian_order(&spec), AbelianOrder::Finite(big(1)));
        assert_eq!(abelian_order_by_resultant(&spec), AbelianOrder::Finite(big(1)));
    }

    #[test]
    fn power_relator_gives_elementary_invariants() {
        let spec = group(3, "x0^5");
        assert_eq!(abelian_invariants(&spec), vec![big(5), big(5), big(5)]);
        assert_eq!(abelian_order(&spec), AbelianOrder::Finite(big(125)));
        assert_eq!(abelian_order_by_resultant(&spec), AbelianOrder::Finite(big(125)));
    }

    #[test]
    fn zero_exponent_words_have_infinite_abelianization() {
        let spec = group(2, "x0 x1 x0^-1 x1^-1");
        assert_eq!(abelian_order(&spec), AbelianOrder::Infinite);
        assert_eq!(abelian_order_by_resultant(&spec), AbelianOrder::Infinite);
    }

    #[test]
    fn representer_polynomial_reads_exponent_sums() {
        let w: CyclicWord = "x0^-1 x2 x0 x2^-2".parse().unwrap();
        assert_eq!(representer_polynomial(&w).coeffs(), &[big(0), big(0), big(-1)]);
    }

    fn arb_cyclic_word(max_index: u32, max_len: usize) -> impl Strategy<Value = CyclicWord> {
        proptest::collection::vec(
            (0..=max_index, proptest::bool::ANY),
            1..=max_len,
        )
        .prop_map(|letters| {
            let raw = letters
                .into_iter()
                .map(|(i, neg)| Letter::new(i, if neg { Sign::Minus } else { Sign::Plus }));
            crate::freeword::cyclically_reduce(&Word::reduce(raw)).0
        })
    }

    proptest! {
        #[test]
        fn smith_form_and_resultant_agree_on_the_order(
            w in arb_cyclic_word(3, 8),
            n in 4u32..=9,
        ) {
            let spec = CyclicPresentationSpec::new(n, w).unwrap();
            prop_assert_eq!(abelian_order(&spec), abelian_order_by_resultant(&spec));
        }
    }
}
