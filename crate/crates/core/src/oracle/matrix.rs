//! Dense matrices over an exact integer scalar, with the two
//! eliminations the abelianization oracle needs: Smith normal form and
//! fraction-free determinants.

use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Row-major dense matrix. The scalar is any signed exact integer type;
/// the crate root fixes `IntMatrix` to arbitrary precision.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<I> {
    rows: usize,
    cols: usize,
    data: Vec<I>,
}

impl<I> Matrix<I> {
    pub fn from_rows(rows: Vec<Vec<I>>) -> Matrix<I> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &I {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut I {
        &mut self.data[r * self.cols + c]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl<I: Zero + Clone> Matrix<I> {
    pub fn zero(rows: usize, cols: usize) -> Matrix<I> {
        Matrix { rows, cols, data: vec![I::zero(); rows * cols] }
    }
}

impl<I: Integer + Signed + Clone> Matrix<I> {
    /// `row_i -= q * row_t`
    fn row_sub_mul(&mut self, i: usize, t: usize, q: &I) {
        for j in 0..self.cols {
            let v = self.at(i, j).clone() - q.clone() * self.at(t, j).clone();
            *self.at_mut(i, j) = v;
        }
    }

    /// `col_j -= q * col_t`
    fn col_sub_mul(&mut self, j: usize, t: usize, q: &I) {
        for i in 0..self.rows {
            let v = self.at(i, j).clone() - q.clone() * self.at(i, t).clone();
            *self.at_mut(i, j) = v;
        }
    }

    /// `row_dst += row_src`
    fn row_add(&mut self, dst: usize, src: usize) {
        for j in 0..self.cols {
            let v = self.at(dst, j).clone() + self.at(src, j).clone();
            *self.at_mut(dst, j) = v;
        }
    }
}

/// Diagonal of the Smith normal form: nonnegative, each entry dividing
/// the next, zeros trailing, length `min(rows, cols)`. Pivots take the
/// smallest nonzero absolute value, first in row-major order on ties.
pub fn smith_normal_form<I>(m: &Matrix<I>) -> Vec<I>
where
    I: Integer + Signed + Clone,
{
    let mut a = m.clone();
    let (r, c) = (a.rows, a.cols);
    let lim = r.min(c);
    let mut diag = Vec::with_capacity(lim);
    for t in 0..lim {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if a.at(i, j).is_zero() {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => a.at(i, j).abs() < a.at(bi, bj).abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                // The rest of the matrix is zero; the diagonal ends here.
                break;
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            let mut dirty = false;
            for i in t + 1..r {
                if a.at(i, t).is_zero() {
                    continue;
                }
                let q = a.at(i, t).clone() / a.at(t, t).clone();
                if !q.is_zero() {
                    a.row_sub_mul(i, t, &q);
                }
                dirty |= !a.at(i, t).is_zero();
            }
            for j in t + 1..c {
                if a.at(t, j).is_zero() {
                    continue;
                }
                let q = a.at(t, j).clone() / a.at(t, t).clone();
                if !q.is_zero() {
                    a.col_sub_mul(j, t, &q);
                }
                dirty |= !a.at(t, j).is_zero();
            }
            if dirty {
                // Some remainder survived; it is smaller than the pivot,
                // so the next pass picks it up and strictly shrinks.
                continue;
            }
            let p = a.at(t, t).clone();
            let offender =
                (t + 1..r).find(|&i| (t + 1..c).any(|j| !a.at(i, j).is_multiple_of(&p)));
            match offender {
                Some(i) => a.row_add(t, i),
                None => break,
            }
        }
        diag.push(a.at(t, t).abs());
    }
    diag
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn determinant<I>(m: &Matrix<I>) -> I
where
    I: Integer + Signed + Clone,
{
    assert_eq!(m.rows, m.cols, "determinant needs a square matrix");
    let n = m.rows;
    if n == 0 {
        return I::one();
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = I::one();
    for k in 0..n - 1 {
        if a.at(k, k).is_zero() {
            match (k + 1..n).find(|&i| !a.at(i, k).is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return I::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a.at(i, j).clone() * a.at(k, k).clone()
                    - a.at(i, k).clone() * a.at(k, j).clone();
                *a.at_mut(i, j) = num / prev.clone();
            }
            *a.at_mut(i, k) = I::zero();
        }
        prev = a.at(k, k).clone();
    }
    let d = a.at(n - 1, n - 1).clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<i64> {
        Matrix::from_rows(rows)
    }

    fn cofactor_det(a: &Matrix<i64>) -> i64 {
        let n = a.rows();
        if n == 0 {
            return 1;
        }
        if n == 1 {
            return *a.at(0, 0);
        }
        let mut acc = 0;
        for j in 0..n {
            let minor = Matrix::from_rows(
                (1..n)
                    .map(|i| (0..n).filter(|&c| c != j).map(|c| *a.at(i, c)).collect())
                    .collect(),
            );
            let s = if j % 2 == 0 { 1 } else { -1 };
            acc += s * a.at(0, j) * cofactor_det(&minor);
        }
        acc
    }

    #[test]
    fn smith_form_of_diagonal_merges_coprime_factors() {
        assert_eq!(smith_normal_form(&m(vec![vec![2, 0], vec![0, 3]])), vec![1, 6]);
        assert_eq!(smith_normal_form(&m(vec![vec![4, 0], vec![0, 6]])), vec![2, 12]);
    }

    #[test]
    fn smith_form_of_known_matrix() {
        let a = m(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(smith_normal_form(&a), vec![2, 6, 12]);
    }

    #[test]
    fn smith_form_flags_rank_deficit_with_trailing_zeros() {
        let a = m(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(smith_normal_form(&a), vec![1, 0]);
        assert_eq!(smith_normal_form(&m(vec![vec![0, 0], vec![0, 0]])), vec![0, 0]);
    }

    #[test]
    fn smith_form_of_rectangular_matrix() {
        let a = m(vec![vec![2, 4, 6], vec![4, 8, 10]]);
        // Row reduce: gcd structure gives (2, 2).
        assert_eq!(smith_normal_form(&a), vec![2, 2]);
    }

    #[test]
    fn determinant_matches_cofactor_expansion_on_fixed_cases() {
        let a = m(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(determinant(&a), -144);
        assert_eq!(determinant(&a), cofactor_det(&a));
        assert_eq!(determinant(&m(vec![vec![0, 1], vec![1, 0]])), -1);
        assert_eq!(determinant(&m(vec![vec![0, 0], vec![1, 1]])), 0);
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_cofactor_expansion(
            entries in proptest::collection::vec(-4i64..=4, 16)
        ) {
            let a = Matrix::from_rows(entries.chunks(4).map(<[i64]>::to_vec).collect());
            prop_assert_eq!(determinant(&a), cofactor_det(&a));
        }

        #[test]
        fn smith_diagonal_divides_and_multiplies_to_the_determinant(
            entries in proptest::collection::vec(-4i64..=4, 9)
        ) {
            let a = Matrix::from_rows(entries.chunks(3).map(<[i64]>::to_vec).collect());
            let d = smith_normal_form(&a);
            prop_assert_eq!(d.len(), 3);
            for w in d.windows(2) {
                if w[0] == 0 {
                    prop_assert_eq!(w[1], 0);
                } else {
                    prop_assert_eq!(w[1] % w[0], 0);
                }
            }
            prop_assert_eq!(d.iter().product::<i64>(), determinant(&a).abs());
        }
    }
}
