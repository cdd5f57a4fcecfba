//! Just enough univariate polynomial arithmetic for resultants against
//! `x^n - 1`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{determinant, Matrix};

/// Coefficients in ascending degree order with no trailing zeros; the
/// zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<I> {
    coeffs: Vec<I>,
}

impl<I: Zero> Poly<I> {
    pub fn new(mut coeffs: Vec<I>) -> Poly<I> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly<I> {
        Poly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[I] {
        &self.coeffs
    }
}

/// `x^n - 1`, the characteristic relator of a length-`n` cycle.
pub fn power_minus_one<I>(n: usize) -> Poly<I>
where
    I: Zero + One + Signed + Clone,
{
    if n == 0 {
        return Poly::zero();
    }
    let mut coeffs = vec![I::zero(); n + 1];
    coeffs[0] = -I::one();
    coeffs[n] = I::one();
    Poly::new(coeffs)
}

/// Resultant via the Sylvester matrix. Conventions: any zero operand
/// gives zero; two nonzero constants give one; a single constant `c`
/// against degree `d` gives `c^d`.
pub fn resultant<I>(f: &Poly<I>, g: &Poly<I>) -> I
where
    I: Integer + Signed + Clone,
{
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return I::zero();
    };
    if df == 0 && dg == 0 {
        return I::one();
    }
    if df == 0 {
        return pow_clone(&f.coeffs[0], dg);
    }
    if dg == 0 {
        return pow_clone(&g.coeffs[0], df);
    }
    determinant(&sylvester(f, g))
}

fn pow_clone<I: One + Clone + std::ops::Mul<Output = I>>(base: &I, e: usize) -> I {
    (0..e).fold(I::one(), |acc, _| acc * base.clone())
}

/// The `(df + dg) x (df + dg)` Sylvester matrix of two nonzero,
/// nonconstant polynomials.
pub fn sylvester<I>(f: &Poly<I>, g: &Poly<I>) -> Matrix<I>
where
    I: Zero + Clone,
{
    let df = f.degree().expect("nonzero polynomial");
    let dg = g.degree().expect("nonzero polynomial");
    let n = df + dg;
    let mut m = Matrix::zero(n, n);
    for r in 0..dg {
        for (idx, c) in f.coeffs.iter().rev().enumerate() {
            *m.at_mut(r, r + idx) = c.clone();
        }
    }
    for r in 0..df {
        for (idx, c) in g.coeffs.iter().rev().enumerate() {
            *m.at_mut(dg + r, r + idx) = c.clone();
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly<i64> {
        Poly::new(coeffs.to_vec())
    }

    #[test]
    fn construction_trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs(), &[1, 2]);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(power_minus_one::<i64>(3).coeffs(), &[-1, 0, 0, 1]);
    }

    #[test]
    fn resultant_of_shifted_squares() {
        // x^2 - 1 and x^2 - 4 share no roots; the resultant is the
        // product of one evaluated at the roots of the other.
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-4, 0, 1])), 9);
    }

    #[test]
    fn resultant_against_cycle_polynomial_is_signed_evaluation_product() {
        // Roots of x^3 - 1 plugged into x - 2: (1-2)(w-2)(w^2-2) = -7.
        assert_eq!(resultant(&power_minus_one(3), &p(&[-2, 1])), -7);
        // Common root x = 1 forces zero.
        assert_eq!(resultant(&power_minus_one(4), &p(&[-1, 1])), 0);
    }

    #[test]
    fn resultant_degenerate_conventions() {
        assert_eq!(resultant(&Poly::zero(), &p(&[1, 1])), 0);
        assert_eq!(resultant(&p(&[5]), &p(&[7])), 1);
        assert_eq!(resultant(&p(&[5]), &p(&[0, 0, 1])), 25);
        assert_eq!(resultant(&power_minus_one(3), &p(&[5])), 125);
    }

    #[test]
    fn sylvester_matrix_shape() {
        let s = sylvester(&p(&[-1, 0, 1]), &p(&[-4, 0, 1]));
        assert_eq!((s.rows(), s.cols()), (4, 4));
        assert_eq!(*s.at(0, 0), 1);
        assert_eq!(*s.at(0, 2), -1);
        assert_eq!(*s.at(3, 1), 1);
        assert_eq!(*s.at(3, 3), -4);
    }
}
