//! Fraction-free determinants over exact integral domains.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An integral domain in which divisions known to be exact can be carried out.
pub trait ExactRing: Clone + PartialEq + Zero + One {
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `self / other`, assuming `other` divides `self`.
    fn div_exact(&self, other: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        let (q, r) = self.div_rem(other);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }
}

/// Bareiss elimination with row pivoting. Consumes the matrix.
pub fn bareiss<R: ExactRing>(mut a: Vec<Vec<R>>) -> R {
    let n = a.len();
    if n == 0 {
        return R::one();
    }
    assert!(a.iter().all(|row| row.len() == n), "matrix must be square");
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return R::zero();
            };
            a.swap(k, swap);
            negate = !negate;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let v = pivot.times(&row[j]).minus(&lead.times(&pivot_row[j]));
                row[j] = v.div_exact(&prev);
            }
            row[k] = R::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        det.negated()
    } else {
        det
    }
}

pub fn det_bigint(a: Vec<Vec<BigInt>>) -> BigInt {
    bareiss(a)
}

/// Determinant of `a` with row `r` and column `c` removed.
pub fn minor<R: ExactRing>(a: &[Vec<R>], r: usize, c: usize) -> R {
    let sub: Vec<Vec<R>> = a
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != r)
        .map(|(_, row)| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, v)| v.clone()).collect())
        .collect();
    bareiss(sub)
}

pub fn abs_det(a: Vec<Vec<BigInt>>) -> BigInt {
    det_bigint(a).abs()
}


#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(det_bigint(big(&[])), BigInt::from(1));
        assert_eq!(det_bigint(big(&[&[7]])), BigInt::from(7));
        assert_eq!(det_bigint(big(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        assert_eq!(det_bigint(big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det_bigint(big(&[&[2, 4], &[1, 2]])), BigInt::from(0));
        // needs a pivot swap midway
        assert_eq!(det_bigint(big(&[&[1, 1, 1], &[1, 1, 2], &[1, 2, 2]])), BigInt::from(-1));
    }

    #[test]
    fn minors() {
        let a = big(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        assert_eq!(minor(&a, 0, 0), BigInt::from(3));
        assert_eq!(minor(&a, 2, 1), BigInt::from(-3));
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(n in 1usize..6, entries in proptest::collection::vec(-9i64..10, 36)) {
            let a: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| BigInt::from(entries[i * 6 + j])).collect()).collect();
            prop_assert_eq!(det_bigint(a.clone()), oracle::cofactor(&a));
        }

        #[test]
        fn singular_when_rows_repeat(n in 2usize..6, entries in proptest::collection::vec(-9i64..10, 36)) {
            let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| BigInt::from(entries[i * 6 + j])).collect()).collect();
            a[n - 1] = a[0].clone();
            prop_assert!(Zero::is_zero(&det_bigint(a)));
        }
    }
}
