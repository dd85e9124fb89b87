//! Exact rational linear algebra on small symmetric integer matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Rank of a positive semidefinite matrix, or `None` if it is not PSD.
///
/// Symmetric Gaussian elimination without pivoting over the rationals: a
/// negative pivot, or a zero pivot whose row is not identically zero,
/// certifies a vector with `vᵗ A v < 0`. Otherwise the number of positive
/// pivots is the rank.
pub fn psd_rank(a: &[Vec<i64>]) -> Option<usize> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for k in 0..n {
        let pivot = m[k][k].clone();
        if pivot.is_negative() {
            return None;
        }
        if pivot.is_zero() {
            if m[k][k + 1..].iter().any(|x| !x.is_zero()) {
                return None;
            }
            continue;
        }
        rank += 1;
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = &m[i][k] / &pivot;
            let (top, rest) = m.split_at_mut(i);
            for (x, y) in rest[0][k..].iter_mut().zip(&top[k][k..]) {
                *x -= &factor * y;
            }
        }
    }
    Some(rank)
}
