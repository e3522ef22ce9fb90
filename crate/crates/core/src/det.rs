//! Exact determinants via fraction-free Bareiss elimination.
//!
//! Rational matrices are cleared to integers row by row first; Bareiss then
//! stays in `BigInt` with exact divisions only, which keeps intermediate
//! entries at minor-sized magnitudes instead of exploding into fractions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rat;

/// Determinant of a square integer matrix. The empty 0x0 matrix has
/// determinant 1.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    if n == 0 {
        return BigInt::one();
    }

    let mut sign = 1i8;
    let mut prev_pivot = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // pivot search below; a fully zero column kills the determinant
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                // exact by the Bareiss identity
                m[i][j] = t / &prev_pivot;
            }
            m[i][k] = BigInt::zero();
        }
        prev_pivot = m[k][k].clone();
    }

    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Determinant of a square rational matrix, exactly.
pub fn rat_det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 0 {
        return Rat::one();
    }

    let mut scale = BigInt::one();
    let int_rows: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let row_lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let ints = row
                .iter()
                .map(|x| x.numer() * (&row_lcm / x.denom()))
                .collect();
            scale *= &row_lcm;
            ints
        })
        .collect();

    Rat::from_big(bareiss_det(int_rows), scale)
}

/// Naive cofactor expansion, exponential time. Kept as an independent check
/// for small matrices; the library itself always uses Bareiss.
pub fn cofactor_det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 0 {
        return Rat::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Rat::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rat>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &cofactor_det(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// True when the integer is nonnegative; convenience for witness checks.
pub fn is_nonnegative(x: &BigInt) -> bool {
    !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn rat_matrix(rows: &[&[(i64, i64)]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&(p, q)| Rat::new(p, q)).collect())
            .collect()
    }

    #[test]
    fn empty_matrix_has_unit_determinant() {
        assert_eq!(bareiss_det(Vec::new()), BigInt::one());
        assert_eq!(rat_det(&[]), Rat::one());
    }

    #[test]
    fn small_integer_determinants() {
        assert_eq!(bareiss_det(int_matrix(&[&[7]])), BigInt::from(7));
        assert_eq!(
            bareiss_det(int_matrix(&[&[1, 2], &[3, 4]])),
            BigInt::from(-2)
        );
        // singular
        assert_eq!(
            bareiss_det(int_matrix(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]])),
            BigInt::zero()
        );
        // zero pivot forces a row swap
        assert_eq!(
            bareiss_det(int_matrix(&[&[0, 1], &[1, 0]])),
            BigInt::from(-1)
        );
    }

    #[test]
    fn rational_matches_cofactor_expansion() {
        let m = rat_matrix(&[
            &[(1, 2), (1, 3), (0, 1)],
            &[(2, 1), (1, 1), (1, 5)],
            &[(0, 1), (3, 4), (1, 1)],
        ]);
        assert_eq!(rat_det(&m), cofactor_det(&m));

        // Vandermonde at 1/2, 1/3, 1/5: prod of differences
        let xs = [Rat::new(1, 2), Rat::new(1, 3), Rat::new(1, 5)];
        let v: Vec<Vec<Rat>> = xs
            .iter()
            .map(|x| (0..3u32).map(|k| x.pow(k)).collect())
            .collect();
        let mut expected = Rat::one();
        for i in 0..3 {
            for j in 0..i {
                expected = expected * (&xs[i] - &xs[j]);
            }
        }
        assert_eq!(rat_det(&v), expected);
        assert_eq!(cofactor_det(&v), expected);
    }
}
