//! Exact linear algebra over the rationals.
//!
//! Rank is computed by fraction-free (Bareiss) elimination on integer rows;
//! linear solves use plain rational Gauss-Jordan elimination.

use num::{BigInt, Integer, One, Signed, Zero};

use crate::rational::Rational;

/// Clears denominators of a rational row, giving a primitive integer row
/// with the same span.
pub fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    primitive(ints)
}

fn primitive(row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return row;
    }
    row.into_iter().map(|x| x / &g).collect()
}

/// Fraction-free row reduction.
///
/// Pivot columns are taken left to right; within a column the first
/// remaining row (input order) with a nonzero entry becomes the pivot.
/// Returns the rank and the nonzero echelon rows, each scaled to be
/// primitive with a positive leading entry.
pub fn fraction_free_echelon(rows: &[Vec<Rational>]) -> (usize, Vec<Vec<BigInt>>) {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let nrows = m.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    m.truncate(r);
    let echelon = m
        .into_iter()
        .map(|row| {
            let row = primitive(row);
            let lead_negative = row.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
            if lead_negative {
                row.into_iter().map(|x| -x).collect()
            } else {
                row
            }
        })
        .collect();
    (r, echelon)
}

/// Rank by rational Gauss-Jordan elimination; an independent route to
/// [`fraction_free_echelon`].
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    reduce(&mut m, usize::MAX).len()
}

// Reduced row echelon form in place over the first `ncols` columns
// (all of them if larger than the width). Returns pivot columns.
fn reduce(m: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let width = m.first().map_or(0, Vec::len).min(ncols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (top, rest) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (x, y) in rest.iter_mut().zip(top.iter()) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Finds coefficients `x` with `sum_i x[i] * vectors[i] == target`.
///
/// Free variables are set to zero, so the answer is unique exactly when the
/// vectors are independent. Returns `None` if `target` is outside the span.
pub fn solve_combination(vectors: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let n = vectors.len();
    let dim = target.len();
    if vectors.iter().any(|v| v.len() != dim) {
        return None;
    }
    // Augmented matrix: one row per coordinate, one column per vector.
    let mut m: Vec<Vec<Rational>> = (0..dim)
        .map(|k| {
            let mut row: Vec<Rational> = vectors.iter().map(|v| v[k].clone()).collect();
            row.push(target[k].clone());
            row
        })
        .collect();
    let pivots = reduce(&mut m, n);
    // Inconsistent if a zero row has a nonzero right-hand side.
    if m.iter().skip(pivots.len()).any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = m[row][n].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use proptest::prelude::*;

    fn rows(data: &[&[i64]]) -> Vec<Vec<Rational>> {
        data.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = rows(&[&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]]);
        let (r, ech) = fraction_free_echelon(&m);
        assert_eq!(r, 2);
        assert_eq!(rational_rank(&m), 2);
        assert_eq!(ech[0], vec![BigInt::from(1), BigInt::from(-1), BigInt::from(0)]);
    }

    #[test]
    fn rank_skips_zero_columns() {
        let m = rows(&[&[0, 2, 4], &[0, 1, 3], &[0, 0, 0]]);
        assert_eq!(fraction_free_echelon(&m).0, 2);
        assert_eq!(fraction_free_echelon(&[]).0, 0);
    }

    #[test]
    fn solve_in_and_out_of_span() {
        let v = rows(&[&[1, 0, 1], &[0, 1, 1]]);
        let x = solve_combination(&v, &rows(&[&[2, -3, -1]])[0]).unwrap();
        assert_eq!(x, vec![int(2), int(-3)]);
        assert!(solve_combination(&v, &rows(&[&[1, 1, 0]])[0]).is_none());
    }

    #[test]
    fn rationals_are_cleared() {
        let half = Rational::new(1.into(), 2.into());
        let row = vec![half.clone(), int(1), -half];
        assert_eq!(integer_row(&row), vec![BigInt::from(1), BigInt::from(2), BigInt::from(-1)]);
    }

    proptest! {
        #[test]
        fn both_rank_routes_agree(data in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 0..6)) {
            let m: Vec<Vec<Rational>> = data.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
            prop_assert_eq!(fraction_free_echelon(&m).0, rational_rank(&m));
        }

        #[test]
        fn solve_recovers_combination(
            data in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..4),
            coeffs in prop::collection::vec(-4i64..=4, 4),
        ) {
            let vs: Vec<Vec<Rational>> = data.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
            let target: Vec<Rational> = (0..5)
                .map(|k| vs.iter().zip(&coeffs).map(|(v, &c)| &v[k] * int(c)).sum())
                .collect();
            let x = solve_combination(&vs, &target).expect("target is in the span");
            let back: Vec<Rational> = (0..5)
                .map(|k| vs.iter().zip(&x).map(|(v, c)| &v[k] * c).sum())
                .collect();
            prop_assert_eq!(back, target);
        }
    }
}
