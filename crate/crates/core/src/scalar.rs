//! Scalar abstraction shared by the linear-algebra and polynomial code.
//!
//! The exact algorithms run over [`Rational`](crate::Rational); the same code
//! instantiates with `f64`/`f32` for quick numerical experiments.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed};
use std::fmt::Debug;

/// A field with sign information: exact rationals or IEEE floats.
pub trait Field: Num + Signed + Clone + PartialOrd + Debug {
    /// Whether arithmetic in this type is exact.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    /// Zero test honoring the type's notion of tolerance.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
}

impl Field for BigRational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Field for f64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn is_negligible(&self) -> bool {
        self.abs() <= 1e-12
    }
}

impl Field for f32 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        <f32 as FromPrimitive>::from_i64(v).unwrap_or(f32::NAN)
    }

    fn is_negligible(&self) -> bool {
        self.abs() <= 1e-6
    }
}

/// Reduced row echelon form in place. Returns the pivot column of each
/// nonzero row.
pub fn rref<T: Field>(rows: &mut [Vec<T>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        // exact: first nonzero; float: largest magnitude
        let pick = if T::EXACT {
            (r..rows.len()).find(|&i| !rows[i][c].is_zero())
        } else {
            (r..rows.len())
                .filter(|&i| !rows[i][c].is_negligible())
                .max_by(|&a, &b| rows[a][c].abs().partial_cmp(&rows[b][c].abs()).unwrap_or(std::cmp::Ordering::Equal))
        };
        let Some(p) = pick else { continue };
        rows.swap(r, p);
        let inv = T::one() / rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            let pivot = rows[r].clone();
            for (v, p) in rows[i].iter_mut().zip(pivot).skip(c) {
                *v = v.clone() - f.clone() * p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right nullspace of `matrix` (rows of equal length `ncols`).
pub fn nullspace<T: Field>(matrix: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    let mut rows: Vec<Vec<T>> = matrix.to_vec();
    let pivots = rref(&mut rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); ncols];
            v[f] = T::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[row][f].clone();
            }
            v
        })
        .collect()
}

/// Solves the square system `a x = b`; `None` when singular.
pub fn solve<T: Field>(a: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    let n = b.len();
    let mut aug: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::Zero;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = vec![vec![q(1, 1), q(2, 1), q(3, 1)]];
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot = v.iter().zip(&m[0]).fold(q(0, 1), |acc, (a, b)| acc + a * b);
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn solve_exact_and_float_agree() {
        let a = vec![vec![q(2, 1), q(1, 1)], vec![q(1, 1), q(3, 1)]];
        let b = vec![q(3, 1), q(5, 1)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![q(4, 5), q(7, 5)]);

        let af = vec![vec![2.0, 1.0], vec![1.0, 3.0]];
        let xf = solve(&af, &[3.0, 5.0]).unwrap();
        assert!((xf[0] - 0.8f64).abs() < 1e-12 && (xf[1] - 1.4f64).abs() < 1e-12);
    }

    #[test]
    fn singular_system_is_none() {
        let a = vec![vec![q(1, 1), q(1, 1)], vec![q(2, 1), q(2, 1)]];
        assert!(solve(&a, &[q(1, 1), q(2, 1)]).is_none());
    }
}
