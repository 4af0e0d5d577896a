//! Growth constants for domino tilings.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::hpr::HighPrecisionReal;
use crate::error::{Result, TilingError};

const BITS: u32 = 160;

/// `sum_{i<k} (-1)^i / (2i+1)^2`.
pub fn catalan_partial_sum(k: u64) -> BigRational {
    let mut s = BigRational::zero();
    for i in 0..k {
        let d = BigInt::from(2 * i + 1);
        let t = BigRational::new(BigInt::one(), &d * &d);
        if i % 2 == 0 {
            s += t;
        } else {
            s -= t;
        }
    }
    s
}

/// Catalan's constant with error at most `tolerance`, by Chebyshev-weighted
/// acceleration of the alternating series in exact rational arithmetic.
pub fn catalan_constant(tolerance: f64) -> Result<HighPrecisionReal> {
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(TilingError::InvalidArgument("tolerance must be positive".into()));
    }
    // error <= 2 / (3 + sqrt 8)^n <= 2 / d_n
    let target = (2.0 / tolerance).log2();
    let n = ((target / (3.0 + 8f64.sqrt()).log2()).ceil() as i64).max(1) as u64;
    let (mut d_prev, mut d) = (BigInt::one(), BigInt::from(3));
    for _ in 1..n {
        let next = &d * 6 - &d_prev;
        d_prev = std::mem::replace(&mut d, next);
    }
    let n_i = n as i64;
    let mut b = BigRational::from_integer(BigInt::from(-1));
    let mut c = BigRational::from_integer(-d.clone());
    let mut s = BigRational::zero();
    for k in 0..n_i {
        c = &b - &c;
        let den = BigInt::from(2 * k + 1);
        s += &c / BigRational::from_integer(&den * &den);
        b *= BigRational::new(BigInt::from(2 * (k + n_i) * (k - n_i)), BigInt::from((2 * k + 1) * (k + 1)));
    }
    let g = s / BigRational::from_integer(d.clone());
    let bits = BITS.max(target.ceil() as u32 + 32);
    let err = BigRational::new(BigInt::from(2), d) * BigRational::from_integer(BigInt::one() << bits);
    let ulps = err.ceil().to_integer().to_biguint().unwrap_or_default();
    Ok(HighPrecisionReal::from_ratio(&g, bits).widen(&ulps))
}

/// `exp(G / pi)`, the per-square growth constant of large square boards.
pub fn square_dof_constant() -> HighPrecisionReal {
    let g = catalan_constant(1e-45).expect("positive tolerance").reduce_to(BITS);
    g.div(&HighPrecisionReal::pi(BITS)).expect("pi is nonzero").exp()
}

/// `T^(1/N)`: degrees of freedom per square for `T` tilings of `N` cells.
pub fn dof_per_square(cells: u64, tilings: &BigUint) -> Result<HighPrecisionReal> {
    if cells == 0 {
        return Err(TilingError::ZeroDimension);
    }
    if tilings.is_zero() {
        return Err(TilingError::Nonpositive);
    }
    let bits = BITS.max(tilings.bits() as u32 + 64);
    let t = HighPrecisionReal::from_biguint(tilings, bits);
    let root = t.nth_root(cells).ok_or(TilingError::PrecisionInsufficient)?;
    Ok(root.reduce_to(BITS))
}
