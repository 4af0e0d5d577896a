//! Closed-form counts for rectangles and Aztec diamonds.

use num_bigint::BigUint;
use num_traits::One;

use super::hpr::HighPrecisionReal;
use crate::error::{Result, TilingError};

const MAX_ATTEMPTS: u32 = 4;

/// `4^(mn) * prod_{j<=m, k<=n} (cos^2(j pi/(2m+1)) + cos^2(k pi/(2n+1)))`
/// evaluated with `bits` fractional bits.
pub fn kasteleyn_product(m: u64, n: u64, bits: u32) -> HighPrecisionReal {
    let pi = HighPrecisionReal::pi(bits);
    let cos_sq = |j: u64, d: u64| pi.mul_int(j as i64).div_int(d).cos().square();
    let rows: Vec<HighPrecisionReal> = (1..=m).map(|j| cos_sq(j, 2 * m + 1)).collect();
    let cols: Vec<HighPrecisionReal> = (1..=n).map(|k| cos_sq(k, 2 * n + 1)).collect();
    let mut prod = HighPrecisionReal::from_int(1, bits);
    for a in &rows {
        for b in &cols {
            prod = prod.mul(&a.add(b));
        }
    }
    prod.mul_pow2((2 * m * n) as u32)
}

/// Number of domino tilings of the `2m x 2n` rectangle, certified to be the
/// unique integer within `1/2` of the enclosure of the product.
pub fn kasteleyn_count(m: u64, n: u64) -> Result<BigUint> {
    if m == 0 || n == 0 {
        return Err(TilingError::ZeroDimension);
    }
    let guard = 1u64 << 20;
    if m.saturating_mul(n) > guard {
        return Err(TilingError::GuardExceeded { what: "kasteleyn mn", limit: guard });
    }
    let mut bits = (3 * m * n + 64) as u32;
    for _ in 0..MAX_ATTEMPTS {
        if let Some(k) = kasteleyn_product(m, n, bits).certified_integer() {
            return k.to_biguint().ok_or(TilingError::PrecisionInsufficient);
        }
        bits *= 2;
    }
    Err(TilingError::PrecisionInsufficient)
}

/// `2^(n(n+1)/2)`, the number of tilings of the Aztec diamond of order `n`.
pub fn aztec_count(n: u64) -> BigUint {
    BigUint::one() << (n * (n + 1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_boards() {
        assert_eq!(kasteleyn_count(1, 1).unwrap(), BigUint::from(2u8));
        assert_eq!(kasteleyn_count(2, 2).unwrap(), BigUint::from(36u8));
        assert_eq!(kasteleyn_count(2, 3).unwrap(), BigUint::from(281u32));
        assert_eq!(kasteleyn_count(3, 2).unwrap(), BigUint::from(281u32));
        assert_eq!(kasteleyn_count(4, 4).unwrap(), BigUint::from(12_988_816u32));
        assert_eq!(kasteleyn_count(0, 3), Err(TilingError::ZeroDimension));
    }

    #[test]
    fn low_precision_is_not_certified() {
        assert!(kasteleyn_product(4, 4, 8).certified_integer().is_none());
    }

    #[test]
    fn aztec_closed_form() {
        let table: Vec<u64> = (1..=6).map(|n| aztec_count(n).try_into().unwrap()).collect();
        assert_eq!(table, vec![2, 8, 64, 1024, 32768, 2097152]);
        for n in 1..20u64 {
            assert_eq!(aztec_count(n + 1), aztec_count(n) << (n + 1));
        }
    }
}
