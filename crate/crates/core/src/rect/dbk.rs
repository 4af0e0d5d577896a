//! Tiling an `m x n` rectangle with `a x b` bricks.

use serde::Serialize;

use crate::error::{Result, TilingError};

/// Largest target accepted by [`sum_representable`].
pub const REPRESENTABLE_GUARD: u64 = 1_000_000;

/// `Some((alpha, beta))` with `t = alpha a + beta b`, or `None`.
pub fn sum_representable(t: u64, a: u64, b: u64) -> Result<Option<(u64, u64)>> {
    if a == 0 || b == 0 {
        return Err(TilingError::ZeroDimension);
    }
    if t > REPRESENTABLE_GUARD {
        return Err(TilingError::GuardExceeded { what: "representable target", limit: REPRESENTABLE_GUARD });
    }
    // last[v]: the part (a or b) used last to reach v
    let t = t as usize;
    let mut last = vec![0u64; t + 1];
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for v in 1..=t {
        for part in [a, b] {
            let p = part as usize;
            if p <= v && reach[v - p] {
                reach[v] = true;
                last[v] = part;
                break;
            }
        }
    }
    if !reach[t] {
        return Ok(None);
    }
    let (mut alpha, mut beta, mut v) = (0, 0, t);
    while v > 0 {
        if last[v] == a {
            alpha += 1;
        } else {
            beta += 1;
        }
        v -= last[v] as usize;
    }
    Ok(Some((alpha, beta)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Representation {
    pub target: u64,
    /// `(alpha, beta)` with `target = alpha a + beta b`.
    pub witness: Option<(u64, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Divisibility {
    pub divisor: u64,
    /// Which side it divides: `"m"`, `"n"`, or neither.
    pub divides: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DbkDecision {
    pub verdict: bool,
    pub area_divisible: bool,
    pub m_representable: Representation,
    pub n_representable: Representation,
    pub a_divides: Divisibility,
    pub b_divides: Divisibility,
}

impl DbkDecision {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }
}

/// Decides whether `m x n` can be tiled by `a x b` bricks (either orientation):
/// `ab | mn`, both `m` and `n` are sums of `a`s and `b`s, and each of `a`,
/// `b` divides `m` or `n`.
pub fn debruijn_klarner(m: u64, n: u64, a: u64, b: u64) -> Result<DbkDecision> {
    if [m, n, a, b].contains(&0) {
        return Err(TilingError::ZeroDimension);
    }
    let area_divisible = (m as u128 * n as u128).is_multiple_of(a as u128 * b as u128);
    let rep = |t| -> Result<Representation> { Ok(Representation { target: t, witness: sum_representable(t, a, b)? }) };
    let div = |d: u64| Divisibility {
        divisor: d,
        divides: if m.is_multiple_of(d) {
            Some("m")
        } else if n.is_multiple_of(d) {
            Some("n")
        } else {
            None
        },
    };
    let (m_rep, n_rep) = (rep(m)?, rep(n)?);
    let (a_div, b_div) = (div(a), div(b));
    let verdict = area_divisible
        && m_rep.witness.is_some()
        && n_rep.witness.is_some()
        && a_div.divides.is_some()
        && b_div.divides.is_some();
    Ok(DbkDecision {
        verdict,
        area_divisible,
        m_representable: m_rep,
        n_representable: n_rep,
        a_divides: a_div,
        b_divides: b_div,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representability() {
        assert_eq!(sum_representable(17, 4, 7).unwrap(), None);
        let (x, y) = sum_representable(10, 1, 6).unwrap().unwrap();
        assert_eq!(x + 6 * y, 10);
        assert_eq!(sum_representable(0, 3, 5).unwrap(), Some((0, 0)));
        let (x, y) = sum_representable(18, 4, 7).unwrap().unwrap();
        assert_eq!(4 * x + 7 * y, 18);
        assert!(sum_representable(2_000_000, 2, 3).is_err());
    }

    #[test]
    fn decisions() {
        let d = debruijn_klarner(7, 10, 2, 3).unwrap();
        assert!(!d.verdict && !d.area_divisible);
        let d = debruijn_klarner(17, 28, 4, 7).unwrap();
        assert!(!d.verdict && d.area_divisible && d.m_representable.witness.is_none());
        let d = debruijn_klarner(10, 15, 1, 6).unwrap();
        assert!(!d.verdict && d.area_divisible && d.b_divides.divides.is_none());
        assert!(d.m_representable.witness.is_some() && d.n_representable.witness.is_some());
        assert!(debruijn_klarner(6, 4, 2, 3).unwrap().verdict);
    }
}
