//! Integer polynomials and the Routh–Hurwitz test.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Result, TilingError};
use crate::scalar::Field;

/// `c0 + c1 x + ... + cd x^d` with `cd != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Coefficients in increasing degree; trailing zeros are dropped.
    pub fn new(coeffs: impl IntoIterator<Item = impl Into<BigInt>>) -> Result<Self> {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(TilingError::ZeroPolynomial);
        }
        Ok(IntPolynomial { coeffs })
    }

    /// Parses `"c0,c1,..."`.
    pub fn parse(text: &str) -> Result<Self> {
        let coeffs = text
            .split(',')
            .map(|t| {
                t.trim().parse::<BigInt>().map_err(|e| TilingError::InvalidArgument(format!("coefficient {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// `p(-t)`.
    pub fn reflect(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect();
        IntPolynomial { coeffs }
    }

    /// Divides out `(q x - p)` for a root `p/q`; `None` if it does not divide.
    pub fn deflate(&self, root: &BigRational) -> Option<Self> {
        if self.degree() == 0 || !self.eval_rational(root).is_zero() {
            return None;
        }
        let (p, q) = (root.numer(), root.denom());
        // synthetic division by (q x - p), highest degree first
        let d = self.degree();
        let mut out = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for i in (1..=d).rev() {
            let c = &self.coeffs[i] + &carry;
            let (quot, rem) = c.div_rem(q);
            if !rem.is_zero() {
                return None;
            }
            out[i - 1] = quot.clone();
            carry = quot * p;
        }
        if &self.coeffs[0] + &carry != BigInt::zero() {
            return None;
        }
        IntPolynomial::new(out).ok()
    }

    /// Divides by the gcd of the coefficients and makes the leading one positive.
    pub fn primitive(&self) -> Self {
        let g = self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let sign = if self.leading().is_negative() { -BigInt::one() } else { BigInt::one() };
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| c / &g * &sign).collect() }
    }

    /// Rational roots by the rational root theorem, when the end coefficients
    /// are small enough to factor by trial division.
    pub fn rational_roots(&self) -> Option<Vec<BigRational>> {
        const LIMIT: u64 = 1_000_000_000_000;
        let mut p = self.primitive();
        let mut roots = Vec::new();
        while p.degree() > 0 && p.coeffs[0].is_zero() {
            roots.push(BigRational::zero());
            p = IntPolynomial::new(p.coeffs[1..].to_vec()).expect("nonzero");
        }
        if p.degree() == 0 {
            return Some(roots);
        }
        let c0 = p.coeffs[0].abs().to_u64().filter(|&v| v <= LIMIT)?;
        let cd = p.leading().abs().to_u64().filter(|&v| v <= LIMIT)?;
        let (nums, dens) = (divisors(c0), divisors(cd));
        let mut candidates: Vec<BigRational> = Vec::new();
        for &a in &nums {
            for &b in &dens {
                for s in [1i64, -1] {
                    candidates.push(BigRational::new(BigInt::from(a) * s, BigInt::from(b)));
                }
            }
        }
        candidates.sort();
        candidates.dedup();
        for r in candidates {
            while let Some(q) = p.deflate(&r) {
                roots.push(r.clone());
                p = q;
            }
        }
        Some(roots)
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{a}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// First column of the Routh array, or where it degenerated.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RouthOutcome<T> {
    pub first_column: Vec<T>,
    /// Row index of a zero first-column entry, if one occurred.
    pub degenerate_row: Option<usize>,
}

impl<T: Field> RouthOutcome<T> {
    /// Every root strictly in the open left half-plane.
    pub fn is_hurwitz(&self) -> bool {
        self.degenerate_row.is_none() && self.first_column.iter().all(|v| v.is_positive())
    }
}

/// Routh array of `a_0 + a_1 t + ... + a_d t^d` (leading coefficient made
/// positive). Stops at the first zero pivot.
pub fn routh_array<T: Field>(coeffs: &[T]) -> Result<RouthOutcome<T>> {
    let d = coeffs.len().checked_sub(1).ok_or(TilingError::ZeroPolynomial)?;
    if coeffs[d].is_negligible() {
        return Err(TilingError::ZeroPolynomial);
    }
    if d == 0 {
        return Err(TilingError::ConstantPolynomial);
    }
    let sign = if coeffs[d].is_negative() { -T::one() } else { T::one() };
    let a: Vec<T> = coeffs.iter().map(|c| c.clone() * sign.clone()).collect();
    let width = d / 2 + 1;
    let row = |start: usize| -> Vec<T> {
        (0..width).map(|j| d.checked_sub(start + 2 * j).map_or(T::zero(), |i| a[i].clone())).collect()
    };
    let mut prev = row(0);
    let mut cur = row(1);
    let mut first_column = vec![prev[0].clone()];
    for i in 1..=d {
        if cur[0].is_negligible() {
            first_column.push(cur[0].clone());
            return Ok(RouthOutcome { first_column, degenerate_row: Some(i) });
        }
        first_column.push(cur[0].clone());
        if i == d {
            break;
        }
        let next: Vec<T> = (0..width)
            .map(|j| {
                let (p1, c1) =
                    (prev.get(j + 1).cloned().unwrap_or_else(T::zero), cur.get(j + 1).cloned().unwrap_or_else(T::zero));
                (cur[0].clone() * p1 - prev[0].clone() * c1) / cur[0].clone()
            })
            .collect();
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(RouthOutcome { first_column, degenerate_row: None })
}

/// Routh array of `p(-t)` over exact rationals: Hurwitz stability of `p(-t)`
/// is equivalent to every root of `p` having positive real part.
pub fn right_half_plane(p: &IntPolynomial) -> Result<RouthOutcome<BigRational>> {
    let q: Vec<BigRational> = p.reflect().coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    routh_array(&q)
}
