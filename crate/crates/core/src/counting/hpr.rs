//! Fixed-point reals with a tracked error radius.
//!
//! A value is `(mant ± err) / 2^bits`. Every operation returns a radius that
//! encloses the exact result of the same operation on any inputs inside the
//! operands' intervals, so the final radius is a rigorous bound.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighPrecisionReal {
    mant: BigInt,
    err: BigUint,
    bits: u32,
}

/// Nearest integer to `n / d` (ties upward); sign of `d` is handled.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let (n, d) = if d.is_negative() { (-n, -d) } else { (n.clone(), d.clone()) };
    ((n << 1usize) + &d).div_floor(&(d << 1usize))
}

fn ceil_div(n: &BigUint, d: &BigUint) -> BigUint {
    n.div_ceil(d)
}

fn ceil_shr(n: &BigUint, k: u32) -> BigUint {
    let d = BigUint::one() << k;
    ceil_div(n, &d)
}

impl HighPrecisionReal {
    pub fn from_int(v: impl Into<BigInt>, bits: u32) -> Self {
        HighPrecisionReal { mant: v.into() << bits, err: BigUint::zero(), bits }
    }

    pub fn from_biguint(v: &BigUint, bits: u32) -> Self {
        Self::from_int(BigInt::from(v.clone()), bits)
    }

    pub fn from_ratio(r: &BigRational, bits: u32) -> Self {
        let num = r.numer() << bits;
        let mant = round_div(&num, r.denom());
        let exact = (&mant * r.denom()) == num;
        HighPrecisionReal { mant, err: if exact { BigUint::zero() } else { BigUint::one() }, bits }
    }

    pub fn from_f64_exact(v: f64, bits: u32) -> Self {
        let r = BigRational::from_float(v).expect("finite");
        Self::from_ratio(&r, bits)
    }

    pub fn zero(bits: u32) -> Self {
        Self::from_int(0, bits)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn error_ulps(&self) -> &BigUint {
        &self.err
    }

    /// Adds `extra` ulps to the radius.
    pub fn widen(mut self, extra: &BigUint) -> Self {
        self.err += extra;
        self
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.bits, other.bits, "mixed precisions");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        HighPrecisionReal { mant: &self.mant + &o.mant, err: &self.err + &o.err, bits: self.bits }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        HighPrecisionReal { mant: -&self.mant, err: self.err.clone(), bits: self.bits }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        let prod = &self.mant * &o.mant;
        let mant = round_div(&prod, &(BigInt::one() << self.bits));
        let a = self.mant.magnitude();
        let b = o.mant.magnitude();
        let spread = a * &o.err + b * &self.err + &self.err * &o.err;
        let rounding = if (&mant << self.bits) == prod { 0u8 } else { 1u8 };
        HighPrecisionReal { mant, err: ceil_shr(&spread, self.bits) + BigUint::from(rounding), bits: self.bits }
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn mul_int(&self, k: i64) -> Self {
        HighPrecisionReal { mant: &self.mant * k, err: &self.err * k.unsigned_abs(), bits: self.bits }
    }

    pub fn div_int(&self, k: u64) -> Self {
        assert!(k > 0);
        let kb = BigInt::from(k);
        let mant = round_div(&self.mant, &kb);
        let exact = &mant * &kb == self.mant;
        HighPrecisionReal {
            mant,
            err: ceil_div(&self.err, &BigUint::from(k)) + BigUint::from(u8::from(!exact)),
            bits: self.bits,
        }
    }

    /// Multiplies by `2^k` exactly.
    pub fn mul_pow2(&self, k: u32) -> Self {
        HighPrecisionReal { mant: &self.mant << k, err: &self.err << k, bits: self.bits }
    }

    pub fn div_pow2(&self, k: u32) -> Self {
        let d = BigInt::one() << k;
        let mant = round_div(&self.mant, &d);
        let exact = (&mant << k) == self.mant;
        HighPrecisionReal { mant, err: ceil_shr(&self.err, k) + BigUint::from(u8::from(!exact)), bits: self.bits }
    }

    /// `None` when the divisor's interval contains zero.
    pub fn div(&self, o: &Self) -> Option<Self> {
        self.check(o);
        let b = o.mant.magnitude();
        if b <= &o.err {
            return None;
        }
        let num = &self.mant << self.bits;
        let mant = round_div(&num, &o.mant);
        let a = self.mant.magnitude();
        // |a/b - A/B| <= (e|B| + |A| f) / (|B| (|B| - f)), scaled by 2^bits
        let top = (&self.err * b + a * &o.err) << self.bits;
        let bottom = b * (b - &o.err);
        let exact = &mant * &o.mant == num;
        Some(HighPrecisionReal {
            mant,
            err: ceil_div(&top, &bottom) + BigUint::from(u8::from(!exact)),
            bits: self.bits,
        })
    }

    pub fn recip(&self) -> Option<Self> {
        Self::from_int(1, self.bits).div(self)
    }

    /// Lower end of the enclosure, as an exact rational.
    pub fn lower(&self) -> BigRational {
        BigRational::new(&self.mant - BigInt::from(self.err.clone()), BigInt::one() << self.bits)
    }

    pub fn upper(&self) -> BigRational {
        BigRational::new(&self.mant + BigInt::from(self.err.clone()), BigInt::one() << self.bits)
    }

    pub fn midpoint(&self) -> BigRational {
        BigRational::new(self.mant.clone(), BigInt::one() << self.bits)
    }

    pub fn radius(&self) -> BigRational {
        BigRational::new(BigInt::from(self.err.clone()), BigInt::one() << self.bits)
    }

    pub fn to_f64(&self) -> f64 {
        let shift = self.mant.bits().saturating_sub(60) as u32;
        let head = (&self.mant >> shift).to_f64().unwrap_or(f64::NAN);
        head * 2f64.powi(shift as i32 - self.bits as i32)
    }

    pub fn radius_f64(&self) -> f64 {
        let r = self.radius();
        r.to_f64().unwrap_or(f64::INFINITY)
    }

    /// Whether the enclosure lies within `tol` of `target`.
    pub fn within(&self, target: f64, tol: f64) -> bool {
        let t = BigRational::from_float(target).expect("finite");
        let tol = BigRational::from_float(tol).expect("finite");
        self.lower() >= &t - &tol && self.upper() <= t + tol
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive() && self.mant.magnitude() > &self.err
    }

    /// The unique integer within distance `< 1/2` of every point of the
    /// enclosure, if there is one.
    pub fn certified_integer(&self) -> Option<BigInt> {
        let one = BigInt::one() << self.bits;
        let k = round_div(&self.mant, &one);
        let center = &k << self.bits;
        let half = BigInt::one() << (self.bits - 1);
        let lo = &self.mant - BigInt::from(self.err.clone());
        let hi = &self.mant + BigInt::from(self.err.clone());
        if (&lo - &center).abs() < half && (&hi - &center).abs() < half {
            Some(k)
        } else {
            None
        }
    }

    /// Decimal digits of the midpoint, truncated toward zero.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = BigInt::from(10u32).pow(digits as u32);
        let scaled = (&self.mant * &scale) >> self.bits;
        let neg = scaled.is_negative();
        let s = scaled.magnitude().to_string();
        let s = format!("{s:0>width$}", width = digits + 1);
        let (int, frac) = s.split_at(s.len() - digits);
        format!("{}{}.{}", if neg { "-" } else { "" }, int, frac)
    }

    pub fn compare_f64(&self, v: f64) -> Option<Ordering> {
        let t = BigRational::from_float(v)?;
        if self.upper() < t {
            Some(Ordering::Less)
        } else if self.lower() > t {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    // ---- elementary functions ----

    /// Pi by Machin's formula.
    pub fn pi(bits: u32) -> Self {
        let guard = bits + 16;
        let a = atan_inv(5, guard).mul_int(16);
        let b = atan_inv(239, guard).mul_int(4);
        a.sub(&b).reduce_to(bits)
    }

    /// Rounds to fewer fractional bits.
    pub fn reduce_to(&self, bits: u32) -> Self {
        assert!(bits <= self.bits);
        let k = self.bits - bits;
        let d = BigInt::one() << k;
        let mant = round_div(&self.mant, &d);
        let exact = (&mant << k) == self.mant;
        HighPrecisionReal { mant, err: ceil_shr(&self.err, k) + BigUint::from(u8::from(!exact)), bits }
    }

    pub fn extend_to(&self, bits: u32) -> Self {
        assert!(bits >= self.bits);
        let k = bits - self.bits;
        HighPrecisionReal { mant: &self.mant << k, err: &self.err << k, bits }
    }

    /// Upper bound on `|x|` as a small float, for series term counts.
    fn abs_upper_f64(&self) -> f64 {
        self.upper().abs().max(self.lower().abs()).to_f64().unwrap_or(f64::INFINITY)
    }

    /// Cosine by its Taylor series; intended for `|x| <= 4`.
    pub fn cos(&self) -> Self {
        let bits = self.bits;
        let x = self.extend_to(bits + 32);
        let x2 = x.square();
        let xmax = self.abs_upper_f64();
        let mut term = Self::from_int(1, x.bits);
        let mut sum = term.clone();
        let mut n: u64 = 1;
        loop {
            term = term.mul(&x2).div_int((2 * n - 1) * (2 * n)).neg();
            sum = sum.add(&term);
            // alternating tail bounded by the next term once terms decrease
            let next = (2 * n + 2) as f64 * xmax.log2() - log2_factorial(2 * n + 2);
            if 2.0 * (n as f64) + 2.0 > xmax * xmax && next < -(x.bits as f64) {
                return sum.widen(&BigUint::one()).reduce_to(bits);
            }
            n += 1;
        }
    }

    /// Exponential via argument halving and the Taylor series.
    pub fn exp(&self) -> Self {
        let bits = self.bits;
        let xmax = self.abs_upper_f64();
        let mut halvings = 0u32;
        while xmax / 2f64.powi(halvings as i32) > 0.5 {
            halvings += 1;
        }
        let work = bits + 32 + 2 * halvings;
        let x = self.extend_to(work).div_pow2(halvings);
        let mut term = Self::from_int(1, work);
        let mut sum = term.clone();
        let mut n: u64 = 1;
        loop {
            term = term.mul(&x).div_int(n);
            sum = sum.add(&term);
            // remainder <= 2 * 0.5^(n+1) / (n+1)!
            let tail = 1.0 - (n + 1) as f64 - log2_factorial(n + 1);
            if tail < -(work as f64) {
                sum = sum.widen(&BigUint::one());
                break;
            }
            n += 1;
        }
        for _ in 0..halvings {
            sum = sum.square();
        }
        sum.reduce_to(bits)
    }

    /// Natural logarithm; `None` unless the enclosure is positive.
    pub fn ln(&self) -> Option<Self> {
        if !self.is_positive() {
            return None;
        }
        let bits = self.bits;
        // self = m * 2^k with m in [1, 2)
        let k = self.mant.bits() as i64 - 1 - bits as i64;
        let work = bits + 32 + (k.unsigned_abs() as u32).min(64);
        let x = self.extend_to(work);
        let m = if k >= 0 { x.div_pow2(k as u32) } else { x.mul_pow2((-k) as u32) };
        let one = Self::from_int(1, work);
        let z = m.sub(&one).div(&m.add(&one))?;
        let ln_m = atanh_series(&z).mul_int(2);
        let ln2 = atanh_series(&Self::from_int(1, work).div_int(3)).mul_int(2);
        Some(ln_m.add(&ln2.mul_int(k)).reduce_to(bits))
    }

    /// Square root; `None` for enclosures reaching below zero.
    pub fn sqrt(&self) -> Option<Self> {
        if self.mant.is_negative() {
            return None;
        }
        let a = self.mant.magnitude();
        let scaled = a << self.bits;
        let root = scaled.sqrt();
        let exact = &root * &root == scaled;
        let err = if self.err.is_zero() {
            BigUint::zero()
        } else if a > &self.err {
            // |sqrt(x) - sqrt(y)| <= |x - y| / sqrt(min)
            let lo = ((a - &self.err) << self.bits).sqrt();
            if lo.is_zero() {
                (&self.err << self.bits).sqrt() + 1u8
            } else {
                ceil_div(&(&self.err << self.bits), &lo)
            }
        } else {
            ((&self.err << 1u32) << self.bits).sqrt() + 1u8
        };
        Some(HighPrecisionReal {
            mant: BigInt::from(root),
            err: err + BigUint::from(u8::from(!exact)),
            bits: self.bits,
        })
    }

    /// `self^(1/n)` for positive values.
    pub fn nth_root(&self, n: u64) -> Option<Self> {
        assert!(n > 0);
        Some(self.ln()?.div_int(n).exp())
    }
}

fn log2_factorial(n: u64) -> f64 {
    (2..=n).map(|k| (k as f64).log2()).sum()
}

/// `atan(1/k)` from its alternating series.
fn atan_inv(k: u64, bits: u32) -> HighPrecisionReal {
    let k2 = k * k;
    let mut power = HighPrecisionReal::from_int(1, bits).div_int(k);
    let mut sum = power.clone();
    let mut n: u64 = 1;
    loop {
        power = power.div_int(k2);
        let term = power.div_int(2 * n + 1);
        sum = if n % 2 == 1 { sum.sub(&term) } else { sum.add(&term) };
        if power.mantissa().is_zero() {
            return sum.widen(&BigUint::from(2u8));
        }
        n += 1;
    }
}

/// `atanh(z) = z + z^3/3 + ...` for `|z| <= 1/3`.
fn atanh_series(z: &HighPrecisionReal) -> HighPrecisionReal {
    let z2 = z.square();
    let mut power = z.clone();
    let mut sum = z.clone();
    let mut n: u64 = 1;
    let bits = z.bits();
    let zmax = z.abs_upper_f64().clamp(1e-300, 0.34);
    loop {
        power = power.mul(&z2);
        sum = sum.add(&power.div_int(2 * n + 1));
        // tail <= zmax^(2n+3) / ((2n+3) (1 - zmax^2))
        let tail = (2 * n + 3) as f64 * zmax.log2() - ((2 * n + 3) as f64 * (1.0 - zmax * zmax)).log2();
        if tail < -(bits as f64) {
            return sum.widen(&BigUint::one());
        }
        n += 1;
    }
}

impl fmt::Display for HighPrecisionReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(((self.bits as f64) * std::f64::consts::LOG10_2) as usize);
        write!(f, "{}", self.to_decimal(digits))
    }
}

impl From<&HighPrecisionReal> for f64 {
    fn from(v: &HighPrecisionReal) -> f64 {
        v.to_f64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: u32 = 200;

    #[test]
    fn pi_digits() {
        let pi = HighPrecisionReal::pi(B);
        assert!(pi.to_decimal(40).starts_with("3.1415926535897932384626433832795028841971"));
        assert!(pi.radius_f64() < 1e-55);
    }

    #[test]
    fn cos_values() {
        let pi = HighPrecisionReal::pi(B);
        let c = pi.div_int(5).mul_int(2).cos();
        // cos 72 degrees = (sqrt 5 - 1) / 4
        let s5 = HighPrecisionReal::from_int(5, B).sqrt().unwrap();
        let expect = s5.sub(&HighPrecisionReal::from_int(1, B)).div_int(4);
        assert!(c.sub(&expect).mantissa().magnitude() <= &(c.error_ulps() + expect.error_ulps() + 2u8));
        assert!(c.to_decimal(15).starts_with("0.309016994374947"));
        assert!(pi.cos().to_decimal(30).starts_with("-1.0000000000"));
    }

    #[test]
    fn exp_and_ln() {
        let one = HighPrecisionReal::from_int(1, B);
        let e = one.exp();
        assert!(e.to_decimal(30).starts_with("2.718281828459045235360287471352"));
        let ln2 = HighPrecisionReal::from_int(2, B).ln().unwrap();
        assert!(ln2.to_decimal(30).starts_with("0.693147180559945309417232121458"));
        let back = ln2.exp();
        assert!(back.within(2.0, 1e-50));
        let r = HighPrecisionReal::from_int(2, B).nth_root(4).unwrap();
        assert!(r.to_decimal(12).starts_with("1.189207115002"));
        assert!(HighPrecisionReal::from_int(-1, B).ln().is_none());
    }

    #[test]
    fn sqrt_and_div() {
        let two = HighPrecisionReal::from_int(2, B);
        let s = two.sqrt().unwrap();
        assert!(s.to_decimal(20).starts_with("1.41421356237309504880"));
        let q = HighPrecisionReal::from_int(1, B).div(&HighPrecisionReal::from_int(3, B)).unwrap();
        assert!(q.to_decimal(20).starts_with("0.33333333333333333333"));
        assert!(two.div(&HighPrecisionReal::zero(B)).is_none());
    }

    #[test]
    fn certified_rounding() {
        let x = HighPrecisionReal::from_ratio(&BigRational::new(281.into(), 1.into()), 64);
        assert_eq!(x.certified_integer(), Some(BigInt::from(281)));
        let wide = x.clone().widen(&(BigUint::one() << 63u32));
        assert_eq!(wide.certified_integer(), None);
        let half = HighPrecisionReal::from_ratio(&BigRational::new(1.into(), 2.into()), 64);
        assert_eq!(half.certified_integer(), None);
    }

    #[test]
    fn enclosures_contain_truth() {
        // (1/3) * 3 must enclose 1
        let third = HighPrecisionReal::from_int(1, 40).div_int(3);
        let back = third.mul(&HighPrecisionReal::from_int(3, 40));
        let one = BigRational::one();
        assert!(back.lower() <= one && one <= back.upper());
    }
}
