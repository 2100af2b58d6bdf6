//! Arbitrary-precision scalars.
//!
//! Provides:
//! - [`Rational`]: exact rational numbers, the carrier for weight-system parameters
//! - [`Real`]: a binary floating value with an explicit working precision in bits
//!
//! All arithmetic between two [`Real`]s is carried out at the larger of the two
//! precisions. A `Real` built from a `Rational` remembers the exact value and
//! keeps it alive through `+ - * /` and integer powers, so that "is this a
//! non-positive integer" questions (series termination, gamma poles) are decided
//! exactly on the normal path. Transcendental operations drop the exact tag.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use dashu::base::{Abs, BitTest, UnsignedAbs};
use dashu::float::round::mode::HalfEven;
use dashu::float::FBig;
use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;

use crate::error::{Error, Result};

pub(crate) type F = FBig<HalfEven, 2>;

/// Minimum working precision accepted anywhere in the crate.
pub const MIN_PRECISION: u32 = 64;

/// Guard bits used inside multi-stage transcendental evaluations.
const GUARD: u32 = 64;

// ---- Rational ----

/// An exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rational(RBig);

impl Rational {
    pub fn new(numerator: i64, denominator: i64) -> Self {
        assert!(denominator != 0, "rational with zero denominator");
        let mut num = IBig::from(numerator);
        if denominator < 0 {
            num = -num;
        }
        Rational(RBig::from_parts(num, UBig::from(denominator.unsigned_abs())))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(RBig::from(n))
    }

    pub fn zero() -> Self {
        Rational(RBig::ZERO)
    }

    pub fn one() -> Self {
        Rational(RBig::ONE)
    }

    pub fn is_zero(&self) -> bool {
        self.0 == RBig::ZERO
    }

    pub fn is_integer(&self) -> bool {
        *self.0.denominator() == UBig::ONE
    }

    pub fn is_negative(&self) -> bool {
        self.0 < RBig::ZERO
    }

    /// The value as `i64` when it is an integer that fits.
    pub fn as_i64(&self) -> Option<i64> {
        if !self.is_integer() {
            return None;
        }
        i64::try_from(self.0.numerator().clone()).ok()
    }

    /// Whether `self - other` is an integer (the AT-condition test).
    pub fn differs_by_integer(&self, other: &Rational) -> bool {
        self.sub(other).is_integer()
    }

    pub fn add(&self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }

    pub fn sub(&self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }

    pub fn mul(&self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }

    pub fn div(&self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(&self.0 / &rhs.0)
    }

    pub fn neg(&self) -> Rational {
        Rational(-self.0.clone())
    }

    fn recip(&self) -> Rational {
        assert!(!self.is_zero(), "reciprocal of zero");
        let num = self.0.numerator();
        let den = self.0.denominator();
        let mut new_num = IBig::from(den.clone());
        if num < &IBig::ZERO {
            new_num = -new_num;
        }
        Rational(RBig::from_parts(new_num, num.clone().unsigned_abs()))
    }

    fn pow_int(&self, n: i64) -> Rational {
        if n == 0 {
            return Rational::one();
        }
        let base = if n < 0 { self.recip() } else { self.clone() };
        let mut acc = Rational::one();
        let mut sq = base;
        let mut e = n.unsigned_abs();
        loop {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            sq = sq.mul(&sq.clone());
        }
        acc
    }

    /// Correctly rounded conversion at `precision` bits.
    pub fn to_real(&self, precision: u32) -> Real {
        assert!(precision >= MIN_PRECISION, "precision below {MIN_PRECISION}");
        let value = self.0.to_float::<HalfEven, 2>(precision as usize).value();
        Real { value, precision, exact: Some(self.clone()) }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numerator())
        } else {
            write!(f, "{}/{}", self.0.numerator(), self.0.denominator())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `a/b`, plain integers, and decimal/scientific notation
    /// (`-1`, `1/3`, `0.25`, `4.5e-3`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidParams(format!("cannot parse rational from '{s}'"));
        if s.is_empty() {
            return Err(bad());
        }
        if let Some((num, den)) = s.split_once('/') {
            let n = IBig::from_str(num.trim()).map_err(|_| bad())?;
            let d = IBig::from_str(den.trim()).map_err(|_| bad())?;
            if d == IBig::ZERO {
                return Err(bad());
            }
            let mut n = n;
            if d < IBig::ZERO {
                n = -n;
            }
            return Ok(Rational(RBig::from_parts(n, d.unsigned_abs())));
        }
        // decimal / scientific
        let (mant, exp10) = match s.split_once(['e', 'E']) {
            Some((m, e)) => (m, i64::from_str(e).map_err(|_| bad())?),
            None => (s, 0i64),
        };
        let (int_part, frac_part) = match mant.split_once('.') {
            Some((i, fr)) => (i, fr),
            None => (mant, ""),
        };
        if frac_part.contains(['+', '-']) {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        if digits.is_empty() || digits == "+" || digits == "-" {
            return Err(bad());
        }
        let n = IBig::from_str(&digits).map_err(|_| bad())?;
        let shift = exp10 - frac_part.len() as i64;
        let scale = Rational::from_integer(10).pow_int(shift);
        Ok(Rational(RBig::from(n)).mul(&scale))
    }
}

// ---- Real ----

/// An arbitrary-precision floating value with an explicit precision in bits.
#[derive(Clone)]
pub struct Real {
    value: F,
    precision: u32,
    exact: Option<Rational>,
}

impl Real {
    pub fn zero(precision: u32) -> Self {
        Rational::zero().to_real(precision)
    }

    pub fn one(precision: u32) -> Self {
        Rational::one().to_real(precision)
    }

    pub fn from_int(n: i64, precision: u32) -> Self {
        Rational::from_integer(n).to_real(precision)
    }

    pub fn from_rational(r: &Rational, precision: u32) -> Self {
        r.to_real(precision)
    }

    pub(crate) fn from_fbig(value: F, precision: u32) -> Self {
        let value = value.with_precision(precision as usize).value();
        Real { value, precision, exact: None }
    }

    pub(crate) fn fbig(&self) -> &F {
        &self.value
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// Re-round to a different working precision. The exact tag survives.
    pub fn with_precision(&self, precision: u32) -> Real {
        assert!(precision >= MIN_PRECISION, "precision below {MIN_PRECISION}");
        match &self.exact {
            Some(r) => r.to_real(precision),
            None => Real {
                value: self.value.clone().with_precision(precision as usize).value(),
                precision,
                exact: None,
            },
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        self.exact.as_ref()
    }

    #[cfg(test)]
    pub(crate) fn without_exact(&self) -> Real {
        Real { value: self.value.clone(), precision: self.precision, exact: None }
    }

    pub fn is_zero(&self) -> bool {
        self.value == F::ZERO
    }

    pub fn is_negative(&self) -> bool {
        self.value < F::ZERO
    }

    pub fn is_positive(&self) -> bool {
        self.value > F::ZERO
    }

    pub fn abs(&self) -> Real {
        Real {
            value: self.value.clone().abs(),
            precision: self.precision,
            exact: self.exact.as_ref().map(|r| if r.is_negative() { r.neg() } else { r.clone() }),
        }
    }

    pub fn max(&self, other: &Real) -> Real {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().value()
    }

    /// x + k for integer k, the most common parameter shift in the formulas.
    pub fn shift(&self, k: i64) -> Real {
        self + &Real::from_int(k, self.precision)
    }

    fn binary_op(
        &self,
        rhs: &Real,
        fop: impl Fn(&F, &F) -> F,
        eop: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Real {
        let precision = self.precision.max(rhs.precision);
        if let (Some(a), Some(b)) = (&self.exact, &rhs.exact) {
            return eop(a, b).to_real(precision);
        }
        let value = fop(&self.value, &rhs.value).with_precision(precision as usize).value();
        Real { value, precision, exact: None }
    }

    // -- transcendental operations (the exact tag drops, except on pow_int) --

    /// Integer power with binary powering; `0^0 = 1`.
    pub fn pow_int(&self, n: i64) -> Real {
        if n == 0 {
            return Real::one(self.precision);
        }
        if let Some(r) = &self.exact {
            return r.pow_int(n).to_real(self.precision);
        }
        let wp = (self.precision + GUARD) as usize;
        let v = self.value.clone().with_precision(wp).value();
        let base = if n < 0 { F::ONE.with_precision(wp).value() / v } else { v };
        let mut acc = F::ONE.with_precision(wp).value();
        let mut sq = base;
        let mut e = n.unsigned_abs();
        loop {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            sq = &sq * &sq;
        }
        Real::from_fbig(acc, self.precision)
    }

    pub fn sqrt(&self) -> Real {
        assert!(!self.is_negative(), "sqrt of negative value");
        let wp = (self.precision + GUARD) as usize;
        Real::from_fbig(self.value.clone().with_precision(wp).value().sqrt(), self.precision)
    }

    /// Natural logarithm, split as `ln(m 2^K) = K ln 2 + ln m` so that the
    /// backend only ever sees arguments in `[1/2, 2)`.
    pub fn ln(&self) -> Real {
        assert!(self.is_positive(), "ln of non-positive value");
        let wp = self.precision + GUARD;
        let repr = self.value.repr();
        let bits = repr.significand().bit_len() as isize;
        let k = repr.exponent() + bits - 1; // value in [2^k, 2^{k+1})
        if k == 0 || k == -1 {
            let v = self.value.clone().with_precision(wp as usize).value().ln();
            return Real::from_fbig(v, self.precision);
        }
        let mantissa = F::from_parts(repr.significand().clone(), repr.exponent() - k)
            .with_precision(wp as usize)
            .value();
        let ln_m = mantissa.ln();
        let total = &ln_m + &(&ln2(wp) * &F::from(k as i64));
        Real::from_fbig(total, self.precision)
    }

    /// Exponential with range reduction `exp(x) = 2^k exp(x - k ln 2)`.
    pub fn exp(&self) -> Real {
        if self.is_zero() {
            return Real::one(self.precision);
        }
        let wp = self.precision + GUARD;
        let approx = self.to_f64();
        assert!(approx.abs() < 9.0e15, "exp argument out of supported range");
        let k = (approx / std::f64::consts::LN_2).round() as i64;
        let x = self.value.clone().with_precision(wp as usize).value();
        let r = &x - &(&ln2(wp) * &F::from(k));
        let e = r.exp();
        Real::from_fbig(e * F::from_parts(IBig::ONE, k as isize), self.precision)
    }

    /// `self^exponent`. Routes integer exponents through binary powering,
    /// everything else through `exp(y ln x)` (requires `self > 0`).
    pub fn pow(&self, exponent: &Real) -> Real {
        if let Some(n) = exponent.integer_value() {
            return self.pow_int(n);
        }
        assert!(self.is_positive(), "pow with non-integer exponent needs positive base");
        let out_prec = self.precision.max(exponent.precision);
        let wp = out_prec + GUARD;
        let ln_x = self.with_precision(wp).ln();
        let prod = &ln_x * &exponent.with_precision(wp);
        prod.exp().with_precision(out_prec)
    }

    // -- integer detection --

    /// The value as `i64` when it is *exactly* an integer that fits.
    pub fn integer_value(&self) -> Option<i64> {
        if let Some(r) = &self.exact {
            return r.as_i64();
        }
        if self.is_zero() {
            return Some(0);
        }
        let t = self.value.trunc();
        if t != self.value {
            return None;
        }
        let repr = t.repr();
        if repr.exponent() < 0 {
            return None;
        }
        let v = repr.significand() << (repr.exponent() as usize);
        i64::try_from(v).ok()
    }

    /// Detects a non-positive integer: exactly when the value carries a
    /// rational tag, else within absolute distance `2^(-precision/2)`.
    /// Returns the magnitude `m` such that `self = -m`.
    pub fn nonpositive_integer(&self) -> Option<u64> {
        if let Some(r) = &self.exact {
            let n = r.as_i64()?;
            return if n <= 0 { Some(n.unsigned_abs()) } else { None };
        }
        let approx = self.to_f64();
        if approx > 0.5 || approx < -(2f64.powi(52)) {
            return None;
        }
        let n = approx.round() as i64;
        if n > 0 {
            return None;
        }
        let dist = (self - &Real::from_int(n, self.precision)).abs();
        let tol = Real::two_pow(-((self.precision / 2) as i64), self.precision);
        if dist <= tol {
            Some(n.unsigned_abs())
        } else {
            None
        }
    }

    /// `2^k` as a Real.
    pub fn two_pow(k: i64, precision: u32) -> Real {
        Real::from_fbig(F::from_parts(IBig::ONE, k as isize), precision)
    }

    pub fn pi(precision: u32) -> Real {
        Real::from_fbig(pi(precision + GUARD), precision)
    }

    /// `|a - b| / max(1, |a|, |b|)` — the deviation measure used by all checks.
    pub fn rel_dev(a: &Real, b: &Real) -> Real {
        let diff = (a - b).abs();
        let scale = Real::one(a.precision.max(b.precision)).max(&a.abs()).max(&b.abs());
        &diff / &scale
    }

    // -- decimal formatting --

    /// Default digit count at this precision: `ceil(precision log10 2) + 2`.
    pub fn default_digits(precision: u32) -> usize {
        (precision as f64 * std::f64::consts::LOG10_2).ceil() as usize + 2
    }

    /// Deterministic scientific-notation rendering with `digits` significant
    /// digits, e.g. `-3.3333...e-1`. Round-trips through [`Rational::from_str`]
    /// losslessly when `digits >= default_digits(precision)`.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        let repr = self.value.repr();
        let neg = self.is_negative();
        let m = repr.significand().clone().abs();
        let e = repr.exponent();
        let bits = m.bit_len() as isize;
        // exact big-integer path for sane exponents, float fallback beyond
        let (digits_str, k) = if e.unsigned_abs() + bits.unsigned_abs() < 2_000_000 {
            let mut k = (((e + bits) as f64) * std::f64::consts::LOG10_2).floor() as i64;
            loop {
                let t = digits as i64 - 1 - k;
                let n = scaled_round(&m, e, t);
                let lo = IBig::from(10).pow(digits - 1);
                let hi = IBig::from(10).pow(digits);
                if n < lo {
                    k -= 1;
                } else if n >= hi {
                    k += 1;
                } else {
                    break (n.to_string(), k);
                }
            }
        } else {
            self.decimal_fallback(digits)
        };
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push_str(&digits_str[..1]);
        if digits_str.len() > 1 {
            out.push('.');
            out.push_str(&digits_str[1..]);
        }
        out.push('e');
        out.push_str(&k.to_string());
        out
    }

    fn decimal_fallback(&self, digits: usize) -> (String, i64) {
        let wp = self.precision + 2 * GUARD;
        let v = self.abs().with_precision(wp);
        let ln10 = Real::from_int(10, wp).ln();
        let k = (&v.ln() / &ln10).to_f64().floor() as i64;
        let mut mant = (&v.ln() - &(&ln10 * &Real::from_int(k, wp))).exp();
        let mut s = String::new();
        for _ in 0..digits {
            let d = mant.to_f64().floor().clamp(0.0, 9.0) as u8;
            s.push((b'0' + d) as char);
            mant = &(&mant - &Real::from_int(d as i64, wp)) * &Real::from_int(10, wp);
        }
        (s, k)
    }
}

/// Round-half-even of `m 2^e 10^t` to an integer (`m >= 0`).
fn scaled_round(m: &IBig, e: isize, t: i64) -> IBig {
    let mut num = m.clone();
    let mut den = IBig::ONE;
    if e >= 0 {
        num <<= e as usize;
    } else {
        den <<= (-e) as usize;
    }
    if t >= 0 {
        num *= IBig::from(10).pow(t as usize);
    } else {
        den *= IBig::from(10).pow((-t) as usize);
    }
    let q = &num / &den;
    let r = &num - &(&q * &den);
    let twice: IBig = r * IBig::from(2);
    match twice.cmp(&den) {
        Ordering::Less => q,
        Ordering::Greater => q + 1,
        Ordering::Equal => {
            if (q.clone() % IBig::from(2)) == IBig::ZERO {
                q
            } else {
                q + 1
            }
        }
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string(Real::default_digits(self.precision)))
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (p={})", self.to_decimal_string(12), self.precision)
    }
}

macro_rules! real_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                self.binary_op(rhs, |a, b| $trait::$method(a, b), |a, b| a.$method(b))
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                $trait::$method(&self, rhs)
            }
        }
    };
}

real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);

impl Div<&Real> for &Real {
    type Output = Real;
    fn div(self, rhs: &Real) -> Real {
        assert!(!rhs.is_zero(), "Real division by zero");
        self.binary_op(rhs, |a, b| a / b, |a, b| a.div(b))
    }
}

impl Div<Real> for Real {
    type Output = Real;
    fn div(self, rhs: Real) -> Real {
        (&self) / (&rhs)
    }
}

impl Div<&Real> for Real {
    type Output = Real;
    fn div(self, rhs: &Real) -> Real {
        (&self) / rhs
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real {
            value: -self.value.clone(),
            precision: self.precision,
            exact: self.exact.as_ref().map(|r| r.neg()),
        }
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -&self
    }
}

// ---- cached constants ----

fn const_cache() -> &'static Mutex<HashMap<(u8, u32), F>> {
    static CACHE: OnceLock<Mutex<HashMap<(u8, u32), F>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn ln2(wp: u32) -> F {
    let key = (0u8, wp);
    if let Some(v) = const_cache().lock().unwrap().get(&key) {
        return v.clone();
    }
    let v = F::from(2).with_precision(wp as usize).value().ln();
    const_cache().lock().unwrap().insert(key, v.clone());
    v
}

/// Machin's formula: pi = 16 atan(1/5) - 4 atan(1/239).
pub(crate) fn pi(wp: u32) -> F {
    let key = (1u8, wp);
    if let Some(v) = const_cache().lock().unwrap().get(&key) {
        return v.clone();
    }
    let inner = (wp + 32) as usize;
    let v = &(atan_inv(5, inner) * F::from(16)) - &(atan_inv(239, inner) * F::from(4));
    let v = v.with_precision(wp as usize).value();
    const_cache().lock().unwrap().insert(key, v.clone());
    v
}

/// atan(1/k) by Taylor series, for small integer k.
fn atan_inv(k: i64, wp: usize) -> F {
    let x = (F::ONE.with_precision(wp).value() / F::from(k)).with_precision(wp).value();
    let x2 = &x * &x;
    let mut power = x.clone();
    let mut total = x;
    let mut j = 1i64;
    loop {
        power = &power * &x2;
        let term = &power / &F::from(2 * j + 1);
        let mag = term.repr().exponent() + term.repr().significand().bit_len() as isize;
        if mag < -(wp as isize + 2) {
            break;
        }
        if j % 2 == 1 {
            total = &total - &term;
        } else {
            total = &total + &term;
        }
        j += 1;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI_50: &str = "3.14159265358979323846264338327950288419716939937511";
    const LN2_50: &str = "0.69314718055994530941723212145817656807550013436026";
    const SQRT2_50: &str = "1.41421356237309504880168872420969807856967187537695";
    const E_50: &str = "2.71828182845904523536028747135266249775724709369996";

    fn close(a: &Real, s: &str) {
        let b = Rational::from_str(s).unwrap().to_real(a.precision());
        let dev = Real::rel_dev(a, &b);
        let tol = Real::two_pow(-160, a.precision());
        assert!(dev <= tol, "{a} vs {s}: dev {dev}");
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(Rational::from_str("1/3").unwrap().to_string(), "1/3");
        assert_eq!(Rational::from_str("0.25").unwrap().to_string(), "1/4");
        assert_eq!(Rational::from_str("-1").unwrap().to_string(), "-1");
        assert_eq!(Rational::from_str("4.5e-3").unwrap().to_string(), "9/2000");
        assert_eq!(Rational::from_str("-2/4").unwrap().to_string(), "-1/2");
        assert!(Rational::from_str("x").is_err());
        assert!(Rational::from_str("1/0").is_err());
    }

    #[test]
    fn precision_follows_the_larger_operand() {
        let a = Real::from_int(1, 256);
        let b = Real::from_int(3, 192);
        assert_eq!((&a / &b).precision(), 256);
        assert_eq!((&a + &b).precision(), 256);
    }

    #[test]
    fn exact_tag_survives_field_ops_and_drops_on_transcendentals() {
        let third = Rational::from_str("1/3").unwrap().to_real(128);
        let sum = &third + &third;
        assert_eq!(sum.exact().unwrap().to_string(), "2/3");
        assert!(sum.sqrt().exact().is_none());
        assert_eq!(third.pow_int(2).exact().unwrap().to_string(), "1/9");
    }

    #[test]
    fn pi_matches_reference() {
        close(&Real::pi(256), PI_50);
    }

    #[test]
    fn ln_exp_sqrt_match_references() {
        let two = Real::from_int(2, 256);
        close(&two.ln(), LN2_50);
        close(&two.sqrt(), SQRT2_50);
        close(&Real::one(256).exp(), E_50);
    }

    #[test]
    fn ln_and_exp_handle_huge_exponents() {
        // ln(3 * 2^(5*10^9)) = 5e9 ln2 + ln 3, then exp round-trips
        let p = 256;
        let x = Real::from_fbig(F::from_parts(IBig::from(3), 5_000_000_000isize), p);
        let l = x.ln();
        let expected = &(&Real::from_int(5_000_000_000, p) * &Real::from_int(2, p).ln())
            + &Real::from_int(3, p).ln();
        assert!(Real::rel_dev(&l, &expected) <= Real::two_pow(-200, p));
        let back = l.exp();
        assert!(Real::rel_dev(&back, &x) <= Real::two_pow(-200, p));
    }

    #[test]
    fn pow_integer_and_fractional() {
        let three = Real::from_int(3, 128);
        assert_eq!(three.pow_int(4).exact().unwrap().to_string(), "81");
        assert_eq!(three.pow_int(0).exact().unwrap().to_string(), "1");
        assert_eq!(three.pow_int(-2).exact().unwrap().to_string(), "1/9");
        let half = Rational::from_str("1/2").unwrap().to_real(256);
        close(&Real::from_int(2, 256).pow(&half), SQRT2_50);
    }

    #[test]
    fn nonpositive_integer_detection() {
        assert_eq!(Real::from_int(-3, 128).nonpositive_integer(), Some(3));
        assert_eq!(Real::from_int(0, 128).nonpositive_integer(), Some(0));
        assert_eq!(Real::from_int(2, 128).nonpositive_integer(), None);
        let third = Rational::from_str("-1/3").unwrap().to_real(128);
        assert_eq!(third.nonpositive_integer(), None);
        // float path: -3 + 2^-100 is indistinguishable at precision 128
        let nudged = &Real::from_int(-3, 128).without_exact() + &Real::two_pow(-100, 128);
        assert_eq!(nudged.nonpositive_integer(), Some(3));
        // but -3 + 2^-30 is not
        let far = &Real::from_int(-3, 128).without_exact() + &Real::two_pow(-30, 128);
        assert_eq!(far.nonpositive_integer(), None);
    }

    #[test]
    fn decimal_string_round_trips() {
        let vals = ["1/3", "-22/7", "355/113", "1/1048576", "123456789/2"];
        for s in vals {
            let r = Rational::from_str(s).unwrap().to_real(256);
            let text = r.to_decimal_string(Real::default_digits(256));
            let back = Rational::from_str(&text).unwrap().to_real(256);
            assert_eq!(r, back, "{s} -> {text}");
        }
        assert_eq!(Real::zero(64).to_decimal_string(10), "0");
    }

    #[test]
    fn rel_dev_uses_the_stated_scale() {
        let a = Real::from_int(1000, 128);
        let b = Real::from_int(1001, 128);
        let d = Real::rel_dev(&a, &b);
        let expected = Rational::from_str("1/1001").unwrap().to_real(128);
        assert!(Real::rel_dev(&d, &expected) <= Real::two_pow(-100, 128));
        // absolute behaviour near zero
        let z = Real::zero(128);
        let tiny = Real::two_pow(-60, 128);
        assert_eq!(Real::rel_dev(&z, &tiny), tiny);
    }
}
