//! Real balls `[mid ± rad]` with a dyadic midpoint and an upper-bound radius.

use super::mag::Mag;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// A real number known to lie in `[m - r, m + r]` where `m = mid * 2^exp`.
///
/// `prec` is the number of midpoint bits kept after each operation; the result
/// of a binary operation uses the larger precision of its operands.
#[derive(Clone, Debug, PartialEq)]
pub struct BallReal {
    mid: BigInt,
    exp: i64,
    rad: Mag,
    prec: u32,
}

pub(crate) fn shl_signed(x: &BigInt, k: i64) -> BigInt {
    if k >= 0 {
        x << (k as usize)
    } else {
        x >> ((-k) as usize)
    }
}

pub(crate) fn dyadic_to_rational(m: &BigInt, e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(m << (e as usize))
    } else {
        BigRational::new(m.clone(), BigInt::one() << ((-e) as usize))
    }
}

impl BallReal {
    pub fn from_dyadic(mid: BigInt, exp: i64, rad: Mag, prec: u32) -> BallReal {
        let mut b = BallReal {
            mid,
            exp,
            rad,
            prec,
        };
        b.normalize();
        b
    }

    pub fn zero(prec: u32) -> BallReal {
        BallReal::from_dyadic(BigInt::zero(), 0, Mag::ZERO, prec)
    }

    pub fn one(prec: u32) -> BallReal {
        BallReal::from_int(1, prec)
    }

    pub fn from_int(n: impl Into<BigInt>, prec: u32) -> BallReal {
        BallReal::from_dyadic(n.into(), 0, Mag::ZERO, prec)
    }

    /// Ball enclosing `q`; exact when the denominator is a power of two.
    pub fn from_rational(q: &BigRational, prec: u32) -> BallReal {
        let (n, d) = (q.numer(), q.denom());
        if d.is_one() {
            return BallReal::from_int(n.clone(), prec);
        }
        if d.magnitude().count_ones() == 1 {
            let tz = d.trailing_zeros().unwrap_or(0) as i64;
            return BallReal::from_dyadic(n.clone(), -tz, Mag::ZERO, prec);
        }
        let shift = (i64::from(prec) + 4 + d.bits() as i64 - n.bits() as i64).max(0);
        let scaled = n << (shift as usize);
        let (quot, rem) = scaled.div_mod_floor(d);
        let rad = if rem.is_zero() {
            Mag::ZERO
        } else {
            Mag::pow2(-shift)
        };
        BallReal::from_dyadic(quot, -shift, rad, prec)
    }

    pub fn from_ratio(n: i64, d: i64, prec: u32) -> BallReal {
        BallReal::from_rational(&BigRational::new(n.into(), d.into()), prec)
    }

    /// Ball enclosing the decimal `s`, widened by one unit in its last digit.
    pub fn parse_decimal(s: &str, prec: u32) -> Result<BallReal> {
        let t = s.trim();
        let (mant, e10) = match t.find(['e', 'E']) {
            Some(i) => {
                let e: i64 = t[i + 1..]
                    .parse()
                    .map_err(|_| Error::Schema(format!("bad exponent in {s:?}")))?;
                (&t[..i], e)
            }
            None => (t, 0),
        };
        let (neg, body) = match mant.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, mant.strip_prefix('+').unwrap_or(mant)),
        };
        let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
        if ip.is_empty() && fp.is_empty()
            || !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit())
        {
            return Err(Error::Schema(format!("not a decimal number: {s:?}")));
        }
        let digits: BigInt = format!("{ip}{fp}").parse().expect("digits");
        let scale = e10 - fp.len() as i64;
        let ten = BigInt::from(10);
        let pow = |k: i64| num_traits::pow(ten.clone(), k.unsigned_abs() as usize);
        let to_q = |m: BigInt| {
            if scale >= 0 {
                BigRational::from_integer(m * pow(scale))
            } else {
                BigRational::new(m, pow(scale))
            }
        };
        let mut value = to_q(digits);
        if neg {
            value = -value;
        }
        let ulp = to_q(BigInt::one());
        let b = BallReal::from_rational(&value, prec);
        let truncated = !fp.is_empty() || scale < 0;
        Ok(if truncated {
            b.add_error(&Mag::from_rational_up(&ulp))
        } else {
            b
        })
    }

    fn normalize(&mut self) {
        if self.mid.is_zero() {
            self.exp = 0;
            return;
        }
        let bits = self.mid.bits() as i64;
        let p = i64::from(self.prec.max(2));
        if bits > p {
            let k = bits - p;
            self.mid = shl_signed(&self.mid, -k);
            self.exp += k;
            self.rad = self.rad.add(&Mag::pow2(self.exp));
        }
        if let Some(tz) = self.mid.trailing_zeros() {
            if tz > 0 {
                self.mid >>= tz as usize;
                self.exp += tz as i64;
            }
        }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// Midpoint as `(mantissa, exponent)`.
    pub fn mid_dyadic(&self) -> (&BigInt, i64) {
        (&self.mid, self.exp)
    }

    pub fn with_prec(&self, prec: u32) -> BallReal {
        BallReal::from_dyadic(self.mid.clone(), self.exp, self.rad, prec)
    }

    pub fn radius(&self) -> Mag {
        self.rad
    }

    pub fn mid_ball(&self) -> BallReal {
        BallReal::from_dyadic(self.mid.clone(), self.exp, Mag::ZERO, self.prec)
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    pub fn add_error(&self, e: &Mag) -> BallReal {
        BallReal {
            mid: self.mid.clone(),
            exp: self.exp,
            rad: self.rad.add(e),
            prec: self.prec,
        }
    }

    pub fn mid_rational(&self) -> BigRational {
        dyadic_to_rational(&self.mid, self.exp)
    }

    pub fn rad_rational(&self) -> BigRational {
        let (m, e) = self.rad.to_dyadic();
        dyadic_to_rational(&m, e)
    }

    /// Upper bound for `|x|` over the ball.
    pub fn abs_upper(&self) -> Mag {
        Mag::from_bigint_up(&self.mid, self.exp).add(&self.rad)
    }

    /// Lower bound for `|x|` over the ball (zero if the ball contains zero).
    pub fn abs_lower(&self) -> Mag {
        if self.mid.is_zero() {
            return Mag::ZERO;
        }
        if self.rad.is_zero() {
            return Mag::from_bigint_down(&self.mid, self.exp);
        }
        let (rm, re) = self.rad.to_dyadic();
        let e = self.exp.min(re);
        let a = shl_signed(&self.mid.abs(), self.exp - e);
        let r = shl_signed(&rm, re - e);
        if a <= r {
            Mag::ZERO
        } else {
            Mag::from_bigint_down(&(a - r), e)
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.abs_lower().is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.mid.is_positive() && !self.contains_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mid.is_negative() && !self.contains_zero()
    }

    /// Sign of every point of the ball, if it is constant and nonzero.
    pub fn sign(&self) -> Option<i32> {
        if self.is_positive() {
            Some(1)
        } else if self.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn contains_rational(&self, q: &BigRational) -> bool {
        (self.mid_rational() - q).abs() <= self.rad_rational()
    }

    pub fn contains_int(&self, n: i64) -> bool {
        self.contains_rational(&BigRational::from_integer(n.into()))
    }

    /// Whether `other` lies entirely inside `self`.
    pub fn contains(&self, other: &BallReal) -> bool {
        (self.mid_rational() - other.mid_rational()).abs() + other.rad_rational()
            <= self.rad_rational()
    }

    pub fn overlaps(&self, other: &BallReal) -> bool {
        (self.mid_rational() - other.mid_rational()).abs()
            <= self.rad_rational() + other.rad_rational()
    }

    /// Intersection of two overlapping balls, or `None` if they are disjoint.
    pub fn intersect(&self, other: &BallReal) -> Option<BallReal> {
        if !self.overlaps(other) {
            return None;
        }
        let lo = (self.mid_rational() - self.rad_rational())
            .max(other.mid_rational() - other.rad_rational());
        let hi = (self.mid_rational() + self.rad_rational())
            .min(other.mid_rational() + other.rad_rational());
        let two = BigRational::from_integer(2.into());
        let m = (&lo + &hi) / &two;
        let r = (&hi - &lo) / &two;
        let prec = self.prec.max(other.prec);
        let c = BallReal::from_rational(&m, prec);
        Some(c.add_error(&Mag::from_rational_up(&r)))
    }

    pub fn neg(&self) -> BallReal {
        BallReal {
            mid: -self.mid.clone(),
            exp: self.exp,
            rad: self.rad,
            prec: self.prec,
        }
    }

    pub fn abs(&self) -> BallReal {
        if self.mid.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    fn top(&self) -> i64 {
        self.exp + self.mid.bits() as i64
    }

    pub fn add(&self, other: &BallReal) -> BallReal {
        let prec = self.prec.max(other.prec);
        if other.mid.is_zero() {
            return BallReal::from_dyadic(self.mid.clone(), self.exp, self.rad.add(&other.rad), prec);
        }
        if self.mid.is_zero() {
            return BallReal::from_dyadic(other.mid.clone(), other.exp, self.rad.add(&other.rad), prec);
        }
        let gap = i64::from(prec) + 64;
        if self.top() - other.top() > gap {
            let rad = self.rad.add(&other.abs_upper());
            return BallReal::from_dyadic(self.mid.clone(), self.exp, rad, prec);
        }
        if other.top() - self.top() > gap {
            let rad = other.rad.add(&self.abs_upper());
            return BallReal::from_dyadic(other.mid.clone(), other.exp, rad, prec);
        }
        let e = self.exp.min(other.exp);
        let mid = shl_signed(&self.mid, self.exp - e) + shl_signed(&other.mid, other.exp - e);
        BallReal::from_dyadic(mid, e, self.rad.add(&other.rad), prec)
    }

    pub fn sub(&self, other: &BallReal) -> BallReal {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &BallReal) -> BallReal {
        let prec = self.prec.max(other.prec);
        let mid = &self.mid * &other.mid;
        let a = Mag::from_bigint_up(&self.mid, self.exp);
        let b = Mag::from_bigint_up(&other.mid, other.exp);
        let rad = a
            .mul(&other.rad)
            .add(&b.mul(&self.rad))
            .add(&self.rad.mul(&other.rad));
        BallReal::from_dyadic(mid, self.exp + other.exp, rad, prec)
    }

    pub fn sqr(&self) -> BallReal {
        self.mul(self)
    }

    pub fn mul_int(&self, k: i64) -> BallReal {
        self.mul(&BallReal::from_int(k, self.prec))
    }

    pub fn mul_2exp(&self, k: i64) -> BallReal {
        BallReal {
            mid: self.mid.clone(),
            exp: if self.mid.is_zero() { 0 } else { self.exp + k },
            rad: self.rad.mul_2exp(k),
            prec: self.prec,
        }
    }

    pub fn mul_rational(&self, q: &BigRational) -> BallReal {
        if q.denom().is_one() {
            return self.mul(&BallReal::from_int(q.numer().clone(), self.prec));
        }
        self.mul(&BallReal::from_int(q.numer().clone(), self.prec))
            .div(&BallReal::from_int(q.denom().clone(), self.prec))
            .expect("nonzero denominator")
    }

    pub fn div_int(&self, k: i64) -> BallReal {
        self.div(&BallReal::from_int(k, self.prec))
            .expect("division by a nonzero integer")
    }

    /// `self / other`; fails if `other` contains zero.
    pub fn div(&self, other: &BallReal) -> Result<BallReal> {
        let prec = self.prec.max(other.prec);
        let lower = other.abs_lower();
        if lower.is_zero() {
            return Err(Error::Domain("division by a ball containing zero".into()));
        }
        let mb = Mag::from_bigint_down(&other.mid, other.exp);
        let denom = mb.mul_down(&lower);
        if self.mid.is_zero() {
            let rad = self.rad.div(&lower);
            return Ok(BallReal::from_dyadic(BigInt::zero(), 0, rad, prec));
        }
        let shift = (i64::from(prec) + 8 + other.mid.bits() as i64 - self.mid.bits() as i64).max(0);
        let num = &self.mid << (shift as usize);
        let (q, r) = num.div_rem(&other.mid);
        let qexp = self.exp - shift - other.exp;
        let mut rad = if r.is_zero() {
            Mag::ZERO
        } else {
            Mag::pow2(qexp)
        };
        if !(self.rad.is_zero() && other.rad.is_zero()) {
            let a = Mag::from_bigint_up(&self.mid, self.exp);
            let b = Mag::from_bigint_up(&other.mid, other.exp);
            let prop = a.mul(&other.rad).add(&b.mul(&self.rad)).div(&denom);
            rad = rad.add(&prop);
        }
        Ok(BallReal::from_dyadic(q, qexp, rad, prec))
    }

    pub fn recip(&self) -> Result<BallReal> {
        BallReal::one(self.prec).div(self)
    }

    pub fn pow_u(&self, n: u64) -> BallReal {
        let mut result = BallReal::one(self.prec);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.sqr();
            }
        }
        result
    }

    pub fn pow_i(&self, n: i64) -> Result<BallReal> {
        if n >= 0 {
            Ok(self.pow_u(n as u64))
        } else {
            self.pow_u(n.unsigned_abs()).recip()
        }
    }

    /// Square root; fails unless the ball lies in `[0, inf)` with a positive lower end.
    pub fn sqrt(&self) -> Result<BallReal> {
        if self.mid.is_zero() && self.rad.is_zero() {
            return Ok(BallReal::zero(self.prec));
        }
        if !self.is_positive() {
            return Err(Error::Domain("square root of a ball not contained in (0, inf)".into()));
        }
        let prec = i64::from(self.prec);
        let mut shift = (2 * prec + 8 - self.mid.bits() as i64).max(0);
        if (self.exp - shift) % 2 != 0 {
            shift += 1;
        }
        let m = &self.mid << (shift as usize);
        let root = m.sqrt();
        let e = (self.exp - shift) / 2;
        let exact = &root * &root == m;
        let mut rad = if exact { Mag::ZERO } else { Mag::pow2(e) };
        if !self.rad.is_zero() {
            let lo = self.abs_lower().sqrt_down();
            rad = rad.add(&self.rad.div(&lo.mul_2exp(1)));
        }
        Ok(BallReal::from_dyadic(root, e, rad, self.prec))
    }

    pub fn cmp_mid(&self, other: &BallReal) -> Ordering {
        self.mid_rational().cmp(&other.mid_rational())
    }

    /// Nearest f64 to the midpoint.
    pub fn to_f64(&self) -> f64 {
        if self.mid.is_zero() {
            return 0.0;
        }
        let bits = self.mid.bits() as i64;
        let (m, e) = if bits > 60 {
            (shl_signed(&self.mid, 60 - bits), self.exp + bits - 60)
        } else {
            (self.mid.clone(), self.exp)
        };
        let f = m.to_f64().unwrap_or(f64::NAN);
        f * 2f64.powi(e.clamp(-1100, 1100) as i32)
    }

    pub fn radius_f64(&self) -> f64 {
        self.rad.to_f64()
    }

    /// `rad / |mid|`, infinite for a zero midpoint with positive radius.
    pub fn rel_width(&self) -> f64 {
        if self.rad.is_zero() {
            return 0.0;
        }
        if self.mid.is_zero() {
            return f64::INFINITY;
        }
        let lm = (self.mid.bits() as f64 - 1.0) + self.exp as f64;
        2f64.powf(self.rad.log2() - lm)
    }

    /// Midpoint in scientific notation with `digits` significant digits.
    pub fn to_sci_string(&self, digits: usize) -> String {
        rational_to_sci(&self.mid_rational(), digits)
    }
}

pub fn rational_to_sci(q: &BigRational, digits: usize) -> String {
    if q.is_zero() {
        return "0".into();
    }
    let digits = digits.max(1);
    let neg = q.is_negative();
    let x = q.abs();
    let ten = BigRational::from_integer(10.into());
    let approx = x.numer().bits() as f64 - x.denom().bits() as f64;
    let mut e10 = (approx * std::f64::consts::LOG10_2).floor() as i64;
    let pow10 = |k: i64| {
        let p = num_traits::pow(ten.clone(), k.unsigned_abs() as usize);
        if k >= 0 {
            p
        } else {
            p.recip()
        }
    };
    while x >= pow10(e10 + 1) {
        e10 += 1;
    }
    while x < pow10(e10) {
        e10 -= 1;
    }
    let scaled = &x * pow10(digits as i64 - 1 - e10);
    let mut n = scaled.round().to_integer();
    if n == num_traits::pow(BigInt::from(10), digits) {
        n /= 10;
        e10 += 1;
    }
    let s = n.to_string();
    let (head, tail) = s.split_at(1);
    let sign = if neg { "-" } else { "" };
    if tail.is_empty() {
        format!("{sign}{head}e{e10}")
    } else {
        format!("{sign}{head}.{tail}e{e10}")
    }
}

impl fmt::Display for BallReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((f64::from(self.prec) * std::f64::consts::LOG10_2) as usize).clamp(1, 40);
        write!(f, "[{} +/- {:.2e}]", self.to_sci_string(digits), self.radius_f64())
    }
}

impl Mag {
    /// Upper bound for a non-negative rational.
    pub fn from_rational_up(q: &BigRational) -> Mag {
        if q.is_zero() {
            return Mag::ZERO;
        }
        let (n, d) = (q.numer().abs(), q.denom().clone());
        let shift = 64 + d.bits() as i64 - n.bits() as i64;
        let scaled = shl_signed(&n, shift.max(0));
        let dd = shl_signed(&d, (-shift).max(0));
        let quot = scaled.div_ceil(&dd);
        Mag::from_bigint_up(&quot, -shift)
    }

    /// Lower bound for the product.
    pub fn mul_down(&self, other: &Mag) -> Mag {
        let (a, ea) = self.to_dyadic();
        let (b, eb) = other.to_dyadic();
        Mag::from_bigint_down(&(a * b), ea + eb)
    }
}

macro_rules! ball_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl std::ops::$tr<&BallReal> for &BallReal {
            type Output = BallReal;
            fn $m(self, rhs: &BallReal) -> BallReal {
                BallReal::$f(self, rhs)
            }
        }
        impl std::ops::$tr<BallReal> for BallReal {
            type Output = BallReal;
            fn $m(self, rhs: BallReal) -> BallReal {
                BallReal::$f(&self, &rhs)
            }
        }
    };
}

ball_binop!(Add, add, add);
ball_binop!(Sub, sub, sub);
ball_binop!(Mul, mul, mul);

impl std::ops::Neg for &BallReal {
    type Output = BallReal;
    fn neg(self) -> BallReal {
        BallReal::neg(self)
    }
}
