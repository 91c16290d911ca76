//! Unsigned dyadic magnitudes used as ball radii.
//!
//! A `Mag` is `man * 2^exp` with a mantissa of at most [`MAG_BITS`] bits. Every
//! operation rounds away from zero, so a `Mag` produced from some quantity is
//! always an upper bound for it. The `*_down` variants round toward zero instead
//! and are only used for denominators.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

pub const MAG_BITS: u32 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mag {
    man: u64,
    exp: i64,
}

fn bits_u128(x: u128) -> u32 {
    128 - x.leading_zeros()
}

impl Mag {
    pub const ZERO: Mag = Mag { man: 0, exp: 0 };

    fn from_u128_up(man: u128, exp: i64) -> Mag {
        if man == 0 {
            return Mag::ZERO;
        }
        let bits = bits_u128(man);
        if bits <= MAG_BITS {
            return Mag {
                man: man as u64,
                exp,
            };
        }
        let shift = bits - MAG_BITS;
        let lost = man & ((1u128 << shift) - 1);
        let mut m = (man >> shift) + u128::from(lost != 0);
        let mut e = exp + i64::from(shift);
        if bits_u128(m) > MAG_BITS {
            m = (m + 1) >> 1;
            e += 1;
        }
        Mag { man: m as u64, exp: e }
    }

    fn from_u128_down(man: u128, exp: i64) -> Mag {
        if man == 0 {
            return Mag::ZERO;
        }
        let bits = bits_u128(man);
        if bits <= MAG_BITS {
            return Mag {
                man: man as u64,
                exp,
            };
        }
        let shift = bits - MAG_BITS;
        Mag {
            man: (man >> shift) as u64,
            exp: exp + i64::from(shift),
        }
    }

    pub fn pow2(exp: i64) -> Mag {
        Mag { man: 1, exp }
    }

    pub fn from_u64(x: u64) -> Mag {
        Mag::from_u128_up(u128::from(x), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.man == 0
    }

    pub fn mantissa(&self) -> u64 {
        self.man
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    /// Upper bound for `|x| * 2^exp`.
    pub fn from_bigint_up(x: &BigInt, exp: i64) -> Mag {
        if x.is_zero() {
            return Mag::ZERO;
        }
        let bits = x.bits();
        if bits <= 120 {
            let m: u128 = x.abs().try_into().expect("fits in u128");
            return Mag::from_u128_up(m, exp);
        }
        let shift = bits - u64::from(MAG_BITS);
        let top: u128 = (x.abs() >> shift).try_into().expect("fits");
        Mag::from_u128_up(top + 1, exp + shift as i64)
    }

    /// Lower bound for `|x| * 2^exp`.
    pub fn from_bigint_down(x: &BigInt, exp: i64) -> Mag {
        if x.is_zero() {
            return Mag::ZERO;
        }
        let bits = x.bits();
        if bits <= 120 {
            let m: u128 = x.abs().try_into().expect("fits in u128");
            return Mag::from_u128_down(m, exp);
        }
        let shift = bits - u64::from(MAG_BITS);
        let top: u128 = (x.abs() >> shift).try_into().expect("fits");
        Mag::from_u128_down(top, exp + shift as i64)
    }

    /// Exact dyadic value as `(mantissa, exponent)`.
    pub fn to_dyadic(&self) -> (BigInt, i64) {
        (BigInt::from(self.man), self.exp)
    }

    /// Position of the leading bit: `self < 2^top_exp()`.
    pub fn top_exp(&self) -> i64 {
        if self.is_zero() {
            i64::MIN / 4
        } else {
            self.exp + i64::from(64 - self.man.leading_zeros())
        }
    }

    pub fn add(&self, other: &Mag) -> Mag {
        if self.is_zero() {
            return *other;
        }
        if other.is_zero() {
            return *self;
        }
        let (hi, lo) = if self.top_exp() >= other.top_exp() {
            (self, other)
        } else {
            (other, self)
        };
        // Far below one ulp of the larger operand: absorb it by bumping the mantissa.
        if hi.exp - lo.top_exp() > 2 {
            return Mag::from_u128_up(u128::from(hi.man) + 1, hi.exp);
        }
        let e = hi.exp.min(lo.exp);
        let a = u128::from(hi.man) << (hi.exp - e);
        let b = u128::from(lo.man) << (lo.exp - e);
        Mag::from_u128_up(a + b, e)
    }

    pub fn mul(&self, other: &Mag) -> Mag {
        if self.is_zero() || other.is_zero() {
            return Mag::ZERO;
        }
        Mag::from_u128_up(
            u128::from(self.man) * u128::from(other.man),
            self.exp + other.exp,
        )
    }

    pub fn mul_u64(&self, k: u64) -> Mag {
        self.mul(&Mag::from_u64(k))
    }

    pub fn mul_2exp(&self, k: i64) -> Mag {
        if self.is_zero() {
            return Mag::ZERO;
        }
        Mag {
            man: self.man,
            exp: self.exp + k,
        }
    }

    /// Upper bound for `self / other`; `other` must be nonzero.
    pub fn div(&self, other: &Mag) -> Mag {
        assert!(!other.is_zero(), "Mag division by zero");
        if self.is_zero() {
            return Mag::ZERO;
        }
        let num = u128::from(self.man) << 64;
        let q = num / u128::from(other.man) + 1;
        Mag::from_u128_up(q, self.exp - other.exp - 64)
    }

    /// Upper bound for `sqrt(self)`.
    pub fn sqrt_up(&self) -> Mag {
        if self.is_zero() {
            return Mag::ZERO;
        }
        let (mut m, mut e) = (u128::from(self.man) << 62, self.exp - 62);
        if e % 2 != 0 {
            m <<= 1;
            e -= 1;
        }
        let r = isqrt_u128(m);
        let r = if r * r < m { r + 1 } else { r };
        Mag::from_u128_up(r, e / 2)
    }

    /// Lower bound for `sqrt(self)`.
    pub fn sqrt_down(&self) -> Mag {
        if self.is_zero() {
            return Mag::ZERO;
        }
        let (mut m, mut e) = (u128::from(self.man) << 62, self.exp - 62);
        if e % 2 != 0 {
            m <<= 1;
            e -= 1;
        }
        Mag::from_u128_down(isqrt_u128(m), e / 2)
    }

    pub fn max(&self, other: &Mag) -> Mag {
        if self.cmp_mag(other) == Ordering::Less {
            *other
        } else {
            *self
        }
    }

    pub fn cmp_mag(&self, other: &Mag) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        let (a, ea) = self.to_dyadic();
        let (b, eb) = other.to_dyadic();
        let e = ea.min(eb);
        let a = a << (ea - e) as usize;
        let b = b << (eb - e) as usize;
        a.cmp(&b)
    }

    /// Approximate value; may be `inf` or `0` outside the f64 exponent range.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        (self.man as f64) * 2f64.powi(self.exp.clamp(-2000, 2000) as i32)
    }

    /// `log2` of the value, `-inf` for zero.
    pub fn log2(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        (self.man as f64).log2() + self.exp as f64
    }
}

pub(crate) fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_rounds_up() {
        let a = Mag::from_u64(u64::from(u32::MAX));
        let b = Mag::pow2(-200);
        let s = a.add(&b);
        assert_eq!(s.cmp_mag(&a), Ordering::Greater);
    }

    #[test]
    fn div_and_mul_bound() {
        let a = Mag::from_u64(7);
        let b = Mag::from_u64(3);
        let q = a.div(&b);
        assert!(q.mul(&b).cmp_mag(&a) != Ordering::Less);
        assert!(q.to_f64() >= 7.0 / 3.0);
        assert!(q.to_f64() < 7.0 / 3.0 * (1.0 + 1e-8));
    }

    #[test]
    fn sqrt_brackets() {
        let a = Mag::from_u64(2);
        assert!(a.sqrt_up().to_f64() >= 2f64.sqrt());
        assert!(a.sqrt_down().to_f64() <= 2f64.sqrt());
    }

    #[test]
    fn bigint_bounds() {
        let x = (BigInt::from(1) << 300usize) + BigInt::from(12345);
        let up = Mag::from_bigint_up(&x, 0);
        let down = Mag::from_bigint_down(&x, 0);
        let (mu, eu) = up.to_dyadic();
        let (md, ed) = down.to_dyadic();
        assert!(mu << eu as usize >= x);
        assert!(md << ed as usize <= x);
    }
}
