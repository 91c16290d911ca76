//! Rectangular complex balls.

use super::ball::BallReal;
use super::elementary::{pi, reduced_turn, sin_cos};
use crate::error::{Error, Result};
use num_rational::BigRational;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexBall {
    pub re: BallReal,
    pub im: BallReal,
}

impl ComplexBall {
    pub fn new(re: BallReal, im: BallReal) -> ComplexBall {
        ComplexBall { re, im }
    }

    pub fn from_real(re: BallReal) -> ComplexBall {
        let p = re.prec();
        ComplexBall {
            re,
            im: BallReal::zero(p),
        }
    }

    pub fn zero(prec: u32) -> ComplexBall {
        ComplexBall::from_real(BallReal::zero(prec))
    }

    pub fn one(prec: u32) -> ComplexBall {
        ComplexBall::from_real(BallReal::one(prec))
    }

    /// `i^k`.
    pub fn i_pow(k: i64, prec: u32) -> ComplexBall {
        let (re, im) = match k.rem_euclid(4) {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 0),
            _ => (0, -1),
        };
        ComplexBall::new(BallReal::from_int(re, prec), BallReal::from_int(im, prec))
    }

    /// `exp(2 pi i k / ord)`, exact at multiples of a quarter turn.
    pub fn root_of_unity(k: i64, ord: i64, prec: u32) -> ComplexBall {
        let k = k.rem_euclid(ord);
        if (4 * k) % ord == 0 {
            return ComplexBall::i_pow(4 * k / ord, prec);
        }
        let turn: BigRational = reduced_turn(k, ord);
        let theta = pi(prec + 8).mul_rational(&turn);
        let (s, c) = sin_cos(&theta);
        ComplexBall::new(c.with_prec(prec), s.with_prec(prec))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn add(&self, o: &ComplexBall) -> ComplexBall {
        ComplexBall::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &ComplexBall) -> ComplexBall {
        ComplexBall::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn neg(&self) -> ComplexBall {
        ComplexBall::new(self.re.neg(), self.im.neg())
    }

    pub fn conj(&self) -> ComplexBall {
        ComplexBall::new(self.re.clone(), self.im.neg())
    }

    pub fn mul(&self, o: &ComplexBall) -> ComplexBall {
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        ComplexBall::new(re, im)
    }

    pub fn scale(&self, x: &BallReal) -> ComplexBall {
        ComplexBall::new(&self.re * x, &self.im * x)
    }

    pub fn abs_sqr(&self) -> BallReal {
        self.re.sqr() + self.im.sqr()
    }

    pub fn div(&self, o: &ComplexBall) -> Result<ComplexBall> {
        let d = o.abs_sqr();
        let n = self.mul(&o.conj());
        Ok(ComplexBall::new(n.re.div(&d)?, n.im.div(&d)?))
    }

    pub fn div_real(&self, x: &BallReal) -> Result<ComplexBall> {
        Ok(ComplexBall::new(self.re.div(x)?, self.im.div(x)?))
    }

    pub fn pow_u(&self, n: u64) -> ComplexBall {
        let mut out = ComplexBall::one(self.prec());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    /// Real part, provided the imaginary part is consistent with zero.
    pub fn to_real(&self) -> Result<BallReal> {
        if !self.im.contains_zero() {
            return Err(Error::Mismatch(format!(
                "expected a real value, imaginary part {}",
                self.im
            )));
        }
        let slack = self.im.abs_upper();
        Ok(self.re.add_error(&slack))
    }
}

impl fmt::Display for ComplexBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re, self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity_multiply() {
        let p = 128;
        let w = ComplexBall::root_of_unity(1, 5, p);
        let w5 = w.pow_u(5);
        assert!(w5.re.contains_int(1) && w5.im.contains_int(0));
        let w3 = ComplexBall::root_of_unity(3, 5, p);
        let prod = w.mul(&ComplexBall::root_of_unity(2, 5, p));
        assert!(prod.re.overlaps(&w3.re) && prod.im.overlaps(&w3.im));
    }

    #[test]
    fn quarter_turns_are_exact() {
        let w = ComplexBall::root_of_unity(3, 4, 64);
        assert!(w.re.is_exact() && w.im.is_exact());
        assert!(w.im.contains_int(-1));
    }

    #[test]
    fn to_real_rejects_nonreal() {
        assert!(ComplexBall::i_pow(1, 64).to_real().is_err());
        assert!(ComplexBall::one(64).to_real().is_ok());
    }
}
