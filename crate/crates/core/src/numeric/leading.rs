//! Leading Taylor data `f(s) = c (s - n)^order + ...` with exact or ball coefficients.

use super::ball::BallReal;
use super::elementary::pi;
use super::rational::{pow_int, to_pq, ExactRational};
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// `coeff * pi^pi_pow`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiMonomial {
    pub coeff: ExactRational,
    pub pi_pow: i64,
}

impl PiMonomial {
    pub fn new(coeff: ExactRational, pi_pow: i64) -> PiMonomial {
        PiMonomial { coeff, pi_pow }
    }

    pub fn rational(coeff: ExactRational) -> PiMonomial {
        PiMonomial { coeff, pi_pow: 0 }
    }

    pub fn one() -> PiMonomial {
        PiMonomial::rational(ExactRational::one())
    }

    pub fn mul(&self, o: &PiMonomial) -> PiMonomial {
        PiMonomial::new(&self.coeff * &o.coeff, self.pi_pow + o.pi_pow)
    }

    /// Fails on division by zero.
    pub fn div(&self, o: &PiMonomial) -> Result<PiMonomial> {
        if o.coeff.is_zero() {
            return Err(Error::Domain("division by a zero monomial".into()));
        }
        Ok(PiMonomial::new(&self.coeff / &o.coeff, self.pi_pow - o.pi_pow))
    }

    pub fn pow(&self, e: i64) -> PiMonomial {
        PiMonomial::new(pow_int(&self.coeff, e), self.pi_pow * e)
    }

    pub fn abs(&self) -> PiMonomial {
        PiMonomial::new(self.coeff.abs(), self.pi_pow)
    }

    pub fn to_ball(&self, prec: u32) -> BallReal {
        let c = BallReal::from_rational(&self.coeff, prec + 8);
        let p = pi(prec + 8 + (64 - self.pi_pow.unsigned_abs().leading_zeros()));
        c.mul(&p.pow_i(self.pi_pow).expect("pi is nonzero")).with_prec(prec)
    }
}

impl fmt::Display for PiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_pow {
            0 => write!(f, "{}", to_pq(&self.coeff)),
            1 => write!(f, "{}*pi", to_pq(&self.coeff)),
            k => write!(f, "{}*pi^{}", to_pq(&self.coeff), k),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Coefficient {
    Exact(ExactRational),
    /// Rational multiple of an integer power of pi, kept symbolic.
    Period(PiMonomial),
    Ball(BallReal),
}

impl Coefficient {
    fn normalized(self) -> Coefficient {
        match self {
            Coefficient::Period(m) if m.pi_pow == 0 => Coefficient::Exact(m.coeff),
            c => c,
        }
    }

    fn as_monomial(&self) -> Option<PiMonomial> {
        match self {
            Coefficient::Exact(q) => Some(PiMonomial::rational(q.clone())),
            Coefficient::Period(m) => Some(m.clone()),
            Coefficient::Ball(_) => None,
        }
    }

    pub fn to_ball(&self, prec: u32) -> BallReal {
        match self {
            Coefficient::Exact(q) => BallReal::from_rational(q, prec),
            Coefficient::Period(m) => m.to_ball(prec),
            Coefficient::Ball(b) => b.clone(),
        }
    }

    fn prec_hint(&self) -> Option<u32> {
        match self {
            Coefficient::Ball(b) => Some(b.prec()),
            _ => None,
        }
    }

    pub fn mul(&self, o: &Coefficient) -> Coefficient {
        match (self.as_monomial(), o.as_monomial()) {
            (Some(a), Some(b)) => Coefficient::Period(a.mul(&b)).normalized(),
            _ => {
                let p = self.prec_hint().max(o.prec_hint()).unwrap_or(64);
                Coefficient::Ball(self.to_ball(p).mul(&o.to_ball(p)))
            }
        }
    }

    pub fn div(&self, o: &Coefficient) -> Result<Coefficient> {
        match (self.as_monomial(), o.as_monomial()) {
            (Some(a), Some(b)) => Ok(Coefficient::Period(a.div(&b)?).normalized()),
            _ => {
                let p = self.prec_hint().max(o.prec_hint()).unwrap_or(64);
                Ok(Coefficient::Ball(self.to_ball(p).div(&o.to_ball(p))?))
            }
        }
    }

    pub fn pow(&self, e: i64) -> Result<Coefficient> {
        match self.as_monomial() {
            Some(m) => Ok(Coefficient::Period(m.pow(e)).normalized()),
            None => match self {
                Coefficient::Ball(b) => Ok(Coefficient::Ball(b.pow_i(e)?)),
                _ => unreachable!(),
            },
        }
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Exact(q) => Coefficient::Exact(-q.clone()),
            Coefficient::Period(m) => Coefficient::Period(PiMonomial::new(-m.coeff.clone(), m.pi_pow)),
            Coefficient::Ball(b) => Coefficient::Ball(b.neg()),
        }
    }

    /// Whether the coefficient is certainly nonzero.
    pub fn is_certainly_nonzero(&self) -> bool {
        match self {
            Coefficient::Exact(q) => !q.is_zero(),
            Coefficient::Period(m) => !m.coeff.is_zero(),
            Coefficient::Ball(b) => !b.contains_zero(),
        }
    }

    /// Sign, when determined.
    pub fn sign(&self) -> Option<i32> {
        match self {
            Coefficient::Exact(q) | Coefficient::Period(PiMonomial { coeff: q, .. }) => {
                if q.is_positive() {
                    Some(1)
                } else if q.is_negative() {
                    Some(-1)
                } else {
                    None
                }
            }
            Coefficient::Ball(b) => b.sign(),
        }
    }

    pub fn exact(&self) -> Option<&ExactRational> {
        match self {
            Coefficient::Exact(q) => Some(q),
            _ => None,
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Exact(q) => write!(f, "{}", to_pq(q)),
            Coefficient::Period(m) => write!(f, "{m}"),
            Coefficient::Ball(b) => write!(f, "{b}"),
        }
    }
}

/// Order and leading coefficient of a function at an integer point.
#[derive(Clone, Debug, PartialEq)]
pub struct LeadingTaylor {
    point: i64,
    order: i64,
    coefficient: Coefficient,
}

impl LeadingTaylor {
    /// Fails with `UnverifiedOrder` unless the coefficient is certainly nonzero.
    pub fn new(point: i64, order: i64, coefficient: Coefficient) -> Result<LeadingTaylor> {
        let coefficient = coefficient.normalized();
        if !coefficient.is_certainly_nonzero() {
            return Err(Error::UnverifiedOrder { point, order });
        }
        Ok(LeadingTaylor {
            point,
            order,
            coefficient,
        })
    }

    pub fn point(&self) -> i64 {
        self.point
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coefficient(&self) -> &Coefficient {
        &self.coefficient
    }

    pub fn to_ball(&self, prec: u32) -> BallReal {
        self.coefficient.to_ball(prec)
    }

    fn same_point(&self, o: &LeadingTaylor) -> Result<()> {
        if self.point != o.point {
            return Err(Error::Mismatch(format!(
                "leading data at different points {} and {}",
                self.point, o.point
            )));
        }
        Ok(())
    }

    pub fn mul(&self, o: &LeadingTaylor) -> Result<LeadingTaylor> {
        self.same_point(o)?;
        LeadingTaylor::new(self.point, self.order + o.order, self.coefficient.mul(&o.coefficient))
    }

    pub fn div(&self, o: &LeadingTaylor) -> Result<LeadingTaylor> {
        self.same_point(o)?;
        LeadingTaylor::new(self.point, self.order - o.order, self.coefficient.div(&o.coefficient)?)
    }

    pub fn pow(&self, e: i64) -> Result<LeadingTaylor> {
        LeadingTaylor::new(self.point, self.order * e, self.coefficient.pow(e)?)
    }

    pub fn one_at(point: i64) -> LeadingTaylor {
        LeadingTaylor {
            point,
            order: 0,
            coefficient: Coefficient::Exact(ExactRational::one()),
        }
    }
}

impl fmt::Display for LeadingTaylor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "s={}: order {}, leading coefficient {}",
            self.point, self.order, self.coefficient
        )
    }
}
