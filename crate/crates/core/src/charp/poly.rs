//! Dense univariate polynomials over Q, coefficients in ascending order.

use crate::numeric::ExactRational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<ExactRational>);

impl Poly {
    pub fn new(mut c: Vec<ExactRational>) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly(c)
    }

    pub fn from_ints<T: Into<BigInt> + Clone>(c: &[T]) -> Poly {
        Poly::new(c.iter().map(|x| BigRational::from_integer(x.clone().into())).collect())
    }

    pub fn one() -> Poly {
        Poly(vec![ExactRational::one()])
    }

    /// `1 - c t`.
    pub fn linear(c: &ExactRational) -> Poly {
        Poly::new(vec![ExactRational::one(), -c.clone()])
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> ExactRational {
        self.0.get(k).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, t: &ExactRational) -> ExactRational {
        self.0.iter().rev().fold(ExactRational::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, s: &ExactRational) -> Poly {
        Poly::new(self.0.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&-ExactRational::one()))
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly(vec![]);
        }
        let mut out = vec![ExactRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        let n = r.len();
        if n <= dd {
            return (Poly(vec![]), self.clone());
        }
        let mut q = vec![ExactRational::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = &r[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dj) in d.0.iter().enumerate() {
                    r[k + j] -= &c * dj;
                }
            }
            q[k] = c;
        }
        (Poly::new(q), Poly::new(r))
    }

    /// Exact quotient, if `d` divides `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Largest `m` with `(1 - c t)^m | self`, and the cofactor.
    pub fn strip_linear(&self, c: &ExactRational) -> (u32, Poly) {
        let l = Poly::linear(c);
        let mut m = 0;
        let mut cur = self.clone();
        if l.degree() == Some(0) {
            return (0, cur);
        }
        while !cur.is_zero() {
            match cur.div_exact(&l) {
                Some(q) => {
                    cur = q;
                    m += 1;
                }
                None => break,
            }
        }
        (m, cur)
    }

    /// `self(g(t))`.
    pub fn compose(&self, g: &Poly) -> Poly {
        self.0
            .iter()
            .rev()
            .fold(Poly(vec![]), |acc, c| acc.mul(g).add(&Poly::new(vec![c.clone()])))
    }

    pub fn monic(&self) -> Poly {
        match self.0.last() {
            Some(l) => self.scale(&l.recip()),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Integer multiple with coprime integer coefficients and positive
    /// constant term (or leading term, when the constant term vanishes).
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![];
        }
        let l = self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let pivot = ints.iter().find(|c| !c.is_zero()).expect("nonzero");
        let g = if pivot.is_negative() { -g } else { g };
        ints.into_iter().map(|c| c / &g).collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let a = c.abs();
            let body = match (k, a.is_one()) {
                (0, _) => format!("{a}"),
                (1, true) => "t".into(),
                (1, false) => format!("{a}t"),
                (_, true) => format!("t^{k}"),
                (_, false) => format!("{a}t^{k}"),
            };
            write!(f, "{}{sign}{body}", if first { "" } else { " " })?;
            first = false;
        }
        Ok(())
    }
}
