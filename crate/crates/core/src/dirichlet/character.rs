//! Dirichlet characters with exact values `chi(a) = exp(2 pi i k / ord)`.

use crate::error::{Error, Result};
use crate::numeric::{BallReal, ComplexBall};
use num_integer::Integer;
use std::collections::VecDeque;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// 0 for even, 1 for odd.
    pub fn kappa(self) -> i64 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// A character modulo `modulus`. `exps[a]` is `Some(k)` with `chi(a) = e(k/order)`
/// for units and `None` when `gcd(a, modulus) > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirichletCharacter {
    modulus: u64,
    order: u64,
    exps: Vec<Option<u64>>,
    generators: Vec<(u64, u64)>,
}

impl DirichletCharacter {
    /// Builds the character from its values on a generating set of `(Z/f)^*`.
    ///
    /// Each pair `(a, k)` means `chi(a) = exp(2 pi i k / order)`. The values are
    /// propagated multiplicatively; a conflict, a non-unit generator or a set that
    /// does not generate the unit group is rejected.
    pub fn from_generators(modulus: u64, values: &[(u64, u64)], order: u64) -> Result<DirichletCharacter> {
        if modulus == 0 || order == 0 {
            return Err(Error::Invariant("modulus and order must be positive".into()));
        }
        if modulus > 10_000_000 {
            return Err(Error::Overflow(format!("modulus {modulus} too large for a value table")));
        }
        let f = modulus;
        let mut exps: Vec<Option<u64>> = vec![None; f as usize];
        let mut gens = Vec::new();
        for &(a, k) in values {
            let a = a % f;
            if a.gcd(&f) != 1 {
                return Err(Error::Invariant(format!("chi({a}) given but gcd({a}, {f}) > 1")));
            }
            gens.push((a, k % order));
        }
        exps[(1 % f) as usize] = Some(0);
        let mut queue = VecDeque::from([1 % f]);
        while let Some(x) = queue.pop_front() {
            let ex = exps[x as usize].expect("queued elements carry values");
            for &(g, k) in &gens {
                let y = (x * g) % f;
                let ey = (ex + k) % order;
                match exps[y as usize] {
                    None => {
                        exps[y as usize] = Some(ey);
                        queue.push_back(y);
                    }
                    Some(e) if e != ey => {
                        return Err(Error::Invariant(format!("chi mod {f} is not multiplicative at {y}")));
                    }
                    _ => {}
                }
            }
        }
        for a in 0..f {
            let unit = a.gcd(&f) == 1 || f == 1;
            if unit && exps[a as usize].is_none() {
                return Err(Error::Invariant(format!("values mod {f} do not determine chi({a})")));
            }
            if !unit {
                exps[a as usize] = None;
            }
        }
        Ok(DirichletCharacter::reduced(DirichletCharacter {
            modulus: f,
            order,
            exps,
            generators: gens,
        }))
    }

    pub fn principal(modulus: u64) -> DirichletCharacter {
        let exps = (0..modulus)
            .map(|a| (a.gcd(&modulus) == 1 || modulus == 1).then_some(0))
            .collect();
        DirichletCharacter {
            modulus,
            order: 1,
            exps,
            generators: Vec::new(),
        }
    }

    /// Shrinks `order` to the true order of the character.
    fn reduced(mut self) -> DirichletCharacter {
        let g = self.exps.iter().flatten().fold(self.order, |g, &e| g.gcd(&e));
        if g > 1 {
            self.order /= g;
            for e in self.exps.iter_mut().flatten() {
                *e /= g;
            }
            for (_, k) in self.generators.iter_mut() {
                *k /= g;
            }
        }
        self
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// The defining `(a, k)` pairs, with `k` relative to `order()`.
    pub fn generators(&self) -> &[(u64, u64)] {
        &self.generators
    }

    /// Exponent `k` of `chi(a) = e(k / order)`, or `None` when `chi(a) = 0`.
    pub fn exponent(&self, a: i64) -> Option<u64> {
        self.exps[a.rem_euclid(self.modulus as i64) as usize]
    }

    pub fn value(&self, a: i64, prec: u32) -> ComplexBall {
        match self.exponent(a) {
            None => ComplexBall::zero(prec),
            Some(k) => ComplexBall::root_of_unity(k as i64, self.order as i64, prec),
        }
    }

    /// Real value for characters of order at most 2.
    pub fn real_value(&self, a: i64) -> Option<i64> {
        if self.order > 2 {
            return None;
        }
        Some(match self.exponent(a) {
            None => 0,
            Some(0) => 1,
            Some(_) => -1,
        })
    }

    pub fn is_real(&self) -> bool {
        self.order <= 2
    }

    pub fn is_principal(&self) -> bool {
        self.order == 1
    }

    pub fn parity(&self) -> Parity {
        match self.exponent(-1) {
            Some(0) | None => Parity::Even,
            Some(_) => Parity::Odd,
        }
    }

    pub fn conj(&self) -> DirichletCharacter {
        let o = self.order;
        let flip = |e: u64| (o - e) % o;
        DirichletCharacter {
            modulus: self.modulus,
            order: o,
            exps: self.exps.iter().map(|e| e.map(flip)).collect(),
            generators: self.generators.iter().map(|&(a, k)| (a, flip(k))).collect(),
        }
    }

    /// Whether `chi` agrees with `other` as a function on the integers.
    pub fn same_values(&self, other: &DirichletCharacter) -> bool {
        if self.modulus != other.modulus {
            return false;
        }
        (0..self.modulus as i64).all(|a| match (self.exponent(a), other.exponent(a)) {
            (None, None) => true,
            (Some(x), Some(y)) => x * other.order == y * self.order,
            _ => false,
        })
    }

    /// Smallest `d | f` such that `chi` is trivial on units congruent to 1 mod `d`.
    pub fn conductor(&self) -> u64 {
        let f = self.modulus;
        let mut divisors: Vec<u64> = (1..=f).filter(|d| f.is_multiple_of(*d)).collect();
        divisors.sort_unstable();
        for d in divisors {
            let trivial = (0..f)
                .filter(|a| a % d == 1 % d)
                .all(|a| matches!(self.exps[a as usize], Some(0) | None));
            if trivial {
                return d;
            }
        }
        f
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor() == self.modulus
    }

    /// Gauss sum `tau(chi) = sum_a chi(a) e(a/f)`.
    pub fn gauss_sum(&self, prec: u32) -> ComplexBall {
        let f = self.modulus as i64;
        let o = self.order as i64;
        let mut acc = ComplexBall::zero(prec);
        for a in 0..f {
            if let Some(k) = self.exponent(a) {
                // e(k/o + a/f) = e((k f + a o) / (o f))
                acc = acc.add(&ComplexBall::root_of_unity(k as i64 * f + a * o, o * f, prec));
            }
        }
        acc
    }

    /// `chi(a)` as a ball when the value is real, for use in real-only products.
    pub fn real_ball(&self, a: i64, prec: u32) -> Option<BallReal> {
        self.real_value(a).map(|v| BallReal::from_int(v, prec))
    }
}

impl fmt::Display for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi mod {} of order {}", self.modulus, self.order)
    }
}
