//! Number-field records and their K-theoretic input data.

use super::character::{DirichletCharacter, Parity};
use crate::error::{Error, Result};
use crate::numeric::BallReal;
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// `(h_n, w_n, R_n)` at one twist `n >= 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct KEntry {
    pub h: u64,
    pub w: u64,
    pub regulator: BallReal,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct KTheoryData {
    pub entries: BTreeMap<i64, KEntry>,
}

impl KTheoryData {
    pub fn new() -> KTheoryData {
        KTheoryData::default()
    }

    /// Rejects zero orders and regulators that are not certainly positive.
    pub fn insert(&mut self, n: i64, entry: KEntry) -> Result<()> {
        if n < 1 {
            return Err(Error::Invariant(format!("K-theory data is indexed by n >= 1, got {n}")));
        }
        if entry.h == 0 || entry.w == 0 {
            return Err(Error::Invariant(format!("h_{n} and w_{n} must be positive")));
        }
        if !entry.regulator.is_positive() {
            return Err(Error::Invariant(format!("R_{n} must be positive")));
        }
        self.entries.insert(n, entry);
        Ok(())
    }

    pub fn get(&self, n: i64) -> Option<&KEntry> {
        self.entries.get(&n)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumberFieldRecord {
    pub label: String,
    pub degree: u32,
    pub r1: u32,
    pub r2: u32,
    pub disc: i64,
    pub characters: Option<Vec<DirichletCharacter>>,
    pub invariants: Option<KTheoryData>,
}

impl NumberFieldRecord {
    /// Validated constructor: signature, conductor-discriminant product, parity
    /// count and closure of the character set under conjugation.
    pub fn new(
        label: impl Into<String>,
        degree: u32,
        r1: u32,
        r2: u32,
        disc: i64,
        characters: Option<Vec<DirichletCharacter>>,
        invariants: Option<KTheoryData>,
    ) -> Result<NumberFieldRecord> {
        let rec = NumberFieldRecord::new_unchecked(label, degree, r1, r2, disc, characters, invariants);
        rec.validate()?;
        Ok(rec)
    }

    /// Builds a record without any consistency checks.
    pub fn new_unchecked(
        label: impl Into<String>,
        degree: u32,
        r1: u32,
        r2: u32,
        disc: i64,
        characters: Option<Vec<DirichletCharacter>>,
        invariants: Option<KTheoryData>,
    ) -> NumberFieldRecord {
        NumberFieldRecord {
            label: label.into(),
            degree,
            r1,
            r2,
            disc,
            characters,
            invariants,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let sum = i64::from(self.r1) + 2 * i64::from(self.r2);
        if sum != i64::from(self.degree) || self.degree == 0 {
            return Err(Error::Signature {
                sum,
                degree: i64::from(self.degree),
            });
        }
        if self.disc == 0 {
            return Err(Error::Invariant("discriminant must be nonzero".into()));
        }
        // the sign of D_F is (-1)^r2
        if (self.disc < 0) != (self.r2 % 2 == 1) {
            return Err(Error::Invariant(format!(
                "sign of discriminant {} inconsistent with r2 = {}",
                self.disc, self.r2
            )));
        }
        if let Some(chars) = &self.characters {
            if chars.len() != self.degree as usize {
                return Err(Error::Invariant(format!(
                    "{} characters for a field of degree {}",
                    chars.len(),
                    self.degree
                )));
            }
            let mut product = BigInt::from(1);
            for chi in chars {
                if !chi.is_primitive() {
                    return Err(Error::Invariant(format!("{chi} is not primitive")));
                }
                product *= BigInt::from(chi.modulus());
                if !chars.iter().any(|c| c.same_values(&chi.conj())) {
                    return Err(Error::Invariant(format!("conjugate of {chi} missing")));
                }
            }
            if !chars.iter().any(|c| c.is_principal()) {
                return Err(Error::Invariant("principal character missing".into()));
            }
            let disc = BigInt::from(self.disc.unsigned_abs());
            if product != disc {
                return Err(Error::ConductorDiscriminant {
                    product: product.to_string(),
                    disc: disc.to_string(),
                });
            }
            let odd = chars.iter().filter(|c| c.parity() == Parity::Odd).count() as u32;
            let ok = if odd == 0 { self.r2 == 0 } else { self.r1 == 0 && 2 * odd == self.degree };
            if !ok {
                return Err(Error::Invariant(format!(
                    "{odd} odd characters inconsistent with signature ({}, {})",
                    self.r1, self.r2
                )));
            }
        }
        Ok(())
    }

    pub fn abs_disc(&self) -> u64 {
        self.disc.unsigned_abs()
    }

    pub fn characters(&self) -> Result<&[DirichletCharacter]> {
        self.characters
            .as_deref()
            .ok_or_else(|| Error::Domain(format!("{}: no abelian character data", self.label)))
    }

    /// Closed-form vanishing order of `zeta_F` at `s = n`.
    pub fn rho(&self, n: i64) -> i64 {
        let (r1, r2) = (i64::from(self.r1), i64::from(self.r2));
        match n {
            1 => -1,
            0 => r1 + r2 - 1,
            n if n > 1 => 0,
            n if n % 2 == 0 => r1 + r2,
            _ => r2,
        }
    }

    pub fn rationals() -> NumberFieldRecord {
        NumberFieldRecord::new("Q", 1, 1, 0, 1, Some(vec![DirichletCharacter::principal(1)]), None)
            .expect("Q is a valid record")
    }

    /// `Q(sqrt(d))` for a fundamental discriminant `d` whose quadratic character
    /// is the Kronecker symbol.
    pub fn quadratic(label: impl Into<String>, d: i64) -> Result<NumberFieldRecord> {
        let chi = kronecker_character(d)?;
        let (r1, r2) = if d > 0 { (2, 0) } else { (0, 1) };
        NumberFieldRecord::new(label, 2, r1, r2, d, Some(vec![DirichletCharacter::principal(1), chi]), None)
    }
}

/// Kronecker symbol `(d / .)` as a primitive character mod `|d|`.
pub fn kronecker_character(d: i64) -> Result<DirichletCharacter> {
    let f = d.unsigned_abs();
    if f < 3 {
        return Err(Error::Domain(format!("{d} is not a quadratic discriminant")));
    }
    let gens: Vec<(u64, u64)> = (1..f)
        .filter(|&a| num_integer::Integer::gcd(&a, &f) == 1)
        .map(|a| (a, u64::from(kronecker(d, a as i64) == -1)))
        .collect();
    DirichletCharacter::from_generators(f, &gens, 2)
}

/// Kronecker symbol `(d / m)` for `m >= 1`.
pub fn kronecker(d: i64, m: i64) -> i64 {
    let mut m = m;
    let mut out = 1;
    while m % 2 == 0 {
        m /= 2;
        match d.rem_euclid(8) {
            1 | 7 => {}
            3 | 5 => out = -out,
            _ => return 0,
        }
    }
    out * jacobi(d.rem_euclid(m), m)
}

fn jacobi(a: i64, n: i64) -> i64 {
    let (mut a, mut n) = (a.rem_euclid(n), n);
    let mut t = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_orders() {
        let q = NumberFieldRecord::rationals();
        assert_eq!(q.rho(0), 0);
        assert_eq!(q.rho(1), -1);
        assert_eq!(q.rho(-2), 1);
        assert_eq!(q.rho(-1), 0);
        let gi = NumberFieldRecord::quadratic("Q(i)", -4).unwrap();
        assert_eq!(gi.rho(-3), 1);
        assert_eq!(gi.rho(-2), 1);
        assert_eq!(gi.rho(0), 0);
    }

    #[test]
    fn kronecker_matches_small_tables() {
        let chi = kronecker_character(5).unwrap();
        let expect = [0, 1, -1, -1, 1];
        for a in 0..5 {
            assert_eq!(chi.real_value(a), Some(expect[a as usize]));
        }
        let chi = kronecker_character(-4).unwrap();
        assert_eq!(chi.real_value(3), Some(-1));
        let chi = kronecker_character(8).unwrap();
        assert_eq!(chi.real_value(3), Some(-1));
        assert_eq!(chi.real_value(7), Some(1));
    }

    #[test]
    fn validation() {
        let chi4 = kronecker_character(-4).unwrap();
        let p = DirichletCharacter::principal(1);
        assert!(matches!(
            NumberFieldRecord::new("bad", 2, 1, 1, -4, None, None),
            Err(Error::Signature { .. })
        ));
        assert!(matches!(
            NumberFieldRecord::new("bad", 2, 2, 0, 4, Some(vec![p.clone(), chi4.clone()]), None),
            Err(Error::Invariant(_))
        ));
        assert!(matches!(
            NumberFieldRecord::new("bad", 2, 0, 1, -3, Some(vec![p.clone(), chi4.clone()]), None),
            Err(Error::ConductorDiscriminant { .. })
        ));
        assert!(NumberFieldRecord::new("Q(i)", 2, 0, 1, -4, Some(vec![p, chi4]), None).is_ok());
    }
}
