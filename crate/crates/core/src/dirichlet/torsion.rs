//! `w_n(F)`: the largest `m` with `Gal(F(mu_m)/F)` of exponent dividing `n`.
//!
//! For abelian `F` with character group `X`, `Gal(F(mu_m)/F)` is the subgroup
//! `H_m = { a in (Z/m)^* : chi(a) = 1 for every chi in X of conductor dividing m }`.
//! The answer is assembled one prime power at a time.

use super::field::NumberFieldRecord;
use crate::error::{Error, Result};
use num_integer::Integer;

fn exponent_divides(f: &NumberFieldRecord, m: u64, n: u64) -> Result<bool> {
    let chars = f.characters()?;
    let relevant: Vec<_> = chars.iter().filter(|c| m.is_multiple_of(c.modulus())).collect();
    for a in 1..m {
        if a.gcd(&m) != 1 {
            continue;
        }
        if relevant.iter().all(|c| c.exponent(a as i64) == Some(0)) && pow_mod(a, n, m) != 1 % m {
            return Ok(false);
        }
    }
    Ok(true)
}

fn pow_mod(a: u64, e: u64, m: u64) -> u64 {
    let (mut base, mut e, mut acc) = (u128::from(a % m), e, 1u128 % u128::from(m));
    let m = u128::from(m);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn torsion_w_n(f: &NumberFieldRecord, n: i64) -> Result<u64> {
    if n < 1 {
        return Err(Error::Domain(format!("w_n is defined for n >= 1, got {n}")));
    }
    let n = n as u64;
    // |H_(l^e)| >= phi(l^e)/deg and its exponent is at least half its order
    let bound = 2 * n * u64::from(f.degree);
    let mut w: u64 = 1;
    for l in (2..=bound + 1).filter(|&l| is_prime(l)) {
        let mut pe = l;
        while pe / l * (l - 1) <= bound && exponent_divides(f, pe, n)? {
            w = w
                .checked_mul(l)
                .ok_or_else(|| Error::Overflow(format!("w_{n} exceeds 64 bits")))?;
            pe *= l;
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        let q = NumberFieldRecord::rationals();
        assert_eq!(torsion_w_n(&q, 1).unwrap(), 2);
        assert_eq!(torsion_w_n(&q, 2).unwrap(), 24);
        assert_eq!(torsion_w_n(&q, 3).unwrap(), 2);
        assert_eq!(torsion_w_n(&q, 4).unwrap(), 240);
    }

    #[test]
    fn quadratic_fields() {
        let gi = NumberFieldRecord::quadratic("Q(i)", -4).unwrap();
        assert_eq!(torsion_w_n(&gi, 1).unwrap(), 4);
        let q3 = NumberFieldRecord::quadratic("Q(sqrt -3)", -3).unwrap();
        assert_eq!(torsion_w_n(&q3, 1).unwrap(), 6);
        let q23 = NumberFieldRecord::quadratic("Q(sqrt -23)", -23).unwrap();
        assert_eq!(torsion_w_n(&q23, 1).unwrap(), 2);
        // Q(sqrt 5) at n = 2: 24 * 5 since mu_5 generates a quadratic extension
        let q5 = NumberFieldRecord::quadratic("Q(sqrt 5)", 5).unwrap();
        assert_eq!(torsion_w_n(&q5, 2).unwrap(), 120);
    }
}
