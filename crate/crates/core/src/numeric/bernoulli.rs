//! Bernoulli numbers with `B_1 = -1/2`, so that `zeta(1 - k) = -B_k / k`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `B_0, ..., B_kmax` from `sum_{j<=k} C(k+1, j) B_j = 0`.
pub fn bernoulli_table(kmax: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(kmax + 1);
    b.push(BigRational::one());
    for k in 1..=kmax {
        if k > 1 && k % 2 == 1 {
            b.push(BigRational::zero());
            continue;
        }
        // binom walks C(k+1, j) for j = 0..k
        let mut binom = BigInt::one();
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                acc += bj * &binom;
            }
            binom = binom * BigInt::from(k + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-acc / BigInt::from(k + 1));
    }
    b
}

pub fn bernoulli(k: usize) -> BigRational {
    bernoulli_table(k).pop().expect("table has k + 1 entries")
}

/// Bernoulli polynomial `B_k(x) = sum_j C(k, j) B_j x^(k-j)`.
pub fn bernoulli_poly(k: usize, x: &BigRational) -> BigRational {
    let b = bernoulli_table(k);
    let mut binom = BigInt::one();
    let mut acc = BigRational::zero();
    for (j, bj) in b.iter().enumerate() {
        acc += bj * &binom * num_traits::pow(x.clone(), k - j);
        binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
    }
    acc
}
