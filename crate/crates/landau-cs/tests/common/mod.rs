//! Exact-arithmetic oracles shared by the integration tests.
//!
//! Everything here works in `BigRational`, so polynomial identities and
//! Gaussian-moment integrals can be checked with *no* floating-point
//! error at all; the library's doubles are then compared against exact
//! values converted to `f64` at the very last step.

#![allow(dead_code)] // each integration test target uses a subset

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(numerator: i64, denominator: i64) -> BigRational {
    BigRational::new(big(numerator), big(denominator))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(big(n))
}

/// The exact rational equal to a finite double.
pub fn from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite double")
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("oracle value fits the double range")
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient; zero when `r > n`.
pub fn binomial(n: u64, r: u64) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `(2i - 1)!! = 1 * 3 * ... * (2i-1)`, with the empty product for `i = 0`.
pub fn double_factorial_odd(i: u64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 1..=i {
        acc *= 2 * t - 1;
    }
    acc
}

pub fn pow_rat(x: &BigRational, e: usize) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Physicists' Hermite polynomial by its explicit sum:
/// `H_n(x) = n! * sum_k (-1)^k (2x)^(n-2k) / (k! (n-2k)!)`.
pub fn hermite_exact(n: usize, x: &BigRational) -> BigRational {
    let two_x = x * rat_int(2);
    let mut sum = BigRational::zero();
    for k in 0..=n / 2 {
        let num = pow_rat(&two_x, n - 2 * k);
        let den = factorial(k as u64) * factorial((n - 2 * k) as u64);
        let term = num / BigRational::from_integer(den);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum * BigRational::from_integer(factorial(n as u64))
}

/// Hermite coefficients (ascending powers) by the Rodrigues-style
/// derivative recursion `H_{m+1} = 2x H_m - H_m'` — an integer route
/// independent of both the explicit sum and the three-term recurrence.
pub fn hermite_coeffs_rodrigues(n: usize) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (j, cj) in coeffs.iter().enumerate() {
            next[j + 1] += cj * 2;
        }
        for (j, cj) in coeffs.iter().enumerate().skip(1) {
            next[j - 1] -= cj * big(j as i64);
        }
        coeffs = next;
    }
    coeffs
}

/// Evaluate an integer-coefficient polynomial (ascending powers) exactly.
pub fn eval_int_poly(coeffs: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

/// Coefficients (ascending powers) of the generalized Laguerre polynomial
/// `L_m^(k)` for integer `k >= -m`:
/// `c_j = (-1)^j C(m+k, m-j) / j!`.
pub fn laguerre_coeffs(m: usize, k: i64) -> Vec<BigRational> {
    let top = m as i64 + k;
    assert!(top >= 0, "Laguerre upper index must satisfy k >= -m");
    (0..=m)
        .map(|j| {
            let c = binomial(top as u64, (m - j) as u64);
            let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            BigRational::new(sign * c, factorial(j as u64))
        })
        .collect()
}

/// Generalized Laguerre polynomial evaluated exactly.
pub fn laguerre_exact(m: usize, k: i64, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in laguerre_coeffs(m, k).iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Relative gap `|got - want| / max(1, |want|)` with `want` exact.
pub fn mixed_err(got: f64, want: &BigRational) -> f64 {
    let diff = (from_f64(got) - want).abs();
    let scale = want.abs().max(BigRational::one());
    to_f64(&(diff / scale))
}
