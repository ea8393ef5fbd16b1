//! Divisibility statements: `n^4 xyz | p_n - (x + y + z)^n` for primes `n ≥ 5`,
//! Wolstenholme congruences, and the weighted binomial sum identity.

use num_bigint::{BigInt, BigUint};
use num_integer::{binomial, Integer};
use num_traits::{One, Zero};
use serde::Serialize;

use super::primes::is_prime_u64;
use crate::pn::{output_table, pn_wendt};
use crate::polyring::Polynomial;
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct DivisReport {
    pub n: u32,
    /// Number of terms of `(p_n - (x + y + z)^n) / (xyz)`.
    pub terms: usize,
    pub divisible_by_n4: bool,
    /// Whether `n^5` also divides every coefficient; expected false.
    pub divisible_by_n5: bool,
    /// The quotient divided by `n^4`, as JSON.
    pub reduced_quotient: crate::polyring::PolynomialJson,
}

fn require_prime(n: u64, min: u64) -> Result<()> {
    if n < min || !is_prime_u64(n) {
        return Err(Error::NotPrime(format!("n = {n} (need a prime at least {min})")));
    }
    Ok(())
}

pub fn n4_divisibility_report(n: u32) -> Result<DivisReport> {
    require_prime(n as u64, 5)?;
    let p = pn_wendt(n)?;
    let table = output_table(2);
    let sum = Polynomial::var(&table, "z")?
        .checked_add(&Polynomial::var(&table, "x1")?)?
        .checked_add(&Polynomial::var(&table, "x2")?)?;
    let diff = p.checked_sub(&sum.pow(n))?;
    let xyz = Polynomial::monomial(&table, &[1, 1, 1], BigInt::one())?;
    let quotient = diff.exact_div(&xyz)?;
    let n4 = BigInt::from(n).pow(4);
    let n5 = &n4 * n;
    let divisible_by_n4 = quotient.terms().all(|(_, c)| c.is_multiple_of(&n4));
    let divisible_by_n5 = quotient.terms().all(|(_, c)| c.is_multiple_of(&n5));
    let reduced = if divisible_by_n4 {
        quotient.div_exact_scalar(&n4)?
    } else {
        quotient.clone()
    };
    Ok(DivisReport {
        n,
        terms: quotient.num_terms(),
        divisible_by_n4,
        divisible_by_n5,
        reduced_quotient: reduced.to_json(),
    })
}

pub fn n4_divisibility_check(n: u32) -> Result<bool> {
    Ok(n4_divisibility_report(n)?.divisible_by_n4)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Wolstenholme {
    pub n: u64,
    pub mod_n3: bool,
    pub mod_n4: bool,
}

/// `C(2n-1, n-1) mod m` as `prod (n + i) / prod i` over `i < n`, for `m` prime to `(n-1)!`.
fn central_binomial_mod(n: u64, m: &BigUint) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..n {
        num = (num * (n + i)) % m;
        den = (den * i) % m;
    }
    let inv = BigInt::from(den)
        .extended_gcd(&BigInt::from(m.clone()))
        .x
        .mod_floor(&BigInt::from(m.clone()));
    (num * inv.to_biguint().unwrap()) % m
}

/// Whether `C(2n-1, n-1) ≡ 1` modulo `n^3` and modulo `n^4`.
pub fn wolstenholme_check(n: u64) -> Result<Wolstenholme> {
    require_prime(n, 5)?;
    let n4 = BigUint::from(n).pow(4);
    let r = central_binomial_mod(n, &n4);
    let n3 = BigUint::from(n).pow(3);
    Ok(Wolstenholme {
        n,
        mod_n3: (&r % &n3).is_one(),
        mod_n4: r.is_one(),
    })
}

/// `sum_{k=1}^{n-1} k C(n,k)^2 = n (C(2n-1, n-1) - 1)`, both sides exactly.
pub fn binom_weighted_sum(n: u64) -> Result<(BigInt, BigInt)> {
    if n < 2 {
        return Err(Error::Usage("n must be at least 2".into()));
    }
    let nb = BigInt::from(n);
    let mut lhs = BigInt::zero();
    let mut c = BigInt::one();
    for k in 1..n {
        c = c * (n - k + 1) / k;
        lhs += &c * &c * k;
    }
    let rhs = &nb * (binomial(BigInt::from(2 * n - 1), BigInt::from(n - 1)) - 1);
    Ok((lhs, rhs))
}

pub fn binom_weighted_sum_identity(n: u64) -> Result<bool> {
    let (lhs, rhs) = binom_weighted_sum(n)?;
    Ok(lhs == rhs)
}
