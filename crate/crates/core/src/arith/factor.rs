//! Integer factorization: trial division, then Brent's variant of Pollard rho.

use std::fmt;

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::primes::{is_prime_u64, is_probable_prime, mul_mod, small_primes};
use crate::{Error, Result};

pub const DEFAULT_SEED: u64 = 0x00c0_ffee_5eed;
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug)]
pub struct FactorOptions {
    /// Pollard-rho iterations allowed per composite cofactor.
    pub budget: u64,
    pub seed: u64,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions {
            budget: DEFAULT_BUDGET,
            seed: DEFAULT_SEED,
        }
    }
}

/// `sign * prod p^e` with strictly increasing `p`. `certified` is false when some
/// listed factor is a composite that resisted the work budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactoredInteger {
    pub sign: i8,
    #[serde(serialize_with = "ser_factors")]
    pub factors: Vec<(BigUint, u32)>,
    pub certified: bool,
}

fn ser_factors<S: serde::Serializer>(f: &[(BigUint, u32)], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(f.len()))?;
    for (p, e) in f {
        seq.serialize_element(&(p.to_string(), e))?;
    }
    seq.end()
}

impl FactoredInteger {
    pub fn value(&self) -> BigInt {
        let mag = self
            .factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e));
        BigInt::from_biguint(if self.sign < 0 { Sign::Minus } else { Sign::Plus }, mag)
    }

    /// Parse the text form produced by `Display`, e.g. `- 2^1 3^5 43^1` or `1`.
    pub fn parse(s: &str) -> Result<FactoredInteger> {
        let bad = || Error::Usage(format!("cannot parse factorization {s:?}"));
        let mut tokens = s.split_whitespace().peekable();
        let mut sign = 1i8;
        if tokens.peek() == Some(&"-") {
            sign = -1;
            tokens.next();
        }
        let mut factors = Vec::new();
        for tok in tokens {
            if tok == "1" {
                continue;
            }
            let tok = tok.replace(['{', '}'], "");
            let (p, e) = tok.split_once('^').ok_or_else(bad)?;
            factors.push((p.parse::<BigUint>().map_err(|_| bad())?, e.parse::<u32>().map_err(|_| bad())?));
        }
        Ok(FactoredInteger {
            sign,
            factors,
            certified: true,
        })
    }
}

/// `- 2^1 3^5 43^1`; a unit prints as `1` (or `- 1`).
impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "- ")?;
        }
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|(p, e)| format!("{p}^{e}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn gcd_big(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}

/// One nontrivial factor of an odd composite `n < 2^64`, or `None` within `budget`.
fn brent_u64(n: u64, budget: u64, rng: &mut ChaCha8Rng) -> Option<u64> {
    let mut spent = 0u64;
    while spent < budget {
        let c = rng.gen_range(1..n);
        let mut y = rng.gen_range(0..n);
        let m = 128u64;
        let (mut g, mut r, mut q) = (1u64, 1u64, 1u64);
        let mut x = y;
        let mut ys = y;
        let f = |v: u64| ((mul_mod(v, v, n) as u128 + c as u128) % n as u128) as u64;
        while g == 1 && spent < budget {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += m;
                spent += m.min(r);
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                spent += 1;
                if g > 1 {
                    break;
                }
            }
        }
        if g > 1 && g < n {
            return Some(g);
        }
    }
    None
}

fn brent_big(n: &BigUint, budget: u64, rng: &mut ChaCha8Rng) -> Option<BigUint> {
    let one = BigUint::one();
    let mut spent = 0u64;
    while spent < budget {
        let c = rng.gen_biguint_range(&one, n);
        let mut y = rng.gen_biguint_below(n);
        let m = 128u64;
        let mut g = one.clone();
        let mut r = 1u64;
        let mut q = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        let f = |v: &BigUint| (v * v + &c) % n;
        let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
        while g.is_one() && spent < budget {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    q = (&q * diff(&x, &y)) % n;
                }
                g = gcd_big(&q, n);
                k += m;
                spent += m.min(r);
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                g = gcd_big(&diff(&x, &ys), n);
                spent += 1;
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && &g != n {
            return Some(g);
        }
    }
    None
}

/// Split `n` (no prime factor below the trial bound) into prime powers. Composite
/// pieces that exhaust the budget are pushed as-is and reported through the bool.
fn split(n: BigUint, opts: &FactorOptions, rng: &mut ChaCha8Rng, out: &mut Vec<BigUint>) -> bool {
    if n.is_one() {
        return true;
    }
    if let Some(small) = n.to_u64() {
        if is_prime_u64(small) {
            out.push(n);
            return true;
        }
        return match brent_u64(small, opts.budget, rng) {
            Some(d) => {
                let a = split(BigUint::from(d), opts, rng, out);
                let b = split(BigUint::from(small / d), opts, rng, out);
                a && b
            }
            None => {
                out.push(n);
                false
            }
        };
    }
    if is_probable_prime(&n) {
        out.push(n);
        return true;
    }
    if let Some(r) = perfect_power(&n) {
        let mut ok = true;
        for _ in 0..r.1 {
            ok &= split(r.0.clone(), opts, rng, out);
        }
        return ok;
    }
    match brent_big(&n, opts.budget, rng) {
        Some(d) => {
            let other = &n / &d;
            let a = split(d, opts, rng, out);
            let b = split(other, opts, rng, out);
            a && b
        }
        None => {
            out.push(n);
            false
        }
    }
}

/// `(root, k)` with `root^k = n`, `k >= 2`, if `n` is a perfect power.
fn perfect_power(n: &BigUint) -> Option<(BigUint, u32)> {
    let bits = n.bits() as u32;
    for k in 2..=bits.min(64) {
        let r = n.nth_root(k);
        if &r.pow(k) == n {
            return Some((r, k));
        }
    }
    None
}

pub fn factorize(n: &BigInt, opts: &FactorOptions) -> Result<FactoredInteger> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut rest = n.magnitude().clone();
    let mut primes: Vec<BigUint> = Vec::new();
    let mut push_small = |p: u64, rest: &mut BigUint| {
        while (&*rest % p).is_zero() {
            *rest /= p;
            primes.push(BigUint::from(p));
        }
    };
    for &p in small_primes() {
        let p = p as u64;
        if let Some(r) = rest.to_u64() {
            if p * p > r {
                break;
            }
            if r % p == 0 {
                push_small(p, &mut rest);
            }
        } else {
            push_small(p, &mut rest);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut certified = true;
    if !rest.is_one() {
        certified = split(rest, opts, &mut rng, &mut primes);
    }
    primes.sort();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(FactoredInteger {
        sign,
        factors,
        certified,
    })
}

/// Factor many integers concurrently; results are in input order and independent of
/// the thread count.
pub fn factorize_many(values: &[BigInt], opts: &FactorOptions) -> Result<Vec<FactoredInteger>> {
    values.par_iter().map(|v| factorize(v, opts)).collect()
}

/// Check a claimed factorization: the product must equal `n` and every listed base
/// must pass the primality test.
pub fn verify_factorization(n: &BigInt, claimed: &FactoredInteger) -> bool {
    claimed.value() == *n
        && claimed.factors.windows(2).all(|w| w[0].0 < w[1].0)
        && claimed.factors.iter().all(|(p, _)| is_probable_prime(p))
}
