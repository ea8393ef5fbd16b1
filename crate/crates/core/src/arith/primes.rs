//! Sieve and Miller–Rabin primality.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Trial-division bound.
pub const TRIAL_LIMIT: u32 = 1_000_000;

const FIXED_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Miller–Rabin with [`FIXED_BASES`] is exact below this value.
const DETERMINISTIC_BOUND: &str = "3317044064679887385961981";

const RANDOM_ROUNDS: usize = 40;

pub fn sieve(limit: u32) -> Vec<u32> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u32);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Primes below [`TRIAL_LIMIT`].
pub fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve(TRIAL_LIMIT))
}

fn deterministic_bound() -> &'static BigUint {
    static BOUND: OnceLock<BigUint> = OnceLock::new();
    BOUND.get_or_init(|| DETERMINISTIC_BOUND.parse().unwrap())
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod_u64(r, b, m);
        }
        b = mul_mod_u64(b, b, m);
        e >>= 1;
    }
    r
}

fn strong_probable_prime_u64(n: u64, a: u64) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    let mut x = pow_mod_u64(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod_u64(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &FIXED_BASES {
        let p = p as u64;
        if n % p == 0 {
            return n == p;
        }
    }
    FIXED_BASES.iter().all(|&a| strong_probable_prime_u64(n, a as u64))
}

fn strong_probable_prime(n: &BigUint, a: &BigUint, d: &BigUint, s: u64) -> bool {
    let n1 = n - 1u32;
    let mut x = a.modpow(d, n);
    if x.is_one() || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return true;
        }
    }
    false
}

/// Miller–Rabin test: exact below about `3.3e24`, a strong probable-prime test with
/// 40 additional pseudo-random bases (fixed seed) above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in small_primes().iter().take(200) {
        if (n % p).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    if !FIXED_BASES
        .iter()
        .all(|&a| strong_probable_prime(n, &BigUint::from(a), &d, s))
    {
        return false;
    }
    if n < deterministic_bound() {
        return true;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d69_6c6c_6572);
    let two = BigUint::from(2u32);
    (0..RANDOM_ROUNDS).all(|_| {
        let a = rng.gen_biguint_range(&two, &n1);
        strong_probable_prime(n, &a, &d, s)
    })
}

/// Negative numbers are never prime.
pub fn is_probable_prime_int(n: &BigInt) -> bool {
    n.sign() != Sign::Minus && is_probable_prime(n.magnitude())
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub(crate) fn pow_mod(b: u64, e: u64, m: u64) -> u64 {
    pow_mod_u64(b, e, m)
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    mul_mod_u64(a, b, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(s: &str) -> BigUint {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert!(!is_prime_u64(0));
        assert!(!is_prime_u64(1));
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(41));
        assert!(!is_prime_u64(561));
        assert!(!is_prime_u64(3_215_031_751));
        assert!(is_prime_u64(18_446_744_073_709_551_557));
    }

    #[test]
    fn sieve_agrees_with_miller_rabin() {
        let ps = sieve(5000);
        for n in 0..5000u64 {
            assert_eq!(is_prime_u64(n), ps.binary_search(&(n as u32)).is_ok(), "{n}");
        }
    }

    #[test]
    fn large_values() {
        assert!(is_probable_prime(&big("30887295467839157373255894019")));
        assert!(is_probable_prime(&big("875241448225705706391329")));
        // 2^89 - 1 is a Mersenne prime; 2^97 - 1 is not
        assert!(is_probable_prime(&big("618970019642690137449562111")));
        assert!(!is_probable_prime(&big("158456325028528675187087900671")));
        // product of two primes above the deterministic bound
        let p = big("1000000000000000000000007");
        let q = big("1000000000000000000000049");
        assert!(!is_probable_prime(&(p * q)));
        assert!(!is_probable_prime_int(&BigInt::from(-7)));
    }
}
