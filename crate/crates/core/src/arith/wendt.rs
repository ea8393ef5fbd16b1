//! Wendt determinants, the Wendt criterion for `x^p + y^p + z^p ≡ 0 (mod q)`, and the
//! discriminant form of `det W_{n-1}`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::primes::{is_prime_u64, pow_mod};
use crate::elimination::{int_discriminant, int_resultant};
use crate::pn::classical_wendt_matrix;
use crate::{Error, Result};

/// Fraction-free Gaussian elimination over the integers.
pub fn det_int(matrix: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = matrix.len();
    if let Some(row) = matrix.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare { rows: n, cols: row.len() });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                if !r.is_zero() {
                    return Err(Error::InexactDivision("integer Bareiss step".into()));
                }
                a[i][j] = q;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

/// `det W_n` from the circulant matrix.
pub fn wendt_det_matrix(n: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Usage("n must be at least 1".into()));
    }
    det_int(&classical_wendt_matrix(n))
}

/// `det W_n = res((1 + t)^n - t^n, t^n - 1)`.
pub fn wendt_det_resultant(n: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Usage("n must be at least 1".into()));
    }
    let f: Vec<BigInt> = (0..n).map(|k| binomial(BigInt::from(n), BigInt::from(k))).collect();
    let mut g = vec![BigInt::zero(); n as usize + 1];
    g[0] = -BigInt::one();
    g[n as usize] = BigInt::one();
    int_resultant(&f, &g)
}

/// `det W_n`, computed both ways; disagreement is an error.
pub fn wendt_det(n: u32) -> Result<BigInt> {
    let a = wendt_det_matrix(n)?;
    let b = wendt_det_resultant(n)?;
    if a != b {
        return Err(Error::CrossCheckFailure(format!(
            "det W_{n}: matrix gives {a}, resultant gives {b}"
        )));
    }
    Ok(a)
}

#[derive(Clone, Debug, Serialize)]
pub struct WendtCriterion {
    pub p: u64,
    pub k: u64,
    pub q: u64,
    #[serde(serialize_with = "crate::arith::ser_display")]
    pub det_w2k: BigInt,
    pub divides: bool,
    /// `(x, y, z)` with none divisible by `q` and `x^p + y^p + z^p ≡ 0 (mod q)`.
    pub witness: Option<(u64, u64, u64)>,
    pub agree: bool,
}

/// Exhaustive search for `x^p + y^p + z^p ≡ 0 (mod q)` with `xyz` prime to `q`.
pub fn fermat_witness(p: u64, q: u64) -> Option<(u64, u64, u64)> {
    let powers: Vec<u64> = (0..q).map(|x| pow_mod(x, p, q)).collect();
    let mut root_of: HashMap<u64, u64> = HashMap::new();
    for x in (1..q).rev() {
        root_of.insert(powers[x as usize], x);
    }
    for x in 1..q {
        for y in x..q {
            let s = (powers[x as usize] + powers[y as usize]) % q;
            if let Some(&z) = root_of.get(&((q - s) % q)) {
                return Some((x, y, z));
            }
        }
    }
    None
}

/// For `q = 2kp + 1` prime: `q | det W_{2k}` against an exhaustive witness search mod `q`.
pub fn wendt_criterion(p: u64, k: u64) -> Result<WendtCriterion> {
    if p < 3 || !is_prime_u64(p) {
        return Err(Error::Usage(format!("p = {p} must be an odd prime")));
    }
    if k == 0 {
        return Err(Error::Usage("k must be positive".into()));
    }
    let q = 2 * k * p + 1;
    if !is_prime_u64(q) {
        return Err(Error::NotPrime(format!("q = 2kp + 1 = {q}")));
    }
    let size = u32::try_from(2 * k).map_err(|_| Error::SizeLimit(format!("W_{}", 2 * k)))?;
    let det = wendt_det(size)?;
    let divides = det.is_multiple_of(&BigInt::from(q));
    let witness = fermat_witness(p, q);
    Ok(WendtCriterion {
        p,
        k,
        q,
        det_w2k: det,
        divides,
        agree: divides == witness.is_some(),
        witness,
    })
}

/// All `(p, k)` with `p` an odd prime and `q = 2kp + 1` a prime below `q_limit`.
pub fn criterion_cases(q_limit: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for p in (3..q_limit).filter(|&p| is_prime_u64(p)) {
        let mut k = 1;
        while 2 * k * p + 1 < q_limit {
            if is_prime_u64(2 * k * p + 1) {
                out.push((p, k));
            }
            k += 1;
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct HelouReport {
    pub n: u32,
    #[serde(serialize_with = "crate::arith::ser_display")]
    pub disc_q: BigInt,
    #[serde(serialize_with = "crate::arith::ser_display")]
    pub det_w: BigInt,
    /// `disc Q / (n^(n-2) det W_{n-1})`.
    pub sign: i8,
    pub ok: bool,
}

/// For odd `n ≥ 3`, `disc((1 + t)^n - t^n - 1) = ±n^(n-2) det W_{n-1}`.
pub fn helou_check(n: u32) -> Result<HelouReport> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::Usage("n must be odd and at least 3".into()));
    }
    let q: Vec<BigInt> = (0..n)
        .map(|k| if k == 0 { BigInt::zero() } else { binomial(BigInt::from(n), BigInt::from(k)) })
        .collect();
    let disc = int_discriminant(&q)?;
    let det = wendt_det(n - 1)?;
    let scaled = BigInt::from(n).pow(n - 2) * &det;
    let (sign, ok) = if disc == scaled {
        (1, true)
    } else if disc == -&scaled {
        (-1, true)
    } else {
        (if disc.is_negative() == scaled.is_negative() { 1 } else { -1 }, false)
    };
    Ok(HelouReport { n, disc_q: disc, det_w: det, sign, ok })
}
