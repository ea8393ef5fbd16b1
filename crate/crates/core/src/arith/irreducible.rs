//! Irreducibility certificates for integer polynomials in one variable.
//!
//! Degree patterns of `f mod p` over several primes bound the degrees a rational factor
//! could have. When the patterns alone leave candidate degrees open, `f` is factored
//! modulo one prime, Hensel-lifted past the Mignotte bound, and every admissible
//! combination of lifted factors is trial-divided over the integers. Both outcomes are
//! proofs; `Inconclusive` is only reported when the combination search exceeds its budget.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::gfp::{Fp, FpPoly};
use super::primes::small_primes;
use crate::elimination::{expect_constant, int_discriminant, UniPoly};
use crate::{Error, Result};

/// Number of good primes whose degree patterns are intersected.
pub const PATTERN_PRIMES: usize = 10;

/// Largest prime tried when looking for good reductions.
const PRIME_SEARCH_LIMIT: u32 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IrreducibilityStatus {
    Irreducible,
    Reducible,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct IrreducibilityCertificate {
    pub status: IrreducibilityStatus,
    pub degree: usize,
    /// One of `linear`, `degree-patterns`, `hensel-recombination`, `repeated-factor`,
    /// `factor-found`, `budget-exhausted`.
    pub method: String,
    /// Primes `p` not dividing the leading coefficient with `f mod p` squarefree.
    pub primes: Vec<u64>,
    /// Sorted factor degrees of `f mod p`, one list per prime in `primes`.
    pub degree_patterns: Vec<Vec<usize>>,
    /// Degrees reachable as a subset sum in every pattern.
    pub sumset_intersection: Vec<usize>,
    pub lift_prime: Option<u64>,
    pub lift_exponent: Option<u32>,
    /// Ascending coefficients of a proper factor, when one was found.
    pub factor: Option<Vec<String>>,
}

/// Subset sums of a degree pattern.
fn sumset(pattern: &[usize]) -> BTreeSet<usize> {
    let mut out = BTreeSet::from([0]);
    for &d in pattern {
        let shifted: Vec<usize> = out.iter().map(|s| s + d).collect();
        out.extend(shifted);
    }
    out
}

fn trim(mut a: Vec<BigInt>) -> Vec<BigInt> {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn content(f: &[BigInt]) -> BigInt {
    f.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// `f / g` over the integers if `g` divides `f` exactly.
fn zdiv_exact(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let dg = g.len() - 1;
    if f.len() < g.len() {
        return None;
    }
    let lg = g.last().unwrap();
    let mut r = f.to_vec();
    let mut q = vec![BigInt::zero(); f.len() - dg];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + dg].div_rem(lg);
        if !rem.is_zero() {
            return None;
        }
        for (j, gj) in g.iter().enumerate() {
            r[k + j] -= &c * gj;
        }
        q[k] = c;
    }
    r.iter().all(Zero::is_zero).then(|| trim(q))
}

fn to_fp(f: &[BigInt], fp: &Fp) -> FpPoly {
    let p = BigInt::from(fp.p);
    let mut out: FpPoly = f.iter().map(|c| c.mod_floor(&p).to_u64().unwrap()).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn from_fp(a: &[u64]) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn reduce_mod(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric_mod(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m >> 1u32;
    trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Lift `f ≡ g h (mod p)` to `f ≡ G H (mod p^k)` with `G ≡ g` monic.
/// `f` is taken modulo `p^k`; `g` must be monic and coprime to `h` modulo `p`.
fn hensel_lift(
    f: &[BigInt],
    g: &FpPoly,
    h: &FpPoly,
    fp: &Fp,
    k: u32,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let p = BigInt::from(fp.p);
    let pk = p.pow(k);
    let f = reduce_mod(f, &pk);
    let (one, _s, t) = fp.ext_gcd(g, h);
    debug_assert_eq!(one, vec![1]);
    let mut big_g = from_fp(g);
    let mut big_h = from_fp(h);
    let mut m = p.clone();
    for _ in 1..k {
        let prod = zmul(&big_g, &big_h);
        let n = f.len().max(prod.len());
        let diff: Vec<BigInt> = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                (a - b).mod_floor(&pk)
            })
            .collect();
        let e: Vec<BigInt> = diff
            .iter()
            .map(|c| {
                debug_assert!((c % &m).is_zero());
                c / &m
            })
            .collect();
        let e = to_fp(&e, fp);
        let dg = fp.rem(&fp.mul(&t, &e), g);
        let (dh, r) = fp.divrem(&fp.sub(&e, &fp.mul(&dg, h)), g);
        debug_assert!(r.is_empty());
        let add = |a: &mut Vec<BigInt>, d: &FpPoly| {
            if a.len() < d.len() {
                a.resize(d.len(), BigInt::zero());
            }
            for (i, &c) in d.iter().enumerate() {
                a[i] += &m * c;
            }
        };
        add(&mut big_g, &dg);
        add(&mut big_h, &dh);
        m *= &p;
    }
    (reduce_mod(&big_g, &pk), reduce_mod(&big_h, &pk))
}

/// Smallest `k` with `p^k > 2 |lc| 2^d ||f||_2`, which bounds every coefficient of
/// `lc(f)/lc(h) * h` for any integer factor `h` of `f`.
fn lift_exponent(f: &[BigInt], p: u64) -> u32 {
    let d = f.len() - 1;
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + 1;
    let bound = BigInt::from(2) * f.last().unwrap().abs() * (BigInt::one() << d) * norm;
    let p = BigInt::from(p);
    let mut k = 1;
    let mut pk = p.clone();
    while pk <= bound {
        pk *= &p;
        k += 1;
    }
    k
}

/// Advance `idx` to the next `idx.len()`-subset of `0..r` in lexicographic order.
fn next_combination(idx: &mut [usize], r: usize) -> bool {
    let size = idx.len();
    for i in (0..size).rev() {
        if idx[i] < r - size + i {
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

struct Recombination {
    factor: Option<Vec<BigInt>>,
    exhausted: bool,
}

/// Try products of lifted factors whose degree lies in `allowed`, smallest subsets
/// first, up to half of the factors.
fn recombine(
    f: &[BigInt],
    lifted: &[Vec<BigInt>],
    pk: &BigInt,
    allowed: &BTreeSet<usize>,
    budget: u64,
) -> Recombination {
    let r = lifted.len();
    let lc = f.last().unwrap().clone();
    let mut tried = 0u64;
    for size in 1..=r / 2 {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let deg: usize = idx.iter().map(|&i| lifted[i].len() - 1).sum();
            if allowed.contains(&deg) {
                tried += 1;
                if tried > budget {
                    return Recombination { factor: None, exhausted: true };
                }
                let mut g = vec![lc.clone()];
                for &i in &idx {
                    g = reduce_mod(&zmul(&g, &lifted[i]), pk);
                }
                let g = symmetric_mod(&g, pk);
                let c = content(&g);
                let g: Vec<BigInt> = g.iter().map(|x| x / &c).collect();
                if g.len() > 1 && zdiv_exact(f, &g).is_some() {
                    return Recombination { factor: Some(g), exhausted: false };
                }
            }
            if !next_combination(&mut idx, r) {
                break;
            }
        }
    }
    Recombination { factor: None, exhausted: false }
}

/// Certificate for integer coefficients in ascending order. `budget` caps the number of
/// factor combinations tried over the integers.
pub fn irreducibility_certificate_coeffs(
    coeffs: &[BigInt],
    seed: u64,
    budget: u64,
) -> Result<IrreducibilityCertificate> {
    let f = trim(coeffs.to_vec());
    if f.len() < 2 {
        return Err(Error::Usage("irreducibility needs degree at least 1".into()));
    }
    let c = content(&f);
    if !c.is_one() {
        return Err(Error::NonPrimitive(c.to_string()));
    }
    let d = f.len() - 1;
    let mut cert = IrreducibilityCertificate {
        status: IrreducibilityStatus::Inconclusive,
        degree: d,
        method: String::new(),
        primes: Vec::new(),
        degree_patterns: Vec::new(),
        sumset_intersection: Vec::new(),
        lift_prime: None,
        lift_exponent: None,
        factor: None,
    };
    if d == 1 {
        cert.status = IrreducibilityStatus::Irreducible;
        cert.method = "linear".into();
        cert.sumset_intersection = vec![0, 1];
        return Ok(cert);
    }
    if f[0].is_zero() {
        cert.status = IrreducibilityStatus::Reducible;
        cert.method = "factor-found".into();
        cert.factor = Some(vec!["0".into(), "1".into()]);
        return Ok(cert);
    }

    let lc = f.last().unwrap().clone();
    let mut fields = Vec::new();
    for &p in small_primes().iter().skip(1) {
        if p > PRIME_SEARCH_LIMIT || fields.len() == PATTERN_PRIMES {
            break;
        }
        if (&lc % p).is_zero() {
            continue;
        }
        let fp = Fp::new(p as u64);
        let fbar = to_fp(&f, &fp);
        if fp.is_squarefree(&fbar) {
            fields.push((fp, fbar));
        }
    }
    if fields.is_empty() {
        if int_discriminant(&f)?.is_zero() {
            cert.status = IrreducibilityStatus::Reducible;
            cert.method = "repeated-factor".into();
        } else {
            cert.method = "no-good-prime".into();
        }
        return Ok(cert);
    }

    let mut allowed: Option<BTreeSet<usize>> = None;
    for (fp, fbar) in &fields {
        let pattern = fp.degree_pattern(fbar);
        let sums = sumset(&pattern);
        allowed = Some(match allowed {
            None => sums,
            Some(a) => a.intersection(&sums).copied().collect(),
        });
        cert.primes.push(fp.p);
        cert.degree_patterns.push(pattern);
    }
    let allowed = allowed.unwrap();
    cert.sumset_intersection = allowed.iter().copied().collect();
    if allowed.len() == 2 {
        cert.status = IrreducibilityStatus::Irreducible;
        cert.method = "degree-patterns".into();
        return Ok(cert);
    }

    // fewest modular factors, then the largest prime
    let (fp, fbar) = fields
        .iter()
        .zip(&cert.degree_patterns)
        .min_by_key(|((fp, _), pat)| (pat.len(), std::cmp::Reverse(fp.p)))
        .map(|(field, _)| field.clone())
        .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let factors = fp.factor_squarefree(&fp.monic(&fbar), &mut rng);
    let k = lift_exponent(&f, fp.p);
    cert.lift_prime = Some(fp.p);
    cert.lift_exponent = Some(k);
    let pk = BigInt::from(fp.p).pow(k);

    let mut lifted = Vec::with_capacity(factors.len());
    let mut rest_int = f.clone();
    let mut rest_mod = fbar.clone();
    for (i, g) in factors.iter().enumerate() {
        if i + 1 == factors.len() {
            // what remains is lc(f) times the last factor
            let lc_inv = mod_inverse(rest_int.last().unwrap(), &pk).expect("p divides lc");
            let monic: Vec<BigInt> = rest_int.iter().map(|c| c * &lc_inv).collect();
            lifted.push(reduce_mod(&monic, &pk));
            break;
        }
        let (h, r) = fp.divrem(&rest_mod, g);
        debug_assert!(r.is_empty());
        let (big_g, big_h) = hensel_lift(&rest_int, g, &h, &fp, k);
        lifted.push(big_g);
        rest_int = big_h;
        rest_mod = h;
    }

    let outcome = recombine(&f, &lifted, &pk, &allowed, budget);
    match (outcome.factor, outcome.exhausted) {
        (Some(g), _) => {
            cert.status = IrreducibilityStatus::Reducible;
            cert.method = "factor-found".into();
            cert.factor = Some(g.iter().map(ToString::to_string).collect());
        }
        (None, true) => {
            cert.method = "budget-exhausted".into();
        }
        (None, false) => {
            cert.status = IrreducibilityStatus::Irreducible;
            cert.method = "hensel-recombination".into();
        }
    }
    Ok(cert)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Certificate for a univariate polynomial whose coefficients are integer constants.
pub fn irreducibility_certificate(
    f: &UniPoly,
    seed: u64,
    budget: u64,
) -> Result<IrreducibilityCertificate> {
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| expect_constant(c, "coefficient"))
        .collect::<Result<Vec<_>>>()?;
    irreducibility_certificate_coeffs(&coeffs, seed, budget)
}

/// Integer coefficients of `f`, ascending, from a sign-aware string list.
pub fn parse_coeffs(items: &[String]) -> Result<Vec<BigInt>> {
    items
        .iter()
        .map(|s| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Usage(format!("bad integer coefficient {s:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use IrreducibilityStatus::*;

    const SEED: u64 = 7;
    const BUDGET: u64 = 1 << 20;

    fn cert(c: &[i64]) -> IrreducibilityCertificate {
        let c: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
        irreducibility_certificate_coeffs(&c, SEED, BUDGET).unwrap()
    }

    #[test]
    fn quadratic_from_p2() {
        let c = cert(&[1, -10, 1]);
        assert_eq!(c.status, Irreducible);
        assert_eq!(c.method, "degree-patterns");
    }

    #[test]
    fn difference_of_squares() {
        let c = cert(&[-1, 0, 1]);
        assert_eq!(c.status, Reducible);
        let g = c.factor.unwrap();
        assert!(g == ["1", "1"] || g == ["-1", "1"], "{g:?}");
    }

    #[test]
    fn sqrt2_plus_sqrt3() {
        // every reduction splits, so only recombination decides
        let c = cert(&[1, 0, -10, 0, 1]);
        assert_eq!(c.status, Irreducible);
        assert_eq!(c.method, "hensel-recombination");
    }

    #[test]
    fn product_of_quadratics() {
        // (z^2 + 1)(z^2 - 2) and (2z^2 + 3)(3z^3 - z + 5)
        assert_eq!(cert(&[-2, 0, -1, 0, 1]).status, Reducible);
        let c = cert(&[15, -3, 10, 7, 0, 6]);
        assert_eq!(c.status, Reducible);
        let g: Vec<BigInt> = parse_coeffs(&c.factor.unwrap()).unwrap();
        assert!(zdiv_exact(&[15, -3, 10, 7, 0, 6].map(BigInt::from), &g).is_some());
    }

    #[test]
    fn repeated_and_trivial_inputs() {
        assert_eq!(cert(&[1, 2, 1]).status, Reducible);
        assert_eq!(cert(&[0, 0, 1]).status, Reducible);
        assert_eq!(cert(&[3, 7]).status, Irreducible);
        let bad = [2, 4, 6].map(BigInt::from);
        assert!(matches!(
            irreducibility_certificate_coeffs(&bad, SEED, BUDGET),
            Err(Error::NonPrimitive(_))
        ));
    }

    #[test]
    fn cyclotomic_and_swinnerton_dyer() {
        // Phi_15 and the minimal polynomial of sqrt2 + sqrt3 + sqrt5
        let phi15 = [1, -1, 0, 1, -1, 1, 0, -1, 1];
        assert_eq!(cert(&phi15).status, Irreducible);
        let s3 = [576, 0, -960, 0, 352, 0, -40, 0, 1];
        assert_eq!(cert(&s3).status, Irreducible);
    }
}
