//! Dense univariate polynomials over a prime field `F_p` (`p < 2^32`), with
//! distinct-degree and Cantor–Zassenhaus equal-degree factorization.
//!
//! Polynomials are coefficient vectors in ascending order with no trailing zeros;
//! the zero polynomial is the empty vector.

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::primes::{mul_mod, pow_mod};

pub type FpPoly = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Fp {
        assert!(p >= 2 && p < (1 << 32), "field characteristic out of range");
        Fp { p }
    }

    fn trim(mut a: FpPoly) -> FpPoly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn reduce(&self, coeffs: &[i64]) -> FpPoly {
        let p = self.p as i64;
        Self::trim(coeffs.iter().map(|&c| c.rem_euclid(p) as u64).collect())
    }

    pub fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let n = a.len().max(b.len());
        Self::trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
                .collect(),
        )
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let n = a.len().max(b.len());
        Self::trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0)) % self.p)
                .collect(),
        )
    }

    pub fn scale(&self, a: &[u64], c: u64) -> FpPoly {
        Self::trim(a.iter().map(|&x| mul_mod(x, c, self.p)).collect())
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> FpPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(x, y, self.p)) % self.p;
            }
        }
        Self::trim(out)
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn divrem(&self, a: &[u64], b: &[u64]) -> (FpPoly, FpPoly) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut r = a.to_vec();
        if r.len() < b.len() {
            return (Vec::new(), Self::trim(r));
        }
        let db = b.len() - 1;
        let inv = self.inv(*b.last().unwrap());
        let mut q = vec![0u64; r.len() - db];
        for k in (0..q.len()).rev() {
            let c = mul_mod(r[k + db], inv, self.p);
            q[k] = c;
            if c != 0 {
                for (j, &bj) in b.iter().enumerate() {
                    r[k + j] = (r[k + j] + self.p - mul_mod(c, bj, self.p)) % self.p;
                }
            }
        }
        r.truncate(db);
        (Self::trim(q), Self::trim(r))
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> FpPoly {
        self.divrem(a, b).1
    }

    pub fn monic(&self, a: &[u64]) -> FpPoly {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.scale(a, self.inv(lc)),
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (FpPoly, FpPoly, FpPoly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(*r0.last().expect("gcd of two zero polynomials"));
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub fn derivative(&self, a: &[u64]) -> FpPoly {
        Self::trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    pub fn mulmod(&self, a: &[u64], b: &[u64], m: &[u64]) -> FpPoly {
        self.rem(&self.mul(a, b), m)
    }

    pub fn powmod(&self, a: &[u64], e: &BigUint, m: &[u64]) -> FpPoly {
        let mut result = self.rem(&[1], m);
        let base = self.rem(a, m);
        for i in (0..e.bits()).rev() {
            result = self.mulmod(&result, &result, m);
            if e.bit(i) {
                result = self.mulmod(&result, &base, m);
            }
        }
        result
    }

    pub fn is_squarefree(&self, f: &[u64]) -> bool {
        let d = self.derivative(f);
        !d.is_empty() && self.gcd(f, &d).len() == 1
    }

    /// Distinct-degree factorization of a monic squarefree `f`: pairs `(d, g_d)` where
    /// `g_d` is the product of all irreducible factors of degree `d`.
    pub fn ddf(&self, f: &[u64]) -> Vec<(usize, FpPoly)> {
        let mut out = Vec::new();
        let mut f = self.monic(f);
        let x: FpPoly = vec![0, 1];
        let p = BigUint::from(self.p);
        let mut h = self.rem(&x, &f);
        let mut d = 0;
        while f.len() > 1 {
            d += 1;
            if 2 * d > f.len() - 1 {
                out.push((f.len() - 1, f.clone()));
                break;
            }
            h = self.powmod(&h, &p, &f);
            let g = self.gcd(&f, &self.sub(&h, &x));
            if g.len() > 1 {
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((d, g));
            }
        }
        out
    }

    /// Split a monic product of distinct irreducibles of degree `d` (odd `p`).
    pub fn edf(&self, f: &[u64], d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        assert!(self.p % 2 == 1, "equal-degree splitting needs an odd characteristic");
        let e = (BigUint::from(self.p).pow(d as u32) - BigUint::one()) >> 1u32;
        loop {
            let a: FpPoly = Self::trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let g = self.gcd(f, &a);
            let g = if g.len() > 1 && g.len() < f.len() {
                g
            } else {
                let b = self.powmod(&a, &e, f);
                self.gcd(f, &self.sub(&b, &[1]))
            };
            if g.len() > 1 && g.len() < f.len() {
                let h = self.divrem(f, &g).0;
                let mut out = self.edf(&g, d, rng);
                out.extend(self.edf(&self.monic(&h), d, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a monic squarefree `f`, sorted.
    pub fn factor_squarefree(&self, f: &[u64], rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
        let mut out = Vec::new();
        for (d, g) in self.ddf(f) {
            out.extend(self.edf(&g, d, rng));
        }
        out.sort();
        out
    }

    /// Sorted degrees of the irreducible factors of a squarefree `f`.
    pub fn degree_pattern(&self, f: &[u64]) -> Vec<usize> {
        let mut out = Vec::new();
        for (d, g) in self.ddf(f) {
            out.extend(std::iter::repeat(d).take((g.len() - 1) / d));
        }
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn arithmetic() {
        let f = Fp::new(7);
        let a = f.reduce(&[1, 1]);
        let b = f.reduce(&[-1, 1]);
        assert_eq!(f.mul(&a, &b), f.reduce(&[-1, 0, 1]));
        let (q, r) = f.divrem(&f.reduce(&[-1, 0, 1]), &a);
        assert_eq!(q, b);
        assert!(r.is_empty());
        let (g, s, t) = f.ext_gcd(&a, &b);
        assert_eq!(g, vec![1]);
        assert_eq!(f.add(&f.mul(&s, &a), &f.mul(&t, &b)), vec![1]);
    }

    #[test]
    fn factor_patterns() {
        let f = Fp::new(7);
        // z^2 - 10 z + 1 has discriminant 96 = 5 mod 7, a non-residue: irreducible mod 7
        assert_eq!(f.degree_pattern(&f.reduce(&[1, -10, 1])), vec![2]);
        // z^4 - 10 z^2 + 1 splits into quadratics or linears modulo every prime
        for p in [5u64, 7, 11, 13, 17, 19, 23] {
            let fp = Fp::new(p);
            let poly = fp.reduce(&[1, 0, -10, 0, 1]);
            if fp.is_squarefree(&poly) {
                assert!(fp.degree_pattern(&poly).iter().all(|&d| d <= 2), "p = {p}");
            }
        }
    }

    #[test]
    fn full_factorization() {
        let f = Fp::new(101);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let parts = [f.reduce(&[3, 1]), f.reduce(&[5, 1]), f.reduce(&[2, 0, 1]), f.reduce(&[7, 1])];
        let prod = parts.iter().fold(vec![1u64], |acc, p| f.mul(&acc, p));
        let mut got = f.factor_squarefree(&prod, &mut rng);
        let mut want: Vec<FpPoly> = parts.iter().map(|p| f.monic(p)).collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }
}
