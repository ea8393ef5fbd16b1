//! Symmetric polynomials and their expansion in elementary symmetric functions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Exp, Monomial, Polynomial, VarTable};
use crate::{Error, Result};

/// The `k`-th elementary symmetric polynomial in `vars`; `σ_0 = 1`, `σ_k = 0` for `k > vars.len()`.
pub fn elementary_symmetric(table: &Arc<VarTable>, vars: &[&str], k: usize) -> Result<Polynomial> {
    let idx: Vec<usize> = vars.iter().map(|v| table.require(v)).collect::<Result<_>>()?;
    let mut out = Polynomial::zero(table);
    if k > idx.len() {
        return Ok(out);
    }
    let mut chosen: Vec<usize> = (0..k).collect();
    loop {
        let mut exps = vec![0 as Exp; table.len()];
        for &c in &chosen {
            exps[idx[c]] += 1;
        }
        out.add_term(Monomial::from_exps(&exps, table.len()), BigInt::one());
        // next k-subset in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if chosen[i] < idx.len() - k + i {
                chosen[i] += 1;
                for j in i + 1..k {
                    chosen[j] = chosen[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn swap_vars(p: &Polynomial, a: usize, b: usize) -> Polynomial {
    let n = p.vars.len();
    let mut out = Polynomial::zero(&p.vars);
    for (m, c) in &p.terms {
        let mut e = m.padded(n);
        e.swap(a, b);
        out.terms.insert(Monomial::from_exps(&e, n), c.clone());
    }
    out
}

/// Whether `p` is invariant under every permutation of `vars`.
///
/// Adjacent transpositions generate the symmetric group, so only those are tested.
pub fn is_symmetric(p: &Polynomial, vars: &[&str]) -> Result<bool> {
    let idx: Vec<usize> = vars.iter().map(|v| p.vars.require(v)).collect::<Result<_>>()?;
    Ok(idx.windows(2).all(|w| swap_vars(p, w[0], w[1]) == *p))
}

/// A polynomial written in the elementary symmetric functions `σ_1..σ_k` of a fixed
/// list of variables, with integer coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct SymExpansion {
    table: Arc<VarTable>,
    vars: Vec<String>,
    coeffs: BTreeMap<Vec<u32>, BigInt>,
}

impl SymExpansion {
    /// Build from `(σ-exponents, coefficient)` pairs. Each exponent vector has length
    /// `vars.len()`; entry `i` is the power of `σ_{i+1}`.
    pub fn from_terms<I>(table: &Arc<VarTable>, vars: &[&str], terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        for v in vars {
            table.require(v)?;
        }
        let k = vars.len();
        let mut coeffs: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (mut e, c) in terms {
            if e.len() > k {
                return Err(Error::DimensionMismatch(format!(
                    "σ-exponent vector of length {} for arity {k}",
                    e.len()
                )));
            }
            e.resize(k, 0);
            *coeffs.entry(e).or_default() += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(SymExpansion {
            table: table.clone(),
            vars: vars.iter().map(|s| s.to_string()).collect(),
            coeffs,
        })
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.coeffs
    }

    /// Coefficient of `σ_1^e1 σ_2^e2 ...` (missing entries are zero).
    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        let mut e = exps.to_vec();
        e.resize(self.arity(), 0);
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    /// Substitute the σ's back in terms of the original variables.
    pub fn expand(&self) -> Result<Polynomial> {
        let names: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let mut cache = SigmaCache::new(&self.table, &names)?;
        let mut out = Polynomial::zero(&self.table);
        for (e, c) in &self.coeffs {
            out = &out + &cache.monomial(e).scale(c);
        }
        Ok(out)
    }
}

impl fmt::Debug for SymExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymExpansion({self})")
    }
}

/// Leading σ-monomial first, e.g. `σ1^5 - 625*σ1^2*σ3 + 3125*σ2*σ3`.
impl fmt::Display for SymExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let weight = |e: &Vec<u32>| -> u32 { e.iter().enumerate().map(|(i, &x)| (i as u32 + 1) * x).sum() };
        let mut items: Vec<_> = self.coeffs.iter().collect();
        items.sort_by(|a, b| weight(b.0).cmp(&weight(a.0)).then(b.0.cmp(a.0)));
        for (k, (e, c)) in items.into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let abs = c.abs();
            let mut parts = Vec::new();
            let is_unit = e.iter().all(|&x| x == 0);
            if !abs.is_one() || is_unit {
                parts.push(abs.to_string());
            }
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => parts.push(format!("σ{}", i + 1)),
                    _ => parts.push(format!("σ{}^{}", i + 1, x)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

struct SigmaCache {
    sigmas: Vec<Polynomial>,
    powers: HashMap<(usize, u32), Polynomial>,
    table: Arc<VarTable>,
}

impl SigmaCache {
    fn new(table: &Arc<VarTable>, vars: &[&str]) -> Result<Self> {
        let sigmas = (1..=vars.len())
            .map(|k| elementary_symmetric(table, vars, k))
            .collect::<Result<_>>()?;
        Ok(SigmaCache {
            sigmas,
            powers: HashMap::new(),
            table: table.clone(),
        })
    }

    fn power(&mut self, i: usize, e: u32) -> Polynomial {
        if e == 0 {
            return Polynomial::one(&self.table);
        }
        if let Some(p) = self.powers.get(&(i, e)) {
            return p.clone();
        }
        let p = if e == 1 {
            self.sigmas[i].clone()
        } else {
            let half = self.power(i, e / 2);
            let sq = &half * &half;
            if e % 2 == 1 {
                &sq * &self.sigmas[i]
            } else {
                sq
            }
        };
        self.powers.insert((i, e), p.clone());
        p
    }

    fn monomial(&mut self, e: &[u32]) -> Polynomial {
        let mut out = Polynomial::one(&self.table);
        for (i, &x) in e.iter().enumerate() {
            if x > 0 {
                out = &out * &self.power(i, x);
            }
        }
        out
    }
}

/// Gauss's algorithm: repeatedly cancel the leading term `c x1^a1 ... xk^ak` with
/// `c σ1^(a1-a2) ... σk^ak`. `p` may only involve the listed variables.
pub fn reduce_to_elementary(p: &Polynomial, vars: &[&str]) -> Result<SymExpansion> {
    if !is_symmetric(p, vars)? {
        return Err(Error::NotSymmetric(vars.iter().map(|s| s.to_string()).collect()));
    }
    let table = p.vars.clone();
    let mut idx: Vec<(usize, &str)> = vars
        .iter()
        .map(|v| Ok((table.require(v)?, *v)))
        .collect::<Result<_>>()?;
    // grlex leading terms have non-increasing exponents along table order
    idx.sort_unstable();
    let sorted: Vec<&str> = idx.iter().map(|&(_, v)| v).collect();
    for (m, _) in p.terms() {
        for (i, &e) in m.exps().iter().enumerate() {
            if e > 0 && !idx.iter().any(|&(j, _)| j == i) {
                return Err(Error::Usage(format!(
                    "variable {} is not among the symmetric variables",
                    table.names()[i]
                )));
            }
        }
    }
    let k = sorted.len();
    let mut cache = SigmaCache::new(&table, &sorted)?;
    let mut rem = p.clone();
    let mut terms = Vec::new();
    while let Some((m, c)) = rem.leading_term() {
        let a: Vec<u32> = idx.iter().map(|&(j, _)| m.exp(j) as u32).collect();
        let mut e = vec![0u32; k];
        for i in 0..k {
            let next = if i + 1 < k { a[i + 1] } else { 0 };
            if a[i] < next {
                return Err(Error::NotSymmetric(vars.iter().map(|s| s.to_string()).collect()));
            }
            e[i] = a[i] - next;
        }
        let c = c.clone();
        rem = &rem - &cache.monomial(&e).scale(&c);
        terms.push((e, c));
    }
    SymExpansion::from_terms(&table, &sorted, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> Arc<VarTable> {
        VarTable::new(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn sigma_definitions() {
        let t = xyz();
        let v = ["x", "y", "z"];
        assert_eq!(elementary_symmetric(&t, &v, 0).unwrap(), Polynomial::one(&t));
        assert_eq!(elementary_symmetric(&t, &v, 2).unwrap().to_string(), "x*y + x*z + y*z");
        assert_eq!(elementary_symmetric(&t, &v, 3).unwrap().to_string(), "x*y*z");
        assert!(elementary_symmetric(&t, &v, 4).unwrap().is_zero());
    }

    #[test]
    fn symmetry_test() {
        let t = xyz();
        let s1 = elementary_symmetric(&t, &["x", "y", "z"], 1).unwrap();
        assert!(is_symmetric(&s1, &["x", "y", "z"]).unwrap());
        let d = &Polynomial::var(&t, "x").unwrap() - &Polynomial::var(&t, "y").unwrap();
        assert!(!is_symmetric(&d, &["x", "y"]).unwrap());
        assert!(is_symmetric(&d.pow(2), &["x", "y"]).unwrap());
    }

    #[test]
    fn power_sum_reduction() {
        let t = xyz();
        let v = ["x", "y", "z"];
        let p2 = &(&Polynomial::var(&t, "x").unwrap().pow(2) + &Polynomial::var(&t, "y").unwrap().pow(2))
            + &Polynomial::var(&t, "z").unwrap().pow(2);
        let s = reduce_to_elementary(&p2, &v).unwrap();
        assert_eq!(s.to_string(), "σ1^2 - 2*σ2");
        assert_eq!(s.expand().unwrap(), p2);
    }

    #[test]
    fn reduction_rejects_asymmetric() {
        let t = xyz();
        let x = Polynomial::var(&t, "x").unwrap();
        assert!(matches!(
            reduce_to_elementary(&x, &["x", "y"]),
            Err(Error::NotSymmetric(_))
        ));
    }

    #[test]
    fn var_order_does_not_matter() {
        let t = xyz();
        let s = elementary_symmetric(&t, &["x", "y", "z"], 2).unwrap().pow(2);
        let a = reduce_to_elementary(&s, &["z", "x", "y"]).unwrap();
        assert_eq!(a.coeff(&[0, 2, 0]), BigInt::one());
        assert_eq!(a.coeffs().len(), 1);
    }
}
