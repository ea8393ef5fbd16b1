//! Sparse multivariate polynomials with arbitrary-precision integer coefficients.
//!
//! A [`Polynomial`] is a map from [`Monomial`] to a nonzero [`BigInt`], tied to a
//! shared [`VarTable`]. Terms are kept in graded-lexicographic order, with the first
//! variable of the table being the most significant, so iteration and serialization
//! are deterministic. The zero polynomial is the empty map.

mod json;
mod monomial;
mod symmetric;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub use json::{PolynomialJson, TermJson};
pub use monomial::{Exp, Monomial};
pub use symmetric::{elementary_symmetric, is_symmetric, reduce_to_elementary, SymExpansion};

/// Ordered list of variable names. Index positions are stable for the lifetime
/// of the table, and every polynomial refers to its table through an `Arc`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarTable {
    names: Vec<String>,
}

impl VarTable {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Arc::new(VarTable { names }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

#[derive(Clone)]
pub struct Polynomial {
    vars: Arc<VarTable>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(vars: &Arc<VarTable>) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Arc<VarTable>) -> Self {
        Self::constant(vars, BigInt::one())
    }

    pub fn constant(vars: &Arc<VarTable>, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &Arc<VarTable>, name: &str) -> Result<Self> {
        let idx = vars.require(name)?;
        Ok(Self::var_index(vars, idx))
    }

    pub fn var_index(vars: &Arc<VarTable>, idx: usize) -> Self {
        let mut p = Self::zero(vars);
        p.terms
            .insert(Monomial::variable(vars.len(), idx), BigInt::one());
        p
    }

    /// `coeff * x^exps`. `exps` may be shorter than the table (zero-padded).
    pub fn monomial(vars: &Arc<VarTable>, exps: &[Exp], coeff: impl Into<BigInt>) -> Result<Self> {
        if exps.len() > vars.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} exponents for {} variables",
                exps.len(),
                vars.len()
            )));
        }
        let c = coeff.into();
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::from_exps(exps, vars.len()), c);
        }
        Ok(p)
    }

    /// Build from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(vars: &Arc<VarTable>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<Exp>, BigInt)>,
    {
        let mut p = Self::zero(vars);
        for (exps, c) in terms {
            if exps.len() > vars.len() {
                return Err(Error::DimensionMismatch(format!(
                    "{} exponents for {} variables",
                    exps.len(),
                    vars.len()
                )));
            }
            p.add_term(Monomial::from_exps(&exps, vars.len()), c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Value of a constant polynomial; `None` if a variable occurs.
    pub fn constant_value(&self) -> Option<BigInt> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_default())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Coefficient of `x^exps` (zero-padded exponent vector).
    pub fn coeff_of(&self, exps: &[Exp]) -> BigInt {
        self.coeff(&Monomial::from_exps(exps, self.vars.len().max(exps.len())))
    }

    /// The grlex-largest term.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exp(idx) as u32)
            .max()
            .unwrap_or(0)
    }

    /// Whether every term has total degree `degree`. Zero is homogeneous of every degree.
    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    /// Gcd of all coefficients (nonnegative); zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_table(&self, other: &Polynomial) -> Result<()> {
        if same_table(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(Error::VarTableMismatch {
                left: self.vars.names.clone(),
                right: other.vars.names.clone(),
            })
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_table(other)?;
        let (big, small) = if self.terms.len() >= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_table(other)?;
        let mut out = Polynomial::zero(&self.vars);
        if self.is_zero() || other.is_zero() {
            return Ok(out);
        }
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiply by `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v * c))
                .collect(),
        }
    }

    /// Exact power by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.vars);
        if e == 0 {
            return result;
        }
        let mut base = self.clone();
        let mut e = e;
        loop {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = &base * &base;
        }
        result
    }

    /// Divide every coefficient by `c`, failing unless all divisions are exact.
    pub fn div_exact_scalar(&self, c: &BigInt) -> Result<Polynomial> {
        if c.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        let mut terms = BTreeMap::new();
        for (m, v) in &self.terms {
            let (q, r) = v.div_rem(c);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "coefficient {v} not divisible by {c}"
                )));
            }
            terms.insert(m.clone(), q);
        }
        Ok(Polynomial {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Exact quotient `self / divisor` in the polynomial ring.
    ///
    /// Repeatedly cancels the leading term of the running remainder against the
    /// leading term of the divisor; fails with [`Error::InexactDivision`] as soon as
    /// a leading monomial or coefficient does not divide.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_table(divisor)?;
        if divisor.is_zero() {
            return Err(Error::InexactDivision("division by zero polynomial".into()));
        }
        if let Some(c) = divisor.constant_value() {
            if c.is_one() {
                return Ok(self.clone());
            }
            return self.div_exact_scalar(&c);
        }
        if divisor.terms.len() == 1 {
            let (dm, dc) = divisor.leading_term().unwrap();
            let mut terms = BTreeMap::new();
            for (m, v) in &self.terms {
                let qm = m.div(dm).ok_or_else(|| {
                    Error::InexactDivision(format!("monomial not divisible by divisor"))
                })?;
                let (q, r) = v.div_rem(dc);
                if !r.is_zero() {
                    return Err(Error::InexactDivision(format!(
                        "coefficient {v} not divisible by {dc}"
                    )));
                }
                terms.insert(qm, q);
            }
            return Ok(Polynomial {
                vars: self.vars.clone(),
                terms,
            });
        }
        let (lm, lc) = divisor.leading_term().unwrap();
        let lm = lm.clone();
        let lc = lc.clone();
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.vars);
        while let Some((m, c)) = rem.terms.last_key_value() {
            let qm = m.div(&lm).ok_or_else(|| {
                Error::InexactDivision("leading monomial of remainder not divisible".into())
            })?;
            let (qc, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "leading coefficient {c} not divisible by {lc}"
                )));
            }
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), -(&qc * dc));
            }
            quot.terms.insert(qm, qc);
        }
        Ok(quot)
    }

    /// Replace variable `var` by `value`. A constant `value` may come from any table.
    pub fn substitute(&self, var: &str, value: &Polynomial) -> Result<Polynomial> {
        let idx = self.vars.require(var)?;
        let value = if value.is_constant() && !same_table(&self.vars, &value.vars) {
            Polynomial::constant(&self.vars, value.constant_value().unwrap())
        } else {
            self.check_table(value)?;
            value.clone()
        };
        let mut groups: BTreeMap<Exp, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(idx);
            groups
                .entry(e)
                .or_insert_with(|| Polynomial::zero(&self.vars))
                .add_term(m.with_exp(idx, 0), c.clone());
        }
        let mut out = Polynomial::zero(&self.vars);
        let mut power = Polynomial::one(&self.vars);
        let mut power_exp: Exp = 0;
        for (e, coeff) in groups {
            while power_exp < e {
                power = &power * &value;
                power_exp += 1;
            }
            out = &out + &(&coeff * &power);
        }
        Ok(out)
    }

    /// Rewrite every `w^(k n) * M` as `z^k * M`, removing `w`.
    pub fn reduce_w_power(&self, w: &str, z: &str, n: u32) -> Result<Polynomial> {
        if n == 0 {
            return Err(Error::Usage("n must be positive".into()));
        }
        let wi = self.vars.require(w)?;
        let zi = self.vars.require(z)?;
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exp(wi) as u32;
            if e % n != 0 {
                return Err(Error::WNotEliminable {
                    var: w.to_string(),
                    exponent: e,
                    n,
                });
            }
            let k = (e / n) as Exp;
            let m2 = m.with_exp(wi, 0);
            let ze = m2.exp(zi) + k;
            out.add_term(m2.with_exp(zi, ze), c.clone());
        }
        Ok(out)
    }

    /// Re-express over `target`, matching variables by name. Fails if a variable
    /// that actually occurs is missing from `target`.
    pub fn remap(&self, target: &Arc<VarTable>) -> Result<Polynomial> {
        if same_table(&self.vars, target) {
            let mut p = self.clone();
            p.vars = target.clone();
            return Ok(p);
        }
        let mapping: Vec<Option<usize>> = self
            .vars
            .names
            .iter()
            .map(|n| target.index(n))
            .collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0 as Exp; target.len()];
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match mapping[i] {
                    Some(j) => exps[j] = e,
                    None => return Err(Error::UnknownVariable(self.vars.names[i].clone())),
                }
            }
            out.add_term(Monomial::from_exps(&exps, target.len()), c.clone());
        }
        Ok(out)
    }

    /// Apply `f` to every coefficient, dropping zeros.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Monomial, &BigInt) -> BigInt) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(m, c));
        }
        out
    }

    /// Same polynomial with every coefficient replaced by its absolute value.
    pub fn abs_coeffs(&self) -> Polynomial {
        self.map_coeffs(|_, c| c.abs())
    }

    /// Evaluate at an integer point (one value per table variable).
    pub fn eval_int(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates for {} variables",
                point.len(),
                self.vars.len()
            )));
        }
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Evaluate at a complex point (one value per table variable).
    pub fn eval_complex(&self, point: &[Complex64]) -> Result<Complex64> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates for {} variables",
                point.len(),
                self.vars.len()
            )));
        }
        let mut total = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t *= point[i].powu(e as u32);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Coefficients (ascending powers of `var`) after substituting complex values for
    /// every other variable. Entries of `point` at the position of `var` are ignored.
    pub fn univariate_complex(&self, var: &str, point: &[Complex64]) -> Result<Vec<Complex64>> {
        let idx = self.vars.require(var)?;
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates for {} variables",
                point.len(),
                self.vars.len()
            )));
        }
        let deg = self.degree_in(idx) as usize;
        let mut out = vec![Complex64::new(0.0, 0.0); deg + 1];
        for (m, c) in &self.terms {
            let mut t = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
            for (i, &e) in m.exps().iter().enumerate() {
                if i != idx && e > 0 {
                    t *= point[i].powu(e as u32);
                }
            }
            out[m.exp(idx) as usize] += t;
        }
        Ok(out)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Human-readable form, leading term first: `3*x^2*y - z + 1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut factors = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars.names[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars.names[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// Panics when the operands use different variable tables; use the
        /// `checked_*` method to get an error instead.
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                match self.$checked(rhs) {
                    Ok(p) => p,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

/// Exact sum; errors on mismatched variable tables.
pub fn poly_add(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.checked_add(b)
}

/// Exact product; errors on mismatched variable tables.
pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.checked_mul(b)
}

pub fn poly_pow(a: &Polynomial, e: u32) -> Polynomial {
    a.pow(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> Arc<VarTable> {
        VarTable::new(["x", "y", "z"]).unwrap()
    }

    fn v(t: &Arc<VarTable>, n: &str) -> Polynomial {
        Polynomial::var(t, n).unwrap()
    }

    #[test]
    fn add_cancels_and_merges() {
        let t = xyz();
        let (x, y, z) = (v(&t, "x"), v(&t, "y"), v(&t, "z"));
        assert_eq!(&(&x + &y) + &(&z - &y), &x + &z);
        assert_eq!(&x + &Polynomial::zero(&t), x);
        let x2 = x.pow(2);
        assert_eq!(&x2 + &x2, x2.scale(&BigInt::from(2)));
    }

    #[test]
    fn mismatched_tables_are_rejected() {
        let a = Polynomial::var(&xyz(), "x").unwrap();
        let b = Polynomial::var(&VarTable::new(["x", "w"]).unwrap(), "x").unwrap();
        assert!(matches!(poly_add(&a, &b), Err(Error::VarTableMismatch { .. })));
        assert!(matches!(poly_mul(&a, &b), Err(Error::VarTableMismatch { .. })));
    }

    #[test]
    fn products_and_powers() {
        let t = xyz();
        let (x, y, z) = (v(&t, "x"), v(&t, "y"), v(&t, "z"));
        assert_eq!(&(&x + &y) * &(&x - &y), &x.pow(2) - &y.pow(2));
        assert_eq!(&x * &Polynomial::one(&t), x);
        assert_eq!((&x + &y).pow(0), Polynomial::one(&t));
        let two = BigInt::from(2);
        assert_eq!((&x + &y).pow(2), &(&x.pow(2) + &(&x * &y).scale(&two)) + &y.pow(2));
        // multinomial 5!/(2!2!1!) = 30
        let s = (&(&x + &y) + &z).pow(5);
        assert_eq!(s.coeff_of(&[2, 2, 1]), BigInt::from(30));
    }

    #[test]
    fn substitution() {
        let t = VarTable::new(["t", "x", "y"]).unwrap();
        let (tt, x, y) = (v(&t, "t"), v(&t, "x"), v(&t, "y"));
        let zero = Polynomial::zero(&t);
        assert_eq!((&x + &y).substitute("y", &zero).unwrap(), x);
        let four = Polynomial::constant(&t, 4);
        let p = &tt.pow(2) - &x;
        assert_eq!(p.substitute("x", &four).unwrap(), &tt.pow(2) - &four);
        assert!(matches!(p.substitute("q", &four), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn w_power_reduction() {
        let t = VarTable::new(["z", "x", "y", "w"]).unwrap();
        let (z, x, y, w) = (v(&t, "z"), v(&t, "x"), v(&t, "y"), v(&t, "w"));
        assert_eq!(w.pow(4).reduce_w_power("w", "z", 2).unwrap(), z.pow(2));
        let one = Polynomial::one(&t);
        assert_eq!(one.reduce_w_power("w", "z", 2).unwrap(), one);
        let four = BigInt::from(4);
        let p = &(&(&w.pow(2) - &x) + &y).pow(2) - &(&w.pow(2) * &y).scale(&four);
        let expect = &(&(&z - &x) + &y).pow(2) - &(&z * &y).scale(&four);
        assert_eq!(p.reduce_w_power("w", "z", 2).unwrap(), expect);
        assert!(matches!(
            w.pow(3).reduce_w_power("w", "z", 2),
            Err(Error::WNotEliminable { exponent: 3, .. })
        ));
    }

    #[test]
    fn homogeneity() {
        let t = xyz();
        let (x, y) = (v(&t, "x"), v(&t, "y"));
        assert!((&x.pow(2) + &(&x * &y)).is_homogeneous(2));
        assert!(!(&x.pow(2) + &x).is_homogeneous(2));
        assert!(Polynomial::zero(&t).is_homogeneous(7));
    }

    #[test]
    fn exact_division() {
        let t = xyz();
        let (x, y, z) = (v(&t, "x"), v(&t, "y"), v(&t, "z"));
        let a = &(&x + &y) * &(&(&x * &z) - &y.pow(3));
        assert_eq!(a.exact_div(&(&x + &y)).unwrap(), &(&x * &z) - &y.pow(3));
        assert!(matches!(a.exact_div(&(&x + &z)), Err(Error::InexactDivision(_))));
        assert!(matches!(
            x.scale(&BigInt::from(3)).exact_div(&Polynomial::constant(&t, 2)),
            Err(Error::InexactDivision(_))
        ));
    }

    #[test]
    fn remap_by_name() {
        let t = xyz();
        let u = VarTable::new(["z", "y", "x", "w"]).unwrap();
        let p = &v(&t, "x").pow(2) + &v(&t, "z");
        let q = p.remap(&u).unwrap();
        assert_eq!(q.to_string(), "x^2 + z");
        assert_eq!(q.remap(&t).unwrap(), p);
        let r = Polynomial::var(&u, "w").unwrap();
        assert!(matches!(r.remap(&t), Err(Error::UnknownVariable(_))));
    }

    mod ring_axioms {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = Vec<(Vec<Exp>, i64)>> {
            prop::collection::vec((prop::collection::vec(0u16..4, 3), -20i64..21), 0..6)
        }

        fn build(terms: Vec<(Vec<Exp>, i64)>) -> Polynomial {
            let t = VarTable::new(["x", "y", "z"]).unwrap();
            Polynomial::from_terms(&t, terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))).unwrap()
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]

            #[test]
            fn axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                let (a, b, c) = (build(a), build(b), build(c));
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert!((&a - &a).is_zero());
                prop_assert_eq!(a.pow(3), &(&a * &a) * &a);
                if !b.is_zero() {
                    prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a.clone());
                }
                let back = Polynomial::from_json(&a.to_json()).unwrap();
                prop_assert_eq!(back, a);
            }
        }
    }

    #[test]
    fn display_is_leading_term_first() {
        let t = xyz();
        let p = &(&v(&t, "x").pow(2).scale(&BigInt::from(3)) - &v(&t, "z")) + &Polynomial::one(&t);
        assert_eq!(p.to_string(), "3*x^2 - z + 1");
    }
}
