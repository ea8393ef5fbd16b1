//! Univariate views of multivariate polynomials, Sylvester resultants and discriminants.
//!
//! Conventions: `res(f, g)` is the determinant of the Sylvester matrix whose first
//! `deg g` rows carry the coefficients of `f` (highest degree first), so that
//! `res(f, g) = lc(f)^deg(g) * prod g(a)` over the roots `a` of `f`. The discriminant is
//! `res(f, f') / lc(f)` without the customary `(-1)^(d(d-1)/2)` factor.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::pn;
use crate::polymatrix::PolyMatrix;
use crate::polyring::{Exp, Polynomial, PolynomialJson, VarTable};
use crate::{Error, Result};

/// A polynomial in one distinguished variable whose coefficients are polynomials in
/// the others. `coeffs[i]` multiplies `var^i`; the leading coefficient is nonzero
/// unless the polynomial is zero, in which case `coeffs` is empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    vars: Arc<VarTable>,
    var: usize,
    coeffs: Vec<Polynomial>,
}

impl UniPoly {
    pub fn from_poly(p: &Polynomial, var: &str) -> Result<UniPoly> {
        let vars = p.vars().clone();
        let vi = vars.require(var)?;
        let mut coeffs = vec![Polynomial::zero(&vars); p.degree_in(vi) as usize + 1];
        for (m, c) in p.terms() {
            let e = m.exp(vi) as usize;
            coeffs[e].add_term(m.with_exp(vi, 0), c.clone());
        }
        Ok(Self::normalized(vars, vi, coeffs))
    }

    /// From ascending coefficients, which must not involve `var`.
    pub fn from_coeffs(vars: &Arc<VarTable>, var: &str, coeffs: Vec<Polynomial>) -> Result<UniPoly> {
        let vi = vars.require(var)?;
        if coeffs.iter().any(|c| c.degree_in(vi) > 0) {
            return Err(Error::Usage(format!("coefficient involves the main variable {var}")));
        }
        Ok(Self::normalized(vars.clone(), vi, coeffs))
    }

    fn normalized(vars: Arc<VarTable>, var: usize, mut coeffs: Vec<Polynomial>) -> UniPoly {
        while coeffs.last().is_some_and(Polynomial::is_zero) {
            coeffs.pop();
        }
        UniPoly { vars, var, coeffs }
    }

    pub fn to_poly(&self) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        let t = Polynomial::var_index(&self.vars, self.var);
        for (i, c) in self.coeffs.iter().enumerate() {
            out = &out + &(c * &t.pow(i as u32));
        }
        out
    }

    pub fn var_name(&self) -> &str {
        &self.vars.names()[self.var]
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Polynomial> {
        self.coeffs.last()
    }

    /// Formal derivative; the derivative of a constant is the zero polynomial.
    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&BigInt::from(i)))
            .collect();
        Self::normalized(self.vars.clone(), self.var, coeffs)
    }
}

/// The `(deg f + deg g)`-square Sylvester matrix of `f` and `g`.
pub fn sylvester_matrix(f: &UniPoly, g: &UniPoly) -> Result<PolyMatrix> {
    if f.vars.names() != g.vars.names() || f.var != g.var {
        return Err(Error::VarTableMismatch {
            left: f.vars.names().to_vec(),
            right: g.vars.names().to_vec(),
        });
    }
    let (df, dg) = match (f.degree(), g.degree()) {
        (Some(a), Some(b)) if a + b > 0 => (a, b),
        (Some(_), Some(_)) => {
            return Err(Error::Usage("resultant of two constants is undefined".into()))
        }
        _ => return Err(Error::Usage("resultant with the zero polynomial".into())),
    };
    let size = df + dg;
    let vars = f.vars.clone();
    Ok(PolyMatrix::from_fn(&vars, size, size, |i, j| {
        let (p, d, shift) = if i < dg { (f, df, i) } else { (g, dg, i - dg) };
        // row `shift` holds coefficients from degree d down to 0 starting at column `shift`
        if j < shift || j > shift + d {
            Polynomial::zero(&vars)
        } else {
            p.coeffs[d - (j - shift)].clone()
        }
    }))
}

pub fn sylvester_resultant(f: &UniPoly, g: &UniPoly) -> Result<Polynomial> {
    sylvester_matrix(f, g)?.det_bareiss()
}

/// `res(f, f') / lc(f)`, with the division checked to be exact.
pub fn discriminant(f: &UniPoly) -> Result<Polynomial> {
    match f.degree() {
        Some(d) if d >= 2 => {}
        _ => return Err(Error::Usage("discriminant needs degree at least 2".into())),
    }
    let r = sylvester_resultant(f, &f.derivative())?;
    r.exact_div(f.leading_coeff().unwrap())
}

/// `P(T) = ((-1)^n x T^(n-1) + (-1)^n y)(1 + T)^(n-1) - T^(n-1) z` over the table `[z, x, y, T]`.
pub fn discriminant_family(n: u32) -> Result<UniPoly> {
    if n < 2 {
        return Err(Error::Usage("n must be at least 2".into()));
    }
    let table = VarTable::new(["z", "x1", "x2", "T"])?;
    let v = |s: &str| Polynomial::var(&table, s);
    let (z, x, y, t) = (v("z")?, v("x1")?, v("x2")?, v("T")?);
    let sign = BigInt::from(if n % 2 == 0 { 1 } else { -1 });
    let one = Polynomial::one(&table);
    let head = &(&x * &t.pow(n - 1)).scale(&sign) + &y.scale(&sign);
    let p = &(&head * &(&one + &t).pow(n - 1)) - &(&t.pow(n - 1) * &z);
    UniPoly::from_poly(&p, "T")
}

#[derive(Clone, Debug, Serialize)]
pub struct DiscReport {
    pub n: u32,
    /// `disc_T(P) / ((xyz)^(n-2) p_n)`, when that quotient is an integer constant.
    pub constant: Option<String>,
    pub constant_abs: Option<String>,
    pub expected_abs: String,
    /// Sign of the observed constant.
    pub sign: i8,
    /// Sign predicted by the closed formula, `(-1)^n`.
    pub formula_sign: i8,
    pub ok: bool,
    pub derivative_degree: usize,
    pub disc_degree_in_xyz: [u32; 3],
    pub ratio: PolynomialJson,
}

/// Compute `disc_T(P)` exactly, divide by `(xyz)^(n-2) p_n(z; x, y)` and compare the
/// quotient with `(n-1)^(2n-2)` in absolute value.
pub fn discriminant_identity_check(n: u32) -> Result<DiscReport> {
    let f = discriminant_family(n)?;
    let disc = discriminant(&f)?;
    let table = f.vars().clone();
    let pn = pn::pn_wendt(n)?.remap(&table)?;
    let xyz = Polynomial::monomial(&table, &[1, 1, 1], 1)?.pow(n - 2);
    let ratio = disc.exact_div(&(&xyz * &pn))?;
    let expected_abs = num_traits::pow(BigInt::from(n - 1), (2 * n - 2) as usize);
    let constant = ratio.constant_value();
    let ok = constant.as_ref().is_some_and(|c| c.abs() == expected_abs);
    let sign = match &constant {
        Some(c) if c.is_positive() => 1,
        Some(c) if c.is_negative() => -1,
        _ => 0,
    };
    let zi = |name: &str| table.require(name).map(|i| disc.degree_in(i));
    Ok(DiscReport {
        n,
        constant_abs: constant.as_ref().map(|c| c.abs().to_string()),
        constant: constant.map(|c| c.to_string()),
        expected_abs: expected_abs.to_string(),
        sign,
        formula_sign: if n % 2 == 0 { 1 } else { -1 },
        ok,
        derivative_degree: f.derivative().degree().unwrap_or(0),
        disc_degree_in_xyz: [zi("x1")?, zi("x2")?, zi("z")?],
        ratio: ratio.to_json(),
    })
}

/// Integer univariate polynomial (ascending coefficients) lifted to a one-variable table.
pub fn int_unipoly(var: &str, coeffs: &[BigInt]) -> Result<UniPoly> {
    let table = VarTable::new([var])?;
    let p = Polynomial::from_terms(
        &table,
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (vec![i as Exp], c.clone())),
    )?;
    UniPoly::from_poly(&p, var)
}

/// Constant value of a polynomial that must be an integer.
pub(crate) fn expect_constant(p: &Polynomial, what: &str) -> Result<BigInt> {
    p.constant_value()
        .ok_or_else(|| Error::CrossCheckFailure(format!("{what} is not an integer constant")))
}

/// Discriminant of an integer polynomial given by ascending coefficients.
pub fn int_discriminant(coeffs: &[BigInt]) -> Result<BigInt> {
    expect_constant(&discriminant(&int_unipoly("t", coeffs)?)?, "discriminant")
}

/// Resultant of two integer polynomials given by ascending coefficients.
pub fn int_resultant(f: &[BigInt], g: &[BigInt]) -> Result<BigInt> {
    let f = int_unipoly("t", f)?;
    let g = int_unipoly("t", g)?;
    expect_constant(&sylvester_resultant(&f, &g)?, "resultant")
}
