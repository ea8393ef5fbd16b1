//! Builders for `p_n(z; x_1, ..., x_m)`, the monic polynomial in `z` whose roots are
//! the `n^(m-1)` values `(-(x_1^(1/n) + ε^s2 x_2^(1/n) + ... + ε^sm x_m^(1/n)))^n`.
//!
//! Four independent constructions are provided:
//! - [`pn_kronecker`]: characteristic polynomial of a Kronecker sum of companion
//!   matrices, in a variable `w` with `w^n = z`;
//! - [`pn_wendt`]: determinant of the Wendt `(x, y, z)`-matrix (`m = 2`);
//! - [`pn_block_power`]: `det(A^n + (-1)^(n+1) x_1 I)` for a Kronecker sum `A` of order `n^(m-1)`;
//! - [`pn_resultant`]: `(-1)^n res_t(z - (u + v t)^n, t^n - 1)` (`m = 2`).
//!
//! Every builder returns a polynomial over the table `[z, x1, ..., xm]`, so results
//! from different routes compare by plain equality.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;
use serde::Serialize;

use crate::elimination::{sylvester_resultant, UniPoly};
use crate::polymatrix::{companion, kronecker_sum, PolyMatrix};
use crate::polyring::{reduce_to_elementary, Polynomial, SymExpansion, VarTable};
use crate::{Error, Result};

/// Largest matrix order a symbolic build will attempt.
pub const MAX_ORDER: u64 = 243;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Kronecker,
    Wendt,
    BlockPower,
    Resultant,
}

impl Route {
    pub const ALL: [Route; 4] = [Route::Kronecker, Route::Wendt, Route::BlockPower, Route::Resultant];

    /// Whether the route is defined for `m` arguments.
    pub fn supports(self, m: u32) -> bool {
        match self {
            Route::Kronecker => m >= 1,
            Route::BlockPower => m >= 2,
            Route::Wendt | Route::Resultant => m == 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Route::Kronecker => "kronecker",
            Route::Wendt => "wendt",
            Route::BlockPower => "blockpower",
            Route::Resultant => "resultant",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Route> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown route {s:?}")))
    }
}

/// Sign placed on `x_j` in the companion matrices `F(0, ..., 0, c_j)` of the block-power route.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SignConvention {
    /// `c_j = (-1)^(n+1) x_j`, the same arguments as the Kronecker route.
    Alternating,
    /// `c_j = x_j`.
    Literal,
}

impl SignConvention {
    pub fn name(self) -> &'static str {
        match self {
            SignConvention::Alternating => "alternating",
            SignConvention::Literal => "literal",
        }
    }
}

/// The convention that makes the block-power route agree with the Kronecker route;
/// [`calibrate_block_power`] re-derives it.
pub const BLOCK_POWER_CONVENTION: SignConvention = SignConvention::Alternating;

pub fn arg_names(m: u32) -> Vec<String> {
    (1..=m).map(|j| format!("x{j}")).collect()
}

/// `[z, x1, ..., xm]`.
pub fn output_table(m: u32) -> Arc<VarTable> {
    let mut names = vec!["z".to_string()];
    names.extend(arg_names(m));
    VarTable::new(names).expect("distinct names")
}

/// `[z, x1, ..., xm, w]`; `w` stands for `z^(1/n)` during construction.
pub fn work_table(m: u32) -> Arc<VarTable> {
    let mut names = vec!["z".to_string()];
    names.extend(arg_names(m));
    names.push("w".to_string());
    VarTable::new(names).expect("distinct names")
}

/// Order of the matrix whose determinant the route evaluates.
pub fn matrix_order(route: Route, n: u32, m: u32) -> Option<u64> {
    let n = n as u64;
    match route {
        Route::Kronecker => n.checked_pow(m),
        Route::BlockPower => n.checked_pow(m.saturating_sub(1)),
        Route::Wendt => Some(n),
        Route::Resultant => Some(2 * n),
    }
}

pub fn check_size(route: Route, n: u32, m: u32) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::Usage("n and m must be positive".into()));
    }
    match matrix_order(route, n, m) {
        Some(o) if o <= MAX_ORDER => Ok(()),
        _ => Err(Error::SizeLimit(format!(
            "the {route} route for n = {n}, m = {m} exceeds the supported matrix order {MAX_ORDER}"
        ))),
    }
}

fn sign_pow(n: u32) -> BigInt {
    if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Companion matrix of `t^n + c`, i.e. `F(0, ..., 0, c)`.
fn companion_tn_plus(table: &Arc<VarTable>, n: u32, c: &Polynomial) -> Result<PolyMatrix> {
    let mut coeffs = vec![Polynomial::zero(table); n as usize];
    coeffs[0] = c.clone();
    companion(table, &coeffs)
}

fn arg(table: &Arc<VarTable>, j: u32) -> Polynomial {
    Polynomial::var(table, &format!("x{j}")).expect("argument variable")
}

fn finish(det_in_w: &Polynomial, n: u32, m: u32) -> Result<Polynomial> {
    det_in_w
        .reduce_w_power("w", "z", n)?
        .remap(&output_table(m))
}

/// Kronecker sum `F(c_first) ⊞ ... ⊞ F(c_m)` with `c_j = sign * x_j`.
fn companion_sum(table: &Arc<VarTable>, n: u32, first: u32, m: u32, sign: &BigInt) -> Result<PolyMatrix> {
    let mut acc = companion_tn_plus(table, n, &arg(table, first).scale(sign))?;
    for j in first + 1..=m {
        acc = kronecker_sum(&acc, &companion_tn_plus(table, n, &arg(table, j).scale(sign))?)?;
    }
    Ok(acc)
}

/// `χ(F(0..0, (-1)^(n+1) x_1) ⊞ ... ⊞ F(0..0, (-1)^(n+1) x_m); w)` with `w^n` replaced by `z`.
pub fn pn_kronecker(n: u32, m: u32) -> Result<Polynomial> {
    check_size(Route::Kronecker, n, m)?;
    let table = work_table(m);
    let k = companion_sum(&table, n, 1, m, &-sign_pow(n))?;
    finish(&k.char_poly("w")?, n, m)
}

/// The Wendt `(x, y, z)`-matrix: the `y`-circulant with first row
/// `w^n + (-1)^(n+1) x + y, C(n,1) w, ..., C(n,n-1) w^(n-1)`, over the table `[z, x1, x2, w]`
/// with `x = x1`, `y = x2`.
pub fn wendt_xyz_matrix(n: u32) -> Result<PolyMatrix> {
    if n == 0 {
        return Err(Error::Usage("n must be positive".into()));
    }
    let table = work_table(2);
    let (x, y) = (arg(&table, 1), arg(&table, 2));
    let w = Polynomial::var(&table, "w")?;
    let diag = &(&w.pow(n) + &x.scale(&-sign_pow(n))) + &y;
    let nb = BigInt::from(n);
    let size = n as usize;
    Ok(PolyMatrix::from_fn(&table, size, size, |i, j| {
        if i == j {
            diag.clone()
        } else if j > i {
            let d = (j - i) as u32;
            &w.pow(d).scale(&binomial(nb.clone(), BigInt::from(d))) * &y
        } else {
            let d = n - (i - j) as u32;
            w.pow(d).scale(&binomial(nb.clone(), BigInt::from(d)))
        }
    }))
}

pub fn pn_wendt(n: u32) -> Result<Polynomial> {
    check_size(Route::Wendt, n, 2)?;
    finish(&wendt_xyz_matrix(n)?.det_bareiss()?, n, 2)
}

/// `B = A^n + (-1)^(n+1) x_1 I` with `A = w I - F(0..0, c_2) ⊞ ... ⊞ F(0..0, c_m)`.
pub fn block_power_matrix(n: u32, m: u32, convention: SignConvention) -> Result<PolyMatrix> {
    if m < 2 {
        return Err(Error::Usage("the block-power route needs m >= 2".into()));
    }
    check_size(Route::BlockPower, n, m)?;
    let table = work_table(m);
    let sign = match convention {
        SignConvention::Alternating => -sign_pow(n),
        SignConvention::Literal => BigInt::one(),
    };
    let k = companion_sum(&table, n, 2, m, &sign)?;
    let w = Polynomial::var(&table, "w")?;
    let a = PolyMatrix::scalar(&table, k.rows(), &w).sub(&k)?;
    let shift = PolyMatrix::scalar(&table, k.rows(), &arg(&table, 1).scale(&-sign_pow(n)));
    a.pow(n)?.add(&shift)
}

pub fn pn_block_power_with(n: u32, m: u32, convention: SignConvention) -> Result<Polynomial> {
    finish(&block_power_matrix(n, m, convention)?.det_bareiss()?, n, m)
}

pub fn pn_block_power(n: u32, m: u32) -> Result<Polynomial> {
    pn_block_power_with(n, m, BLOCK_POWER_CONVENTION)
}

#[derive(Clone, Debug, Serialize)]
pub struct Calibration {
    pub chosen: SignConvention,
    /// `(n, m, alternating agrees, literal agrees)` for each case tried.
    pub cases: Vec<(u32, u32, bool, bool)>,
}

/// Compare both sign conventions of the block-power route against the Kronecker route
/// for `n <= max_n`, `2 <= m <= max_m`, and return the one that agrees everywhere.
/// A literal build that trips over a non-eliminable `w` counts as disagreement.
pub fn calibrate_block_power(max_n: u32, max_m: u32) -> Result<Calibration> {
    let mut cases = Vec::new();
    for m in 2..=max_m {
        for n in 1..=max_n {
            let reference = pn_kronecker(n, m)?;
            let agrees = |c| match pn_block_power_with(n, m, c) {
                Ok(p) => Ok(p == reference),
                Err(Error::WNotEliminable { .. }) => Ok(false),
                Err(e) => Err(e),
            };
            cases.push((n, m, agrees(SignConvention::Alternating)?, agrees(SignConvention::Literal)?));
        }
    }
    let chosen = if cases.iter().all(|c| c.2) {
        SignConvention::Alternating
    } else if cases.iter().all(|c| c.3) {
        SignConvention::Literal
    } else {
        return Err(Error::CrossCheckFailure(
            "no sign convention reconciles the block-power and Kronecker routes".into(),
        ));
    };
    Ok(Calibration { chosen, cases })
}

/// `(-1)^n res_t(z - (u + v t)^n, t^n - 1)` with `u^n = (-1)^n x`, `v^n = (-1)^n y`.
pub fn pn_resultant(n: u32) -> Result<Polynomial> {
    check_size(Route::Resultant, n, 2)?;
    let table = VarTable::new(["z", "x1", "x2", "u", "v", "t"])?;
    let v = |s: &str| Polynomial::var(&table, s);
    let (z, u, vv, t) = (v("z")?, v("u")?, v("v")?, v("t")?);
    let q = &z - &(&u + &(&vv * &t)).pow(n);
    let f = UniPoly::from_poly(&q, "t")?;
    let g = UniPoly::from_poly(&(&t.pow(n) - &Polynomial::one(&table)), "t")?;
    let res = sylvester_resultant(&f, &g)?;
    // u^n -> (-1)^n x and v^n -> (-1)^n y
    let s = sign_pow(n);
    let reduced = res
        .reduce_w_power("u", "x1", n)?
        .reduce_w_power("v", "x2", n)?;
    let signed = reduced.map_coeffs(|mono, c| {
        let k = mono.exp(1) as u32 + mono.exp(2) as u32;
        let mut c = c * &s;
        if n % 2 == 1 && k % 2 == 1 {
            c = -c;
        }
        c
    });
    signed.remap(&output_table(2))
}

pub fn build(n: u32, m: u32, route: Route) -> Result<Polynomial> {
    if !route.supports(m) {
        return Err(Error::Usage(format!("route {route} is not defined for m = {m}")));
    }
    match route {
        Route::Kronecker => pn_kronecker(n, m),
        Route::Wendt => pn_wendt(n),
        Route::BlockPower => pn_block_power(n, m),
        Route::Resultant => pn_resultant(n),
    }
}

/// Expansion of `p_n` in the elementary symmetric functions of `z, x1, ..., xm`.
pub fn sigma_basis(p: &Polynomial) -> Result<SymExpansion> {
    let names: Vec<String> = p.vars().names().to_vec();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    reduce_to_elementary(p, &refs)
}

/// Symmetric in all its variables, homogeneous of degree `n^(m-1)` and monic in `z`.
pub fn structural_check(p: &Polynomial, n: u32, m: u32) -> Result<bool> {
    let names: Vec<String> = p.vars().names().to_vec();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let deg = n.pow(m - 1);
    let zi = p.vars().require("z")?;
    let monic = p.coeff_of(&[deg as u16]).is_one() && p.degree_in(zi) == deg;
    Ok(monic && p.is_homogeneous(deg) && crate::polyring::is_symmetric(p, &refs)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct RouteResult {
    pub route: Route,
    pub agrees: bool,
    pub terms: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckReport {
    pub n: u32,
    pub m: u32,
    pub routes: Vec<RouteResult>,
    pub all_routes_agree: bool,
    pub block_power_convention: SignConvention,
    pub symmetric_homogeneous_monic: bool,
}

/// Build `p_n` along every route defined for `m` (routes run concurrently) and compare.
/// Returns the Kronecker result with the report.
pub fn cross_check(n: u32, m: u32, routes: &[Route]) -> Result<(Polynomial, CrossCheckReport)> {
    use rayon::prelude::*;
    let routes: Vec<Route> = routes.iter().copied().filter(|r| r.supports(m)).collect();
    for &r in &routes {
        check_size(r, n, m)?;
    }
    if routes.is_empty() {
        return Err(Error::Usage(format!("no requested route is defined for m = {m}")));
    }
    let built: Vec<(Route, Polynomial)> = routes
        .par_iter()
        .map(|&r| build(n, m, r).map(|p| (r, p)))
        .collect::<Result<_>>()?;
    let reference = built[0].1.clone();
    let results: Vec<RouteResult> = built
        .iter()
        .map(|(r, p)| RouteResult {
            route: *r,
            agrees: *p == reference,
            terms: p.num_terms(),
        })
        .collect();
    let report = CrossCheckReport {
        n,
        m,
        all_routes_agree: results.iter().all(|r| r.agrees),
        routes: results,
        block_power_convention: BLOCK_POWER_CONVENTION,
        symmetric_homogeneous_monic: structural_check(&reference, n, m)?,
    };
    Ok((reference, report))
}

/// Negate the coefficients of every off-diagonal entry of `B` that are negative, and
/// check the determinant is unchanged.
pub fn sign_replacement_check(n: u32, m: u32) -> Result<bool> {
    let b = block_power_matrix(n, m, BLOCK_POWER_CONVENTION)?;
    let replaced = PolyMatrix::from_fn(b.vars(), b.rows(), b.cols(), |i, j| {
        if i == j {
            b.get(i, j).clone()
        } else {
            b.get(i, j).abs_coeffs()
        }
    });
    Ok(replaced.det_bareiss()? == b.det_bareiss()?)
}

/// `W_{m,n}`: the matrix `B` with off-diagonal signs made positive, evaluated at
/// `x_2 = ... = x_m = z = w = 1`, `x_1 = (-1)^n`.
pub fn wendt_mn_matrix(n: u32, m: u32) -> Result<Vec<Vec<BigInt>>> {
    let b = block_power_matrix(n, m, BLOCK_POWER_CONVENTION)?;
    let table = b.vars().clone();
    let point: Vec<BigInt> = table
        .names()
        .iter()
        .map(|name| if name == "x1" { sign_pow(n) } else { BigInt::one() })
        .collect();
    (0..b.rows())
        .map(|i| {
            (0..b.cols())
                .map(|j| {
                    let e = if i == j { b.get(i, j).clone() } else { b.get(i, j).abs_coeffs() };
                    e.eval_int(&point)
                })
                .collect()
        })
        .collect()
}

/// `B` is persymmetric, and `W_{m,n}` is both symmetric and persymmetric.
pub fn orthosymmetry_check(n: u32, m: u32) -> Result<bool> {
    let b = block_power_matrix(n, m, BLOCK_POWER_CONVENTION)?;
    let w = wendt_mn_matrix(n, m)?;
    let k = w.len();
    let ortho = (0..k).all(|i| (0..k).all(|j| w[i][j] == w[j][i] && w[i][j] == w[k - 1 - j][k - 1 - i]));
    Ok(b.is_persymmetric() && ortho)
}

/// The classical Wendt matrix `W_n`: the circulant with first row `C(n,0), ..., C(n,n-1)`.
pub fn classical_wendt_matrix(n: u32) -> Vec<Vec<BigInt>> {
    let size = n as usize;
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| binomial(BigInt::from(n), BigInt::from(((j + size - i) % size) as u32)))
                .collect()
        })
        .collect()
}

/// Entrywise specialization `w = 1, x = (-1)^n, y = 1` of the Wendt `(x, y, z)`-matrix.
pub fn specialize_wendt_xyz(n: u32) -> Result<Vec<Vec<BigInt>>> {
    let mtx = wendt_xyz_matrix(n)?;
    let point = vec![BigInt::one(), sign_pow(n), BigInt::one(), BigInt::one()];
    (0..mtx.rows())
        .map(|i| (0..mtx.cols()).map(|j| mtx.get(i, j).eval_int(&point)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma(p: &Polynomial) -> String {
        sigma_basis(p).unwrap().to_string()
    }

    #[test]
    fn p1_is_sigma1() {
        let p = pn_kronecker(1, 2).unwrap();
        assert_eq!(p.to_string(), "z + x1 + x2");
        assert_eq!(pn_kronecker(1, 3).unwrap().to_string(), "z + x1 + x2 + x3");
    }

    #[test]
    fn p2_routes() {
        let expect = "σ1^2 - 4*σ2";
        for r in Route::ALL {
            assert_eq!(sigma(&build(2, 2, r).unwrap()), expect, "{r}");
        }
        let p = pn_wendt(2).unwrap();
        assert_eq!(p.to_string(), "z^2 - 2*z*x1 - 2*z*x2 + x1^2 - 2*x1*x2 + x2^2");
    }

    #[test]
    fn p3_and_p5() {
        assert_eq!(sigma(&pn_wendt(3).unwrap()), "σ1^3 - 27*σ3");
        assert_eq!(sigma(&pn_wendt(5).unwrap()), "σ1^5 - 625*σ1^2*σ3 + 3125*σ2*σ3");
    }

    #[test]
    fn m_three() {
        assert_eq!(sigma(&pn_kronecker(2, 3).unwrap()), "σ1^4 - 8*σ1^2*σ2 + 16*σ2^2 - 64*σ4");
        assert_eq!(pn_block_power(2, 3).unwrap(), pn_kronecker(2, 3).unwrap());
    }

    #[test]
    fn routes_agree_up_to_four() {
        for n in 1..=4 {
            let (_, rep) = cross_check(n, 2, &Route::ALL).unwrap();
            assert!(rep.all_routes_agree, "{rep:?}");
            assert!(rep.symmetric_homogeneous_monic);
        }
    }

    #[test]
    fn wendt_matrix_entries() {
        let m = wendt_xyz_matrix(2).unwrap();
        assert_eq!(m.get(0, 0).to_string(), "w^2 - x1 + x2");
        assert_eq!(m.get(0, 1).to_string(), "2*x2*w");
        assert_eq!(m.get(1, 0).to_string(), "2*w");
        let m3 = wendt_xyz_matrix(3).unwrap();
        assert_eq!(m3.get(0, 0).to_string(), "w^3 + x1 + x2");
        assert_eq!(m3.get(0, 2).to_string(), "3*x2*w^2");
        assert_eq!(m3.get(2, 0).to_string(), "3*w");
        for n in 1..=6 {
            assert_eq!(specialize_wendt_xyz(n).unwrap(), classical_wendt_matrix(n));
        }
    }

    #[test]
    fn block_power_example_matrix() {
        let b = block_power_matrix(2, 3, BLOCK_POWER_CONVENTION).unwrap();
        assert_eq!(b.get(0, 0).to_string(), "w^2 - x1 + x2 + x3");
        for i in 0..4 {
            assert_eq!(b.get(i, i), b.get(0, 0));
        }
    }

    #[test]
    fn calibration_prefers_alternating() {
        let c = calibrate_block_power(4, 2).unwrap();
        assert_eq!(c.chosen, BLOCK_POWER_CONVENTION);
        // the literal convention fails for every even n
        assert!(c.cases.iter().filter(|c| c.0 % 2 == 0).all(|c| !c.3));
    }

    #[test]
    fn orthosymmetry() {
        assert!(orthosymmetry_check(2, 2).unwrap());
        assert!(orthosymmetry_check(3, 2).unwrap());
        assert!(orthosymmetry_check(2, 3).unwrap());
        // for n, m >= 3 the shifts P^a (x) P^b and P^-a (x) P^-b carry different
        // multinomial weights, so W_{m,n} is persymmetric but not symmetric
        let w = wendt_mn_matrix(3, 3).unwrap();
        let k = w.len();
        assert!((0..k).all(|i| (0..k).all(|j| w[i][j] == w[k - 1 - j][k - 1 - i])));
        assert!((0..k).any(|i| (0..k).any(|j| w[i][j] != w[j][i])));
        assert!(!orthosymmetry_check(3, 3).unwrap());
    }

    #[test]
    fn size_limit() {
        assert!(matches!(pn_kronecker(4, 4), Err(Error::SizeLimit(_))));
        assert!(matches!(pn_block_power(4, 5), Err(Error::SizeLimit(_))));
        assert!(check_size(Route::Wendt, 18, 2).is_ok());
        assert!(matches!(build(3, 3, Route::Wendt), Err(Error::Usage(_))));
    }
}
