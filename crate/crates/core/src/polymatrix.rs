//! Dense matrices over [`Polynomial`].
//!
//! Determinants are computed by fraction-free Bareiss elimination, which stays inside
//! the polynomial ring: every step divides by the previous pivot and that division is
//! exact. A failed division therefore means a bug, and surfaces as
//! [`Error::InexactDivision`] instead of being rounded away.

use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::polyring::{Exp, Polynomial, PolynomialJson, VarTable};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    vars: Arc<VarTable>,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(vars: &Arc<VarTable>, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if rows * cols != entries.len() {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix given {} entries",
                entries.len()
            )));
        }
        for e in &entries {
            if e.vars().names() != vars.names() {
                return Err(Error::VarTableMismatch {
                    left: vars.names().to_vec(),
                    right: e.vars().names().to_vec(),
                });
            }
        }
        Ok(PolyMatrix {
            rows,
            cols,
            vars: vars.clone(),
            entries,
        })
    }

    pub fn from_fn(
        vars: &Arc<VarTable>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix {
            rows,
            cols,
            vars: vars.clone(),
            entries,
        }
    }

    /// Integer matrix lifted into the polynomial ring.
    pub fn from_ints(vars: &Arc<VarTable>, rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self::from_fn(vars, r, c, |i, j| Polynomial::constant(vars, rows[i][j])))
    }

    pub fn zeros(vars: &Arc<VarTable>, rows: usize, cols: usize) -> Self {
        Self::from_fn(vars, rows, cols, |_, _| Polynomial::zero(vars))
    }

    pub fn identity(vars: &Arc<VarTable>, n: usize) -> Self {
        Self::scalar(vars, n, &Polynomial::one(vars))
    }

    /// `p * I_n`.
    pub fn scalar(vars: &Arc<VarTable>, n: usize, p: &Polynomial) -> Self {
        Self::from_fn(vars, n, n, |i, j| if i == j { p.clone() } else { Polynomial::zero(vars) })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Result<Polynomial>) -> Result<PolyMatrix> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>>>()?;
        let vars = entries.first().map_or(self.vars.clone(), |e| e.vars().clone());
        PolyMatrix::new(&vars, self.rows, self.cols, entries)
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn require_same_table(&self, other: &PolyMatrix) -> Result<()> {
        if self.vars.names() == other.vars.names() {
            Ok(())
        } else {
            Err(Error::VarTableMismatch {
                left: self.vars.names().to_vec(),
                right: other.vars.names().to_vec(),
            })
        }
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.require_same_table(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum of different shapes".into()));
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            vars: self.vars.clone(),
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            vars: self.vars.clone(),
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn scale(&self, p: &Polynomial) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            vars: self.vars.clone(),
            entries: self.entries.iter().map(|e| e * p).collect(),
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.require_same_table(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries: Vec<Polynomial> = (0..self.rows * other.cols)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / other.cols, idx % other.cols);
                let mut acc = Polynomial::zero(&self.vars);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect();
        Ok(PolyMatrix {
            rows: self.rows,
            cols: other.cols,
            vars: self.vars.clone(),
            entries,
        })
    }

    /// `self^e` by repeated squaring; `M^0 = I`.
    pub fn pow(&self, e: u32) -> Result<PolyMatrix> {
        self.require_square()?;
        let mut result = PolyMatrix::identity(&self.vars, self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.vars, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Reflection in the anti-diagonal: entry `(i, j)` moves to `(n-1-j, m-1-i)`.
    pub fn reflect_antidiagonal(&self) -> PolyMatrix {
        let (r, c) = (self.rows, self.cols);
        PolyMatrix::from_fn(&self.vars, c, r, |i, j| self.get(r - 1 - j, c - 1 - i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Symmetric with respect to the anti-diagonal.
    pub fn is_persymmetric(&self) -> bool {
        self.is_square() && *self == self.reflect_antidiagonal()
    }

    /// Negate every entry `(i, j)` with `i + j` odd.
    pub fn alternate_signs(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.vars, self.rows, self.cols, |i, j| {
            if (i + j) % 2 == 1 {
                -self.get(i, j)
            } else {
                self.get(i, j).clone()
            }
        })
    }

    /// Submatrix of the given size starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix::from_fn(&self.vars, rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn to_json(&self) -> Vec<Vec<PolynomialJson>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_json()).collect())
            .collect()
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det_bareiss(&self) -> Result<Polynomial> {
        self.det_bareiss_with(true)
    }

    /// Same as [`det_bareiss`](Self::det_bareiss); `parallel` selects whether row
    /// updates run on the rayon pool. Both paths give identical results.
    pub fn det_bareiss_with(&self, parallel: bool) -> Result<Polynomial> {
        self.require_square()?;
        let n = self.rows;
        let one = Polynomial::one(&self.vars);
        if n == 0 {
            return Ok(one);
        }
        let mut rows: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| self.entries[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut negate = false;
        let mut prev = one;
        for k in 0..n - 1 {
            if rows[k][k].is_zero() {
                match (k + 1..n).find(|&i| !rows[i][k].is_zero()) {
                    Some(i) => {
                        rows.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(Polynomial::zero(&self.vars)),
                }
            }
            let (head, tail) = rows.split_at_mut(k + 1);
            let pivot_row = &head[k];
            let pivot = &pivot_row[k];
            let trivial_prev = prev.is_one();
            let neg_prev = (-&prev).is_one();
            let update = |row: &mut Vec<Polynomial>| -> Result<()> {
                let factor = std::mem::replace(&mut row[k], Polynomial::zero(&prev.vars().clone()));
                for j in k + 1..n {
                    let mut v = if row[j].is_zero() {
                        Polynomial::zero(pivot.vars())
                    } else {
                        &row[j] * pivot
                    };
                    if !factor.is_zero() && !pivot_row[j].is_zero() {
                        v = &v - &(&factor * &pivot_row[j]);
                    }
                    row[j] = if v.is_zero() || trivial_prev {
                        v
                    } else if neg_prev {
                        -v
                    } else {
                        v.exact_div(&prev)?
                    };
                }
                Ok(())
            };
            if parallel {
                tail.par_iter_mut().try_for_each(update)?;
            } else {
                tail.iter_mut().try_for_each(update)?;
            }
            prev = rows[k][k].clone();
        }
        let det = rows[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }

    /// `det(t I - M)` in the variable `t`, which must not occur in `M`.
    pub fn char_poly(&self, t: &str) -> Result<Polynomial> {
        self.require_square()?;
        let ti = self.vars.require(t)?;
        if self.entries.iter().any(|e| e.degree_in(ti) > 0) {
            return Err(Error::Usage(format!("variable {t} occurs in the matrix entries")));
        }
        let tv = Polynomial::var_index(&self.vars, ti);
        PolyMatrix::scalar(&self.vars, self.rows, &tv).sub(self)?.det_bareiss()
    }
}

/// Frobenius companion matrix of `t^m + a_{m-1} t^{m-1} + ... + a_0`: ones on the
/// subdiagonal and last column `-a_0, ..., -a_{m-1}`.
pub fn companion(vars: &Arc<VarTable>, coeffs: &[Polynomial]) -> Result<PolyMatrix> {
    let m = coeffs.len();
    if m == 0 {
        return Err(Error::Usage("companion matrix of a constant".into()));
    }
    Ok(PolyMatrix::from_fn(vars, m, m, |i, j| {
        if j == m - 1 {
            let mut e = -&coeffs[i];
            if i == j + 1 {
                e = &e + &Polynomial::one(vars);
            }
            e
        } else if i == j + 1 {
            Polynomial::one(vars)
        } else {
            Polynomial::zero(vars)
        }
    }))
}

/// Block `(i, j)` is `a_ij * B`.
pub fn kronecker_product(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix> {
    a.require_same_table(b)?;
    let (br, bc) = (b.rows, b.cols);
    Ok(PolyMatrix::from_fn(&a.vars, a.rows * br, a.cols * bc, |i, j| {
        let x = a.get(i / br, j / bc);
        if x.is_zero() {
            Polynomial::zero(&a.vars)
        } else {
            x * b.get(i % br, j % bc)
        }
    }))
}

/// `A ⊞ B = A ⊗ I + I ⊗ B`.
pub fn kronecker_sum(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix> {
    a.require_square()?;
    b.require_square()?;
    let left = kronecker_product(a, &PolyMatrix::identity(&a.vars, b.rows))?;
    let right = kronecker_product(&PolyMatrix::identity(&a.vars, a.rows), b)?;
    left.add(&right)
}

/// The block companion matrix `C_g ∘ C_f` of `f(t) I - C_g`, for monic
/// `f = t^m + a_{m-1} t^{m-1} + ... + a_0` given by `f_coeffs = [a_0, ..., a_{m-1}]`.
/// Its characteristic polynomial is `g(f(t))` when `C_g` is the companion matrix of `g`.
pub fn block_composition_matrix(f_coeffs: &[Polynomial], cg: &PolyMatrix) -> Result<PolyMatrix> {
    cg.require_square()?;
    let m = f_coeffs.len();
    if m == 0 {
        return Err(Error::Usage("f must have degree at least 1".into()));
    }
    let n = cg.rows;
    let vars = cg.vars.clone();
    Ok(PolyMatrix::from_fn(&vars, m * n, m * n, |i, j| {
        let (bi, bj, ii, jj) = (i / n, j / n, i % n, j % n);
        let mut e = Polynomial::zero(&vars);
        if bj == m - 1 {
            if ii == jj {
                e = -&f_coeffs[bi];
            }
            if bi == 0 {
                e = &e + cg.get(ii, jj);
            }
        }
        if bi == bj + 1 && ii == jj {
            e = &e + &Polynomial::one(&vars);
        }
        e
    }))
}

/// Determinant of a block matrix with first block row `M_1 .. M_m`, `-I` on the block
/// subdiagonal, `N_1 .. N_{m-1}` on the rest of the block diagonal and zeros elsewhere,
/// computed as `det(M_1 N_1 ... N_{m-1} + M_2 N_2 ... N_{m-1} + ... + M_m)`.
pub fn block_det_reduce(m: &PolyMatrix, block_size: usize) -> Result<Polynomial> {
    m.require_square()?;
    let s = block_size;
    if s == 0 || m.rows % s != 0 {
        return Err(Error::ShapeMismatch(format!(
            "order {} is not a multiple of block size {s}",
            m.rows
        )));
    }
    let k = m.rows / s;
    let blk = |bi: usize, bj: usize| m.block(bi * s, bj * s, s, s);
    let minus_id = PolyMatrix::identity(&m.vars, s).neg();
    let zero = PolyMatrix::zeros(&m.vars, s, s);
    for bi in 1..k {
        for bj in 0..k {
            let b = blk(bi, bj);
            let ok = if bj + 1 == bi {
                b == minus_id
            } else if bj == bi {
                true
            } else {
                b == zero
            };
            if !ok {
                return Err(Error::ShapeMismatch(format!(
                    "block ({bi}, {bj}) breaks the bordered block-bidiagonal shape"
                )));
            }
        }
    }
    let mut acc = blk(0, 0);
    for j in 1..k {
        acc = acc.mul(&blk(j, j))?.add(&blk(0, j))?;
    }
    acc.det_bareiss()
}

/// Convenience for tests and callers that want integer scalars.
/// `g(f(t))` four ways for monic integer `f`, `g` given by their lower coefficients
/// (ascending, leading 1 implied): the characteristic polynomial of `C_g ∘ C_f`, the
/// block reduction of `t I - C_g ∘ C_f` (after reflection in the anti-diagonal),
/// `det(f(t) I - C_g)`, and direct substitution.
#[derive(Clone, Debug, Serialize)]
pub struct ComposeReport {
    pub f: PolynomialJson,
    pub g: PolynomialJson,
    pub char_poly: PolynomialJson,
    pub block_reduction: PolynomialJson,
    pub det_f_minus_cg: PolynomialJson,
    pub substitution: PolynomialJson,
    pub all_agree: bool,
}

pub fn composition_check(f_lower: &[BigInt], g_lower: &[BigInt]) -> Result<ComposeReport> {
    if f_lower.is_empty() || g_lower.is_empty() {
        return Err(Error::Usage("f and g must have degree at least 1".into()));
    }
    let vars = VarTable::new(["t"])?;
    let t = Polynomial::var_index(&vars, 0);
    let consts = |c: &[BigInt]| -> Vec<Polynomial> {
        c.iter().map(|x| Polynomial::constant(&vars, x.clone())).collect()
    };
    let monic = |c: &[BigInt]| -> Result<Polynomial> {
        let lower = c.iter().enumerate().map(|(i, x)| (vec![i as Exp], x.clone()));
        Polynomial::from_terms(&vars, lower.chain([(vec![c.len() as Exp], BigInt::from(1))]))
    };
    let (f, g) = (monic(f_lower)?, monic(g_lower)?);
    let n = g_lower.len();
    let cg = companion(&vars, &consts(g_lower))?;
    let block = block_composition_matrix(&consts(f_lower), &cg)?;
    let char_poly = block.char_poly("t")?;
    let shifted = PolyMatrix::scalar(&vars, block.rows(), &t).sub(&block)?;
    let block_reduction = block_det_reduce(&shifted.reflect_antidiagonal(), n)?;
    let det_f = PolyMatrix::scalar(&vars, n, &f).sub(&cg)?.det_bareiss()?;
    let substitution = g
        .terms()
        .map(|(m, c)| Polynomial::constant(&vars, c.clone()).checked_mul(&f.pow(m.exp(0) as u32)))
        .try_fold(Polynomial::zero(&vars), |acc, term| acc.checked_add(&term?))?;
    let all_agree = char_poly == block_reduction && char_poly == det_f && char_poly == substitution;
    Ok(ComposeReport {
        f: f.to_json(),
        g: g.to_json(),
        char_poly: char_poly.to_json(),
        block_reduction: block_reduction.to_json(),
        det_f_minus_cg: det_f.to_json(),
        substitution: substitution.to_json(),
        all_agree,
    })
}

pub fn int_poly(vars: &Arc<VarTable>, c: i64) -> Polynomial {
    Polynomial::constant(vars, BigInt::from(c))
}

#[derive(Serialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<PolynomialJson>>,
}

impl Serialize for PolyMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: self.to_json(),
        }
        .serialize(s)
    }
}
