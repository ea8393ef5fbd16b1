//! Floating-point model of the n-valued group `G_n` on the complex numbers.
//!
//! `x * y` is the multiset `[(x^(1/n) + ε^r y^(1/n))^n | r = 1..n]` with the principal
//! branch and `ε = exp(2πi/n)`. Multisets are compared up to a relative tolerance by a
//! bijective matching. The same machinery checks associativity of the universal
//! 2-valued and 3-valued families, whose products are root multisets of polynomials.

use std::f64::consts::PI;

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::polyring::Polynomial;
use crate::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-8;
/// Tolerance for comparing numerically found polynomial roots.
pub const ROOT_MATCH_TOL: f64 = 1e-7;
/// Leading coefficients below this magnitude make a family sample degenerate.
pub const DEGENERACY_THRESHOLD: f64 = 1e-10;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `ε = exp(2πi/n)`.
pub fn epsilon(n: u32) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI / n as f64)
}

/// `ε^r`, reduced mod `n` before evaluating.
pub fn epsilon_pow(n: u32, r: u64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * (r % n as u64) as f64 / n as f64)
}

/// The principal `n`-th root: argument in `(-π, π]` divided by `n`.
pub fn principal_root(x: Complex64, n: u32) -> Complex64 {
    if x == ZERO {
        return ZERO;
    }
    let (r, theta) = x.to_polar();
    let theta = if theta == -PI { PI } else { theta };
    Complex64::from_polar(r.powf(1.0 / n as f64), theta / n as f64)
}

/// All `n`-th roots of `x`, as `ε^r` times the principal root for `r = 1..n`.
pub fn nth_roots(x: Complex64, n: u32) -> Vec<Complex64> {
    let root = principal_root(x, n);
    (1..=n as u64).map(|r| root * epsilon_pow(n, r)).collect()
}

/// `|a - b| / max(1, |a|, |b|)`.
pub fn rel_dist(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / 1f64.max(a.norm()).max(b.norm())
}

/// Result of matching two multisets.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Matching {
    pub matched: bool,
    /// Largest pair distance in the accepted matching, or in the greedy attempt when no
    /// matching exists.
    pub max_error: f64,
}

fn kuhn_augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
    for &v in &adj[u] {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        if owner[v].is_none() || kuhn_augment(owner[v].unwrap(), adj, seen, owner) {
            owner[v] = Some(u);
            return true;
        }
    }
    false
}

/// Greedy nearest-neighbour pairing, falling back to a maximum bipartite matching on
/// the pairs within `tol` when the greedy pass fails.
pub fn match_within<T>(a: &[T], b: &[T], dist: impl Fn(&T, &T) -> f64, tol: f64) -> Matching {
    if a.len() != b.len() {
        return Matching { matched: false, max_error: f64::INFINITY };
    }
    let mut used = vec![false; b.len()];
    let mut greedy = 0f64;
    for x in a {
        let best = (0..b.len())
            .filter(|&j| !used[j])
            .map(|j| (j, dist(x, &b[j])))
            .min_by(|p, q| p.1.total_cmp(&q.1));
        if let Some((j, d)) = best {
            used[j] = true;
            greedy = greedy.max(d);
        }
    }
    if greedy <= tol {
        return Matching { matched: true, max_error: greedy };
    }
    let dists: Vec<Vec<f64>> = a.iter().map(|x| b.iter().map(|y| dist(x, y)).collect()).collect();
    let adj: Vec<Vec<usize>> = dists
        .iter()
        .map(|row| (0..row.len()).filter(|&j| row[j] <= tol).collect())
        .collect();
    let mut owner = vec![None; b.len()];
    for u in 0..a.len() {
        let mut seen = vec![false; b.len()];
        if !kuhn_augment(u, &adj, &mut seen, &mut owner) {
            return Matching { matched: false, max_error: greedy };
        }
    }
    let worst = owner
        .iter()
        .enumerate()
        .map(|(v, u)| dists[u.unwrap()][v])
        .fold(0f64, f64::max);
    Matching { matched: true, max_error: worst }
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexMultiset {
    elems: Vec<Complex64>,
    tol: f64,
}

impl ComplexMultiset {
    pub fn new(elems: Vec<Complex64>) -> Self {
        Self::with_tol(elems, DEFAULT_TOL)
    }

    pub fn with_tol(mut elems: Vec<Complex64>, tol: f64) -> Self {
        elems.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        ComplexMultiset { elems, tol }
    }

    pub fn elems(&self) -> &[Complex64] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn contains(&self, z: Complex64) -> bool {
        self.elems.iter().any(|&w| rel_dist(w, z) <= self.tol)
    }

    /// Matching against `other` at the looser of the two tolerances.
    pub fn compare(&self, other: &ComplexMultiset) -> Matching {
        let tol = self.tol.max(other.tol);
        match_within(&self.elems, &other.elems, |a, b| rel_dist(*a, *b), tol)
    }

    pub fn union(parts: impl IntoIterator<Item = ComplexMultiset>) -> ComplexMultiset {
        let mut tol: f64 = 0.0;
        let mut elems = Vec::new();
        for p in parts {
            tol = tol.max(p.tol);
            elems.extend(p.elems);
        }
        ComplexMultiset::with_tol(elems, tol)
    }
}

impl PartialEq for ComplexMultiset {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other).matched
    }
}

/// `x * y` in `G_n`.
pub fn gmul(n: u32, x: Complex64, y: Complex64) -> ComplexMultiset {
    gmul_branch(n, x, y, 0)
}

/// `x * y` computed with the root of `x` taken on the branch `ε^r0` times the principal one.
pub fn gmul_branch(n: u32, x: Complex64, y: Complex64, r0: u64) -> ComplexMultiset {
    let rx = principal_root(x, n) * epsilon_pow(n, r0);
    let elems = nth_roots(y, n).into_iter().map(|ry| (rx + ry).powu(n)).collect();
    ComplexMultiset::new(elems)
}

fn assoc_sides(n: u32, x: Complex64, y: Complex64, z: Complex64) -> (ComplexMultiset, ComplexMultiset) {
    let right = ComplexMultiset::union(gmul(n, y, z).elems().iter().map(|&w| gmul(n, x, w)));
    let left = ComplexMultiset::union(gmul(n, x, y).elems().iter().map(|&w| gmul(n, w, z)));
    (left, right)
}

/// The `n^2`-multisets `[x * w | w ∈ y * z]` and `[w * z | w ∈ x * y]` coincide.
pub fn assoc_check(n: u32, x: Complex64, y: Complex64, z: Complex64) -> bool {
    assoc_mismatch(n, x, y, z).matched
}

pub fn assoc_mismatch(n: u32, x: Complex64, y: Complex64, z: Complex64) -> Matching {
    let (left, right) = assoc_sides(n, x, y, z);
    left.compare(&right)
}

/// Identity, inverse and commutativity at `x`, `y`.
pub fn axioms_check(n: u32, x: Complex64, y: Complex64) -> bool {
    let e = Complex64::new(0.0, 0.0);
    let repeated = |v: Complex64| ComplexMultiset::new(vec![v; n as usize]);
    let inv = if n % 2 == 0 { x } else { -x };
    let scale = 1f64.max(x.norm());
    gmul(n, e, x) == repeated(x)
        && gmul(n, x, e) == repeated(x)
        && gmul(n, x, inv).elems().iter().any(|w| w.norm() <= DEFAULT_TOL * scale)
        && gmul(n, x, y) == gmul(n, y, x)
}

/// The `n^m` component-wise products in `G_n^m`.
pub fn cartesian_gmul(n: u32, xs: &[Complex64], ys: &[Complex64]) -> Result<Vec<Vec<Complex64>>> {
    if xs.len() != ys.len() || xs.is_empty() {
        return Err(Error::DimensionMismatch(format!(
            "vectors of length {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    let mut out = vec![Vec::new()];
    for (&x, &y) in xs.iter().zip(ys) {
        let factor = gmul(n, x, y);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                factor.elems().iter().map(move |&w| {
                    let mut v = prefix.clone();
                    v.push(w);
                    v
                })
            })
            .collect();
    }
    Ok(out)
}

/// Multisets of vectors compared by the largest component distance.
pub fn vector_multisets_match(a: &[Vec<Complex64>], b: &[Vec<Complex64>], tol: f64) -> bool {
    let dist = |u: &Vec<Complex64>, v: &Vec<Complex64>| {
        if u.len() != v.len() {
            return f64::INFINITY;
        }
        u.iter().zip(v).map(|(&p, &q)| rel_dist(p, q)).fold(0.0, f64::max)
    };
    match_within(a, b, dist, tol).matched
}

// ---------------------------------------------------------------------------------------
// Roots of univariate polynomials

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = ZERO;
    let mut dp = ZERO;
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn balance(m: &mut DMatrix<Complex64>) {
    const RADIX: f64 = 2.0;
    let n = m.nrows();
    loop {
        let mut done = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += m[(j, i)].l1_norm();
                    r += m[(i, j)].l1_norm();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / RADIX;
            while c < g {
                f *= RADIX;
                c *= RADIX * RADIX;
            }
            g = r * RADIX;
            while c > g {
                f /= RADIX;
                c /= RADIX * RADIX;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                for j in 0..n {
                    m[(i, j)] /= f;
                    m[(j, i)] *= f;
                }
            }
        }
        if done {
            break;
        }
    }
}

/// Simultaneous iteration, used only if the Schur decomposition does not converge.
fn durand_kerner(monic: &[Complex64]) -> Vec<Complex64> {
    let n = monic.len() - 1;
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = Complex64::from_polar(1.0, 0.4);
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| seed.powu(k as u32) * radius * 0.5)
        .collect();
    for _ in 0..2000 {
        let mut change = 0f64;
        for i in 0..n {
            let (p, _) = horner(monic, roots[i]);
            let denom: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| roots[i] - roots[j])
                .product();
            if denom == ZERO {
                continue;
            }
            let delta = p / denom;
            roots[i] -= delta;
            change = change.max(delta.norm());
        }
        if change < 1e-15 {
            break;
        }
    }
    roots
}

/// Roots of `sum coeffs[i] z^i`, with multiplicity: eigenvalues of the balanced
/// companion matrix, Newton-polished. A tight cluster of `k` roots is replaced by the
/// nearby root of the `(k-1)`-th derivative when `p` vanishes there to rounding
/// accuracy, which resolves multiple roots far better than the eigenvalues do.
pub fn poly_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    poly_roots_with_error(coeffs, &[])
}

/// [`poly_roots`] for coefficients known only up to absolute errors `err[i]` (missing
/// entries count as exact). The errors widen the residual test for multiple roots: a
/// cluster is merged when `p` vanishes at the merged point to within what the
/// coefficient errors can produce.
pub fn poly_roots_with_error(coeffs: &[Complex64], err: &[f64]) -> Vec<Complex64> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.last() == Some(&ZERO) {
        c.pop();
    }
    if c.len() < 2 {
        return Vec::new();
    }
    let zeros = c.iter().take_while(|&&x| x == ZERO).count();
    let c = &c[zeros..];
    let n = c.len() - 1;
    let lc = c[n];
    let monic: Vec<Complex64> = c.iter().map(|&x| x / lc).collect();
    let monic_err: Vec<f64> = (0..=n).map(|i| err.get(i + zeros).copied().unwrap_or(0.0) / lc.norm()).collect();
    let raw = if n == 0 {
        Vec::new()
    } else if n == 1 {
        vec![-monic[0]]
    } else {
        let mut m = DMatrix::from_element(n, n, ZERO);
        for j in 0..n {
            m[(0, j)] = -monic[n - 1 - j];
        }
        for i in 1..n {
            m[(i, i - 1)] = ONE;
        }
        balance(&mut m);
        match Schur::try_new(m, f64::EPSILON, 10_000).and_then(|s| s.eigenvalues()) {
            Some(ev) => ev.iter().copied().collect(),
            None => durand_kerner(&monic),
        }
    };
    let polished: Vec<Complex64> = raw.iter().map(|&r| newton_polish(&monic, r)).collect();
    let mut roots = Vec::with_capacity(n + zeros);
    for members in cluster(&polished, CLUSTER_RADIUS) {
        let k = members.len();
        if k == 1 {
            roots.push(members[0]);
            continue;
        }
        // a k-fold root of p is a simple root of the (k-1)-th derivative
        let mean = members.iter().sum::<Complex64>() / k as f64;
        let mut q = monic.clone();
        for _ in 1..k {
            q = derivative(&q);
        }
        let merged = newton_polish(&q, mean);
        let data_level = 10.0 * monic_err.iter().rev().fold(0.0, |acc, e| acc * merged.norm() + e);
        if horner(&monic, merged).0.norm() <= rounding_level(&monic, merged) + data_level {
            roots.extend(std::iter::repeat(merged).take(k));
        } else {
            roots.extend(members);
        }
    }
    roots.extend(std::iter::repeat(ZERO).take(zeros));
    roots
}

/// Relative radius within which roots are candidates for one multiple root.
const CLUSTER_RADIUS: f64 = 1e-3;

fn derivative(c: &[Complex64]) -> Vec<Complex64> {
    c.iter().enumerate().skip(1).map(|(i, &x)| x * i as f64).collect()
}

/// Newton iteration on `c`, keeping the iterate with the smallest residual.
fn newton_polish(c: &[Complex64], start: Complex64) -> Complex64 {
    let mut best = start;
    let mut best_res = horner(c, best).0.norm();
    let mut z = start;
    for _ in 0..60 {
        let (p, dp) = horner(c, z);
        if dp == ZERO || p == ZERO {
            break;
        }
        z -= p / dp;
        let res = horner(c, z).0.norm();
        if res < best_res {
            best_res = res;
            best = z;
        } else if res > 4.0 * best_res {
            break;
        }
    }
    best
}

/// Bound on the evaluation error of Horner's rule at `z`, with a safety factor.
fn rounding_level(c: &[Complex64], z: Complex64) -> f64 {
    let scale: f64 = c.iter().rev().fold(0.0, |acc, x| acc * z.norm() + x.norm());
    10.0 * c.len() as f64 * f64::EPSILON * scale
}

/// Single-linkage clusters of nearby points.
fn cluster(roots: &[Complex64], radius: f64) -> Vec<Vec<Complex64>> {
    let n = roots.len();
    let mut label: Vec<usize> = (0..n).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for j in i + 1..n {
                if label[i] != label[j] && rel_dist(roots[i], roots[j]) <= radius {
                    let (keep, drop) = (label[i].min(label[j]), label[i].max(label[j]));
                    label.iter_mut().filter(|l| **l == drop).for_each(|l| *l = keep);
                    changed = true;
                }
            }
        }
    }
    (0..n)
        .map(|l| (0..n).filter(|&j| label[j] == l).map(|j| roots[j]).collect::<Vec<_>>())
        .filter(|c| !c.is_empty())
        .collect()
}

// ---------------------------------------------------------------------------------------
// Symbolic p_n against the explicit root multiset

/// `[(Σ_j ε^{s_j} xs_j^{1/n})^n]` over `s_2..s_m`, with `s_1` fixed: `n^(m-1)` values.
pub fn explicit_pn_roots(n: u32, xs: &[Complex64]) -> Vec<Complex64> {
    let roots: Vec<Complex64> = xs.iter().map(|&x| principal_root(x, n)).collect();
    let mut sums = vec![roots[0]];
    for &r in &roots[1..] {
        sums = sums
            .into_iter()
            .flat_map(|s| (1..=n as u64).map(move |k| s + epsilon_pow(n, k) * r))
            .collect();
    }
    sums.into_iter().map(|s| s.powu(n)).collect()
}

/// Roots in `z` of `p(z; (-1)^n xs)` against [`explicit_pn_roots`]. `p` lives on the
/// table `[z, x1, .., xm]`.
pub fn roots_match_mismatch(p: &Polynomial, n: u32, xs: &[Complex64]) -> Result<Matching> {
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let mut point = vec![ZERO];
    point.extend(xs.iter().map(|&x| x * sign));
    let coeffs = p.univariate_complex("z", &point)?;
    let found = ComplexMultiset::with_tol(poly_roots(&coeffs), ROOT_MATCH_TOL);
    let expected = ComplexMultiset::with_tol(explicit_pn_roots(n, xs), ROOT_MATCH_TOL);
    Ok(found.compare(&expected))
}

pub fn roots_match_pn(p: &Polynomial, n: u32, xs: &[Complex64]) -> Result<bool> {
    Ok(roots_match_mismatch(p, n, xs)?.matched)
}

// ---------------------------------------------------------------------------------------
// Universal families

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    P2family,
    P3caseA,
    P3caseB,
}

impl Family {
    pub fn valence(self) -> u32 {
        match self {
            Family::P2family => 2,
            Family::P3caseA | Family::P3caseB => 3,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s.to_ascii_lowercase().as_str() {
            "p2" | "p2family" => Ok(Family::P2family),
            "p3a" | "p3casea" => Ok(Family::P3caseA),
            "p3b" | "p3caseb" => Ok(Family::P3caseB),
            _ => Err(Error::Usage(format!("unknown family {s:?} (expected p2, p3a or p3b)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct UniversalFamilyParams {
    pub which: Family,
    pub k2: Complex64,
    pub k4: Complex64,
    pub k6: Complex64,
    pub c: Complex64,
    pub alpha: Complex64,
}

impl UniversalFamilyParams {
    pub fn new(which: Family) -> Self {
        UniversalFamilyParams { which, k2: ZERO, k4: ZERO, k6: ZERO, c: ZERO, alpha: ZERO }
    }

    /// Terms `coeff * σ1^a σ2^b σ3^c` of the symmetric form.
    pub fn sigma_terms(&self) -> Vec<(Complex64, u32, u32, u32)> {
        let r = |v: f64| Complex64::new(v, 0.0);
        match self.which {
            Family::P2family => {
                let (k2, k4, k6) = (self.k2, self.k4, self.k6);
                vec![
                    (ONE, 2, 0, 0),
                    (r(-4.0), 0, 1, 0),
                    (k2 * 2.0, 0, 0, 1),
                    (k4 * k4 - k6 * k2, 0, 0, 2),
                    (k4 * 2.0, 1, 0, 1),
                    (k6 * 2.0, 0, 1, 1),
                ]
            }
            Family::P3caseA => {
                let c = self.c;
                vec![
                    (ONE, 3, 0, 0),
                    (r(-27.0), 0, 0, 1),
                    (c * 18.0, 2, 0, 1),
                    (c * -54.0, 0, 1, 1),
                    (c * c * -27.0, 0, 2, 1),
                    (c * c * 81.0, 1, 0, 2),
                ]
            }
            Family::P3caseB => {
                let a = self.alpha;
                vec![
                    (ONE, 3, 0, 0),
                    (a * 3.0, 2, 0, 1),
                    (a * a * 3.0, 1, 0, 2),
                    (a * a * a, 0, 0, 3),
                ]
            }
        }
    }

    /// Coefficients in `z` (ascending) of the multiplication polynomial at `(x, y)`:
    /// the symmetric form evaluated at `σ(z, (-1)^n x, (-1)^n y)`.
    pub fn polynomial_in_z(&self, x: Complex64, y: Complex64) -> Vec<Complex64> {
        self.expand_in_z(x, y).0
    }

    /// Coefficients together with the sums of the magnitudes of the terms that make
    /// them up, which bound the cancellation error of the expansion.
    fn expand_in_z(&self, x: Complex64, y: Complex64) -> (Vec<Complex64>, Vec<f64>) {
        let sign = if self.which.valence() % 2 == 0 { 1.0 } else { -1.0 };
        let (a, b) = (x * sign, y * sign);
        let s1 = vec![a + b, ONE];
        let s2 = vec![a * b, a + b];
        let s3 = vec![ZERO, a * b];
        let len = self.which.valence() as usize + 1;
        let mut out = vec![ZERO; len];
        let mut mag = vec![0.0; len];
        for (coeff, e1, e2, e3) in self.sigma_terms() {
            let mut term = vec![coeff];
            let mut size = vec![coeff.norm()];
            for (factor, e) in [(&s1, e1), (&s2, e2), (&s3, e3)] {
                let abs: Vec<f64> = factor.iter().map(|c| c.norm()).collect();
                for _ in 0..e {
                    term = cmul(&term, factor);
                    size = rmul(&size, &abs);
                }
            }
            for (i, (t, m)) in term.into_iter().zip(size).enumerate().take(len) {
                out[i] += t;
                mag[i] += m;
            }
        }
        (out, mag)
    }

    /// Root multiset of the multiplication polynomial at `(x, y)`.
    pub fn product(&self, x: Complex64, y: Complex64) -> Result<ComplexMultiset> {
        let (coeffs, mag) = self.expand_in_z(x, y);
        let lc = coeffs.last().copied().unwrap_or(ZERO);
        if lc.norm() < DEGENERACY_THRESHOLD {
            return Err(Error::DegenerateLeadingCoefficient(format!("{:e}", lc.norm())));
        }
        let err: Vec<f64> = mag.iter().map(|m| 16.0 * f64::EPSILON * m).collect();
        Ok(ComplexMultiset::with_tol(poly_roots_with_error(&coeffs, &err), ROOT_MATCH_TOL))
    }
}

fn rmul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn cmul(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Associativity of the family multiplication at `x, y, z`. Degenerate samples are
/// reported as `Err(DegenerateLeadingCoefficient)`.
pub fn universal_family_mismatch(
    params: &UniversalFamilyParams,
    x: Complex64,
    y: Complex64,
    z: Complex64,
) -> Result<Matching> {
    let xy = params.product(x, y)?;
    let yz = params.product(y, z)?;
    let left = ComplexMultiset::union(
        xy.elems().iter().map(|&w| params.product(w, z)).collect::<Result<Vec<_>>>()?,
    );
    let right = ComplexMultiset::union(
        yz.elems().iter().map(|&w| params.product(x, w)).collect::<Result<Vec<_>>>()?,
    );
    Ok(left.compare(&right))
}

pub fn universal_family_assoc(
    params: &UniversalFamilyParams,
    x: Complex64,
    y: Complex64,
    z: Complex64,
) -> Result<bool> {
    Ok(universal_family_mismatch(params, x, y, z)?.matched)
}

// ---------------------------------------------------------------------------------------
// Seeded campaigns

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct CampaignSummary {
    pub passed: u64,
    pub failed: u64,
    pub skipped_degenerate: u64,
    pub max_mismatch: f64,
}

impl CampaignSummary {
    fn merge(self, other: CampaignSummary) -> CampaignSummary {
        CampaignSummary {
            passed: self.passed + other.passed,
            failed: self.failed + other.failed,
            skipped_degenerate: self.skipped_degenerate + other.skipped_degenerate,
            max_mismatch: self.max_mismatch.max(other.max_mismatch),
        }
    }

    fn from_matching(m: Matching) -> CampaignSummary {
        CampaignSummary {
            passed: m.matched as u64,
            failed: !m.matched as u64,
            skipped_degenerate: 0,
            max_mismatch: m.max_error,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.passed > 0
    }
}

/// Independent stream per sample, so results do not depend on scheduling.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform point of the closed disk of the given radius.
pub fn random_in_disk(rng: &mut impl Rng, radius: f64) -> Complex64 {
    let r = radius * rng.gen::<f64>().sqrt();
    Complex64::from_polar(r, rng.gen_range(-PI..PI))
}

fn campaign(samples: u64, f: impl Fn(u64) -> CampaignSummary + Sync + Send) -> CampaignSummary {
    (0..samples)
        .into_par_iter()
        .map(f)
        .reduce(CampaignSummary::default, CampaignSummary::merge)
}

/// Associativity of `G_n` at random points of the disk of radius `radius`.
pub fn assoc_campaign(n: u32, samples: u64, seed: u64, radius: f64) -> CampaignSummary {
    campaign(samples, |i| {
        let mut rng = sample_rng(seed, i);
        let x = random_in_disk(&mut rng, radius);
        let y = random_in_disk(&mut rng, radius);
        let z = random_in_disk(&mut rng, radius);
        CampaignSummary::from_matching(assoc_mismatch(n, x, y, z))
    })
}

/// Identity, inverse and commutativity axioms, plus branch independence of the product.
pub fn axioms_campaign(n: u32, samples: u64, seed: u64, radius: f64) -> CampaignSummary {
    campaign(samples, |i| {
        let mut rng = sample_rng(seed, i);
        let x = random_in_disk(&mut rng, radius);
        let y = random_in_disk(&mut rng, radius);
        let r0 = rng.gen_range(0..n as u64);
        let branch = gmul_branch(n, x, y, r0).compare(&gmul(n, x, y));
        let ok = axioms_check(n, x, y) && branch.matched;
        CampaignSummary {
            passed: ok as u64,
            failed: !ok as u64,
            skipped_degenerate: 0,
            max_mismatch: branch.max_error,
        }
    })
}

/// Associativity of a universal family with parameters and points drawn from the unit
/// disk; `fixed` overrides the random parameters.
pub fn family_campaign(
    which: Family,
    samples: u64,
    seed: u64,
    fixed: Option<UniversalFamilyParams>,
) -> CampaignSummary {
    campaign(samples, |i| {
        let mut rng = sample_rng(seed, i);
        let params = fixed.unwrap_or_else(|| UniversalFamilyParams {
            which,
            k2: random_in_disk(&mut rng, 1.0),
            k4: random_in_disk(&mut rng, 1.0),
            k6: random_in_disk(&mut rng, 1.0),
            c: random_in_disk(&mut rng, 1.0),
            alpha: random_in_disk(&mut rng, 1.0),
        });
        let x = random_in_disk(&mut rng, 1.0);
        let y = random_in_disk(&mut rng, 1.0);
        let z = random_in_disk(&mut rng, 1.0);
        match universal_family_mismatch(&params, x, y, z) {
            Ok(m) => CampaignSummary::from_matching(m),
            Err(_) => CampaignSummary { skipped_degenerate: 1, ..Default::default() },
        }
    })
}

/// `roots_match_pn` at random points of the unit disk.
pub fn roots_match_campaign(p: &Polynomial, n: u32, m: u32, samples: u64, seed: u64) -> Result<CampaignSummary> {
    let results: Vec<Result<CampaignSummary>> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = sample_rng(seed, i);
            let xs: Vec<Complex64> = (0..m).map(|_| random_in_disk(&mut rng, 1.0)).collect();
            Ok(CampaignSummary::from_matching(roots_match_mismatch(p, n, &xs)?))
        })
        .collect();
    results
        .into_iter()
        .try_fold(CampaignSummary::default(), |acc, r| Ok(acc.merge(r?)))
}
