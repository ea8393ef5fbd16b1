//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits non-zero if any fail.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rand::Rng;

use nval_core::arith::{self, FactorOptions, FactoredInteger, IrreducibilityStatus, DEFAULT_SEED};
use nval_core::elimination::{self, int_resultant};
use nval_core::groupsim::{self, Family};
use nval_core::pn::{self, Route};
use nval_core::polymatrix::{self, PolyMatrix};
use nval_core::polyring::{reduce_to_elementary, Polynomial, SymExpansion, VarTable};

const SEED: u64 = DEFAULT_SEED;
const PROPERTY_CASES: u32 = 500;

/// Coefficients of p_18(z; x, y) in σ1, σ2, σ3 with their factorizations.
const P18_EXPECTED: &str = "\
(18,0,0) -> 1
(16,1,0) -> - 2^2 3^2
(15,0,1) -> - 2^1 3^5 43^1 293^1 13339^1
(14,2,0) -> 2^6 3^2
(13,1,1) -> - 2^1 3^5 39079^1 30478663^1
(12,3,0) -> - 2^8 3^1 7^1
(12,0,2) -> 3^4 167^1 58369^1 1702940402507^1
(11,2,1) -> - 2^2 3^6 57769225879741^1
(10,4,0) -> 2^9 3^2 7^1
(10,1,2) -> - 2^2 3^5 7^1 97^1 36913^1 180317^1 3375001057^1
(9,3,1) -> - 2^1 3^5 23^1 144589^1 5245247209^1
(9,0,3) -> - 2^1 3^8 5^1 12713^1 76919^1 37764598382689403^1
(8,5,0) -> - 2^11 3^2 7^1
(8,2,2) -> 3^5 67589^1 626540941303495210351^1
(7,4,1) -> - 2^5 3^5 11^1 13^1 102997724923217^1
(7,1,3) -> - 2^1 3^8 13^1 124035886813^1 453195935961757643^1
(6,6,0) -> 2^14 3^1 7^1
(6,3,2) -> - 2^1 3^4 13^3 1087^1 1879^1 2833^1 528719679255133^1
(6,0,4) -> 2^1 3^7 5^1 13^1 113^1 86137^1 215724736933^1 207036951417917^1
(5,5,1) -> - 2^6 3^6 10168829241424199^1
(5,2,3) -> - 2^1 3^9 5^1 367^1 739^1 466897^1 110336732972567120113^1
(4,7,0) -> - 2^16 3^2
(4,4,2) -> 2^1 3^5 97^1 683^1 875241448225705706391329^1
(4,1,4) -> - 2^1 3^8 11^1 179^1 13499^1 19801^1 67601^1 99257^1 1129433^1 1123012127^1
(3,6,1) -> - 2^9 3^5 11^1 414927770423911^1
(3,3,3) -> - 2^2 3^8 107137^1 30887295467839157373255894019^1
(3,0,5) -> - 2^2 3^11 17443^1 3104015062391^1 839030750625213207689^1
(2,8,0) -> 2^16 3^2
(2,5,2) -> - 2^2 3^5 41^1 5691615916625701258286918167^1
(2,2,4) -> 3^8 7^2 137^1 141017479^1 2779127063107^1 131095595871761^1
(1,7,1) -> - 2^9 3^5 721117^1 1512997111^1
(1,4,3) -> - 2^1 3^8 5^1 199^1 520747^1 2094293950849^1 19804297603859^1
(1,1,5) -> - 2^1 3^11 5^1 23^1 109^1 163^1 271^1 2269^1 5779^1 58049^1 2951599681331246837^1
(0,9,0) -> - 2^18
(0,6,2) -> 3^4 10837^1 8379438461^1 73146705440157233^1
(0,3,4) -> - 2^1 3^7 11^1 443^1 105199^1 9893951^1 115291956551^1 4149469127033^1
(0,0,6) -> 3^9 109^3 163^3 271^3 2269^3 5779^3";

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn secs(d: Duration) -> String {
    format!("{:.1}s", d.as_secs_f64())
}

// ---------------------------------------------------------------------------------------

fn c1_route_cross_equality() -> Outcome {
    let start = Instant::now();
    let mut cases = Vec::new();
    let mut ok = true;
    for (n, m) in (1..=6).map(|n| (n, 2)).chain([(2, 3), (3, 3)]) {
        let (_, report) = pn::cross_check(n, m, &Route::ALL).unwrap();
        let expected_routes = if m == 2 { 4 } else { 2 };
        let good = report.all_routes_agree
            && report.symmetric_homogeneous_monic
            && report.routes.len() == expected_routes;
        ok &= good;
        if !good {
            cases.push(format!("n={n},m={m} disagree"));
        }
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(60);
    outcome(ok, format!("n=1..6 (m=2, 4 routes), n=2,3 (m=3, 2 routes) in {} {}", secs(elapsed), cases.join("; ")))
}

fn sym(n: u32, m: u32, terms: &[(&[u32], i64)]) -> Result<(), String> {
    let p = pn::build(n, m, if m == 2 { Route::Wendt } else { Route::Kronecker }).map_err(|e| e.to_string())?;
    let got = pn::sigma_basis(&p).map_err(|e| e.to_string())?;
    let arity = m as usize + 1;
    let expected: BTreeMap<Vec<u32>, BigInt> = terms
        .iter()
        .map(|(e, c)| {
            let mut e = e.to_vec();
            e.resize(arity, 0);
            (e, BigInt::from(*c))
        })
        .collect();
    if got.coeffs() == &expected {
        Ok(())
    } else {
        Err(format!("p_{n} (m={m}) = {got}"))
    }
}

fn c2_table_reproduction() -> Outcome {
    let p3 = 3i64;
    let checks = [
        sym(2, 2, &[(&[2], 1), (&[0, 1], -4)]),
        sym(3, 2, &[(&[3], 1), (&[0, 0, 1], -27)]),
        sym(5, 2, &[(&[5], 1), (&[2, 0, 1], -5i64.pow(4)), (&[0, 1, 1], 5i64.pow(5))]),
        sym(2, 3, &[(&[4], 1), (&[2, 1], -8), (&[0, 2], 16), (&[0, 0, 0, 1], -64)]),
        sym(
            3,
            3,
            &[
                (&[9], 1),
                (&[6, 0, 1], -p3.pow(4)),
                (&[3, 0, 2], p3.pow(7)),
                (&[0, 0, 3], -p3.pow(9)),
                (&[5, 0, 0, 1], 2 * p3.pow(7)),
                (&[3, 1, 0, 1], -p3.pow(9)),
                (&[2, 0, 1, 1], p3.pow(10)),
            ],
        ),
        sym(
            2,
            4,
            &[
                (&[8], 1),
                (&[6, 1], -(1 << 4)),
                (&[4, 2], (1 << 5) * 3),
                (&[2, 3], -(1 << 8)),
                (&[0, 4], 1 << 8),
                (&[4, 0, 0, 1], -(1 << 7)),
                (&[2, 1, 0, 1], 1 << 10),
                (&[0, 2, 0, 1], -(1 << 11)),
                (&[0, 0, 0, 2], 1 << 12),
                (&[3, 0, 0, 0, 1], -(1 << 11)),
                (&[1, 1, 0, 0, 1], 1 << 13),
                (&[0, 0, 1, 0, 1], -(1 << 14)),
            ],
        ),
    ];
    let errors: Vec<String> = checks.into_iter().filter_map(Result::err).collect();
    outcome(
        errors.is_empty(),
        format!("p2, p3, p5 (m=2); p2, p3 (m=3); p2 (m=4, 12 terms) {}", errors.join("; ")),
    )
}

fn parse_row(line: &str) -> (Vec<u32>, FactoredInteger) {
    let (key, value) = line.split_once("->").expect("row separator");
    let key = key.trim().trim_start_matches('(').trim_end_matches(')');
    let exps = key.split(',').map(|s| s.trim().parse().unwrap()).collect();
    (exps, FactoredInteger::parse(value.trim()).unwrap())
}

fn c3_p18_table() -> Outcome {
    let start = Instant::now();
    let (p, report) = pn::cross_check(18, 2, &[Route::Wendt, Route::Resultant]).unwrap();
    let sigma = pn::sigma_basis(&p).unwrap();
    let expected: Vec<(Vec<u32>, FactoredInteger)> = P18_EXPECTED.lines().map(parse_row).collect();
    let keys: Vec<&Vec<u32>> = expected.iter().map(|(e, _)| e).collect();
    let got_keys: Vec<&Vec<u32>> = sigma.coeffs().keys().rev().collect();
    let mut mismatches = Vec::new();
    if keys != got_keys {
        mismatches.push(format!("monomial set differs ({} computed)", got_keys.len()));
    }
    let values: Vec<BigInt> = expected.iter().map(|(e, _)| sigma.coeff(e)).collect();
    let factored = arith::factorize_many(&values, &FactorOptions { seed: SEED, ..Default::default() }).unwrap();
    let mut by_equivalence = 0;
    for (((e, want), value), got) in expected.iter().zip(&values).zip(&factored) {
        let direct = got.certified && got == want;
        // fallback: the listed factorization multiplies back and every listed factor is prime
        let equivalent = want.value() == *value
            && want.factors.iter().all(|(q, _)| arith::is_probable_prime(q));
        if !direct && equivalent {
            by_equivalence += 1;
        }
        if !(direct || equivalent) {
            mismatches.push(format!("{e:?}: computed {got}"));
        }
    }
    let elapsed = start.elapsed();
    let ok = report.all_routes_agree && mismatches.is_empty() && elapsed < Duration::from_secs(1800);
    outcome(
        ok,
        format!(
            "{} rows, {} by direct factorization, {} by product check, in {} {}",
            expected.len(),
            expected.len() - by_equivalence,
            by_equivalence,
            secs(elapsed),
            mismatches.join("; ")
        ),
    )
}

fn c4_n4_divisibility() -> Outcome {
    let start = Instant::now();
    let results: Vec<(u32, bool)> = [5, 7, 11, 13]
        .into_iter()
        .map(|n| (n, arith::n4_divisibility_check(n).unwrap()))
        .collect();
    let elapsed = start.elapsed();
    let ok = results.iter().all(|r| r.1) && elapsed < Duration::from_secs(300);
    outcome(ok, format!("{results:?} in {}", secs(elapsed)))
}

fn c5_sharpness() -> Outcome {
    let r = arith::n4_divisibility_report(5).unwrap();
    outcome(
        r.divisible_by_n4 && !r.divisible_by_n5,
        format!("n=5: divisible by 5^4 {}, by 5^5 {}", r.divisible_by_n4, r.divisible_by_n5),
    )
}

fn c6_discriminant() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 2..=5 {
        let r = elimination::discriminant_identity_check(n).unwrap();
        ok &= r.ok;
        parts.push(format!("n={n}: constant {} (|.| = {}, sign {:+})", r.constant.unwrap_or_default(), r.expected_abs, r.sign));
    }
    outcome(ok, parts.join(", "))
}

fn c7_wendt() -> Outcome {
    let mut ok = true;
    for n in 1..=12 {
        ok &= arith::wendt_det_matrix(n).unwrap() == arith::wendt_det_resultant(n).unwrap();
    }
    let cases = arith::criterion_cases(200);
    let results: Vec<_> = cases.iter().map(|&(p, k)| arith::wendt_criterion(p, k).unwrap()).collect();
    let agree = results.iter().filter(|r| r.agree).count();
    let divisible = results.iter().filter(|r| r.divides).count();
    ok &= agree == results.len();
    outcome(
        ok,
        format!(
            "det W_n by matrix = by resultant for n<=12; criterion agrees in {agree}/{} cases with q<200 ({divisible} with q | det W_2k)",
            results.len()
        ),
    )
}

fn c8_wolstenholme() -> Outcome {
    let primes: Vec<u64> = (5..=97u64).filter(|&n| (2..n).all(|d| n % d != 0)).collect();
    let mod_n3 = primes.iter().all(|&n| arith::wolstenholme_check(n).unwrap().mod_n3);
    let w = arith::wolstenholme_check(16843).unwrap();
    let identity = (2..=200).all(|n| arith::binom_weighted_sum_identity(n).unwrap());
    outcome(
        mod_n3 && w.mod_n4 && identity,
        format!(
            "mod n^3 for {} primes in [5,97]: {mod_n3}; 16843 mod n^4: {}; weighted sum n<=200: {identity}",
            primes.len(),
            w.mod_n4
        ),
    )
}

fn random_lower(rng: &mut impl Rng) -> Vec<BigInt> {
    let d = rng.gen_range(1..=4);
    (0..d).map(|_| BigInt::from(rng.gen_range(-6..=6))).collect()
}

fn c9_composition() -> Outcome {
    let mut agree = 0;
    for i in 0..50 {
        let mut rng = groupsim::sample_rng(SEED, i);
        let f = random_lower(&mut rng);
        let g = random_lower(&mut rng);
        if polymatrix::composition_check(&f, &g).unwrap().all_agree {
            agree += 1;
        }
    }
    outcome(agree == 50, format!("{agree}/50 random monic pairs, all four computations equal"))
}

fn c10_numeric_oracle() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 1..=5 {
        let s = groupsim::assoc_campaign(n, 1000, SEED, 10.0);
        ok &= s.all_passed() && s.passed == 1000;
        parts.push(format!("assoc n={n} {}/1000", s.passed));
    }
    let built: Vec<(u32, u32)> = (1..=9).map(|n| (n, 2)).chain([(2, 3), (3, 3), (2, 4), (4, 3)]).collect();
    let mut rm_cases = 0;
    for &(n, m) in &built {
        let route = if m == 2 { Route::Wendt } else { Route::BlockPower };
        let p = pn::build(n, m, route).unwrap();
        let s = groupsim::roots_match_campaign(&p, n, m, 200, SEED).unwrap();
        if s.all_passed() {
            rm_cases += 1;
        } else {
            ok = false;
            parts.push(format!("roots n={n},m={m} failed {}", s.failed));
        }
    }
    parts.push(format!("roots_match {rm_cases}/{} built p_n", built.len()));
    for which in [Family::P2family, Family::P3caseA, Family::P3caseB] {
        let s = groupsim::family_campaign(which, 1000, SEED, None);
        ok &= s.failed == 0 && s.passed >= 200;
        parts.push(format!("{which:?} {}/{} (skipped {})", s.passed, s.passed + s.failed, s.skipped_degenerate));
    }
    outcome(ok, parts.join(", "))
}

/// Ascending coefficients of `p_n(z^k; a, b)`.
fn pn_at(n: u32, a: i64, b: i64, k: u32) -> Vec<BigInt> {
    let p = pn::pn_wendt(n).unwrap();
    let vars = p.vars().clone();
    let (zi, xi, yi) = (vars.require("z").unwrap(), vars.require("x1").unwrap(), vars.require("x2").unwrap());
    let mut out = vec![BigInt::from(0); (n * k) as usize + 1];
    for (mono, c) in p.terms() {
        let v = c * BigInt::from(a).pow(mono.exp(xi) as u32) * BigInt::from(b).pow(mono.exp(yi) as u32);
        out[(mono.exp(zi) as u32 * k) as usize] += v;
    }
    out
}

fn c11_irreducibility() -> Outcome {
    let budget = arith::DEFAULT_BUDGET;
    let p2 = pn_at(2, 2, 3, 2);
    let p3 = pn_at(3, 2, 3, 3);
    let c2 = arith::irreducibility_certificate_coeffs(&p2, SEED, budget).unwrap();
    let c3 = arith::irreducibility_certificate_coeffs(&p3, SEED, budget).unwrap();
    let minus: Vec<BigInt> = [-1, 0, 1].into_iter().map(BigInt::from).collect();
    let c1 = arith::irreducibility_certificate_coeffs(&minus, SEED, budget).unwrap();
    let ok = p2 == [1, 0, -10, 0, 1].map(BigInt::from)
        && c2.status == IrreducibilityStatus::Irreducible
        && c3.status == IrreducibilityStatus::Irreducible
        && c1.status == IrreducibilityStatus::Reducible;
    outcome(
        ok,
        format!(
            "p2(z^2;2,3): {:?} via {} (sumsets {:?}); p3(z^3;2,3): {:?} via {} (sumsets {:?}, lift mod {}^{}); z^2-1: {:?}",
            c2.status,
            c2.method,
            c2.sumset_intersection,
            c3.status,
            c3.method,
            c3.sumset_intersection,
            c3.lift_prime.unwrap_or(0),
            c3.lift_exponent.unwrap_or(0),
            c1.status
        ),
    )
}

// ---------------------------------------------------------------------------------------
// Property suites

fn runner() -> TestRunner {
    let config = Config { cases: PROPERTY_CASES, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn xyz() -> Arc<VarTable> {
    VarTable::new(["x", "y", "z"]).unwrap()
}

fn arb_poly() -> impl Strategy<Value = Vec<(Vec<u16>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u16..4, 3), -20i64..21), 0..6)
}

fn poly_from(t: &Arc<VarTable>, terms: Vec<(Vec<u16>, i64)>) -> Polynomial {
    Polynomial::from_terms(t, terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))).unwrap()
}

fn ring_axioms() -> Result<(), String> {
    runner()
        .run(&(arb_poly(), arb_poly(), arb_poly()), |(a, b, c)| {
            let t = xyz();
            let (a, b, c) = (poly_from(&t, a), poly_from(&t, b), poly_from(&t, c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            let a2 = a.clone();
            prop_assert!((&a - &a2).is_zero());
            prop_assert_eq!(&a * &Polynomial::one(&t), a.clone());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn sigma_round_trip() -> Result<(), String> {
    let terms = prop::collection::vec((prop::collection::vec(0u32..3, 3), -30i64..31), 0..5);
    runner()
        .run(&terms, |terms| {
            let t = xyz();
            let vars = ["x", "y", "z"];
            let s = SymExpansion::from_terms(&t, &vars, terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))).unwrap();
            let p = s.expand().unwrap();
            let back = reduce_to_elementary(&p, &vars).unwrap();
            prop_assert_eq!(back.coeffs(), s.coeffs());
            prop_assert_eq!(back.expand().unwrap(), p);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn linear_entries(n: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-6i64..7, -3i64..4), n * n)
}

fn matrix_from(t: &Arc<VarTable>, n: usize, e: &[(i64, i64)]) -> PolyMatrix {
    let x = Polynomial::var(t, "x").unwrap();
    PolyMatrix::from_fn(t, n, n, |i, j| {
        let (a, b) = e[i * n + j];
        &polymatrix::int_poly(t, a) + &x.scale(&BigInt::from(b))
    })
}

fn det_multiplicativity() -> Result<(), String> {
    runner()
        .run(&(linear_entries(3), linear_entries(3)), |(a, b)| {
            let t = xyz();
            let (a, b) = (matrix_from(&t, 3, &a), matrix_from(&t, 3, &b));
            let lhs = a.mul(&b).unwrap().det_bareiss().unwrap();
            prop_assert_eq!(lhs, &a.det_bareiss().unwrap() * &b.det_bareiss().unwrap());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn int_poly_strategy() -> impl Strategy<Value = Vec<i64>> {
    (prop::collection::vec(-6i64..7, 1..=4), prop_oneof![-5i64..0, 1i64..6]).prop_map(|(mut v, lc)| {
        v.push(lc);
        v
    })
}

fn resultant_swap_sign() -> Result<(), String> {
    runner()
        .run(&(int_poly_strategy(), int_poly_strategy()), |(f, g)| {
            let big = |v: &[i64]| v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
            let (df, dg) = (f.len() - 1, g.len() - 1);
            let a = int_resultant(&big(&f), &big(&g)).unwrap();
            let b = int_resultant(&big(&g), &big(&f)).unwrap();
            prop_assert_eq!(a, if df * dg % 2 == 0 { b } else { -b });
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn sign_alternation() -> Result<(), String> {
    runner()
        .run(&linear_entries(4), |e| {
            let t = xyz();
            let m = matrix_from(&t, 4, &e);
            prop_assert_eq!(m.alternate_signs().det_bareiss().unwrap(), m.det_bareiss().unwrap());
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    // the structured case: off-diagonal signs of A^n + (-1)^(n+1) x1 I made positive
    for (n, m) in [(2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3), (2, 4)] {
        if !pn::sign_replacement_check(n, m).map_err(|e| e.to_string())? {
            return Err(format!("sign replacement changes det for n={n}, m={m}"));
        }
    }
    Ok(())
}

fn c12_properties() -> Outcome {
    let suites: [(&str, fn() -> Result<(), String>); 5] = [
        ("ring axioms", ring_axioms),
        ("sigma round trip", sigma_round_trip),
        ("det multiplicativity", det_multiplicativity),
        ("resultant swap sign", resultant_swap_sign),
        ("sign alternation", sign_alternation),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, suite) in suites {
        match suite() {
            Ok(()) => parts.push(format!("{name} {PROPERTY_CASES}/{PROPERTY_CASES}")),
            Err(e) => {
                ok = false;
                parts.push(format!("{name} FAILED: {e}"));
            }
        }
    }
    outcome(ok, parts.join(", "))
}

fn main() {
    // `cargo test` passes harness flags such as `--nocapture`; a name filter selects criteria.
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let criteria: [(&str, &str, fn() -> Outcome); 12] = [
        ("1", "route cross-equality", c1_route_cross_equality),
        ("2", "sigma-basis tables", c2_table_reproduction),
        ("3", "p18 factorization table", c3_p18_table),
        ("4", "n^4 divisibility", c4_n4_divisibility),
        ("5", "n^5 sharpness", c5_sharpness),
        ("6", "discriminant identity", c6_discriminant),
        ("7", "Wendt determinants and criterion", c7_wendt),
        ("8", "Wolstenholme congruences", c8_wolstenholme),
        ("9", "companion composition", c9_composition),
        ("10", "numeric oracle", c10_numeric_oracle),
        ("11", "irreducibility certificates", c11_irreducibility),
        ("12", "property suites", c12_properties),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| f == id || name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                outcome(false, format!("panicked: {msg}"))
            });
        if !result.pass {
            failed += 1;
        }
        println!(
            "{} [{id:>2}] {name}: {} ({})",
            if result.pass { "PASS" } else { "FAIL" },
            result.detail.trim(),
            secs(start.elapsed())
        );
    }
    println!("acceptance: {failed} failed");
    if failed > 0 {
        std::process::exit(1);
    }
}
