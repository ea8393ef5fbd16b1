//! `nval`: command-line front end for the p_n kernel.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 on usage errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use nval_core::arith::{self, FactorOptions, IrreducibilityStatus, DEFAULT_BUDGET, DEFAULT_SEED};
use nval_core::groupsim::{self, Family};
use nval_core::pn::{self, Route};
use nval_core::polyring::{Polynomial, PolynomialJson};
use nval_core::{elimination, polymatrix, Error};

#[derive(Parser, Debug)]
#[command(name = "nval", version, about = "Multiplication polynomials of the n-valued groups on C")]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Work budget: Pollard-rho iterations per cofactor, recombination attempts.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    out: OutFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    All,
    Kronecker,
    Wendt,
    Blockpower,
    Resultant,
}

impl RouteArg {
    fn routes(self) -> Vec<Route> {
        match self {
            RouteArg::All => Route::ALL.to_vec(),
            RouteArg::Kronecker => vec![Route::Kronecker],
            RouteArg::Wendt => vec![Route::Wendt],
            RouteArg::Blockpower => vec![Route::BlockPower],
            RouteArg::Resultant => vec![Route::Resultant],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Basis {
    Raw,
    Sigma,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build p_n(z; x1..xm) along the requested routes and compare them.
    Pn {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long, value_enum, default_value_t = RouteArg::All)]
        route: RouteArg,
        #[arg(long, value_enum, default_value_t = Basis::Sigma)]
        basis: Basis,
    },
    /// det W_n by matrix and by resultant; with --m, the matrix W_{m,n} and its symmetries.
    Wendt {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: Option<u32>,
    },
    /// disc_T(P_{x,y,z}) against (xyz)^(n-2) p_n.
    DiscCheck {
        #[arg(long)]
        n: u32,
    },
    /// Factor the coefficients of p_n(z; x, y).
    FactorCoeffs {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Basis::Sigma)]
        basis: Basis,
    },
    /// n^4 divisibility, Wolstenholme congruences and the weighted binomial sum for a prime n.
    Divis {
        #[arg(long)]
        n: u32,
    },
    /// Irreducibility certificate for an integer polynomial in one variable.
    #[command(group = clap::ArgGroup::new("input").required(true).args(["poly", "coeffs", "pn"]))]
    Irred {
        /// Polynomial JSON with a single variable.
        #[arg(long)]
        poly: Option<String>,
        /// Ascending integer coefficients, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Option<Vec<String>>,
        /// Use p_N(z^K; a_1, ..., a_m) with the arguments from --args and K from --zpow.
        #[arg(long, requires = "args")]
        pn: Option<u32>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        args: Option<Vec<i64>>,
        #[arg(long, default_value_t = 1)]
        zpow: u32,
    },
    /// Associativity and axioms of G_n at seeded random points.
    Assoc {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 10.0)]
        radius: f64,
    },
    /// Associativity of a universal family with random parameters.
    FamilyCheck {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
    },
    /// q | det W_{2k} against an exhaustive witness search, for q = 2kp + 1.
    WendtCriterion {
        #[arg(long, requires = "k")]
        p: Option<u64>,
        #[arg(long, requires = "p")]
        k: Option<u64>,
        /// Without --p/--k, run every case with q below this bound.
        #[arg(long, default_value_t = 200)]
        q_limit: u64,
    },
    /// Compose monic polynomials four ways: char poly of the block matrix, block
    /// reduction, det(f(t)I - C_g) and substitution.
    ComposeCheck {
        /// Lower coefficients of monic f, ascending.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, requires = "g")]
        f: Option<Vec<i64>>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, requires = "f")]
        g: Option<Vec<i64>>,
        /// Random pairs when f and g are not given.
        #[arg(long, default_value_t = 50)]
        samples: u64,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
}

/// Result of a subcommand: a JSON document, its text rendering, and whether every check held.
struct Outcome {
    json: Value,
    text: String,
    verified: bool,
}

fn usage_like(e: &Error) -> bool {
    matches!(
        e,
        Error::Usage(_)
            | Error::NotPrime(_)
            | Error::SizeLimit(_)
            | Error::NonPrimitive(_)
            | Error::ZeroInput
            | Error::UnknownVariable(_)
            | Error::DuplicateVariable(_)
    )
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable report")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = std::env::var("NVAL_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build_global();
    }
    match run(&cli) {
        Ok(outcome) => {
            match cli.out {
                OutFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&outcome.json).expect("json output"))
                }
                OutFormat::Text => print!("{}", outcome.text),
            }
            ExitCode::from(if outcome.verified { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if usage_like(&e) { 2 } else { 1 })
        }
    }
}

fn run(cli: &Cli) -> nval_core::Result<Outcome> {
    match &cli.command {
        Command::Pn { n, m, route, basis } => cmd_pn(*n, *m, *route, *basis),
        Command::Wendt { n, m } => cmd_wendt(cli, *n, *m),
        Command::DiscCheck { n } => cmd_disc(*n),
        Command::FactorCoeffs { n, basis } => cmd_factor_coeffs(cli, *n, *basis),
        Command::Divis { n } => cmd_divis(*n),
        Command::Irred { poly, coeffs, pn, args, zpow } => {
            cmd_irred(cli, poly.as_deref(), coeffs.as_deref(), *pn, args.as_deref(), *zpow)
        }
        Command::Assoc { n, samples, radius } => cmd_assoc(cli, *n, *samples, *radius),
        Command::FamilyCheck { family, samples } => cmd_family(cli, family, *samples),
        Command::WendtCriterion { p, k, q_limit } => cmd_wendt_criterion(*p, *k, *q_limit),
        Command::ComposeCheck { f, g, samples, max_degree } => {
            cmd_compose(cli, f.as_deref(), g.as_deref(), *samples, *max_degree)
        }
    }
}

fn require(cond: bool, msg: &str) -> nval_core::Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Usage(msg.into()))
    }
}

fn cmd_pn(n: u32, m: u32, route: RouteArg, basis: Basis) -> nval_core::Result<Outcome> {
    require(n >= 1 && m >= 1, "n and m must be positive")?;
    // With --route all, routes whose matrices exceed the size limit are skipped and listed.
    let requested: Vec<Route> = route.routes().into_iter().filter(|r| r.supports(m)).collect();
    let (runnable, skipped): (Vec<Route>, Vec<Route>) = if route == RouteArg::All {
        requested.into_iter().partition(|&r| pn::check_size(r, n, m).is_ok())
    } else {
        (requested, Vec::new())
    };
    if runnable.is_empty() && !skipped.is_empty() {
        pn::check_size(skipped[0], n, m)?;
    }
    let (p, report) = pn::cross_check(n, m, &runnable)?;
    let skipped: Vec<&str> = skipped.iter().map(|r| r.name()).collect();
    let sigma = match basis {
        Basis::Sigma => Some(pn::sigma_basis(&p)?.to_string()),
        Basis::Raw => None,
    };
    let verified = report.all_routes_agree && report.symmetric_homogeneous_monic;
    let routes: Vec<&str> = report.routes.iter().map(|r| r.route.name()).collect();
    let mut text = format!(
        "p_{n}(z; {}) = {}\n",
        pn::arg_names(m).join(", "),
        sigma.clone().unwrap_or_else(|| p.to_string())
    );
    text += &format!("routes: {}\n", routes.join(", "));
    if !skipped.is_empty() {
        text += &format!("skipped (size limit): {}\n", skipped.join(", "));
    }
    text += &format!("all_routes_agree: {}\n", report.all_routes_agree);
    text += &format!("symmetric_homogeneous_monic: {}\n", report.symmetric_homogeneous_monic);
    let json = json!({
        "command": "pn",
        "n": n,
        "m": m,
        "basis": if basis == Basis::Sigma { "sigma" } else { "raw" },
        "routes": routes,
        "skipped_routes": skipped,
        "all_routes_agree": report.all_routes_agree,
        "report": to_value(&report),
        "sigma": sigma,
        "polynomial": p.to_json(),
    });
    Ok(Outcome { json, text, verified })
}

fn matrix_strings(m: &[Vec<BigInt>]) -> Vec<Vec<String>> {
    m.iter().map(|r| r.iter().map(BigInt::to_string).collect()).collect()
}

fn cmd_wendt(cli: &Cli, n: u32, m: Option<u32>) -> nval_core::Result<Outcome> {
    require(n >= 1, "n must be at least 1")?;
    let by_matrix = arith::wendt_det_matrix(n)?;
    let by_resultant = arith::wendt_det_resultant(n)?;
    let agree = by_matrix == by_resultant;
    let opts = FactorOptions { budget: cli.budget, seed: cli.seed };
    let factored = arith::factorize(&by_matrix, &opts).ok();
    let mut verified = agree;
    let mut text = format!("det W_{n} = {by_matrix}\n");
    if let Some(f) = &factored {
        text += &format!("factored: {f}\n");
    }
    text += &format!("matrix and resultant agree: {agree}\n");
    let helou = if n >= 2 && n % 2 == 0 {
        let h = arith::helou_check(n + 1)?;
        text += &format!(
            "disc((1+t)^{0} - t^{0} - 1) = {1} * {0}^{2} * det W_{n} (ok: {3})\n",
            n + 1,
            h.sign,
            n - 1,
            h.ok
        );
        verified &= h.ok;
        Some(to_value(&h))
    } else {
        None
    };
    let mut json = json!({
        "command": "wendt",
        "n": n,
        "routes": ["circulant-bareiss", "resultant"],
        "det_matrix": by_matrix.to_string(),
        "det_resultant": by_resultant.to_string(),
        "agree": agree,
        "factored": factored.as_ref().map(|f| f.to_string()),
        "helou": helou,
        "seed": cli.seed,
    });
    if let Some(m) = m {
        require(m >= 2, "m must be at least 2")?;
        pn::check_size(Route::BlockPower, n, m)?;
        let w = pn::wendt_mn_matrix(n, m)?;
        let det = arith::det_int(&w)?;
        let ortho = pn::orthosymmetry_check(n, m)?;
        let signs = pn::sign_replacement_check(n, m)?;
        let b_persymmetric = pn::block_power_matrix(n, m, pn::BLOCK_POWER_CONVENTION)?.is_persymmetric();
        let k = w.len();
        let w_symmetric = (0..k).all(|i| (0..k).all(|j| w[i][j] == w[j][i]));
        let w_persymmetric = (0..k).all(|i| (0..k).all(|j| w[i][j] == w[k - 1 - j][k - 1 - i]));
        verified &= ortho && signs;
        text += &format!("det W_{{{m},{n}}} = {det}\n");
        text += &format!(
            "B persymmetric: {b_persymmetric}\nW symmetric: {w_symmetric}\nW persymmetric: {w_persymmetric}\n"
        );
        text += &format!("orthosymmetric: {ortho}\nsign replacement preserves det: {signs}\n");
        json["wendt_mn"] = json!({
            "m": m,
            "matrix": matrix_strings(&w),
            "det": det.to_string(),
            "b_persymmetric": b_persymmetric,
            "w_symmetric": w_symmetric,
            "w_persymmetric": w_persymmetric,
            "orthosymmetric": ortho,
            "sign_replacement_preserves_det": signs,
            "block_power_convention": pn::BLOCK_POWER_CONVENTION.name(),
        });
    }
    Ok(Outcome { json, text, verified })
}

fn cmd_disc(n: u32) -> nval_core::Result<Outcome> {
    require(n >= 2, "n must be at least 2")?;
    let r = elimination::discriminant_identity_check(n)?;
    let text = format!(
        "n = {n}: disc_T(P) / ((xyz)^{} p_{n}) = {} (expected ±{}), ok: {}\n",
        n - 2,
        r.constant.as_deref().unwrap_or("not a constant"),
        r.expected_abs,
        r.ok
    );
    let mut json = to_value(&r);
    json["command"] = json!("disc-check");
    Ok(Outcome { json, text, verified: r.ok })
}

/// Build `p_n(z; x1, x2)` with the Wendt route, checked against the resultant route.
fn pn_two_routes(n: u32) -> nval_core::Result<(Polynomial, Vec<&'static str>)> {
    let routes = [Route::Wendt, Route::Resultant];
    let (p, report) = pn::cross_check(n, 2, &routes)?;
    if !report.all_routes_agree {
        return Err(Error::CrossCheckFailure(format!("p_{n}: wendt and resultant routes differ")));
    }
    Ok((p, routes.iter().map(|r| r.name()).collect()))
}

fn cmd_factor_coeffs(cli: &Cli, n: u32, basis: Basis) -> nval_core::Result<Outcome> {
    require(n >= 1, "n must be at least 1")?;
    let (p, routes) = pn_two_routes(n)?;
    let mut rows: Vec<(Vec<u32>, BigInt)> = match basis {
        Basis::Sigma => pn::sigma_basis(&p)?
            .coeffs()
            .iter()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect(),
        Basis::Raw => p
            .terms()
            .map(|(m, c)| (m.padded(3).into_iter().map(u32::from).collect(), c.clone()))
            .collect(),
    };
    rows.sort_by(|a, b| b.0.cmp(&a.0));
    let opts = FactorOptions { budget: cli.budget, seed: cli.seed };
    let values: Vec<BigInt> = rows.iter().map(|r| r.1.clone()).collect();
    let factored = arith::factorize_many(&values, &opts)?;
    let mut verified = true;
    let mut text = String::new();
    let mut json_rows = Vec::new();
    for ((exps, c), f) in rows.iter().zip(&factored) {
        let ok = arith::verify_factorization(c, f);
        verified &= ok;
        let key = exps.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        text += &format!("({key}) -> {f}\n");
        json_rows.push(json!({
            "exponents": exps,
            "coeff": c.to_string(),
            "factorization": f.to_string(),
            "certified": f.certified,
            "product_matches": ok,
        }));
    }
    let json = json!({
        "command": "factor-coeffs",
        "n": n,
        "basis": if basis == Basis::Sigma { "sigma" } else { "raw" },
        "variables": p.vars().names(),
        "routes": routes,
        "seed": cli.seed,
        "budget": cli.budget,
        "rows": json_rows,
    });
    Ok(Outcome { json, text, verified })
}

fn cmd_divis(n: u32) -> nval_core::Result<Outcome> {
    let r = arith::n4_divisibility_report(n)?;
    let w = arith::wolstenholme_check(n as u64)?;
    let (lhs, rhs) = arith::binom_weighted_sum(n as u64)?;
    let sum_ok = lhs == rhs;
    let verified = r.divisible_by_n4 && w.mod_n3 && sum_ok;
    let text = format!(
        "n = {n}\n(p_n - (x1+x2+z)^n)/(x1 x2 z): {} terms, divisible by n^4: {}, by n^5: {}\n\
         C(2n-1,n-1) = 1 mod n^3: {}, mod n^4: {}\nsum k C(n,k)^2 = n (C(2n-1,n-1) - 1): {}\n",
        r.terms, r.divisible_by_n4, r.divisible_by_n5, w.mod_n3, w.mod_n4, sum_ok
    );
    let json = json!({
        "command": "divis",
        "n": n,
        "route": "wendt",
        "divisibility": to_value(&r),
        "wolstenholme": to_value(&w),
        "weighted_binomial_sum": { "lhs": lhs.to_string(), "rhs": rhs.to_string(), "equal": sum_ok },
    });
    Ok(Outcome { json, text, verified })
}

/// Ascending integer coefficients of `p_n(z^k; a_1, ..., a_m)`.
fn pn_specialized(n: u32, args: &[i64], k: u32) -> nval_core::Result<Vec<BigInt>> {
    let m = u32::try_from(args.len()).map_err(|_| Error::Usage("too many arguments".into()))?;
    require(m >= 1, "--args needs at least one value")?;
    let route = if m == 2 { Route::Wendt } else { Route::Kronecker };
    pn::check_size(route, n, m)?;
    let p = pn::build(n, m, route)?;
    let zi = p.vars().require("z")?;
    let arg_idx: Vec<usize> = pn::arg_names(m)
        .iter()
        .map(|name| p.vars().require(name))
        .collect::<nval_core::Result<_>>()?;
    let deg = n.pow(m - 1) as usize * k as usize;
    let mut out = vec![BigInt::from(0); deg + 1];
    for (mono, c) in p.terms() {
        let mut v = c.clone();
        for (&i, &a) in arg_idx.iter().zip(args) {
            v *= BigInt::from(a).pow(mono.exp(i) as u32);
        }
        out[mono.exp(zi) as usize * k as usize] += v;
    }
    Ok(out)
}

fn cmd_irred(
    cli: &Cli,
    poly: Option<&str>,
    coeffs: Option<&[String]>,
    pn_n: Option<u32>,
    args: Option<&[i64]>,
    zpow: u32,
) -> nval_core::Result<Outcome> {
    let (source, c) = if let Some(s) = poly {
        let j: PolynomialJson =
            serde_json::from_str(s).map_err(|e| Error::Usage(format!("bad polynomial JSON: {e}")))?;
        require(j.vars.len() == 1, "polynomial must have exactly one variable")?;
        let p = Polynomial::from_json(&j)?;
        let var = j.vars[0].clone();
        let u = elimination::UniPoly::from_poly(&p, &var)?;
        return irred_outcome(cli, json!({ "poly": j }), arith::irreducibility_certificate(&u, cli.seed, cli.budget)?);
    } else if let Some(items) = coeffs {
        (json!({ "coeffs": items }), arith::parse_coeffs(items)?)
    } else {
        let n = pn_n.expect("clap enforces an input");
        require(zpow >= 1, "--zpow must be at least 1")?;
        let a = args.unwrap_or_default();
        let c = pn_specialized(n, a, zpow)?;
        (json!({ "pn": n, "args": a, "zpow": zpow, "coeffs": c.iter().map(BigInt::to_string).collect::<Vec<_>>() }), c)
    };
    irred_outcome(cli, source, arith::irreducibility_certificate_coeffs(&c, cli.seed, cli.budget)?)
}

fn irred_outcome(cli: &Cli, source: Value, cert: arith::IrreducibilityCertificate) -> nval_core::Result<Outcome> {
    let text = format!(
        "degree {}: {:?} ({}), primes {:?}, sumset intersection {:?}\n",
        cert.degree, cert.status, cert.method, cert.primes, cert.sumset_intersection
    );
    let json = json!({
        "command": "irred",
        "input": source,
        "seed": cli.seed,
        "budget": cli.budget,
        "certificate": to_value(&cert),
    });
    Ok(Outcome { json, text, verified: cert.status != IrreducibilityStatus::Inconclusive })
}

fn cmd_assoc(cli: &Cli, n: u32, samples: u64, radius: f64) -> nval_core::Result<Outcome> {
    require(n >= 1 && samples >= 1, "n and samples must be positive")?;
    require(radius > 0.0 && radius.is_finite(), "radius must be positive")?;
    let assoc = groupsim::assoc_campaign(n, samples, cli.seed, radius);
    let axioms = groupsim::axioms_campaign(n, samples, cli.seed, radius);
    let verified = assoc.all_passed() && axioms.all_passed();
    let text = format!(
        "n = {n}, {samples} samples, radius {radius}\nassociativity: {} passed, {} failed, max mismatch {:.3e}\n\
         axioms: {} passed, {} failed\n",
        assoc.passed, assoc.failed, assoc.max_mismatch, axioms.passed, axioms.failed
    );
    let json = json!({
        "command": "assoc",
        "n": n,
        "samples": samples,
        "seed": cli.seed,
        "radius": radius,
        "tolerance": groupsim::DEFAULT_TOL,
        "associativity": to_value(&assoc),
        "axioms": to_value(&axioms),
    });
    Ok(Outcome { json, text, verified })
}

fn cmd_family(cli: &Cli, family: &str, samples: u64) -> nval_core::Result<Outcome> {
    let which: Family = family.parse()?;
    require(samples >= 1, "samples must be positive")?;
    let s = groupsim::family_campaign(which, samples, cli.seed, None);
    let text = format!(
        "{which:?}: {} passed, {} failed, {} degenerate skipped, max mismatch {:.3e}\n",
        s.passed, s.failed, s.skipped_degenerate, s.max_mismatch
    );
    let json = json!({
        "command": "family-check",
        "family": to_value(&which),
        "samples": samples,
        "seed": cli.seed,
        "tolerance": groupsim::DEFAULT_TOL,
        "summary": to_value(&s),
    });
    Ok(Outcome { json, text, verified: s.all_passed() })
}

fn cmd_wendt_criterion(p: Option<u64>, k: Option<u64>, q_limit: u64) -> nval_core::Result<Outcome> {
    use rayon::prelude::*;
    let cases = match (p, k) {
        (Some(p), Some(k)) => vec![(p, k)],
        _ => arith::criterion_cases(q_limit),
    };
    let results: Vec<arith::WendtCriterion> = cases
        .par_iter()
        .map(|&(p, k)| arith::wendt_criterion(p, k))
        .collect::<nval_core::Result<_>>()?;
    let verified = results.iter().all(|r| r.agree);
    let mut text = String::new();
    for r in &results {
        text += &format!(
            "p = {}, k = {}, q = {}: q | det W_{}: {}, witness: {:?}, agree: {}\n",
            r.p, r.k, r.q, 2 * r.k, r.divides, r.witness, r.agree
        );
    }
    let json = json!({
        "command": "wendt-criterion",
        "q_limit": if p.is_some() { Value::Null } else { json!(q_limit) },
        "cases": results.len(),
        "all_agree": verified,
        "results": to_value(&results),
    });
    Ok(Outcome { json, text, verified })
}

fn random_lower_coeffs(rng: &mut impl Rng, max_degree: usize) -> Vec<i64> {
    let d = rng.gen_range(1..=max_degree);
    (0..d).map(|_| rng.gen_range(-5..=5)).collect()
}

fn cmd_compose(
    cli: &Cli,
    f: Option<&[i64]>,
    g: Option<&[i64]>,
    samples: u64,
    max_degree: usize,
) -> nval_core::Result<Outcome> {
    let pairs: Vec<(Vec<i64>, Vec<i64>)> = match (f, g) {
        (Some(f), Some(g)) => vec![(f.to_vec(), g.to_vec())],
        _ => {
            require(max_degree >= 1, "max-degree must be at least 1")?;
            (0..samples)
                .map(|i| {
                    let mut rng = groupsim::sample_rng(cli.seed, i);
                    let f = random_lower_coeffs(&mut rng, max_degree);
                    (f, random_lower_coeffs(&mut rng, max_degree))
                })
                .collect()
        }
    };
    let big = |v: &[i64]| v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
    let mut verified = true;
    let mut text = String::new();
    let mut reports = Vec::new();
    for (f, g) in &pairs {
        let r = polymatrix::composition_check(&big(f), &big(g))?;
        verified &= r.all_agree;
        text += &format!("f lower {f:?}, g lower {g:?}: all agree: {}\n", r.all_agree);
        reports.push(r);
    }
    let json = json!({
        "command": "compose-check",
        "seed": cli.seed,
        "pairs": pairs.len(),
        "routes": ["char-poly", "block-reduction", "det-f-minus-cg", "substitution"],
        "all_agree": verified,
        "reports": to_value(&reports),
    });
    Ok(Outcome { json, text, verified })
}
