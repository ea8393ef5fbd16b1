//! Integer number theory: primality, factorization, Wendt determinants, divisibility
//! statements and irreducibility certificates.

pub mod divis;
pub mod factor;
pub mod gfp;
pub mod irreducible;
pub mod primes;
pub mod wendt;

pub use divis::{
    binom_weighted_sum, binom_weighted_sum_identity, n4_divisibility_check, n4_divisibility_report,
    wolstenholme_check, DivisReport, Wolstenholme,
};
pub use factor::{
    factorize, factorize_many, verify_factorization, FactorOptions, FactoredInteger, DEFAULT_BUDGET,
    DEFAULT_SEED,
};
pub use irreducible::{
    irreducibility_certificate, irreducibility_certificate_coeffs, parse_coeffs, IrreducibilityCertificate,
    IrreducibilityStatus,
};
pub use primes::{is_probable_prime, is_probable_prime_int};
pub use wendt::{
    criterion_cases, det_int, fermat_witness, helou_check, wendt_criterion, wendt_det, wendt_det_matrix,
    wendt_det_resultant, HelouReport, WendtCriterion,
};

/// Serialize big integers as decimal strings.
pub(crate) fn ser_display<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}
