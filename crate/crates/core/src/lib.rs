//! Exact-arithmetic kernel for the multiplication polynomials `p_n(z; x_1, ..., x_m)`
//! of the n-valued groups on the complex numbers.
//!
//! The crate builds `p_n` along several independent algebraic routes (characteristic
//! polynomial of a Kronecker sum of companion matrices, Wendt `(x, y, z)`-determinant,
//! block matrix power, resultant against `t^n - 1`), checks the routes against each
//! other, and provides the number-theoretic and numeric tooling used to verify the
//! structural identities these polynomials satisfy.
//!
//! Modules:
//! - [`polyring`]: sparse multivariate polynomials over arbitrary-precision integers,
//!   plus reduction to the elementary symmetric basis.
//! - [`polymatrix`]: dense matrices over [`polyring::Polynomial`], fraction-free
//!   determinants, companion matrices and Kronecker sums.
//! - [`pn`]: the `p_n` builders and their cross-checks.
//! - [`elimination`]: Sylvester resultants and discriminants.
//! - [`arith`]: primality, factorization, Wendt determinants, irreducibility certificates.
//! - [`groupsim`]: floating-point multiset model of the group, used as a numeric oracle.

pub mod arith;
pub mod elimination;
pub mod error;
pub mod groupsim;
pub mod pn;
pub mod polymatrix;
pub mod polyring;

pub use error::{Error, Result};
