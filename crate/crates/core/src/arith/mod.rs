//! Exact scalars, univariate polynomials over the rationals, and a word-size
//! prime field used for advisory rank checks.

mod factor;
mod modp;
mod poly;
mod rational;
pub(crate) mod zpoly;

pub use factor::{
    content_primitive, exponent_of, gcd_free_basis, squarefree_decomposition, squarefree_part, SquarefreeDecomposition,
};
pub use modp::{is_prime, rank_mod_p, PrimeField, PrimeFieldElem, DEFAULT_PRIME};
pub use poly::{poly_gcd, UniPoly};
pub use rational::{denominator_lcm, Rational};

pub(crate) use factor::int_content;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("exponent base must be a nonconstant polynomial")]
    ConstantBase,
    #[error("{0} is not prime")]
    NotPrime(u64),
}
