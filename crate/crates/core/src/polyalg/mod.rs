//! Exact polynomial algebra: coefficient fields (ℚ, ℚ(ξ₈), K(λ)), sparse
//! multivariate polynomials, resultants and graded linear algebra.

pub mod cyclo;
pub mod field;
pub mod graded;
pub mod linalg;
pub mod multipoly;
pub mod parse;
pub mod ratfunc;
pub mod resultant;
pub mod unipoly;

pub use cyclo::Cyclo8;
pub use field::{rat, Domain, Field};
pub use graded::{graded_piece_rank, monomials_of_degree, WeightSystem};
pub use multipoly::{vars, Monomial, MultiPoly};
pub use parse::{parse_in, parse_poly, Symbol};
pub use ratfunc::RatFunc;
pub use resultant::resultant;
pub use unipoly::UniPoly;

/// ℚ(λ).
pub type QLambda = RatFunc<num_rational::BigRational>;
/// ℚ(ξ₈)(λ).
pub type CycloLambda = RatFunc<Cyclo8>;
