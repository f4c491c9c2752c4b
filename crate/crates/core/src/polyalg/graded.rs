use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::field::Field;
use super::linalg::rank;
use super::multipoly::{Monomial, MultiPoly};
use crate::error::{Error, Result};

/// Rational weights of the variables and of the unfolding parameters.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeightSystem {
    #[serde(serialize_with = "crate::serde_util::rationals")]
    pub var_weights: Vec<BigRational>,
    #[serde(serialize_with = "crate::serde_util::rationals")]
    pub param_weights: Vec<BigRational>,
}

impl WeightSystem {
    /// Least common denominator of the variable weights.
    pub fn denominator(&self) -> u64 {
        self.var_weights
            .iter()
            .map(|w| w.denom().to_u64().expect("small denominator"))
            .fold(1u64, |a, b| a.lcm(&b))
    }

    /// Σ (1 − 2wᵢ), the degree of the Hessian (top degree of the Jacobi algebra).
    pub fn socle_degree(&self) -> BigRational {
        let one = BigRational::from_integer(1.into());
        self.var_weights
            .iter()
            .map(|w| &one - w - w)
            .fold(BigRational::zero(), |a, b| a + b)
    }
}

/// All exponent vectors of weighted degree exactly `q`.
pub fn monomials_of_degree(weights: &[BigRational], q: &BigRational) -> Vec<Monomial> {
    fn rec(
        weights: &[BigRational],
        left: &BigRational,
        prefix: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        let i = prefix.len();
        if i == weights.len() {
            if left.is_zero() {
                out.push(Monomial(prefix.clone()));
            }
            return;
        }
        let mut e = 0u32;
        let mut rest = left.clone();
        while !rest.is_negative() {
            prefix.push(e);
            rec(weights, &rest, prefix, out);
            prefix.pop();
            rest -= &weights[i];
            e += 1;
        }
    }
    assert!(weights.iter().all(|w| w.is_positive()), "weights must be positive");
    let mut out = Vec::new();
    if !q.is_negative() {
        rec(weights, q, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// Rank of the span of `gens` inside ℂ[x]_q, with all generators required to be
/// quasihomogeneous of weighted degree `q` (zero generators are allowed).
pub fn graded_piece_rank<K: Field>(
    gens: &[MultiPoly<K>],
    weights: &[BigRational],
    q: &BigRational,
) -> Result<usize> {
    let basis = monomials_of_degree(weights, q);
    if basis.is_empty() {
        return Ok(0);
    }
    let mut rows = Vec::with_capacity(gens.len());
    for g in gens {
        if g.is_zero() {
            continue;
        }
        match g.weighted_degree(weights) {
            Some(d) if d == *q => {}
            _ => {
                return Err(Error::Invalid(format!(
                    "generator {g} is not quasihomogeneous of degree {q}"
                )))
            }
        }
        rows.push(basis.iter().map(|m| g.coeff(&m.0)).collect::<Vec<K>>());
    }
    Ok(rank(rows))
}
