use super::field::Field;
use super::linalg::determinant;
use super::multipoly::MultiPoly;
use crate::error::{Error, Result};

/// Sylvester resultant of `p` and `q` with respect to variable `var`.
///
/// Degrees are taken from the actual (nonzero) leading coefficients in `var`.
/// The result has exponent zero in `var` and keeps the common variable list.
pub fn resultant<K: Field>(p: &MultiPoly<K>, q: &MultiPoly<K>, var: usize) -> Result<MultiPoly<K>> {
    let pc = p.coeffs_in(var);
    let qc = q.coeffs_in(var);
    let m = pc.len() - 1;
    let n = qc.len() - 1;
    if p.is_zero() || q.is_zero() || m == 0 || n == 0 {
        return Err(Error::Invalid(
            "resultant needs positive degree in the elimination variable".into(),
        ));
    }
    let size = m + n;
    let zero = MultiPoly::zero(p.vars());
    let mut rows = vec![vec![zero.clone(); size]; size];
    // Rows hold coefficients from the highest power down, shifted per row.
    for r in 0..n {
        for (k, c) in pc.iter().rev().enumerate() {
            rows[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in qc.iter().rev().enumerate() {
            rows[n + r][r + k] = c.clone();
        }
    }
    let det = determinant(rows);
    Ok(if det.vars().is_empty() { MultiPoly::constant(p.vars(), det.constant_term()) } else { det })
}

/// Discriminant-style test polynomial: `Res(p, ∂p/∂var)`.
pub fn self_resultant<K: Field>(p: &MultiPoly<K>, var: usize) -> Result<MultiPoly<K>> {
    resultant(p, &p.partial(var), var)
}
