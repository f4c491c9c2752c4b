//! Closed-form degrees of the Lyashko–Looijenga maps, the Segre-class
//! cross-check for the elliptic classes, and the resulting counts of distinguished
//! bases and Stokes matrices.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyalg::rat;
use crate::singdata::SingularityClass;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegreeBreakdown {
    pub class: SingularityClass,
    #[serde(serialize_with = "crate::serde_util::bigint")]
    pub deg_ll: BigInt,
    /// (prime, exponent) in increasing order of the prime; serialized as a map.
    #[serde(serialize_with = "factor_map")]
    pub factorization: Vec<(BigInt, u32)>,
    #[serde(serialize_with = "crate::serde_util::bigint")]
    pub mu_factorial: BigInt,
    /// Π deg_w t_j over the parameters entering the formula.
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub weight_product: BigRational,
    /// ½ Σ 1/deg_w t_j (elliptic classes only).
    #[serde(serialize_with = "crate::serde_util::rational_opt", skip_serializing_if = "Option::is_none")]
    pub sigma_term: Option<BigRational>,
}

impl DegreeBreakdown {
    /// `2^9·3^4` style rendering of the factorization.
    pub fn factorization_string(&self) -> String {
        self.factorization
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect::<Vec<_>>()
            .join("·")
    }
}

fn factor_map<S: serde::Serializer>(f: &[(BigInt, u32)], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(f.iter().map(|(p, e)| (p.to_string(), e)))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Prime factorization by trial division (the degrees only have small prime factors,
/// apart from at most one larger cofactor).
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut out = Vec::new();
    let mut m = n.abs();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(10_000_000u64);
    while &p * &p <= m && p < limit {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if m > BigInt::one() {
        out.push((m, 1));
    }
    out
}

fn to_integer(q: BigRational, what: &str) -> Result<BigInt> {
    if !q.is_integer() {
        return Err(Error::Invalid(format!("{what} = {q} is not an integer; weight table corrupt")));
    }
    Ok(q.to_integer())
}

fn breakdown(class: SingularityClass, deg: BigRational, weight_product: BigRational, sigma: Option<BigRational>) -> Result<DegreeBreakdown> {
    let deg_ll = to_integer(deg, "deg LL")?;
    Ok(DegreeBreakdown {
        class,
        factorization: factorize(&deg_ll),
        deg_ll,
        mu_factorial: factorial(class.mu()),
        weight_product,
        sigma_term: sigma,
    })
}

/// μ! / Π_{j=1}^{μ} deg_w t_j for a simple class.
pub fn deg_ll_simple(class: SingularityClass) -> Result<DegreeBreakdown> {
    if class.is_elliptic() {
        return Err(Error::Unsupported(class.to_string(), "deg_ll_simple needs an ADE class".into()));
    }
    let w = class.weights().param_weights;
    let prod: BigRational = w.iter().product();
    let deg = BigRational::from_integer(factorial(class.mu())) / &prod;
    breakdown(class, deg, prod, None)
}

/// μ! · ½Σ_{j=2}^{μ−1} 1/deg_w t_j / Π_{j=2}^{μ−1} deg_w t_j for an elliptic class.
pub fn deg_ll_elliptic(class: SingularityClass) -> Result<DegreeBreakdown> {
    if !class.is_elliptic() {
        return Err(Error::Unsupported(class.to_string(), "deg_ll_elliptic needs an elliptic class".into()));
    }
    let w = class.weights().param_weights;
    let rest = &w[1..];
    let prod: BigRational = rest.iter().product();
    let sigma = half_inverse_sum(class);
    let deg = BigRational::from_integer(factorial(class.mu())) * &sigma / &prod;
    breakdown(class, deg, prod, Some(sigma))
}

/// Dispatches to the simple or elliptic formula.
pub fn deg_ll(class: SingularityClass) -> Result<DegreeBreakdown> {
    if class.is_elliptic() {
        deg_ll_elliptic(class)
    } else {
        deg_ll_simple(class)
    }
}

/// ½ Σ_{j≥2} 1/deg_w t_j.
pub fn half_inverse_sum(class: SingularityClass) -> BigRational {
    let w = class.weights().param_weights;
    w[1..].iter().map(|x| x.recip()).sum::<BigRational>() / rat(2, 1)
}

/// (Π b / Π a) · (−Σ_k degC_k / k).
pub fn segre_degree(a: &[u64], b: &[u64], deg_c: &BTreeMap<u64, BigRational>) -> BigRational {
    let pa: BigInt = a.iter().map(|&x| BigInt::from(x)).product();
    let pb: BigInt = b.iter().map(|&x| BigInt::from(x)).product();
    let s: BigRational = deg_c.iter().map(|(&k, c)| c / BigRational::from_integer(k.into())).sum();
    BigRational::new(pb, pa) * -s
}

/// The integer weights entering the Segre computation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SegreInputs {
    pub class: SingularityClass,
    /// d with d·deg_w t_j integral.
    pub d: u64,
    /// d·deg_w t_j for j = μ−1, …, 2.
    pub a: Vec<u64>,
    /// d·k for k = 2, …, μ.
    pub b: Vec<u64>,
}

pub fn segre_inputs(class: SingularityClass) -> Result<SegreInputs> {
    let d: u64 = match class {
        SingularityClass::Et6 => 3,
        SingularityClass::Et7 => 4,
        SingularityClass::Et8 => 6,
        _ => return Err(Error::Unsupported(class.to_string(), "Segre data exists for elliptic classes".into())),
    };
    let w = class.weights().param_weights;
    let dq = BigRational::from_integer(d.into());
    let a = w[1..]
        .iter()
        .rev()
        .map(|x| (x * &dq).to_integer().to_u64().expect("small weight"))
        .collect();
    let b = (2..=class.mu() as u64).map(|k| d * k).collect();
    Ok(SegreInputs { class, d, a, b })
}

/// One row of the λ-order tables: the orders at λ = 0 contributed by ρ (used three
/// times), ψ3 and ψ2 for the parameters of integer weight k.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LambdaOrderRow {
    pub k: u64,
    pub involved: Vec<String>,
    #[serde(serialize_with = "crate::serde_util::rationals")]
    pub rho: Vec<BigRational>,
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub psi3: BigRational,
    #[serde(serialize_with = "crate::serde_util::rationals")]
    pub psi2: Vec<BigRational>,
}

impl LambdaOrderRow {
    /// 3·Σρ + ψ3 + Σψ2.
    pub fn total(&self) -> BigRational {
        let three = rat(3, 1);
        let r: BigRational = self.rho.iter().sum();
        let p: BigRational = self.psi2.iter().sum();
        three * r + &self.psi3 + p
    }
}

fn q(v: &[(i64, i64)]) -> Vec<BigRational> {
    v.iter().map(|&(n, d)| rat(n, d)).collect()
}

/// The stored λ-order rows of an elliptic class.
pub fn lambda_order_rows(class: SingularityClass) -> Result<Vec<LambdaOrderRow>> {
    let raw: Vec<(u64, Vec<BigRational>, BigRational, Vec<BigRational>)> = match class {
        SingularityClass::Et6 => vec![
            (1, q(&[(0, 1), (1, 3), (1, 1)]), rat(0, 1), q(&[(1, 2), (-1, 1), (-2, 1)])),
            (2, q(&[(0, 1), (0, 1), (2, 3)]), rat(0, 1), q(&[(1, 2), (0, 1), (-1, 1)])),
        ],
        SingularityClass::Et7 => vec![
            (1, q(&[(0, 1), (1, 2)]), rat(1, 1), q(&[(-1, 4), (-5, 4)])),
            (2, q(&[(0, 1), (0, 1), (1, 1)]), rat(0, 1), q(&[(1, 2), (-1, 2), (-3, 2)])),
            (3, q(&[(0, 1), (1, 2)]), rat(0, 1), q(&[(1, 4), (-3, 4)])),
        ],
        SingularityClass::Et8 => vec![
            (1, q(&[(-1, 3)]), rat(2, 1), q(&[(-1, 2)])),
            (2, q(&[(0, 1), (1, 3)]), rat(1, 1), q(&[(0, 1), (-1, 1)])),
            (3, q(&[(0, 1), (1, 1)]), rat(0, 1), q(&[(-1, 2), (-3, 2)])),
            (4, q(&[(0, 1), (2, 3)]), rat(0, 1), q(&[(0, 1), (-1, 1)])),
            (5, q(&[(1, 3)]), rat(0, 1), q(&[(-1, 2)])),
        ],
        _ => return Err(Error::Unsupported(class.to_string(), "lambda orders exist for elliptic classes".into())),
    };
    let inputs = segre_inputs(class)?;
    let w = class.weights().param_weights;
    let dq = BigRational::from_integer(inputs.d.into());
    raw.into_iter()
        .map(|(k, rho, psi3, psi2)| {
            let kq = BigRational::from_integer(k.into());
            let involved: Vec<String> =
                (1..w.len()).filter(|&j| &w[j] * &dq == kq).map(|j| format!("t{}", j + 1)).collect();
            if involved.len() != rho.len() || involved.len() != psi2.len() {
                return Err(Error::Invalid(format!("{class} lambda-order row k={k} has the wrong width")));
            }
            Ok(LambdaOrderRow { k, involved, rho, psi3, psi2 })
        })
        .collect()
}

/// −deg C_{1,(k)} / deg p_alg per k, assembled from the λ-order rows and checked
/// against ½·|{j : a_j = k}|.
pub fn deg_c_from_lambda_orders(class: SingularityClass) -> Result<BTreeMap<u64, BigRational>> {
    let inputs = segre_inputs(class)?;
    let mut out = BTreeMap::new();
    for row in lambda_order_rows(class)? {
        let v = row.total();
        let mult = inputs.a.iter().filter(|&&x| x == row.k).count() as i64;
        let want = rat(mult, 2);
        if v != want {
            return Err(Error::Invalid(format!("{class} k={}: lambda orders give {v}, expected {want}", row.k)));
        }
        out.insert(row.k, v);
    }
    let covered: usize = out.keys().map(|k| inputs.a.iter().filter(|&&x| x == *k).count()).sum();
    if covered != inputs.a.len() {
        return Err(Error::Invalid(format!("{class}: lambda-order rows do not cover every weight")));
    }
    Ok(out)
}

/// deg LL for an elliptic class via the Segre formula, normalised with deg p_alg = 1.
pub fn segre_degree_for(class: SingularityClass) -> Result<BigRational> {
    let inputs = segre_inputs(class)?;
    let deg_c: BTreeMap<u64, BigRational> =
        deg_c_from_lambda_orders(class)?.into_iter().map(|(k, v)| (k, -v)).collect();
    Ok(segre_degree(&inputs.a, &inputs.b, &deg_c))
}

/// Number of triples (α, β, γ) ∈ ℤ/p × ℤ/q × ℤ/r with α/p + β/q + γ/r ∈ ℤ.
pub fn u1_size(p: u64, q: u64, r: u64) -> u64 {
    let l = p.lcm(&q).lcm(&r);
    let mut n = 0;
    for a in 0..p {
        for b in 0..q {
            for c in 0..r {
                if (a * (l / p) + b * (l / q) + c * (l / r)).is_multiple_of(l) {
                    n += 1;
                }
            }
        }
    }
    n
}

/// (p, q, r) and |U_2| of an elliptic class.
pub fn u_data(class: SingularityClass) -> Result<((u64, u64, u64), u64)> {
    match class {
        SingularityClass::Et6 => Ok(((3, 3, 3), 6)),
        SingularityClass::Et7 => Ok(((4, 4, 2), 2)),
        SingularityClass::Et8 => Ok(((6, 3, 2), 1)),
        _ => Err(Error::Unsupported(class.to_string(), "needs an elliptic class".into())),
    }
}

/// |S_3| · |U_1^0| · |U_2|.
pub fn quotient_degree(class: SingularityClass) -> Result<u64> {
    let ((p, q, r), u2) = u_data(class)?;
    Ok(6 * u1_size(p, q, r) * u2)
}

/// Order of the group G_Z of the simple classes.
pub fn gz_order(class: SingularityClass) -> Result<u64> {
    Ok(match class {
        SingularityClass::A(m) => 2 * (m as u64 + 1),
        SingularityClass::D(4) => 36,
        SingularityClass::D(m) => 4 * (m as u64 - 1),
        SingularityClass::E6 => 24,
        SingularityClass::E7 => 18,
        SingularityClass::E8 => 30,
        _ => return Err(Error::Unsupported(class.to_string(), "G_Z is tabulated for ADE classes".into())),
    })
}

/// Number of Stokes matrices up to signs.
pub fn stokes_class_count(class: SingularityClass) -> Result<BigInt> {
    let deg = deg_ll(class)?.deg_ll;
    let (num, den) = if class.is_elliptic() {
        (deg, BigInt::from(quotient_degree(class)?))
    } else {
        (deg * 2, BigInt::from(gz_order(class)?))
    };
    let (quo, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::Invalid(format!("{class}: count is not an integer")));
    }
    Ok(quo)
}

/// Number of distinguished bases including signs (simple classes): 2^μ · deg LL.
pub fn full_basis_count(class: SingularityClass) -> Result<BigInt> {
    if class.is_elliptic() {
        return Err(Error::Unsupported(class.to_string(), "the basis count is finite only for simple classes".into()));
    }
    Ok(deg_ll_simple(class)?.deg_ll << class.mu())
}

/// Number of Stokes matrices including signs: 2^{μ−1} · stokes_class_count.
pub fn stokes_total(class: SingularityClass) -> Result<BigInt> {
    Ok(stokes_class_count(class)? << (class.mu() - 1))
}

/// One row of the count tables.
#[derive(Clone, Debug, Serialize)]
pub struct CountRow {
    pub class: SingularityClass,
    #[serde(serialize_with = "crate::serde_util::bigint")]
    pub deg_ll: BigInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gz_order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_degree: Option<u64>,
    #[serde(serialize_with = "crate::serde_util::bigint")]
    pub stokes_class_count: BigInt,
    #[serde(serialize_with = "crate::serde_util::bigint")]
    pub stokes_total: BigInt,
    #[serde(serialize_with = "crate::serde_util::bigint_opt", skip_serializing_if = "Option::is_none")]
    pub full_basis_count: Option<BigInt>,
}

pub fn counts(class: SingularityClass) -> Result<CountRow> {
    let ell = class.is_elliptic();
    Ok(CountRow {
        class,
        deg_ll: deg_ll(class)?.deg_ll,
        gz_order: if ell { None } else { Some(gz_order(class)?) },
        quotient_degree: if ell { Some(quotient_degree(class)?) } else { None },
        stokes_class_count: stokes_class_count(class)?,
        stokes_total: stokes_total(class)?,
        full_basis_count: if ell { None } else { Some(full_basis_count(class)?) },
    })
}
