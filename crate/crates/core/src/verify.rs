//! Exact checks of the polynomial identities behind the tabulated data:
//! Jacobi dimensions, symmetry identities `F_t((Ψ∘φ)(x)) = F_{ψ(t)}(x)` and the
//! κ-extensions of the elliptic unfoldings.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polyalg::{
    graded_piece_rank, monomials_of_degree, Cyclo8, Domain, Field, Monomial, MultiPoly, QLambda, RatFunc,
    UniPoly,
};
use crate::singdata::{
    kappa_data, symmetry_data, KappaDatum, PsiComponent, SingularityClass, SymmetryDatum, SymmetryField,
};

type P = MultiPoly<SymmetryField>;

/// Result of one identity check. `witness` holds the nonzero difference on failure.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    #[serde(serialize_with = "display_opt")]
    pub witness: Option<P>,
    /// Informational remarks, e.g. unprinted remainders of partially known components.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn display_opt<S: Serializer>(w: &Option<P>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match w {
        Some(p) => s.collect_str(p),
        None => s.serialize_none(),
    }
}

impl CheckOutcome {
    fn pass(name: &str, notes: Vec<String>) -> Self {
        CheckOutcome { name: name.into(), passed: true, witness: None, notes }
    }

    fn fail(name: &str, witness: P, note: String) -> Self {
        CheckOutcome { name: name.into(), passed: false, witness: Some(witness), notes: vec![note] }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, if self.passed { "pass" } else { "FAIL" })?;
        for n in &self.notes {
            write!(f, "\n  {n}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {w}")?;
        }
        Ok(())
    }
}

/// How λ is treated in [`jacobi_dimension`].
#[derive(Clone, Debug, PartialEq)]
pub enum LambdaMode {
    Symbolic,
    Value(BigRational),
}

impl FromStr for LambdaMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("symbolic") {
            return Ok(LambdaMode::Symbolic);
        }
        let q: BigRational = s.trim().parse().map_err(|_| Error::Parse(format!("lambda value {s:?}")))?;
        Ok(LambdaMode::Value(q))
    }
}

/// dim ℂ[x]/J(f_λ), checked degree by degree: in every weighted degree q up to the
/// top degree of the cobasis, the Jacobi ideal and the tabulated monomials must span
/// ℂ[x]_q with the monomials independent modulo the ideal.
pub fn jacobi_dimension(class: SingularityClass, mode: &LambdaMode) -> Result<usize> {
    match mode {
        LambdaMode::Symbolic => jacobi_dimension_in(class, &QLambda::var()),
        LambdaMode::Value(v) => {
            if class.is_elliptic() && (Zero::is_zero(v) || One::is_one(v)) {
                return Err(Error::Invalid(format!("lambda = {v} is a degenerate fibre")));
            }
            jacobi_dimension_in(class, v)
        }
    }
}

fn jacobi_dimension_in<K: Field>(class: SingularityClass, la: &K) -> Result<usize> {
    let w = class.var_weights();
    let f = class.normal_form_in(la);
    let n = class.nvars();
    let xv = class.x_vars();
    let one = <BigRational as One>::one();
    let partials: Vec<_> = (0..n).map(|i| f.partial(i)).collect();
    // Cobasis: the unfolding monomials, plus the marginal direction ∂f/∂λ for the
    // elliptic classes (f is affine in λ).
    let mut cobasis: Vec<(BigRational, MultiPoly<K>)> = class
        .unfolding_monomials()
        .into_iter()
        .map(|m| (m.weighted_degree(&w), MultiPoly::term(&xv, m, K::one())))
        .collect();
    if class.is_elliptic() {
        let marginal = class.normal_form_in(&K::one()).sub(&class.normal_form_in(&K::zero()));
        cobasis.push((one.clone(), marginal));
    }
    let top = cobasis.iter().map(|(d, _)| d.clone()).max().expect("nonempty cobasis");

    // Weighted degrees are multiples of 1/d; walk them up to one step past the top
    // cobasis degree, where the ideal alone must fill ℂ[x]_q.
    let step = BigRational::new(1.into(), denominator(&w).into());
    let last = &top + &step;
    let mut degrees: Vec<BigRational> = Vec::new();
    let mut q = <BigRational as Zero>::zero();
    while q <= last {
        if !monomials_of_degree(&w, &q).is_empty() {
            degrees.push(q.clone());
        }
        q += &step;
    }

    let mut dim = 0;
    for q in &degrees {
        let piece = monomials_of_degree(&w, q).len();
        let mut gens = Vec::new();
        for (i, p) in partials.iter().enumerate() {
            let shift = q - (&one - &w[i]);
            for m in monomials_of_degree(&w, &shift) {
                gens.push(MultiPoly::term(&xv, m, K::one()).mul(p));
            }
        }
        let rank_j = graded_piece_rank(&gens, &w, q)?;
        let cob: Vec<_> = cobasis.iter().filter(|(d, _)| d == q).map(|(_, p)| p.clone()).collect();
        let mut all = gens;
        all.extend(cob.iter().cloned());
        let rank_all = graded_piece_rank(&all, &w, q)?;
        if rank_all != piece || rank_j + cob.len() != piece {
            return Err(Error::RankDeficient(q.to_string()));
        }
        dim += piece - rank_j;
    }
    Ok(dim)
}

fn denominator(w: &[BigRational]) -> u64 {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    w.iter().map(|x| x.denom().to_u64().expect("small denominator")).fold(1, |a, b| a.lcm(&b))
}

/// Groups the terms of `p` by their exponents in the first `n` variables.
fn split_x(p: &P, n: usize) -> BTreeMap<Vec<u32>, P> {
    let vars = p.vars().clone();
    let mut out: BTreeMap<Vec<u32>, P> = BTreeMap::new();
    for (m, c) in p.terms() {
        let mut rest = m.0.clone();
        let xpart: Vec<u32> = rest[..n].to_vec();
        rest[..n].iter_mut().for_each(|e| *e = 0);
        out.entry(xpart).or_insert_with(|| P::zero(&vars)).add_assign(&P::term(&vars, Monomial(rest), c.clone()));
    }
    out
}

/// The parameter map ψ read off from `F_t((Ψ∘φ)(x))`, together with the residual
/// `F_t((Ψ∘φ)(x)) − F_{ψ(t), λ'}(x)`, which must vanish.
pub fn computed_psi(datum: &SymmetryDatum) -> (Vec<P>, P) {
    let c = datum.class;
    let uv = datum.vars();
    let n = c.nvars();
    let la = datum.lambda();
    let f = c.unfolding_in(&la);
    let mut images = datum.composite();
    images.extend((n..uv.len()).map(|k| P::var(&uv, k)));
    let lhs = f.subst(&images);
    let mut by_x = split_x(&lhs, n);
    let monos = c.unfolding_monomials();
    let psi: Vec<P> = monos.iter().map(|m| by_x.remove(&m.0).unwrap_or_else(|| P::zero(&uv))).collect();
    let la2 = datum.lambda_image.clone().unwrap_or(la);
    let mut rhs = c.normal_form_in(&la2).with_vars(&uv).expect("x variables are unfolding variables");
    for (m, t) in monos.iter().zip(&psi) {
        let mut e = m.0.clone();
        e.resize(uv.len(), 0);
        rhs.add_assign(&P::term(&uv, Monomial(e), SymmetryField::one()).mul(t));
    }
    (psi, lhs.sub(&rhs))
}

/// Checks one symmetry datum: the residual vanishes and the computed ψ agrees with
/// every stored component (exactly, or up to a remainder free of excluded variables).
pub fn check_symmetry(datum: &SymmetryDatum) -> CheckOutcome {
    let name = format!("{} {} identity", datum.class, datum.label);
    let (psi, residual) = computed_psi(datum);
    if !residual.is_zero() {
        return CheckOutcome::fail(&name, residual, "non-basis monomials survive in F((Psi o phi)(x))".into());
    }
    let mut notes = Vec::new();
    for (j, (got, want)) in psi.iter().zip(&datum.psi).enumerate() {
        let t = format!("t{}", j + 1);
        match want {
            PsiComponent::Exact(p) => {
                let d = got.sub(p);
                if !d.is_zero() {
                    return CheckOutcome::fail(&name, d, format!("component {t} differs from the stored value"));
                }
            }
            PsiComponent::Leading { lead, excluded } => {
                let rem = got.sub(lead);
                let bad = rem
                    .support_vars()
                    .into_iter()
                    .map(|i| rem.vars()[i].clone())
                    .find(|v| excluded.contains(v));
                if let Some(v) = bad {
                    return CheckOutcome::fail(&name, rem, format!("remainder of component {t} involves {v}"));
                }
                if !rem.is_zero() {
                    notes.push(format!("{t}: remainder with {} terms recorded", rem.len()));
                }
            }
        }
    }
    CheckOutcome::pass(&name, notes)
}

/// `f_λ(φ(x)) = f_{λ'}(x)`: φ alone maps the fibre over λ to the fibre over λ'.
pub fn check_phi_identity(datum: &SymmetryDatum) -> CheckOutcome {
    let name = format!("{} {} normal form", datum.class, datum.label);
    let c = datum.class;
    let uv = datum.vars();
    let la = datum.lambda();
    let f = c.normal_form_in(&la);
    let lhs = f.subst(&datum.phi);
    let la2 = datum.lambda_image.clone().unwrap_or(la);
    let rhs = c.normal_form_in(&la2).with_vars(&uv).expect("x variables are unfolding variables");
    let d = lhs.sub(&rhs);
    if d.is_zero() {
        CheckOutcome::pass(&name, Vec::new())
    } else {
        CheckOutcome::fail(&name, d, "phi does not map normal forms onto each other".into())
    }
}

fn find_datum(class: SingularityClass, label: &str) -> Result<SymmetryDatum> {
    symmetry_data(class)
        .into_iter()
        .find(|d| d.label == label)
        .ok_or_else(|| Error::Unsupported(class.to_string(), format!("no symmetry {label}")))
}

/// ψ2 / ψ3 identity of an elliptic class (`which` is `psi2` or `psi3`).
pub fn check_unfolding_identity(class: SingularityClass, which: &str) -> Result<CheckOutcome> {
    if !class.is_elliptic() {
        return Err(Error::Unsupported(class.to_string(), "unfolding identities are tabulated for elliptic classes".into()));
    }
    Ok(check_symmetry(&find_datum(class, which)?))
}

/// φ2 (all D_μ) or φ3 (D4) identity.
pub fn check_simple_symmetry(class: SingularityClass, which: &str) -> Result<CheckOutcome> {
    if !matches!(class, SingularityClass::D(_)) {
        return Err(Error::Unsupported(class.to_string(), "symmetries are tabulated for the D series".into()));
    }
    Ok(check_symmetry(&find_datum(class, which)?))
}

fn embed(q: &QLambda) -> SymmetryField {
    let lift = |p: &UniPoly<BigRational>| UniPoly::new(p.coeffs().iter().map(Cyclo8::from_rational).collect());
    RatFunc::new(lift(q.numer()), lift(q.denom())).expect("nonzero denominator")
}

fn embed_poly(p: &MultiPoly<QLambda>) -> P {
    p.map_coeffs(embed)
}

/// κ-extension identity of an elliptic class: the rescaled unfolding equals the
/// displayed family, and that family has no negative powers of κ.
pub fn check_kappa_extension(class: SingularityClass) -> Result<CheckOutcome> {
    let d = kappa_data(class)
        .ok_or_else(|| Error::Unsupported(class.to_string(), "kappa extension needs an elliptic class".into()))?;
    Ok(check_kappa_datum(&d))
}

/// As [`check_kappa_extension`], for an explicit datum.
pub fn check_kappa_datum(d: &KappaDatum) -> CheckOutcome {
    let name = format!("{} kappa extension", d.class);
    let diff = d.transformed_unfolding().sub(&d.display_poly());
    if !diff.is_zero() {
        return CheckOutcome::fail(&name, embed_poly(&diff), "rescaled unfolding differs from the display".into());
    }
    // The display with y kept as variables must be polynomial in κ.
    let disp = d.display_in_y();
    let neg: Vec<_> = disp.terms().filter(|(_, c)| !c.is_polynomial()).map(|(m, c)| (m.clone(), c.clone())).collect();
    if !neg.is_empty() {
        let w = MultiPoly::from_terms(disp.vars(), neg);
        return CheckOutcome::fail(&name, embed_poly(&w), "display has negative powers of kappa".into());
    }
    let rho_poles = d.rho.iter().filter(|r| r.terms().any(|(_, c)| !c.is_polynomial())).count();
    CheckOutcome::pass(&name, vec![format!("{rho_poles} components of rho have poles at kappa = 0")])
}
