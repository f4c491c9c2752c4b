//! Coordinate changes φ, unfolding shifts Ψ and parameter maps ψ with
//! `F_{t,λ}((Ψ∘φ)(x)) = F_{ψ(t,λ)}(x)`.
//!
//! Everything lives over ℚ(ξ₈)(ν) with λ = ν^m; `m` is the smallest power that
//! makes the fractional λ-exponents of a datum integral.

use std::sync::Arc;

use crate::polyalg::{parse_in, Cyclo8, CycloLambda, Domain, Field, MultiPoly, Symbol};

use super::SingularityClass;

/// Coefficient field of all symmetry data.
pub type SymmetryField = CycloLambda;

type P = MultiPoly<SymmetryField>;

#[derive(Clone, Debug)]
pub enum PsiComponent {
    /// The component is known completely.
    Exact(P),
    /// Only a leading part is known; the remainder must not involve `excluded`.
    Leading { lead: P, excluded: Vec<String> },
}

#[derive(Clone, Debug)]
pub struct SymmetryDatum {
    pub class: SingularityClass,
    /// `phi2`, `phi3` (simple classes) or `psi2`, `psi3` (elliptic classes).
    pub label: String,
    /// Free-form description, e.g. marking a literal (uncorrected) reading.
    pub note: String,
    /// λ = ν^m.
    pub nu_power: u32,
    /// Images of x_i under φ, over the unfolding variables.
    pub phi: Vec<P>,
    /// Images of y_i under Ψ, written in the same variable names as x.
    pub shift: Vec<P>,
    pub psi: Vec<PsiComponent>,
    /// Image of λ under ψ, absent for simple classes.
    pub lambda_image: Option<SymmetryField>,
}

impl SymmetryDatum {
    pub fn vars(&self) -> Arc<[String]> {
        self.class.unfolding_vars()
    }

    /// λ as an element of the coefficient field.
    pub fn lambda(&self) -> SymmetryField {
        SymmetryField::var().pow_u(self.nu_power)
    }

    /// Images of x under Ψ∘φ.
    pub fn composite(&self) -> Vec<P> {
        let uv = self.vars();
        let n = self.class.nvars();
        let images: Vec<P> =
            (0..uv.len()).map(|k| if k < n { self.phi[k].clone() } else { P::var(&uv, k) }).collect();
        self.shift.iter().map(|s| s.subst(&images)).collect()
    }

    /// The same datum with one Ψ component replaced, for negative controls.
    pub fn with_shift(&self, k: usize, text: &str, note: &str) -> SymmetryDatum {
        let mut d = self.clone();
        d.shift[k] = poly(self.class, self.nu_power, text);
        d.note = note.into();
        d
    }
}

fn symbols(m: u32) -> Vec<(&'static str, Symbol<SymmetryField>)> {
    let nu = SymmetryField::var();
    let la = nu.pow_u(m);
    let one = SymmetryField::one();
    let c = |x: Cyclo8| SymmetryField::constant(x);
    vec![
        ("nu", Symbol::Scalar(nu.clone())),
        ("nui", Symbol::Scalar(nu.inverse().expect("ν ≠ 0"))),
        ("la", Symbol::Scalar(la.clone())),
        ("li", Symbol::Scalar(la.inverse().expect("λ ≠ 0"))),
        ("u", Symbol::Scalar(one.minus(&la).inverse().expect("λ ≠ 1"))),
        ("i", Symbol::Scalar(c(Cyclo8::i()))),
        ("xi", Symbol::Scalar(c(Cyclo8::xi()))),
    ]
}

fn poly_with(class: SingularityClass, m: u32, text: &str, extra: &[(&'static str, P)]) -> P {
    let mut syms = symbols(m);
    syms.extend(extra.iter().map(|(n, p)| (*n, Symbol::Poly(p.clone()))));
    parse_in(text, &class.unfolding_vars(), &syms).unwrap_or_else(|e| panic!("bad table entry {text:?}: {e}"))
}

fn poly(class: SingularityClass, m: u32, text: &str) -> P {
    poly_with(class, m, text, &[])
}

fn polys(class: SingularityClass, m: u32, texts: &[&str]) -> Vec<P> {
    texts.iter().map(|t| poly(class, m, t)).collect()
}

fn exact(class: SingularityClass, m: u32, texts: &[&str]) -> Vec<PsiComponent> {
    polys(class, m, texts).into_iter().map(PsiComponent::Exact).collect()
}

fn identity_shift(class: SingularityClass) -> Vec<P> {
    let uv = class.unfolding_vars();
    (0..class.nvars()).map(|k| P::var(&uv, k)).collect()
}

fn one_over(m: u32) -> SymmetryField {
    SymmetryField::var().pow_u(m).inverse().expect("λ ≠ 0")
}

fn one_minus(m: u32) -> SymmetryField {
    SymmetryField::one().minus(&SymmetryField::var().pow_u(m))
}

/// All tabulated symmetries of `class` (empty for A and E).
pub fn symmetry_data(class: SingularityClass) -> Vec<SymmetryDatum> {
    match class {
        SingularityClass::D(mu) => {
            let mut psi = vec!["t1".to_string(), "-t2".to_string()];
            psi.extend((3..=mu).map(|j| format!("t{j}")));
            let psi: Vec<&str> = psi.iter().map(String::as_str).collect();
            let mut v = vec![SymmetryDatum {
                class,
                label: "phi2".into(),
                note: "x1 -> -x1".into(),
                nu_power: 1,
                phi: polys(class, 1, &["x0", "-x1"]),
                shift: identity_shift(class),
                psi: exact(class, 1, &psi),
                lambda_image: None,
            }];
            if mu == 4 {
                v.push(d4_phi3());
            }
            v
        }
        SingularityClass::Et6 => vec![et6_psi2(), et6_psi3()],
        SingularityClass::Et7 => vec![et7_psi2(), et7_psi3()],
        SingularityClass::Et8 => vec![et8_psi2(), et8_psi3()],
        _ => Vec::new(),
    }
}

/// Literal readings of printed formulas that are known to fail; used as
/// negative controls for the identity checks.
pub fn negative_controls(class: SingularityClass) -> Vec<SymmetryDatum> {
    match class {
        SingularityClass::D(4) => {
            vec![d4_phi3().with_shift(1, "x1 + 1/4*i*x1", "literal second component x1 + (i/4)x1")]
        }
        SingularityClass::Et6 => {
            vec![et6_psi3().with_shift(2, "x2 - 1/2*i*t7", "shift x2 - (i/2)t7 applied after phi")]
        }
        SingularityClass::Et8 => vec![et8_psi3().with_shift(
            1,
            "x1 + t7*u + t8*u + i*la*t9*u^2*x0 + la^2*t9^2*u^4 - 1/2*la*t9^2*u^4 - 1/4*t9^2*u^4",
            "plus sign on (t7+t8)/(1-la) and i*la*t9/(1-la)^2 on the post-phi coordinate",
        )],
        _ => Vec::new(),
    }
}

fn d4_phi3() -> SymmetryDatum {
    let c = SingularityClass::D(4);
    SymmetryDatum {
        class: c,
        label: "phi3".into(),
        note: "order-3 symmetry of D4 with its unfolding shift".into(),
        nu_power: 1,
        phi: polys(c, 1, &["-1/2*x0 - 1/2*i*x1", "3/2*i*x0 + 1/2*x1"]),
        shift: polys(c, 1, &["x0 - 1/4*t4", "x1 + 1/4*i*t4"]),
        psi: exact(
            c,
            1,
            &[
                "t1 + 1/4*i*t2*t4 - 1/4*t3*t4 + 1/16*t4^3",
                "1/2*t2 - 1/2*i*t3 + 1/8*i*t4^2",
                "3/2*i*t2 - 1/2*t3 + 3/8*t4^2",
                "t4",
            ],
        ),
        lambda_image: None,
    }
}

fn et6_psi2() -> SymmetryDatum {
    let c = SingularityClass::Et6;
    SymmetryDatum {
        class: c,
        label: "psi2".into(),
        note: "lambda -> 1/lambda, lambda = nu^2".into(),
        nu_power: 2,
        phi: polys(c, 2, &["li*x0", "x1", "nu*x2"]),
        shift: identity_shift(c),
        psi: exact(c, 2, &["t1", "li*t2", "t3", "nu*t4", "li^2*t5", "li*t6", "nu*t7"]),
        lambda_image: Some(one_over(2)),
    }
}

fn et6_psi3() -> SymmetryDatum {
    let c = SingularityClass::Et6;
    SymmetryDatum {
        class: c,
        label: "psi3".into(),
        note: "lambda -> 1-lambda; shift y2 + t7/2 after phi".into(),
        nu_power: 1,
        phi: polys(c, 1, &["-x0", "x1 - x0", "i*x2"]),
        shift: polys(c, 1, &["x0", "x1", "x2 + 1/2*t7"]),
        psi: exact(
            c,
            1,
            &[
                "t1 + 1/2*t4*t7",
                "-t2 - t3 - 1/4*t7^2",
                "t3 + 1/2*t7^2",
                "i*t4",
                "t5 + t6",
                "-t6",
                "i*t7",
            ],
        ),
        lambda_image: Some(one_minus(1)),
    }
}

fn et7_psi2() -> SymmetryDatum {
    let c = SingularityClass::Et7;
    SymmetryDatum {
        class: c,
        label: "psi2".into(),
        note: "lambda -> 1/lambda, lambda = nu^4".into(),
        nu_power: 4,
        phi: polys(c, 4, &["nui^3*x0", "nu*x1"]),
        shift: identity_shift(c),
        psi: exact(
            c,
            4,
            &["t1", "nui^3*t2", "nu*t3", "nui^6*t4", "nui^2*t5", "nu^2*t6", "nui^5*t7", "nui*t8"],
        ),
        lambda_image: Some(one_over(4)),
    }
}

fn et7_psi3() -> SymmetryDatum {
    let c = SingularityClass::Et7;
    let a = poly(c, 1, "t7*u + t8*u");
    let p = |t: &str| poly_with(c, 1, t, &[("a", a.clone())]);
    SymmetryDatum {
        class: c,
        label: "psi3".into(),
        note: "lambda -> 1-lambda, xi a primitive 8th root of unity".into(),
        nu_power: 1,
        phi: polys(c, 1, &["-xi*x0", "xi*x1 - xi*x0"]),
        shift: vec![p("x0"), p("x1 - a")],
        psi: [
            "t1 - a*t3 + a^2*t6",
            "-xi*t2 - xi*t3 + xi*a*t5 + 2*xi*a*t6 - xi*a^2*t8 + xi*a^3",
            "xi*t3 - 2*xi*a*t6",
            "xi^2*t4 + xi^2*t5 + xi^2*t6 - xi^2*a*t7 - 2*xi^2*a*t8 + 2*xi^2*a^2 - xi^2*la*a^2",
            "-xi^2*t5 - 2*xi^2*t6 + 2*xi^2*a*t8 - 3*xi^2*a^2",
            "xi^2*t6",
            "-3*xi^3*u*t7 + xi^3*la*u*t7 - 2*xi^3*u*t8",
            "3*xi^3*u*t7 + 2*xi^3*u*t8 + xi^3*la*u*t8",
        ]
        .iter()
        .map(|t| PsiComponent::Exact(p(t)))
        .collect(),
        lambda_image: Some(one_minus(1)),
    }
}

fn et8_psi2() -> SymmetryDatum {
    let c = SingularityClass::Et8;
    SymmetryDatum {
        class: c,
        label: "psi2".into(),
        note: "lambda -> 1/lambda, lambda = nu^2".into(),
        nu_power: 2,
        phi: polys(c, 2, &["nui*x0", "x1"]),
        shift: identity_shift(c),
        psi: exact(c, 2, &["t1", "nui*t2", "li*t3", "t4", "nui^3*t5", "nui*t6", "li*t7", "t8", "nui*t9"]),
        lambda_image: Some(one_over(2)),
    }
}

fn et8_psi3() -> SymmetryDatum {
    let c = SingularityClass::Et8;
    let lead = |text: &str, upto: usize| PsiComponent::Leading {
        lead: poly(c, 1, text),
        excluded: (1..=upto).map(|j| format!("t{j}")).collect(),
    };
    let mut psi = vec![
        lead("t1", 1),
        lead("i*t2", 2),
        lead("-t3 - t4", 4),
        lead("t4", 5),
        lead("-i*t5 - i*t6", 6),
        lead("i*t6", 6),
    ];
    psi.extend(exact(
        c,
        1,
        &[
            "3*u*t7 - la*u*t7 + 2*u*t8 + 3*la*u^3*t9^2 + 1/2*u^3*t9^2",
            "-3*u*t7 - la*u*t8 - 2*u*t8 + 7/2*la^2*u^4*t9^2 - 11/4*la*u^4*t9^2 - 1/2*u^4*t9^2",
            "i*la^2*u^2*t9",
        ],
    ));
    SymmetryDatum {
        class: c,
        label: "psi3".into(),
        note: "lambda -> 1-lambda; t1..t6 known up to lower-order remainders".into(),
        nu_power: 1,
        phi: polys(c, 1, &["i*x0", "x1 - x0^2"]),
        shift: polys(
            c,
            1,
            &[
                "x0 + 1/2*t9*u^2",
                "x1 - t7*u - t8*u + la*t9*u^2*x0 + la^2*t9^2*u^4 - 1/2*la*t9^2*u^4 - 1/4*t9^2*u^4",
            ],
        ),
        psi,
        lambda_image: Some(one_minus(1)),
    }
}
