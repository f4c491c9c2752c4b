//! Extension of the elliptic unfoldings over the double point κ = 0.
//!
//! With λ = κ^p and x0 rescaled by κ^{-e}, the parameter change ρ turns the
//! unfolding into a polynomial family in (x, s, κ) that stays smooth at κ = 0.

use std::sync::Arc;

use crate::polyalg::{parse_in, Domain, Field, MultiPoly, QLambda, Symbol};

use super::SingularityClass;

type P = MultiPoly<QLambda>;

#[derive(Clone, Debug)]
pub struct KappaDatum {
    pub class: SingularityClass,
    /// λ = κ^lambda_power.
    pub lambda_power: u32,
    /// x0 ↦ x0 / κ^x0_power.
    pub x0_power: u32,
    /// Variables `x0, …, s1, …`.
    pub vars: Arc<[String]>,
    /// Images t_j = ρ_j(s, κ).
    pub rho: Vec<P>,
    /// Auxiliary variables y, as `(name, definition)`.
    pub y_defs: Vec<(String, String)>,
    /// The extended family, written in x, y and s.
    pub display: String,
}

impl KappaDatum {
    fn symbols(&self) -> Vec<(String, Symbol<QLambda>)> {
        let k = QLambda::var();
        let mut syms = vec![
            ("k".to_string(), Symbol::Scalar(k.clone())),
            ("ki".to_string(), Symbol::Scalar(inv(&k))),
        ];
        for (name, def) in &self.y_defs {
            let borrowed: Vec<(&str, Symbol<QLambda>)> = syms.iter().map(|(n, s)| (n.as_str(), s.clone())).collect();
            let p = parse_in(def, &self.vars, &borrowed).expect("auxiliary variable parses");
            syms.push((name.clone(), Symbol::Poly(p)));
        }
        syms
    }

    /// The displayed family with every y expanded.
    pub fn display_poly(&self) -> P {
        let syms = self.symbols();
        let borrowed: Vec<(&str, Symbol<QLambda>)> = syms.iter().map(|(n, s)| (n.as_str(), s.clone())).collect();
        parse_in(&self.display, &self.vars, &borrowed).expect("display parses")
    }

    /// The displayed family with the y kept as extra variables.
    pub fn display_in_y(&self) -> P {
        let vars: Arc<[String]> =
            self.vars.iter().cloned().chain(self.y_defs.iter().map(|(n, _)| n.clone())).collect();
        let k = QLambda::var();
        let syms = [("k", Symbol::Scalar(k.clone())), ("ki", Symbol::Scalar(inv(&k)))];
        parse_in(&self.display, &vars, &syms).expect("display parses")
    }

    /// `F_{ρ(s), κ^p}(x0/κ^e, x1, …)` in the variables of `self.vars`.
    pub fn transformed_unfolding(&self) -> P {
        let c = self.class;
        let la = QLambda::var().pow_u(self.lambda_power);
        let f = c.unfolding_in(&la);
        let n = c.nvars();
        let scale = inv(&QLambda::var().pow_u(self.x0_power));
        let mut images: Vec<P> = (0..n).map(|i| P::var(&self.vars, i)).collect();
        images[0] = images[0].scale(&scale);
        images.extend(self.rho.iter().cloned());
        f.subst(&images)
    }
}

fn inv(x: &QLambda) -> QLambda {
    x.inverse().expect("nonzero")
}

fn datum(
    class: SingularityClass,
    lambda_power: u32,
    x0_power: u32,
    rho: &[&str],
    y_defs: &[(&str, &str)],
    display: &str,
) -> KappaDatum {
    let vars: Arc<[String]> = (0..class.nvars())
        .map(|i| format!("x{i}"))
        .chain((1..=class.nparams()).map(|j| format!("s{j}")))
        .collect();
    let k = QLambda::var();
    let syms = [("k", Symbol::Scalar(k.clone())), ("ki", Symbol::Scalar(inv(&k)))];
    let rho = rho.iter().map(|t| parse_in(t, &vars, &syms).expect("rho parses")).collect();
    KappaDatum {
        class,
        lambda_power,
        x0_power,
        vars,
        rho,
        y_defs: y_defs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        display: display.into(),
    }
}

/// κ-extension data of an elliptic class; `None` for simple classes.
pub fn kappa_data(class: SingularityClass) -> Option<KappaDatum> {
    Some(match class {
        SingularityClass::Et6 => datum(
            class,
            3,
            2,
            &["s1", "k^2*s2 + k*s5*s6 - s5^2", "s3", "s4", "k^3*s5", "k*s6 - 2*s5", "s7"],
            &[("y0", "ki*x0*(x1 + s5)"), ("y1", "ki*(x1 + s5)*y0"), ("y2", "ki^2*x0*x2^2")],
            "(x0 + s6)*y0 - y1 - k*x0*x1^2 + x1^3 - y2 + s1 + x0*s2 + x1*s3 + x2*s4 + x1*x2*s7",
        ),
        SingularityClass::Et7 => datum(
            class,
            2,
            1,
            &["s1", "k*s2", "s3", "k^2*s4", "s5", "s6", "k*s7", "s8"],
            &[("y", "ki*x0*x1")],
            "x0^2*y - (k^2 + 1)*y^2 + x1^2*y + s1 + x0*s2 + x1*s3 + x0^2*s4 + y*s5 + x1^2*s6 + x0*y*s7 + x1*y*s8",
        ),
        SingularityClass::Et8 => datum(
            class,
            3,
            1,
            &[
                "s1",
                "k*s2",
                "k^2*s3",
                "s4 - 1/2*ki*s6*s9 - 1/4*ki*s7*s9^2 - 1/16*ki*s9^4",
                "k^3*s5",
                "s6",
                "k*s7",
                "s8 - 1/4*ki^2*s9^2",
                "ki*s9",
            ],
            &[("y", "ki*(x0 - 1/2*s9)*x1")],
            "(x0^3 + 1/2*x0^2*s9 + 1/4*x0*s9^2 + 1/8*s9^3 + (x0 + 1/2*s9)*s7 + s6)*y - k*x0^2*x1^2 - y^2 + x1^3 \
             + s1 + x0*s2 + x0^2*s3 + x1*s4 + x0^3*s5 + x1^2*s8",
        ),
        _ => return None,
    })
}
