//! Tables for the eight families: normal forms, unfolding monomials, weights,
//! symmetry morphisms, κ-extension data and seed Stokes matrices.

mod kappa;
mod seeds;
mod symmetry;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polyalg::{parse_in, rat, Field, Monomial, MultiPoly, QLambda, Symbol, WeightSystem};

pub use kappa::{kappa_data, KappaDatum};
pub use seeds::{
    load_seed_file, parse_seed, seed_stokes, seed_stokes_from_dir, tensor_stokes, validate_seed,
    Provenance, SeedFile, SeedRecord, SEED_DIR_ENV,
};
pub use symmetry::{
    negative_controls, symmetry_data, PsiComponent, SymmetryDatum, SymmetryField,
};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum SingularityClass {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
    /// The simple elliptic families Ẽ6, Ẽ7, Ẽ8.
    Et6,
    Et7,
    Et8,
}

impl SingularityClass {
    pub fn new_a(mu: usize) -> Result<Self> {
        if mu == 0 {
            return Err(Error::UnknownClass("A0".into()));
        }
        Ok(SingularityClass::A(mu))
    }

    pub fn new_d(mu: usize) -> Result<Self> {
        if mu < 4 {
            return Err(Error::UnknownClass(format!("D{mu}")));
        }
        Ok(SingularityClass::D(mu))
    }

    pub fn mu(&self) -> usize {
        match *self {
            SingularityClass::A(m) | SingularityClass::D(m) => m,
            SingularityClass::E6 => 6,
            SingularityClass::E7 => 7,
            SingularityClass::E8 => 8,
            SingularityClass::Et6 => 8,
            SingularityClass::Et7 => 9,
            SingularityClass::Et8 => 10,
        }
    }

    pub fn is_elliptic(&self) -> bool {
        matches!(self, SingularityClass::Et6 | SingularityClass::Et7 | SingularityClass::Et8)
    }

    /// Number of variables of the minimal normal form.
    pub fn nvars(&self) -> usize {
        match self {
            SingularityClass::A(_) => 1,
            SingularityClass::Et6 => 3,
            _ => 2,
        }
    }

    /// Number of unfolding parameters t_j (λ excluded).
    pub fn nparams(&self) -> usize {
        if self.is_elliptic() {
            self.mu() - 1
        } else {
            self.mu()
        }
    }

    /// Multiplicative order of the monodromy (simple classes only).
    pub fn coxeter_number(&self) -> Option<u64> {
        match *self {
            SingularityClass::A(m) => Some(m as u64 + 1),
            SingularityClass::D(m) => Some(2 * (m as u64 - 1)),
            SingularityClass::E6 => Some(12),
            SingularityClass::E7 => Some(18),
            SingularityClass::E8 => Some(30),
            _ => None,
        }
    }

    /// Unicode name, e.g. `Ẽ6`.
    pub fn pretty(&self) -> String {
        match self {
            SingularityClass::Et6 => "Ẽ6".into(),
            SingularityClass::Et7 => "Ẽ7".into(),
            SingularityClass::Et8 => "Ẽ8".into(),
            other => other.to_string(),
        }
    }

    /// The three simple elliptic classes.
    pub fn elliptic() -> [SingularityClass; 3] {
        [SingularityClass::Et6, SingularityClass::Et7, SingularityClass::Et8]
    }

    pub fn x_vars(&self) -> Arc<[String]> {
        (0..self.nvars()).map(|i| format!("x{i}")).collect()
    }

    /// Variables `x0, …, xn, t1, …, tk` of the unfolding.
    pub fn unfolding_vars(&self) -> Arc<[String]> {
        (0..self.nvars())
            .map(|i| format!("x{i}"))
            .chain((1..=self.nparams()).map(|j| format!("t{j}")))
            .collect()
    }

    pub fn var_weights(&self) -> Vec<BigRational> {
        match *self {
            SingularityClass::A(m) => vec![rat(1, m as i64 + 1)],
            SingularityClass::D(m) => {
                let m = m as i64;
                vec![rat(1, m - 1), rat(m - 2, 2 * (m - 1))]
            }
            SingularityClass::E6 => vec![rat(1, 4), rat(1, 3)],
            SingularityClass::E7 => vec![rat(2, 9), rat(1, 3)],
            SingularityClass::E8 => vec![rat(1, 5), rat(1, 3)],
            SingularityClass::Et6 => vec![rat(1, 3); 3],
            SingularityClass::Et7 => vec![rat(1, 4); 2],
            SingularityClass::Et8 => vec![rat(1, 6), rat(1, 3)],
        }
    }

    /// Exponent vectors m_j of the unfolding `f + Σ t_j m_j`, in parameter order.
    pub fn unfolding_monomials(&self) -> Vec<Monomial> {
        let m = |e: &[u32]| Monomial(e.to_vec());
        match *self {
            SingularityClass::A(mu) => (0..mu as u32).map(|k| m(&[k])).collect(),
            SingularityClass::D(mu) => {
                let mut v = vec![m(&[0, 0]), m(&[0, 1])];
                v.extend((1..=mu as u32 - 2).map(|k| m(&[k, 0])));
                v
            }
            SingularityClass::E6 => [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [2, 1]].iter().map(|e| m(e)).collect(),
            SingularityClass::E7 => {
                [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [3, 0], [4, 0]].iter().map(|e| m(e)).collect()
            }
            SingularityClass::E8 => [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [3, 0], [2, 1], [3, 1]]
                .iter()
                .map(|e| m(e))
                .collect(),
            SingularityClass::Et6 => {
                [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [2, 0, 0], [1, 1, 0], [0, 1, 1]]
                    .iter()
                    .map(|e| m(e))
                    .collect()
            }
            SingularityClass::Et7 => [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2], [2, 1], [1, 2]]
                .iter()
                .map(|e| m(e))
                .collect(),
            SingularityClass::Et8 => [[0, 0], [1, 0], [2, 0], [0, 1], [3, 0], [1, 1], [2, 1], [0, 2], [1, 2]]
                .iter()
                .map(|e| m(e))
                .collect(),
        }
    }

    /// Weights of the variables and of t_1, …, t_k (`deg t_j = 1 − deg m_j`).
    pub fn weights(&self) -> WeightSystem {
        let w = self.var_weights();
        let one = BigRational::one();
        let param_weights = self.unfolding_monomials().iter().map(|m| &one - m.weighted_degree(&w)).collect();
        WeightSystem { var_weights: w, param_weights }
    }

    fn normal_form_text(&self) -> String {
        match *self {
            SingularityClass::A(mu) => format!("x0^{}", mu + 1),
            SingularityClass::D(mu) => format!("x0^{} + x0*x1^2", mu - 1),
            SingularityClass::E6 => "x0^4 + x1^3".into(),
            SingularityClass::E7 => "x0^3*x1 + x1^3".into(),
            SingularityClass::E8 => "x0^5 + x1^3".into(),
            // x1(x1 − x0)(x1 − λx0) − x0x2²
            SingularityClass::Et6 => "x1^3 - x0*x1^2 - la*x0*x1^2 + la*x0^2*x1 - x0*x2^2".into(),
            // x0x1(x1 − x0)(x1 − λx0)
            SingularityClass::Et7 => "x0*x1^3 - x0^2*x1^2 - la*x0^2*x1^2 + la*x0^3*x1".into(),
            // x1(x1 − x0²)(x1 − λx0²)
            SingularityClass::Et8 => "x1^3 - x0^2*x1^2 - la*x0^2*x1^2 + la*x0^4*x1".into(),
        }
    }

    /// The normal form over a field `K`, with `la` the value of λ (ignored for simple classes).
    pub fn normal_form_in<K: Field>(&self, la: &K) -> MultiPoly<K> {
        parse_in(&self.normal_form_text(), &self.x_vars(), &[("la", Symbol::Scalar(la.clone()))])
            .expect("built-in normal form parses")
    }

    /// The unfolding `f + Σ t_j m_j` over `K`, in the variables of [`Self::unfolding_vars`].
    pub fn unfolding_in<K: Field>(&self, la: &K) -> MultiPoly<K> {
        let uv = self.unfolding_vars();
        let n = self.nvars();
        let f = self.normal_form_in(la).with_vars(&uv).expect("x variables are unfolding variables");
        let mut out = f;
        for (j, m) in self.unfolding_monomials().into_iter().enumerate() {
            let mut e = m.0;
            e.resize(uv.len(), 0);
            e[n + j] = 1;
            out.add_assign(&MultiPoly::term(&uv, Monomial(e), K::one()));
        }
        out
    }

    /// Normal form over ℚ(λ).
    pub fn normal_form(&self) -> MultiPoly<QLambda> {
        self.normal_form_in(&QLambda::var())
    }

    /// Unfolding over ℚ(λ).
    pub fn unfolding(&self) -> MultiPoly<QLambda> {
        self.unfolding_in(&QLambda::var())
    }

    /// All classes whose data the library tabulates, for μ up to `max_mu` in the A and D series.
    pub fn catalogue(max_mu: usize) -> Vec<SingularityClass> {
        let mut v: Vec<_> = (1..=max_mu).map(SingularityClass::A).collect();
        v.extend((4..=max_mu).map(SingularityClass::D));
        v.extend([SingularityClass::E6, SingularityClass::E7, SingularityClass::E8]);
        v.extend(SingularityClass::elliptic());
        v
    }
}

impl fmt::Display for SingularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityClass::A(m) => write!(f, "A{m}"),
            SingularityClass::D(m) => write!(f, "D{m}"),
            SingularityClass::E6 => write!(f, "E6"),
            SingularityClass::E7 => write!(f, "E7"),
            SingularityClass::E8 => write!(f, "E8"),
            SingularityClass::Et6 => write!(f, "Et6"),
            SingularityClass::Et7 => write!(f, "Et7"),
            SingularityClass::Et8 => write!(f, "Et8"),
        }
    }
}

impl FromStr for SingularityClass {
    type Err = Error;

    /// Accepts `A3`, `D5`, `E6`, and `Et6` / `Ẽ6` / `E~6` / `~E6` for the elliptic classes
    /// (case-insensitive, optional `_`).
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.trim().replace('_', "").replace('Ẽ', "Et").to_ascii_lowercase();
        let t = t.replace("e~", "et").replace("~e", "et");
        let bad = || Error::UnknownClass(s.to_string());
        if let Some(rest) = t.strip_prefix("et") {
            return match rest {
                "6" => Ok(SingularityClass::Et6),
                "7" => Ok(SingularityClass::Et7),
                "8" => Ok(SingularityClass::Et8),
                _ => Err(bad()),
            };
        }
        let (head, num) = t.split_at(1.min(t.len()));
        let mu: usize = num.parse().map_err(|_| bad())?;
        match head {
            "a" => SingularityClass::new_a(mu),
            "d" => SingularityClass::new_d(mu),
            "e" => match mu {
                6 => Ok(SingularityClass::E6),
                7 => Ok(SingularityClass::E7),
                8 => Ok(SingularityClass::E8),
                _ => Err(bad()),
            },
            _ => Err(bad()),
        }
    }
}

impl Serialize for SingularityClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for SingularityClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
