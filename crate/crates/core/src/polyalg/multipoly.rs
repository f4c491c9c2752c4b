use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;

use super::field::{Domain, Field};

/// Exponent vector ordered graded-lexicographically (total degree first, then
/// lexicographic with the first variable most significant).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    /// `self / o` if `o` divides `self`.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&o.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    /// Weighted degree Σ eᵢ wᵢ.
    pub fn weighted_degree(&self, weights: &[BigRational]) -> BigRational {
        self.0
            .iter()
            .zip(weights)
            .map(|(e, w)| w * BigRational::from_integer((*e).into()))
            .fold(BigRational::from_integer(0.into()), |a, b| a + b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Sparse multivariate polynomial over a field, with named variables.
///
/// A polynomial built with an empty variable list is a scalar and combines with
/// polynomials over any variable list. Otherwise binary operations require equal
/// variable lists and panic on a mismatch, like shape mismatches in array code.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<K> {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, K>,
}

/// Builds a shared variable list from names.
pub fn vars(names: &[&str]) -> Arc<[String]> {
    names.iter().map(|s| s.to_string()).collect()
}

impl<K: Field> MultiPoly<K> {
    pub fn zero(vars: &Arc<[String]>) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<[String]>, c: K) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    /// A scalar that adapts to whatever variable list it is combined with.
    pub fn scalar(c: K) -> Self {
        Self::constant(&Arc::from(Vec::<String>::new()), c)
    }

    /// The variable with index `i`.
    pub fn var(vars: &Arc<[String]>, i: usize) -> Self {
        assert!(i < vars.len(), "variable index {i} out of range");
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::term(vars, Monomial(e), K::one())
    }

    /// The variable called `name`; panics if it is not in `vars`.
    pub fn named(vars: &Arc<[String]>, name: &str) -> Self {
        let i = vars
            .iter()
            .position(|v| v == name)
            .unwrap_or_else(|| panic!("unknown variable {name}"));
        Self::var(vars, i)
    }

    pub fn term(vars: &Arc<[String]>, m: Monomial, c: K) -> Self {
        assert_eq!(m.0.len(), vars.len(), "exponent vector length mismatch");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(vars: &Arc<[String]>, terms: impl IntoIterator<Item = (Monomial, K)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), vars.len(), "exponent vector length mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> K {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_else(K::zero)
    }

    pub fn constant_term(&self) -> K {
        self.coeff(&vec![0; self.nvars()])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &K)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().plus(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Re-expresses a scalar (empty variable list) over `vars`.
    fn lifted(&self, vars: &Arc<[String]>) -> Self {
        if Arc::ptr_eq(&self.vars, vars) || *self.vars == **vars {
            return self.clone();
        }
        assert!(
            self.vars.is_empty(),
            "variable lists differ: {:?} vs {:?}",
            self.vars,
            vars
        );
        Self::constant(vars, self.constant_term())
    }

    fn unify(&self, o: &Self) -> (Self, Self) {
        if self.vars.is_empty() && !o.vars.is_empty() {
            (self.lifted(&o.vars), o.clone())
        } else {
            (self.clone(), o.lifted(&self.vars))
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let (mut a, b) = self.unify(o);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }

    /// `self += o` without rebuilding `self`.
    pub fn add_assign(&mut self, o: &Self) {
        if self.vars.is_empty() && !o.vars.is_empty() {
            *self = self.lifted(&o.vars);
        }
        let o = o.lifted(&self.vars);
        for (m, c) in o.terms {
            self.add_term(m, c);
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.negate())).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.times(c))).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = self.unify(o);
        let mut out = Self::zero(&a.vars);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca.times(cb));
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(&self.vars, K::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Simultaneous substitution `x_i ↦ images[i]`. All images must share one
    /// variable list (or be scalars), which becomes the variable list of the result.
    pub fn subst(&self, images: &[MultiPoly<K>]) -> MultiPoly<K> {
        assert_eq!(images.len(), self.nvars(), "one image per variable required");
        let target = images
            .iter()
            .find(|p| !p.vars.is_empty())
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| Arc::from(Vec::<String>::new()));
        let images: Vec<_> = images.iter().map(|p| p.lifted(&target)).collect();
        let mut powers: Vec<Vec<MultiPoly<K>>> =
            images.iter().map(|p| vec![Self::constant(&target, K::one()), p.clone()]).collect();
        let mut out = Self::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            out.add_assign(&t);
        }
        out
    }

    /// Substitutes only the listed variables, keeping the variable list.
    pub fn subst_some(&self, pairs: &[(&str, MultiPoly<K>)]) -> MultiPoly<K> {
        let images: Vec<_> = (0..self.nvars())
            .map(|i| {
                pairs
                    .iter()
                    .find(|(n, _)| *n == self.vars[i])
                    .map(|(_, p)| p.lifted(&self.vars))
                    .unwrap_or_else(|| Self::var(&self.vars, i))
            })
            .collect();
        self.subst(&images)
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut nm = m.clone();
            nm.0[i] -= 1;
            out.add_term(nm, c.times(&K::from_int(e as i64)));
        }
        out
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> MultiPoly<L> {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Re-expresses the polynomial over another variable list (matching by name).
    /// Returns `None` if a variable that occurs is missing from `target`.
    pub fn with_vars(&self, target: &Arc<[String]>) -> Option<Self> {
        let idx: Vec<Option<usize>> =
            self.vars.iter().map(|v| target.iter().position(|t| t == v)).collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.0.iter().enumerate() {
                if x > 0 {
                    e[idx[i]?] += x;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Some(out)
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (mut r, d) = self.unify(d);
        let (dm, dc) = d.leading().map(|(m, c)| (m.clone(), c.clone()))?;
        let inv = dc.inverse()?;
        let mut q = Self::zero(&r.vars);
        while let Some((rm, rc)) = r.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = rm.div(&dm)?;
            let qc = rc.times(&inv);
            let t = Self::term(&r.vars, qm, qc);
            r.add_assign(&t.mul(&d).neg());
            q.add_assign(&t);
        }
        Some(q)
    }

    /// Coefficients of `self` as a polynomial in variable `i`, lowest power first.
    /// The coefficients keep the full variable list (with exponent zero in `i`).
    pub fn coeffs_in(&self, i: usize) -> Vec<MultiPoly<K>> {
        let deg = self.degree_in(i).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(&self.vars); deg + 1];
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            let mut nm = m.clone();
            nm.0[i] = 0;
            out[e].add_term(nm, c.clone());
        }
        out
    }

    /// Evaluates every variable; `values.len()` must equal the number of variables.
    pub fn eval(&self, values: &[K]) -> K {
        assert_eq!(values.len(), self.nvars());
        let mut acc = K::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in values.iter().zip(&m.0) {
                if e > 0 {
                    t = t.times(&v.pow_u(e));
                }
            }
            acc = acc.plus(&t);
        }
        acc
    }

    /// The weighted degree if the polynomial is nonzero and quasihomogeneous.
    pub fn weighted_degree(&self, weights: &[BigRational]) -> Option<BigRational> {
        let mut degs = self.terms.keys().map(|m| m.weighted_degree(weights));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.terms.keys().any(|m| m.0[i] > 0)).collect()
    }
}

impl<K: Field> Domain for MultiPoly<K> {
    fn zero() -> Self {
        Self::scalar(K::zero())
    }
    fn one() -> Self {
        Self::scalar(K::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.is_constant() && self.constant_term().is_one()
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        MultiPoly::div_exact(self, o)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl<K: Field> $tr<&MultiPoly<K>> for &MultiPoly<K> {
            type Output = MultiPoly<K>;
            fn $m(self, o: &MultiPoly<K>) -> MultiPoly<K> {
                MultiPoly::$m(self, o)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<K: Field> Neg for &MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn neg(self) -> MultiPoly<K> {
        MultiPoly::neg(self)
    }
}


impl<K: Field> fmt::Display for MultiPoly<K> {
    /// Terms in descending graded-lex order, e.g. `3/4 * x0^2 * la - 2 * x1 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = match c.as_rational() {
                Some(q) if q < BigRational::from_integer(0.into()) => (true, c.negate()),
                _ => (false, c.clone()),
            };
            if k > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let cs = if mag.as_rational().is_some() || !mag.is_compound() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            let mut factors = Vec::new();
            if !mag.is_one() || m.degree() == 0 {
                factors.push(cs);
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{e}", self.vars[i])),
                }
            }
            write!(f, "{}", factors.join(" * "))?;
        }
        Ok(())
    }
}
