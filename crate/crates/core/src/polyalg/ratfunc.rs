use std::fmt;

use num_rational::BigRational;

use super::field::{Domain, Field};
use super::unipoly::UniPoly;

/// Element of the rational function field K(λ) in one parameter.
///
/// Canonical form: numerator and denominator coprime, denominator monic, so
/// structural equality is field equality.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc<K> {
    num: UniPoly<K>,
    den: UniPoly<K>,
}

impl<K: Field> RatFunc<K> {
    /// Builds `num/den`, reducing to canonical form. Returns `None` if `den` is zero.
    pub fn new(num: UniPoly<K>, den: UniPoly<K>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = d.leading().cloned().expect("nonzero denominator");
        if !lc.is_one() {
            let inv = lc.inverse().expect("nonzero");
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        Some(RatFunc { num: n, den: d })
    }

    pub fn from_poly(p: UniPoly<K>) -> Self {
        RatFunc { num: p, den: UniPoly::constant(K::one()) }
    }

    pub fn constant(c: K) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    /// The parameter λ itself.
    pub fn var() -> Self {
        Self::from_poly(UniPoly::x())
    }

    pub fn numer(&self) -> &UniPoly<K> {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly<K> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn powi(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        Some(base.pow_u(e.unsigned_abs() as u32))
    }

    /// Evaluates at a point of K, `None` at a pole.
    pub fn eval(&self, x: &K) -> Option<K> {
        self.num.eval(x).divide(&self.den.eval(x))
    }

    /// Order of vanishing at λ = 0 (negative for a pole); `None` for zero.
    pub fn order_at_zero(&self) -> Option<i64> {
        let first = |p: &UniPoly<K>| p.coeffs().iter().position(|c| !c.is_zero());
        Some(first(&self.num)? as i64 - first(&self.den)? as i64)
    }
}

impl<K: Field> Domain for RatFunc<K> {
    fn zero() -> Self {
        RatFunc { num: UniPoly::zero(), den: UniPoly::constant(K::one()) }
    }
    fn one() -> Self {
        Self::constant(K::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        if self.den == o.den {
            if self.is_polynomial() {
                return RatFunc { num: self.num.add(&o.num), den: self.den.clone() };
            }
            return Self::new(self.num.add(&o.num), self.den.clone()).expect("nonzero");
        }
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
            .expect("nonzero")
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negate())
    }
    fn times(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.is_polynomial() && o.is_polynomial() {
            // Both denominators are the constant 1.
            return RatFunc { num: self.num.mul(&o.num), den: self.den.clone() };
        }
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero")
    }
    fn negate(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        self.divide(o)
    }
}

impl<K: Field> Field for RatFunc<K> {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Self::new(self.den.clone(), self.num.clone())
    }
    fn from_rational(q: &BigRational) -> Self {
        Self::constant(K::from_rational(q))
    }
    fn is_compound(&self) -> bool {
        !self.is_polynomial()
            || self.num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1
            || self.num.degree() == Some(0) && self.num.coeffs()[0].is_compound()
    }
    fn as_rational(&self) -> Option<BigRational> {
        if self.num.is_zero() {
            return Some(BigRational::from_integer(0.into()));
        }
        if self.is_polynomial() && self.num.degree() == Some(0) {
            return self.num.coeffs()[0].as_rational();
        }
        None
    }
}

impl<K: Field> fmt::Display for RatFunc<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return self.num.fmt_in("la", f);
        }
        write!(f, "(")?;
        self.num.fmt_in("la", f)?;
        write!(f, ")/(")?;
        self.den.fmt_in("la", f)?;
        write!(f, ")")
    }
}
