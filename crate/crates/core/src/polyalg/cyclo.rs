use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::field::{Domain, Field};

/// ℚ(ξ) with ξ a primitive 8th root of unity, stored as `c0 + c1 ξ + c2 ξ² + c3 ξ³`
/// modulo ξ⁴ + 1. Contains i = ξ² and √2 = ξ + ξ⁷.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyclo8(pub [BigRational; 4]);

impl Cyclo8 {
    pub fn xi() -> Self {
        let mut c = Self::zero();
        c.0[1] = BigRational::from_integer(1.into());
        c
    }

    pub fn i() -> Self {
        let mut c = Self::zero();
        c.0[2] = BigRational::from_integer(1.into());
        c
    }

    /// The Galois automorphism ξ ↦ ξ^k for odd k.
    fn galois(&self, k: usize) -> Self {
        let mut out = Self::zero();
        for (j, c) in self.0.iter().enumerate() {
            let e = (j * k) % 8;
            if e < 4 {
                out.0[e] += c;
            } else {
                out.0[e - 4] -= c;
            }
        }
        out
    }
}

impl Domain for Cyclo8 {
    fn zero() -> Self {
        Cyclo8(std::array::from_fn(|_| <BigRational as Zero>::zero()))
    }
    fn one() -> Self {
        let mut c = Self::zero();
        c.0[0] = BigRational::from_integer(1.into());
        c
    }
    fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
    fn plus(&self, other: &Self) -> Self {
        Cyclo8(std::array::from_fn(|k| &self.0[k] + &other.0[k]))
    }
    fn minus(&self, other: &Self) -> Self {
        Cyclo8(std::array::from_fn(|k| &self.0[k] - &other.0[k]))
    }
    fn times(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in self.0.iter().enumerate() {
            if Zero::is_zero(x) {
                continue;
            }
            for (b, y) in other.0.iter().enumerate() {
                if Zero::is_zero(y) {
                    continue;
                }
                let p = x * y;
                if a + b < 4 {
                    out.0[a + b] += p;
                } else {
                    out.0[a + b - 4] -= p;
                }
            }
        }
        out
    }
    fn negate(&self) -> Self {
        Cyclo8(std::array::from_fn(|k| -&self.0[k]))
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        self.divide(other)
    }
}

impl Field for Cyclo8 {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let conj = self.galois(3).times(&self.galois(5)).times(&self.galois(7));
        let norm = self.times(&conj);
        debug_assert!(norm.0[1..].iter().all(Zero::is_zero));
        let inv_norm = norm.0[0].recip();
        Some(Cyclo8(std::array::from_fn(|k| &conj.0[k] * &inv_norm)))
    }
    fn from_rational(q: &BigRational) -> Self {
        let mut c = Self::zero();
        c.0[0] = q.clone();
        c
    }
    fn is_compound(&self) -> bool {
        self.0.iter().filter(|c| !Zero::is_zero(*c)).count() > 1
            || self.as_rational().is_some_and(|q| q.is_compound())
    }
    fn as_rational(&self) -> Option<BigRational> {
        self.0[1..].iter().all(Zero::is_zero).then(|| self.0[0].clone())
    }
}

impl fmt::Display for Cyclo8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["", "xi", "xi^2", "xi^3"];
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ => write!(f, "{c}*{}", NAMES[k])?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
