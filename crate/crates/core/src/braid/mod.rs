//! Hurwitz action of the braid group and the sign group on distinguished
//! bases and on Stokes matrices.
//!
//! Generator `+i` maps `(δ_i, δ_{i+1}) ↦ (δ_{i+1}, s_{δ_{i+1}}(δ_i))`, generator
//! `−i` maps `(δ_i, δ_{i+1}) ↦ (s_{δ_i}(δ_{i+1}), δ_i)`; they are mutually inverse.

mod orbit;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{pl_reflect, symmetrized_form, IntMatrix, IntersectionMatrix, StokesMatrix};

pub use orbit::{
    enumerate_states, orbit_enumerate, OrbitConfig, OrbitMode, OrbitReport, OrbitStates,
    TruncationReason, MAX_ORBIT_MU,
};

/// An ordered tuple of lattice vectors in the coordinates of a seed basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VanishingTuple {
    vectors: Vec<Vec<BigInt>>,
    seed: StokesMatrix,
    form: IntersectionMatrix,
}

impl VanishingTuple {
    /// The seed's own basis `(e_1, …, e_μ)`.
    pub fn seed(seed: &StokesMatrix) -> Self {
        let mu = seed.mu();
        let vectors = (0..mu)
            .map(|k| (0..mu).map(|j| if j == k { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        VanishingTuple { vectors, seed: seed.clone(), form: symmetrized_form(seed) }
    }

    /// Validates that the vectors form a ℤ-basis of roots.
    pub fn new(seed: &StokesMatrix, vectors: Vec<Vec<BigInt>>) -> Result<Self> {
        let mu = seed.mu();
        if vectors.len() != mu || vectors.iter().any(|v| v.len() != mu) {
            return Err(Error::Invalid(format!("expected {mu} vectors of length {mu}")));
        }
        let form = symmetrized_form(seed);
        let two = BigInt::from(2);
        if let Some(k) = vectors.iter().position(|v| form.0.pair(v, v) != two) {
            return Err(Error::Invalid(format!("vector {} does not have self-pairing 2", k + 1)));
        }
        let m = coordinate_matrix(&vectors);
        if !m.determinant().abs().is_one() {
            return Err(Error::Invalid("vectors do not form a Z-basis".into()));
        }
        Ok(VanishingTuple { vectors, seed: seed.clone(), form })
    }

    pub fn mu(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    pub fn seed_matrix(&self) -> &StokesMatrix {
        &self.seed
    }

    pub fn form(&self) -> &IntersectionMatrix {
        &self.form
    }

    /// Reference Seifert pairing `L_ref = −Sᵗ` of the seed.
    pub fn seifert_ref(&self) -> IntMatrix {
        self.seed.matrix().transpose().neg()
    }

    /// Rows are the tuple's vectors.
    pub fn coordinate_matrix(&self) -> IntMatrix {
        coordinate_matrix(&self.vectors)
    }
}

fn coordinate_matrix(vectors: &[Vec<BigInt>]) -> IntMatrix {
    let mu = vectors.len();
    let mut m = IntMatrix::zeros(mu, mu);
    for (i, v) in vectors.iter().enumerate() {
        for (j, x) in v.iter().enumerate() {
            m[(i, j)] = x.clone();
        }
    }
    m
}

/// A word in the generators `±1, …, ±(μ−1)`.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BraidWord {
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(letters: Vec<i32>) -> Self {
        BraidWord { letters }
    }

    pub fn validate(&self, mu: usize) -> Result<()> {
        self.letters.iter().try_for_each(|&g| check_generator(g, mu))
    }

    pub fn inverse(&self) -> Self {
        BraidWord { letters: self.letters.iter().rev().map(|g| -g).collect() }
    }

    pub fn then(&self, other: &BraidWord) -> Self {
        BraidWord { letters: self.letters.iter().chain(&other.letters).copied().collect() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(i32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Accepts `"1,-2,1"`, `"[1, -2, 1]"` or whitespace-separated letters.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let letters = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|e| Error::Parse(format!("braid letter {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(BraidWord { letters })
    }
}

fn check_generator(g: i32, mu: usize) -> Result<()> {
    let i = g.unsigned_abs() as usize;
    if g == 0 || i >= mu {
        return Err(Error::GeneratorOutOfRange { index: g, mu });
    }
    Ok(())
}

/// Applies one signed generator.
pub fn braid_apply(t: &VanishingTuple, g: i32) -> Result<VanishingTuple> {
    check_generator(g, t.mu())?;
    let a = g.unsigned_abs() as usize - 1;
    let mut out = t.clone();
    let (da, db) = (&t.vectors[a], &t.vectors[a + 1]);
    if g > 0 {
        out.vectors[a] = db.clone();
        out.vectors[a + 1] = pl_reflect(&t.form, db, da)?;
    } else {
        out.vectors[a] = pl_reflect(&t.form, da, db)?;
        out.vectors[a + 1] = da.clone();
    }
    Ok(out)
}

/// Applies the letters of `w` from left to right.
pub fn apply_word(t: &VanishingTuple, w: &BraidWord) -> Result<VanishingTuple> {
    w.letters.iter().try_fold(t.clone(), |acc, &g| braid_apply(&acc, g))
}

/// Stokes matrix of a tuple: `V·S·Vᵗ` with V the coordinate matrix, i.e. `−Gᵗ`
/// for the Gram matrix `G` of `L_ref = −Sᵗ`.
pub fn stokes_of_tuple(t: &VanishingTuple) -> Result<StokesMatrix> {
    let v = t.coordinate_matrix();
    let gram = v.mul(&t.seifert_ref()).mul(&v.transpose());
    let s = gram.transpose().neg();
    StokesMatrix::new(s).map_err(|e| Error::Invalid(format!("tuple is not distinguished-shaped: {e}")))
}

/// Makes the first nonzero coordinate of every vector positive.
pub fn sign_canonical_tuple(t: &VanishingTuple) -> VanishingTuple {
    let mut out = t.clone();
    for v in &mut out.vectors {
        if v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
            v.iter_mut().for_each(|x| *x = -&*x);
        }
    }
    out
}

/// Union–find over vertices tracking the relative sign of each vertex to its root.
pub(crate) struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<u8>,
}

impl ParityUnionFind {
    pub(crate) fn new(n: usize) -> Self {
        ParityUnionFind { parent: (0..n).collect(), parity: vec![0; n] }
    }

    pub(crate) fn find(&mut self, x: usize) -> (usize, u8) {
        let mut p = 0;
        let mut r = x;
        while self.parent[r] != r {
            p ^= self.parity[r];
            r = self.parent[r];
        }
        // Path compression.
        let (mut y, mut py) = (x, p);
        while self.parent[y] != y {
            let next = self.parent[y];
            let pn = py ^ self.parity[y];
            self.parent[y] = r;
            self.parity[y] = py;
            y = next;
            py = pn;
        }
        (r, p)
    }

    /// Requires `ε_i·ε_j·sign = −1` if i and j are not yet related.
    pub(crate) fn make_negative(&mut self, i: usize, j: usize, positive: bool) {
        let (ri, pi) = self.find(i);
        let (rj, pj) = self.find(j);
        if ri != rj {
            self.parent[rj] = ri;
            self.parity[rj] = pi ^ pj ^ u8::from(positive);
        }
    }

    /// Signs ε_k = ±1 (as 0/1 parities), or `None` if not everything is linked.
    pub(crate) fn signs(&mut self) -> Option<Vec<u8>> {
        let n = self.parent.len();
        let root = if n == 0 { 0 } else { self.find(0).0 };
        (0..n)
            .map(|k| {
                let (r, p) = self.find(k);
                (r == root).then_some(p)
            })
            .collect()
    }
}

/// Lexicographically minimal conjugate `diag(ε)·S·diag(ε)` (row-major order of the
/// strict upper triangle). Each nonzero entry that is not yet forced by earlier
/// choices is made negative.
pub fn sign_canonical_stokes(s: &StokesMatrix) -> Result<StokesMatrix> {
    let n = s.mu();
    let mut uf = ParityUnionFind::new(n);
    for i in 0..n {
        for j in i + 1..n {
            let v = s.entry(i, j);
            if !v.is_zero() {
                uf.make_negative(i, j, v.is_positive());
            }
        }
    }
    let eps = uf.signs().ok_or(Error::Disconnected)?;
    let flips: Vec<bool> = eps.into_iter().map(|p| p == 1).collect();
    Ok(sign_conjugate(s, &flips))
}

/// Conjugate `diag(ε)·S·diag(ε)`.
pub fn sign_conjugate(s: &StokesMatrix, eps: &[bool]) -> StokesMatrix {
    let n = s.mu();
    let mut m = s.matrix().clone();
    for i in 0..n {
        for j in i + 1..n {
            if eps[i] != eps[j] {
                m[(i, j)] = -&m[(i, j)];
            }
        }
    }
    StokesMatrix::new(m).expect("conjugation preserves the Stokes shape")
}
