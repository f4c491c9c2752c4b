//! Basis-relative linear algebra of the Milnor lattice.
//!
//! All formulas are fixed at the dimension parity n ≡ 0 (mod 4):
//! the intersection form is `I = S + Sᵗ`, the monodromy is `M = −S⁻¹Sᵗ` and the
//! Picard–Lefschetz reflection is `s_δ(b) = b − I(δ,b)·δ`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyalg::{linalg, UniPoly};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        IntMatrix { rows: r, cols: c, data: rows.iter().flatten().map(|&x| x.into()).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries as `i64`, `None` on overflow.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows).map(|i| self.row(i).iter().map(ToPrimitive::to_i64).collect()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Bilinear form `aᵗ · self · b`.
    pub fn pair(&self, a: &[BigInt], b: &[BigInt]) -> BigInt {
        a.iter().zip(self.mul_vec(b)).map(|(x, y)| x * y).sum()
    }

    pub fn pow(&self, mut e: u64) -> IntMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
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

    /// Kronecker product with `self`'s index as the slow (lexicographically first) one.
    pub fn kron(&self, o: &IntMatrix) -> IntMatrix {
        let mut out = Self::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        out[(i * o.rows + k, j * o.cols + l)] = &self[(i, j)] * &o[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square());
        linalg::determinant(self.to_rows())
    }

    /// Rank over ℚ.
    pub fn rank(&self) -> usize {
        linalg::rank(self.to_rows())
    }

    /// Smallest k in 1..=bound with self^k = Id.
    pub fn multiplicative_order(&self, bound: u64) -> Option<u64> {
        let id = Self::identity(self.rows);
        let mut p = self.clone();
        for k in 1..=bound {
            if p == id {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }

    /// Characteristic polynomial det(x·Id − self) by the Faddeev–LeVerrier recursion.
    pub fn charpoly(&self) -> UniPoly<BigRational> {
        assert!(self.is_square());
        let n = self.rows;
        let a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| self.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect())
            .collect();
        let matmul = |x: &Vec<Vec<BigRational>>, y: &Vec<Vec<BigRational>>| {
            let mut out = vec![vec![BigRational::zero(); n]; n];
            for i in 0..n {
                for k in 0..n {
                    if x[i][k].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        out[i][j] += &x[i][k] * &y[k][j];
                    }
                }
            }
            out
        };
        let mut c = vec![BigRational::zero(); n + 1];
        c[n] = BigRational::one();
        let mut mk = vec![vec![BigRational::zero(); n]; n];
        for k in 1..=n {
            let mut next = matmul(&a, &mk);
            for (i, row) in next.iter_mut().enumerate() {
                row[i] += &c[n - k + 1];
            }
            mk = next;
            let amk = matmul(&a, &mk);
            let tr: BigRational = (0..n).map(|i| amk[i][i].clone()).sum();
            c[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
        }
        UniPoly::new(c)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            let r: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "[{}]", r.join(","))?;
        }
        write!(f, "]")
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.to_i64_rows() {
            Some(rows) => rows.serialize(s),
            None => self
                .to_rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>()
                .serialize(s),
        }
    }
}

/// Upper triangular integer matrix with unit diagonal.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct StokesMatrix(IntMatrix);

impl StokesMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if !m.is_square() || m.rows() == 0 {
            return Err(Error::Invalid("Stokes matrix must be square and nonempty".into()));
        }
        for i in 0..m.rows() {
            if !m[(i, i)].is_one() {
                return Err(Error::Invalid(format!("diagonal entry ({i},{i}) is not 1")));
            }
            for j in 0..i {
                if !m[(i, j)].is_zero() {
                    return Err(Error::Invalid(format!("entry ({i},{j}) below the diagonal")));
                }
            }
        }
        Ok(StokesMatrix(m))
    }

    /// Builds the matrix from its strictly upper triangle, given row by row
    /// (row i has μ−1−i entries).
    pub fn from_upper(mu: usize, upper: &[Vec<i64>]) -> Result<Self> {
        if upper.len() != mu.saturating_sub(1) && !(mu == 1 && upper.is_empty()) {
            return Err(Error::Invalid(format!("expected {} upper rows", mu - 1)));
        }
        let mut m = IntMatrix::identity(mu);
        for (i, row) in upper.iter().enumerate() {
            if row.len() != mu - 1 - i {
                return Err(Error::Invalid(format!("upper row {i} has wrong length")));
            }
            for (k, &v) in row.iter().enumerate() {
                m[(i, i + 1 + k)] = v.into();
            }
        }
        Self::new(m)
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        if rows.iter().any(|r| r.len() != rows.len()) {
            return Err(Error::Invalid("Stokes matrix must be square".into()));
        }
        Self::new(IntMatrix::from_rows(rows))
    }

    /// The A_μ chain: S_{i,i+1} = −1, all other off-diagonal entries zero.
    pub fn chain(mu: usize) -> Self {
        let mut m = IntMatrix::identity(mu);
        for i in 0..mu.saturating_sub(1) {
            m[(i, i + 1)] = BigInt::from(-1);
        }
        StokesMatrix(m)
    }

    pub fn mu(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.0[(i, j)]
    }

    /// Strictly upper entries, row by row.
    pub fn upper(&self) -> Vec<Vec<i64>> {
        let n = self.mu();
        (0..n.saturating_sub(1))
            .map(|i| (i + 1..n).map(|j| self.0[(i, j)].to_i64().expect("small entry")).collect())
            .collect()
    }

    /// Largest absolute value of an off-diagonal entry.
    pub fn max_offdiag(&self) -> BigInt {
        let n = self.mu();
        let mut best = BigInt::zero();
        for i in 0..n {
            for j in i + 1..n {
                let a = self.0[(i, j)].abs();
                if a > best {
                    best = a;
                }
            }
        }
        best
    }

    /// Inverse of the unit upper triangular matrix (integral).
    pub fn inverse(&self) -> IntMatrix {
        let n = self.mu();
        let mut inv = IntMatrix::identity(n);
        // Column by column back substitution for S·X = Id.
        for c in 0..n {
            for i in (0..n).rev() {
                let mut v = if i == c { BigInt::one() } else { BigInt::zero() };
                for k in i + 1..n {
                    v -= &self.0[(i, k)] * &inv[(k, c)];
                }
                inv[(i, c)] = v;
            }
        }
        inv
    }
}

impl fmt::Display for StokesMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Symmetric integer form `I = S + Sᵗ`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct IntersectionMatrix(pub IntMatrix);

/// Monodromy matrix acting on coordinate column vectors.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct MonodromyMatrix(pub IntMatrix);

pub fn symmetrized_form(s: &StokesMatrix) -> IntersectionMatrix {
    IntersectionMatrix(s.0.add(&s.0.transpose()))
}

/// `M = −S⁻¹Sᵗ`.
pub fn monodromy_from_stokes(s: &StokesMatrix) -> MonodromyMatrix {
    MonodromyMatrix(s.inverse().mul(&s.0.transpose()).neg())
}

/// Picard–Lefschetz reflection `s_δ(b) = b − I(δ,b)·δ`.
pub fn pl_reflect(form: &IntersectionMatrix, delta: &[BigInt], b: &[BigInt]) -> Result<Vec<BigInt>> {
    let n = form.0.rows();
    if delta.len() != n || b.len() != n {
        return Err(Error::Invalid("vector length does not match the lattice rank".into()));
    }
    if form.0.pair(delta, delta) != BigInt::from(2) {
        return Err(Error::Invalid("reflection vector must have self-pairing 2".into()));
    }
    let c = form.0.pair(delta, b);
    Ok(b.iter().zip(delta).map(|(bi, di)| bi - &c * di).collect())
}

/// Matrix of `s_δ` (columns are images of the coordinate basis).
pub fn reflection_matrix(form: &IntersectionMatrix, delta: &[BigInt]) -> Result<IntMatrix> {
    let n = form.0.rows();
    let mut m = IntMatrix::zeros(n, n);
    for k in 0..n {
        let mut e = vec![BigInt::zero(); n];
        e[k] = BigInt::one();
        let img = pl_reflect(form, delta, &e)?;
        for (i, v) in img.into_iter().enumerate() {
            m[(i, k)] = v;
        }
    }
    Ok(m)
}

/// `s_{δ1} ∘ … ∘ s_{δμ}` for a tuple of vectors in seed coordinates.
pub fn monodromy_product(form: &IntersectionMatrix, tuple: &[Vec<BigInt>]) -> Result<MonodromyMatrix> {
    let n = form.0.rows();
    let mut acc = IntMatrix::identity(n);
    for d in tuple {
        acc = acc.mul(&reflection_matrix(form, d)?);
    }
    Ok(MonodromyMatrix(acc))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeStyle {
    Plain,
    Dotted,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DiagramEdge {
    pub i: usize,
    pub j: usize,
    pub weight: u64,
    pub style: EdgeStyle,
}

/// Coxeter–Dynkin diagram: |S_ij| plain edges if S_ij < 0, S_ij dotted edges if S_ij > 0.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DiagramGraph {
    pub vertices: usize,
    pub edges: Vec<DiagramEdge>,
}

impl DiagramGraph {
    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertices];
        for e in &self.edges {
            adj[e.i].push(e.j);
            adj[e.j].push(e.i);
        }
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Graphviz rendering; vertices are labelled 1..μ, multi-edges are repeated.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph coxeter_dynkin {\n");
        for v in 1..=self.vertices {
            out.push_str(&format!("  {v} [label=\"{v}\"];\n"));
        }
        for e in &self.edges {
            for _ in 0..e.weight {
                match e.style {
                    EdgeStyle::Plain => out.push_str(&format!("  {} -- {};\n", e.i + 1, e.j + 1)),
                    EdgeStyle::Dotted => {
                        out.push_str(&format!("  {} -- {} [style=dotted];\n", e.i + 1, e.j + 1))
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

pub fn coxeter_dynkin(s: &StokesMatrix) -> DiagramGraph {
    let n = s.mu();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v = &s.0[(i, j)];
            if v.is_zero() {
                continue;
            }
            let weight = v.abs().to_u64().expect("edge multiplicity fits in u64");
            let style = if v.is_negative() { EdgeStyle::Plain } else { EdgeStyle::Dotted };
            edges.push(DiagramEdge { i, j, weight, style });
        }
    }
    DiagramGraph { vertices: n, edges }
}

pub fn is_connected(s: &StokesMatrix) -> bool {
    coxeter_dynkin(s).is_connected()
}

/// μ − rank(I) over ℚ.
pub fn radical_rank(form: &IntersectionMatrix) -> usize {
    form.0.rows() - form.0.rank()
}

/// Whether all leading principal minors are positive (positive definite).
pub fn is_positive_definite(form: &IntersectionMatrix) -> bool {
    let n = form.0.rows();
    (1..=n).all(|k| {
        let minor: Vec<Vec<BigInt>> = (0..k).map(|i| form.0.row(i)[..k].to_vec()).collect();
        linalg::determinant(minor).is_positive()
    })
}

/// Whether all principal minors are nonnegative (positive semidefinite).
pub fn is_positive_semidefinite(form: &IntersectionMatrix) -> bool {
    let n = form.0.rows();
    assert!(n <= 20, "principal minor test is exponential in the rank");
    (1u32..(1u32 << n)).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let minor: Vec<Vec<BigInt>> =
            idx.iter().map(|&i| idx.iter().map(|&j| form.0[(i, j)].clone()).collect()).collect();
        !linalg::determinant(minor).is_negative()
    })
}

/// The d-th cyclotomic polynomial over ℚ.
pub fn cyclotomic(d: usize) -> UniPoly<BigRational> {
    let one = BigRational::one();
    let mut p = UniPoly::monomial(one.clone(), d).sub(&UniPoly::constant(one));
    for e in 1..d {
        if d.is_multiple_of(e) {
            p = p.div_rem(&cyclotomic(e)).0;
        }
    }
    p
}

/// Whether the characteristic polynomial is a product of cyclotomic polynomials.
pub fn is_quasiunipotent(m: &MonodromyMatrix) -> bool {
    let mut p = m.0.charpoly();
    let n = m.0.rows();
    // φ(d) ≥ √(d/2), so every cyclotomic factor of degree ≤ n has d ≤ 2n².
    for d in 1..=(2 * n * n).max(2) {
        let phi = cyclotomic(d);
        if phi.degree().unwrap_or(0) > n {
            continue;
        }
        loop {
            let (q, r) = p.div_rem(&phi);
            if !r.is_zero() {
                break;
            }
            p = q;
        }
        if p.degree() == Some(0) {
            return true;
        }
    }
    p.degree() == Some(0)
}
