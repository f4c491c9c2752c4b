//! Lyashko–Looijenga maps at desk scale.
//!
//! The exact map for `A_μ` is a resultant computation; everything else here is
//! numeric (critical values, fibers of the LL map, Stokes-wall walking) and is
//! controlled by explicit tolerances rather than hidden constants.

use std::cmp::Ordering;
use std::fmt;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::polyalg::{resultant, vars, MultiPoly};
use crate::singdata::SingularityClass;

pub type C64 = Complex64;

/// A point of the LL target space: the monic polynomial `y^μ + Σ s_j y^{j−1}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LLPoint {
    /// `s_1, …, s_μ` (constant term first).
    #[serde(serialize_with = "crate::serde_util::rationals")]
    pub s: Vec<BigRational>,
}

impl LLPoint {
    pub fn new(s: Vec<BigRational>) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::Invalid("an LL point has degree at least one".into()));
        }
        Ok(LLPoint { s })
    }

    pub fn mu(&self) -> usize {
        self.s.len()
    }

    /// The polynomial in the single variable `y`.
    pub fn poly(&self) -> MultiPoly<BigRational> {
        let v = vars(&["y"]);
        let y = MultiPoly::var(&v, 0);
        let mut p = y.pow(self.mu() as u32);
        for (j, c) in self.s.iter().enumerate() {
            p = p.add(&y.pow(j as u32).scale(c));
        }
        p
    }

    pub fn to_numeric(&self) -> NumericLLPoint {
        NumericLLPoint { s: self.s.iter().map(|q| C64::new(q.to_f64().unwrap_or(f64::NAN), 0.0)).collect() }
    }

    /// Numeric roots, i.e. the critical values when the point lies in the image of LL.
    pub fn roots(&self) -> Result<Vec<C64>> {
        self.to_numeric().roots()
    }
}

impl fmt::Display for LLPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.poly();
        write!(f, "{p}")
    }
}

/// Floating-point LL point, coefficients `s_1, …, s_μ` of a monic polynomial.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct NumericLLPoint {
    #[serde(serialize_with = "crate::serde_util::complexes")]
    pub s: Vec<C64>,
}

impl NumericLLPoint {
    /// The monic polynomial `Π (y − r)`.
    pub fn from_roots(roots: &[C64]) -> Self {
        let mut c = vec![C64::new(1.0, 0.0)];
        for r in roots {
            let mut next = vec![C64::zero(); c.len() + 1];
            for (k, a) in c.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= a * r;
            }
            c = next;
        }
        c.pop();
        NumericLLPoint { s: c }
    }

    pub fn mu(&self) -> usize {
        self.s.len()
    }

    pub fn roots(&self) -> Result<Vec<C64>> {
        monic_roots(&self.s)
    }
}

/// Roots of the monic polynomial `z^n + Σ c_k z^k` via companion-matrix
/// eigenvalues, polished by a few Newton steps.
pub fn monic_roots(c: &[C64]) -> Result<Vec<C64>> {
    let n = c.len();
    if c.iter().all(|a| a.is_zero()) {
        return Ok(vec![C64::zero(); n]);
    }
    let mut m = DMatrix::<C64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = C64::one();
    }
    for i in 0..n {
        m[(i, n - 1)] = -c[i];
    }
    let eig: Vec<C64> = m
        .try_schur(1e-15, 10_000)
        .and_then(|s| s.eigenvalues())
        .map(|v| v.iter().copied().collect())
        .ok_or_else(|| Error::Numeric("companion eigenvalues did not converge (near-multiple roots)".into()))?;
    let eval = |z: C64| -> (C64, C64) {
        let mut p = C64::one();
        let mut dp = C64::zero();
        for k in (0..n).rev() {
            dp = dp * z + p;
            p = p * z + c[k];
        }
        (p, dp)
    };
    Ok(eig
        .into_iter()
        .map(|mut z| {
            for _ in 0..4 {
                let (p, dp) = eval(z);
                if dp.norm() == 0.0 {
                    break;
                }
                let next = z - p / dp;
                if !next.is_finite() {
                    break;
                }
                z = next;
            }
            z
        })
        .collect())
}

fn require_a(class: SingularityClass) -> Result<usize> {
    match class {
        SingularityClass::A(mu) => Ok(mu),
        other => Err(Error::Unsupported(other.to_string(), "only A_μ is available here".into())),
    }
}

/// The LL polynomial of `A_μ` as an element of `ℚ[t_1, …, t_μ, y]`, monic in `y`.
pub fn ll_polynomial_a(mu: usize) -> Result<MultiPoly<BigRational>> {
    let class = SingularityClass::new_a(mu)?;
    let f = class.unfolding_in(&BigRational::zero());
    let mut names: Vec<String> = f.vars().to_vec();
    names.push("y".into());
    let all: std::sync::Arc<[String]> = names.into();
    let f = f.with_vars(&all).expect("unfolding variables extend");
    let y = MultiPoly::var(&all, all.len() - 1);
    let r = resultant(&f.partial(0), &y.sub(&f), 0)?;
    // Drop x from the variable list and normalize the y-leading coefficient.
    let lead = r.coeffs_in(all.len() - 1).pop().expect("nonzero resultant");
    let lead = lead.constant_term();
    let out: std::sync::Arc<[String]> = all[1..].to_vec().into();
    Ok(r.scale(&lead.recip()).with_vars(&out).expect("x eliminated"))
}

/// `LL(t)` for `A_μ` at an exact parameter point `t = (t_1, …, t_μ)`.
pub fn ll_exact_a(mu: usize, t: &[BigRational]) -> Result<LLPoint> {
    let class = SingularityClass::new_a(mu)?;
    if t.len() != mu {
        return Err(Error::Invalid(format!("A{mu} needs {mu} parameters, got {}", t.len())));
    }
    let f = class.unfolding_in(&BigRational::zero());
    let xy = vars(&["x0", "y"]);
    let mut images = vec![MultiPoly::var(&xy, 0)];
    images.extend(t.iter().map(|c| MultiPoly::constant(&xy, c.clone())));
    let f = f.subst(&images);
    let y = MultiPoly::var(&xy, 1);
    let r = resultant(&f.partial(0), &y.sub(&f), 0)?;
    let coeffs: Vec<BigRational> = r.coeffs_in(1).iter().map(|c| c.constant_term()).collect();
    let lead = coeffs.last().cloned().expect("nonzero resultant");
    debug_assert_eq!(coeffs.len(), mu + 1);
    LLPoint::new(coeffs[..mu].iter().map(|c| c / &lead).collect())
}

/// The discriminant of `p` in `y`: `(−1)^{μ(μ−1)/2} Res(p, p′)` for monic `p`.
pub fn discriminant(p: &LLPoint) -> BigRational {
    let poly = p.poly();
    if p.mu() == 1 {
        return BigRational::one();
    }
    let r = resultant(&poly, &poly.partial(0), 0).expect("positive degree").constant_term();
    let mu = p.mu();
    if (mu * (mu - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

/// Whether `p` has a multiple root, i.e. lies on the LL discriminant.
pub fn discriminant_member(p: &LLPoint) -> bool {
    discriminant(p).is_zero()
}

/// The good ordering of critical values: imaginary parts ascending, ties
/// broken by real parts descending. Returns original indices in order.
pub fn good_order(values: &[C64], tol: f64) -> Result<Vec<usize>> {
    let cmp = |a: &C64, b: &C64| -> Ordering {
        if (a.im - b.im).abs() > tol {
            a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal)
        } else {
            b.re.partial_cmp(&a.re).unwrap_or(Ordering::Equal)
        }
    };
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            let (a, b) = (values[i], values[j]);
            if !a.is_finite() || !b.is_finite() {
                return Err(Error::Numeric("non-finite critical value".into()));
            }
            if (a.im - b.im).abs() <= tol && (a.re - b.re).abs() <= tol {
                return Err(Error::Numeric(format!(
                    "values {i} and {j} coincide within {tol:e}: on a Stokes wall"
                )));
            }
        }
    }
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&i, &j| cmp(&values[i], &values[j]));
    Ok(idx)
}

/// Multistart Newton settings.
#[derive(Clone, Debug, Serialize)]
pub struct NumericConfig {
    pub starts: usize,
    pub seed: u64,
    /// Solutions closer than this are identified.
    pub dedup_tol: f64,
    /// Residual norm accepted as a solution.
    pub residual_tol: f64,
    pub max_iter: usize,
    /// Starting points are drawn uniformly from the polydisc of this radius.
    pub radius: f64,
}

impl NumericConfig {
    /// Defaults for critical points of an unfolding.
    pub fn critical() -> Self {
        NumericConfig { starts: 400, seed: 7, dedup_tol: 1e-8, residual_tol: 1e-11, max_iter: 200, radius: 3.0 }
    }

    /// Defaults for fibers of the LL map.
    pub fn fiber() -> Self {
        NumericConfig { starts: 2000, seed: 11, dedup_tol: 1e-6, residual_tol: 1e-11, max_iter: 200, radius: 3.0 }
    }
}

/// Critical points and values of `F_t` together with the good ordering.
#[derive(Clone, Debug, Serialize)]
pub struct CriticalData {
    pub class: SingularityClass,
    #[serde(serialize_with = "crate::serde_util::complex_rows")]
    pub points: Vec<Vec<C64>>,
    #[serde(serialize_with = "crate::serde_util::complexes")]
    pub values: Vec<C64>,
    /// `order[k]` is the index of the k-th value in the good ordering.
    pub order: Vec<usize>,
}

impl CriticalData {
    pub fn ordered_values(&self) -> Vec<C64> {
        self.order.iter().map(|&i| self.values[i]).collect()
    }
}

/// A polynomial with floating-point coefficients, evaluated at complex points.
#[derive(Clone, Debug)]
struct NumPoly {
    terms: Vec<(Vec<u32>, f64)>,
}

impl NumPoly {
    fn new(p: &MultiPoly<BigRational>) -> Self {
        NumPoly {
            terms: p
                .terms()
                .map(|(m, c)| (m.0.clone(), c.to_f64().unwrap_or(f64::NAN)))
                .collect(),
        }
    }

    fn eval(&self, x: &[C64]) -> C64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(x).fold(C64::new(*c, 0.0), |acc, (&k, v)| acc * v.powu(k))
            })
            .sum()
    }
}

/// A square polynomial system `eqs(u, fixed) = target` in unknowns `u`, with
/// its Jacobian in the unknowns.
struct System {
    eqs: Vec<NumPoly>,
    jac: Vec<Vec<NumPoly>>,
    target: Vec<C64>,
    fixed: Vec<C64>,
}

impl System {
    fn new(eqs: &[MultiPoly<BigRational>], unknowns: usize, target: Vec<C64>, fixed: Vec<C64>) -> Self {
        let jac = eqs.iter().map(|e| (0..unknowns).map(|i| NumPoly::new(&e.partial(i))).collect()).collect();
        System { eqs: eqs.iter().map(NumPoly::new).collect(), jac, target, fixed }
    }

    fn point(&self, u: &[C64]) -> Vec<C64> {
        u.iter().chain(&self.fixed).copied().collect()
    }

    fn residual(&self, u: &[C64]) -> DVector<C64> {
        let x = self.point(u);
        DVector::from_iterator(self.eqs.len(), self.eqs.iter().zip(&self.target).map(|(e, t)| e.eval(&x) - t))
    }

    fn jacobian(&self, u: &[C64]) -> DMatrix<C64> {
        let x = self.point(u);
        let n = self.jac.len();
        DMatrix::from_fn(n, n, |i, j| self.jac[i][j].eval(&x))
    }

    /// Damped Newton from `start`; returns a converged solution or nothing.
    fn solve(&self, start: Vec<C64>, cfg: &NumericConfig) -> Option<Vec<C64>> {
        let mut u = start;
        let mut r = self.residual(&u);
        for _ in 0..cfg.max_iter {
            let norm = r.norm();
            if norm < cfg.residual_tol {
                return Some(u);
            }
            let step = self.jacobian(&u).lu().solve(&r)?;
            let mut alpha = 1.0;
            loop {
                let cand: Vec<C64> = u.iter().zip(step.iter()).map(|(a, d)| a - d * alpha).collect();
                let rc = self.residual(&cand);
                if rc.norm() < norm || alpha < 1e-6 {
                    u = cand;
                    r = rc;
                    break;
                }
                alpha *= 0.5;
            }
            if !u.iter().all(|z| z.is_finite()) {
                return None;
            }
        }
        (r.norm() < cfg.residual_tol).then_some(u)
    }

    /// Run all starts in parallel; the merge is deterministic (start order).
    fn multistart(&self, dim: usize, cfg: &NumericConfig) -> Vec<Option<Vec<C64>>> {
        (0..cfg.starts)
            .into_par_iter()
            .map(|k| {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(0x9E37_79B9).wrapping_add(k as u64));
                let start: Vec<C64> = (0..dim)
                    .map(|_| {
                        let r = cfg.radius * rng.gen::<f64>().sqrt();
                        C64::from_polar(r, rng.gen::<f64>() * std::f64::consts::TAU)
                    })
                    .collect();
                self.solve(start, cfg)
            })
            .collect()
    }
}

fn distance(a: &[C64], b: &[C64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt()
}

/// Greedy clustering in start order; returns the representatives and, for each
/// prefix length, how many clusters had been seen.
fn cluster(sols: &[Option<Vec<C64>>], tol: f64) -> (Vec<Vec<C64>>, Vec<usize>) {
    let mut reps: Vec<Vec<C64>> = Vec::new();
    let mut history = Vec::with_capacity(sols.len());
    for s in sols {
        if let Some(s) = s {
            if !reps.iter().any(|r| distance(r, s) < tol) {
                reps.push(s.clone());
            }
        }
        history.push(reps.len());
    }
    (reps, history)
}

/// Critical points and values of `F_t` for `A_μ` (exact companion roots of the
/// derivative) and for `D_μ`/`E_{6,7,8}` (multistart Newton on the gradient).
pub fn critical_values_numeric(class: SingularityClass, t: &[C64], cfg: &NumericConfig) -> Result<CriticalData> {
    if class.is_elliptic() {
        return Err(Error::Unsupported(class.to_string(), "numeric critical values cover simple classes only".into()));
    }
    let mu = class.mu();
    if t.len() != mu {
        return Err(Error::Invalid(format!("{class} needs {mu} parameters, got {}", t.len())));
    }
    let f = class.unfolding_in(&BigRational::zero());
    let n = class.nvars();
    let fnum = NumPoly::new(&f);
    let points: Vec<Vec<C64>> = if n == 1 {
        let df = f.partial(0);
        let mut c: Vec<C64> = df
            .coeffs_in(0)
            .iter()
            .map(|p| {
                let mut x = vec![C64::zero()];
                x.extend_from_slice(t);
                NumPoly::new(p).eval(&x)
            })
            .collect();
        let lead = c.pop().expect("nonconstant derivative");
        let c: Vec<C64> = c.iter().map(|a| a / lead).collect();
        monic_roots(&c)?.into_iter().map(|r| vec![r]).collect()
    } else {
        let grad: Vec<MultiPoly<BigRational>> = (0..n).map(|i| f.partial(i)).collect();
        let sys = System::new(&grad, n, vec![C64::zero(); n], t.to_vec());
        let sols = sys.multistart(n, cfg);
        cluster(&sols, cfg.dedup_tol).0
    };
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if distance(&points[i], &points[j]) < cfg.dedup_tol {
                return Err(Error::Numeric(format!("{class}: degenerate critical point (multiplicity detected)")));
            }
        }
    }
    if points.len() < mu {
        return Err(Error::Numeric(format!(
            "incomplete fiber: found {} of {mu} critical points with {} starts",
            points.len(),
            cfg.starts
        )));
    }
    if points.len() > mu {
        return Err(Error::Numeric(format!("{class}: {} critical points exceed μ = {mu}", points.len())));
    }
    let values: Vec<C64> = points
        .iter()
        .map(|x| {
            let mut full = x.clone();
            full.extend_from_slice(t);
            fnum.eval(&full)
        })
        .collect();
    let order = good_order(&values, cfg.dedup_tol)?;
    Ok(CriticalData { class, points, values, order })
}

/// Outcome of numerically counting one fiber of the LL map.
#[derive(Clone, Debug, Serialize)]
pub struct FiberReport {
    pub class: SingularityClass,
    pub count: usize,
    /// Number of distinct solutions after the first half of the starts.
    pub count_at_half: usize,
    /// The count did not change over the second half of the budget.
    pub saturated: bool,
    pub starts: usize,
    #[serde(serialize_with = "crate::serde_util::complex_rows")]
    pub solutions: Vec<Vec<C64>>,
}

/// Count `#LL^{-1}(p)` for `A_2`/`A_3` by multistart Newton on the
/// coefficient-matching system `LL(t) = p`.
pub fn ll_fiber_count(class: SingularityClass, p: &NumericLLPoint, cfg: &NumericConfig) -> Result<FiberReport> {
    let mu = require_a(class)?;
    if !(2..=3).contains(&mu) {
        return Err(Error::Unsupported(class.to_string(), "fiber counting is limited to A2 and A3".into()));
    }
    if p.mu() != mu {
        return Err(Error::Invalid(format!("LL point of degree {} for {class}", p.mu())));
    }
    let roots = p.roots()?;
    for i in 0..mu {
        for j in i + 1..mu {
            if (roots[i] - roots[j]).norm() < cfg.dedup_tol {
                return Err(Error::Invalid("target point lies on the LL discriminant (double root)".into()));
            }
        }
    }
    let ll = ll_polynomial_a(mu)?;
    let eqs = ll.coeffs_in(mu);
    let eqs: Vec<MultiPoly<BigRational>> = eqs[..mu].to_vec();
    let sys = System::new(&eqs, mu, p.s.clone(), vec![C64::zero()]);
    let sols = sys.multistart(mu, cfg);
    let (reps, history) = cluster(&sols, cfg.dedup_tol);
    let count = reps.len();
    let count_at_half = history.get(cfg.starts / 2).copied().unwrap_or(0);
    Ok(FiberReport { class, count, count_at_half, saturated: count_at_half == count && count > 0, starts: cfg.starts, solutions: reps })
}

/// Tolerances and conventions for the Stokes-wall walker.
#[derive(Clone, Debug, Serialize)]
pub struct WallConfig {
    /// Adjacent imaginary parts closer than this at a sample are a wall contact.
    pub wall_tol: f64,
    /// Critical values closer than this are a discriminant hit.
    pub collision_tol: f64,
    /// Maximum bisection depth per sampled step.
    pub max_depth: u32,
    /// Flip the sign convention of emitted letters.
    pub flip_sign: bool,
}

impl Default for WallConfig {
    fn default() -> Self {
        WallConfig { wall_tol: 1e-9, collision_tol: 1e-7, max_depth: 30, flip_sign: false }
    }
}

fn a_values(mu: usize, t: &[C64]) -> Result<Vec<C64>> {
    // F = x^{μ+1} + Σ t_j x^{j−1}; F′ = (μ+1)x^μ + Σ_{j≥2} (j−1) t_j x^{j−2}.
    let lead = (mu + 1) as f64;
    let c: Vec<C64> = (2..=mu + 1)
        .map(|j| if j <= mu { t[j - 1] * (j - 1) as f64 / lead } else { C64::zero() })
        .collect();
    let c = &c[..mu];
    Ok(monic_roots(c)?
        .into_iter()
        .map(|x| {
            let mut v = x.powu(mu as u32 + 1);
            for (j, tj) in t.iter().enumerate() {
                v += tj * x.powu(j as u32);
            }
            v
        })
        .collect())
}

struct Walker<'a> {
    mu: usize,
    cfg: &'a WallConfig,
    letters: Vec<i32>,
}

impl Walker<'_> {
    fn check(&self, vals: &[C64]) -> Result<()> {
        for i in 0..vals.len() {
            for j in i + 1..vals.len() {
                if (vals[i] - vals[j]).norm() < self.cfg.collision_tol {
                    return Err(Error::Numeric("hit discriminant: critical values collide along the path".into()));
                }
            }
        }
        let order = good_order(vals, 0.0)?;
        for w in order.windows(2) {
            if (vals[w[0]].im - vals[w[1]].im).abs() < self.cfg.wall_tol {
                return Err(Error::Numeric(
                    "tangential crossing: sample lies on a Stokes wall; perturb the path or change the step count"
                        .into(),
                ));
            }
        }
        Ok(())
    }

    /// Match the new (unordered) values to the tracked ones; `None` when the
    /// step is too coarse for an unambiguous assignment.
    fn track(prev: &[C64], new: &[C64]) -> Option<Vec<C64>> {
        let sep = |v: &[C64]| {
            let mut m = f64::INFINITY;
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    m = m.min((v[i] - v[j]).norm());
                }
            }
            m
        };
        let limit = 0.25 * sep(prev).min(sep(new));
        let mut used = vec![false; new.len()];
        let mut out = Vec::with_capacity(prev.len());
        for a in prev {
            let (k, d) = new
                .iter()
                .enumerate()
                .filter(|(k, _)| !used[*k])
                .map(|(k, b)| (k, (a - b).norm()))
                .min_by(|x, y| x.1.total_cmp(&y.1))?;
            if d > limit {
                return None;
            }
            used[k] = true;
            out.push(new[k]);
        }
        Some(out)
    }

    fn advance(&mut self, t: &dyn Fn(f64) -> Vec<C64>, s0: f64, s1: f64, prev: &[C64], depth: u32) -> Result<Vec<C64>> {
        let raw = a_values(self.mu, &t(s1))?;
        self.check(&raw)?;
        let next = match Self::track(prev, &raw) {
            Some(n) => n,
            None => return self.split(t, s0, s1, prev, depth),
        };
        let o0 = good_order(prev, 0.0)?;
        let o1 = good_order(&next, 0.0)?;
        if o0 == o1 {
            return Ok(next);
        }
        let moved: Vec<usize> = (0..o0.len()).filter(|&k| o0[k] != o1[k]).collect();
        if moved.len() != 2 || moved[1] != moved[0] + 1 || o0[moved[0]] != o1[moved[1]] {
            return self.split(t, s0, s1, prev, depth);
        }
        let i = moved[0];
        let (a, b) = (o0[i], o0[i + 1]);
        // Linear interpolation of the crossing of Im(a) and Im(b).
        let d0 = prev[a].im - prev[b].im;
        let d1 = next[a].im - next[b].im;
        let theta = d0 / (d0 - d1);
        let re = |k: usize| prev[k].re + theta * (next[k].re - prev[k].re);
        let mut letter = if re(a) > re(b) { (i + 1) as i32 } else { -((i + 1) as i32) };
        if self.cfg.flip_sign {
            letter = -letter;
        }
        self.letters.push(letter);
        Ok(next)
    }

    fn split(&mut self, t: &dyn Fn(f64) -> Vec<C64>, s0: f64, s1: f64, prev: &[C64], depth: u32) -> Result<Vec<C64>> {
        if depth >= self.cfg.max_depth {
            return Err(Error::Numeric(
                "tangential crossing: could not resolve wall crossings; refine the path sampling".into(),
            ));
        }
        let mid = 0.5 * (s0 + s1);
        let m = self.advance(t, s0, mid, prev, depth + 1)?;
        self.advance(t, mid, s1, &m, depth + 1)
    }
}

/// Walk a piecewise-linear path of `A_μ` parameters, emitting one braid letter
/// per transversal Stokes-wall crossing of adjacent good-ordered values.
///
/// When the value at position `i` (lower imaginary part) passes the one above
/// it while having the larger real part, the letter is `+i`, otherwise `−i`
/// (reversed by [`WallConfig::flip_sign`]).
pub fn wall_walk_a(mu: usize, path: &[Vec<C64>], steps: usize, cfg: &WallConfig) -> Result<BraidWord> {
    SingularityClass::new_a(mu)?;
    if path.is_empty() || steps == 0 {
        return Err(Error::Invalid("a path needs at least one vertex and one step per segment".into()));
    }
    if let Some(bad) = path.iter().find(|p| p.len() != mu) {
        return Err(Error::Invalid(format!("path vertex of length {} for A{mu}", bad.len())));
    }
    let mut walker = Walker { mu, cfg, letters: Vec::new() };
    let mut cur = a_values(mu, &path[0])?;
    walker.check(&cur)?;
    for seg in path.windows(2) {
        let (a, b) = (&seg[0], &seg[1]);
        let t = move |s: f64| -> Vec<C64> { a.iter().zip(b).map(|(x, y)| x + (y - x) * s).collect() };
        for k in 0..steps {
            let s0 = k as f64 / steps as f64;
            let s1 = (k + 1) as f64 / steps as f64;
            cur = walker.advance(&t, s0, s1, &cur, 0)?;
        }
    }
    Ok(BraidWord::new(walker.letters))
}

/// A closed polygon approximating the loop `t_index = base + r e^{iθ}` with
/// the other parameters fixed, starting at angle `phase`, with `vertices` corners.
pub fn circle_path(base: &[C64], index: usize, radius: f64, phase: f64, vertices: usize) -> Vec<Vec<C64>> {
    (0..=vertices)
        .map(|k| {
            let mut p = base.to_vec();
            p[index] += C64::from_polar(radius, phase + std::f64::consts::TAU * k as f64 / vertices as f64);
            p
        })
        .collect()
}

/// Whether all critical values agree with the roots of `LL(t)` within `tol`
/// (as multisets, via greedy matching).
pub fn roots_match(a: &[C64], b: &[C64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|x| {
        let best = (0..b.len()).filter(|&k| !used[k]).min_by(|&i, &j| (x - b[i]).norm().total_cmp(&(x - b[j]).norm()));
        match best {
            Some(k) if (x - b[k]).norm() <= tol * (1.0 + x.norm()) => {
                used[k] = true;
                true
            }
            _ => false,
        }
    })
}
