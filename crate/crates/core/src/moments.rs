//! Polynomial machinery on spheres: monomial bases, exact sphere averages of
//! monomials, normalized Gegenbauer kernels and fiber averages.
//!
//! The uniform average of `x^α` over `S^m` vanishes unless every exponent is
//! even, and otherwise equals
//!
//! ```text
//!     ∏ (α_i − 1)!!  /  ∏_{j < |α|/2} (m + 1 + 2j)
//! ```
//!
//! which is the Γ-ratio `Γ((m+1)/2) ∏ Γ((α_i+1)/2) / (Γ(1/2)^{m+1} Γ((m+1+|α|)/2))`
//! with the half-integer Γ values cancelled.

use std::fmt;

use crate::designs::WeightedDesign;
use crate::error::{DesignError, Result};
use crate::geometry::Fibration;

/// Default cap on the number of monomials a moment computation may enumerate.
pub const DEFAULT_MONOMIAL_CAP: u128 = 5_000_000;

/// Exponent vector of a monomial in `m + 1` real variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn zero(vars: usize) -> Self {
        Self(vec![0; vars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_even(&self) -> bool {
        self.0.iter().all(|e| e % 2 == 0)
    }

    pub fn evaluate(&self, x: &[f64]) -> f64 {
        self.0
            .iter()
            .zip(x)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, &xi)| xi.powi(e as i32))
            .product()
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// `C(m + 1 + t, t)`, the number of monomials of degree at most `t` in `m + 1` variables.
pub fn monomial_count(m: usize, t: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 1..=t as u128 {
        c = c * (m as u128 + 1 + i) / i;
    }
    c
}

fn check_cap(m: usize, t: usize, cap: u128) -> Result<()> {
    let monomials = monomial_count(m, t);
    if monomials > cap {
        return Err(DesignError::CapExceeded { monomials, cap });
    }
    Ok(())
}

pub fn enumerate_monomials(m: usize, t: usize) -> Result<Vec<MultiIndex>> {
    enumerate_monomials_capped(m, t, DEFAULT_MONOMIAL_CAP)
}

/// All exponent vectors of degree `≤ t` in `m + 1` variables, ordered by
/// degree and then lexicographically with the first variable's exponent
/// descending.
pub fn enumerate_monomials_capped(m: usize, t: usize, cap: u128) -> Result<Vec<MultiIndex>> {
    check_cap(m, t, cap)?;
    let vars = m + 1;
    let mut out = Vec::with_capacity(monomial_count(m, t) as usize);
    let mut current = vec![0u32; vars];
    for degree in 0..=t as u32 {
        fill_degree(&mut current, 0, degree, &mut out);
    }
    Ok(out)
}

fn fill_degree(current: &mut [u32], var: usize, remaining: u32, out: &mut Vec<MultiIndex>) {
    if var + 1 == current.len() {
        current[var] = remaining;
        out.push(MultiIndex(current.to_vec()));
        current[var] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[var] = e;
        fill_degree(current, var + 1, remaining - e, out);
    }
    current[var] = 0;
}

/// `∏_{j < s/2} (m + 1 + 2j)` for every even degree `s ≤ t` (odd slots unused).
fn moment_denominators(m: usize, t: usize) -> Vec<f64> {
    let mut den = vec![1.0; t + 1];
    for s in (2..=t).step_by(2) {
        den[s] = den[s - 2] * (m as f64 + 1.0 + (s - 2) as f64);
    }
    den
}

/// Uniform average of `x^α` over `S^m`.
pub fn sphere_monomial_average(m: usize, alpha: &MultiIndex) -> Result<f64> {
    if alpha.vars() != m + 1 {
        return Err(DesignError::DimensionMismatch {
            expected: m + 1,
            found: alpha.vars(),
        });
    }
    if !alpha.is_even() {
        return Ok(0.0);
    }
    let mut value = 1.0;
    let mut k = 0u32;
    for &e in alpha.exponents() {
        for odd in (1..e).step_by(2) {
            value *= f64::from(odd) / (m as f64 + 1.0 + 2.0 * f64::from(k));
            k += 1;
        }
    }
    Ok(value)
}

/// Sphere averages of every monomial of degree `≤ t` on `S^m`.
#[derive(Debug, Clone)]
pub struct MomentTable {
    m: usize,
    t: usize,
    entries: Vec<(MultiIndex, f64)>,
}

impl MomentTable {
    pub fn new(m: usize, t: usize) -> Result<Self> {
        let entries = enumerate_monomials(m, t)?
            .into_iter()
            .map(|alpha| {
                let avg = sphere_monomial_average(m, &alpha)?;
                Ok((alpha, avg))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { m, t, entries })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn entries(&self) -> &[(MultiIndex, f64)] {
        &self.entries
    }

    pub fn get(&self, alpha: &MultiIndex) -> Option<f64> {
        self.entries
            .binary_search_by(|(a, _)| graded_cmp(a, alpha))
            .ok()
            .map(|i| self.entries[i].1)
    }
}

fn graded_cmp(a: &MultiIndex, b: &MultiIndex) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.exponents().cmp(a.exponents()))
}

/// Visits every monomial `x^α` of degree `≤ t` on `S^m` with its weighted sum
/// `Σ_p w_p x_p^α` over `points` and its exact sphere average.
///
/// Each visit costs `O(points)`: products are extended one variable at a time.
pub(crate) fn walk_weighted_moments(
    m: usize,
    t: usize,
    points: &[Vec<f64>],
    weights: &[f64],
    cap: u128,
    visit: impl FnMut(&[u32], usize, f64, f64),
) -> Result<()> {
    check_cap(m, t, cap)?;
    let n = points.len();
    let mut walk = MomentWalk {
        points,
        n,
        den: moment_denominators(m, t),
        levels: vec![0.0; (m + 2) * n],
        exps: vec![0; m + 1],
        visit,
    };
    walk.levels[..n].copy_from_slice(weights);
    walk.step(0, 0, t, 1.0, true);
    Ok(())
}

/// Level `i` of `levels` holds `w_p ∏_{j<i} x_{p,j}^{α_j}` for every point.
struct MomentWalk<'a, F> {
    points: &'a [Vec<f64>],
    n: usize,
    den: Vec<f64>,
    levels: Vec<f64>,
    exps: Vec<u32>,
    visit: F,
}

impl<F: FnMut(&[u32], usize, f64, f64)> MomentWalk<'_, F> {
    fn step(&mut self, var: usize, degree: usize, budget: usize, numerator: f64, even: bool) {
        let n = self.n;
        let last = var + 1 == self.exps.len();
        let mut num = numerator;
        for e in 0..=budget {
            {
                let (head, tail) = self.levels.split_at_mut((var + 1) * n);
                let cur = &mut tail[..n];
                if e == 0 {
                    cur.copy_from_slice(&head[var * n..]);
                } else {
                    for (c, p) in cur.iter_mut().zip(self.points) {
                        *c *= p[var];
                    }
                    if e % 2 == 0 {
                        num *= (e - 1) as f64;
                    }
                }
            }
            self.exps[var] = e as u32;
            let all_even = even && e % 2 == 0;
            let deg = degree + e;
            if last {
                let sum: f64 = self.levels[(var + 1) * n..(var + 2) * n].iter().sum();
                let avg = if all_even { num / self.den[deg] } else { 0.0 };
                (self.visit)(&self.exps, deg, sum, avg);
            } else {
                self.step(var + 1, deg, budget - e, num, all_even);
            }
        }
        self.exps[var] = 0;
    }
}

/// Normalized Gegenbauer kernel `C_l^{((m−1)/2)}(u) / C_l^{((m−1)/2)}(1)` on `S^m`.
///
/// The reproducing kernel of degree-`l` harmonics on `S^m` is a positive
/// multiple of this; `m = 1` gives Chebyshev `T_l`, `m = 2` Legendre `P_l`.
/// On `S^0` only degrees 0 and 1 carry harmonics, so higher kernels vanish.
pub fn gegenbauer_kernel(m: usize, l: usize, u: f64) -> f64 {
    gegenbauer_kernels(m, l, u)[l]
}

/// Normalized kernels of degrees `0..=l` at `u`.
pub fn gegenbauer_kernels(m: usize, l: usize, u: f64) -> Vec<f64> {
    let mut p = vec![0.0; l + 1];
    p[0] = 1.0;
    if l >= 1 {
        p[1] = u;
    }
    if m == 0 {
        return p;
    }
    let mf = m as f64;
    for j in 1..l {
        let jf = j as f64;
        p[j + 1] = ((2.0 * jf + mf - 1.0) * u * p[j] - jf * p[j - 1]) / (jf + mf - 1.0);
    }
    p
}

/// Average of `f` over the fiber above the base point `w`, computed with a
/// quadrature design on `S^k`: `Σ_z λ(z) f(z_w z)`.
///
/// Exact whenever `f` restricted to the fiber is a polynomial of degree at
/// most the quadrature's strength.
pub fn fiber_average(
    f: &dyn Fn(&[f64]) -> f64,
    fibration: &Fibration,
    w: &[f64],
    quadrature: &WeightedDesign,
) -> Result<f64> {
    if quadrature.space() != fibration.fiber_space() {
        return Err(DesignError::InvalidSpace(format!(
            "fiber quadrature lives on {}, expected {}",
            quadrature.space(),
            fibration.fiber_space()
        )));
    }
    let basepoint = fibration.fiber_basepoint(w)?;
    let mut x = vec![0.0; basepoint.len()];
    let mut total = 0.0;
    for (z, lambda) in quadrature.points().iter().zip(quadrature.weights()) {
        fibration.fiber_point_into(&basepoint, None, z, &mut x);
        total += lambda * f(&x);
    }
    Ok(total)
}

/// A real polynomial `Σ c_α x^α`.
#[derive(Debug, Clone, Default)]
pub struct Polynomial {
    terms: Vec<(MultiIndex, f64)>,
}

impl Polynomial {
    pub fn new(terms: Vec<(MultiIndex, f64)>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &[(MultiIndex, f64)] {
        &self.terms
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(a, _)| a.degree()).max().unwrap_or(0)
    }

    pub fn evaluate(&self, x: &[f64]) -> f64 {
        self.terms.iter().map(|(a, c)| c * a.evaluate(x)).sum()
    }

    /// Exact uniform average over `S^m`.
    pub fn sphere_average(&self, m: usize) -> Result<f64> {
        self.terms
            .iter()
            .map(|(a, c)| Ok(c * sphere_monomial_average(m, a)?))
            .sum()
    }
}
