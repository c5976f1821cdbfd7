//! Weighted designs on spheres and projective spaces, and their verification.
//!
//! A weighted design `(X, λ)` on `Σ` averages every polynomial of degree `≤ t`
//! exactly: `Σ_x λ(x) f(x)` equals the uniform average of `f` over `Σ`.

mod catalog;
mod fibers;
mod quadrature;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use catalog::{catalog, catalog_entry, catalog_listing, CatalogEntry, CatalogName, ListingRow, Strength};
pub use fibers::fiber_design;
pub use quadrature::{gauss_legendre, gauss_product_s2};

use crate::algebra::{self, Algebra};
use crate::construct::{lift, LiftSpec};
use crate::error::{DesignError, Result};
use crate::geometry::{
    canonicalize, projector_coordinates, random_sphere_point, Fibration, ProjectivePoint, Space,
    SpherePoint, EQ_TOL,
};
use crate::moments::{gegenbauer_kernels, walk_weighted_moments, DEFAULT_MONOMIAL_CAP};

/// Default per-moment verification tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Allowed deviation of the weight sum from 1.
pub const WEIGHT_SUM_TOL: f64 = 1e-12;
/// Number of seeded random sample points used by the inner-product verifier.
pub const INNER_PRODUCT_SAMPLES: usize = 200;
const INNER_PRODUCT_SEED: u64 = 0x05ee_dd35_16e5;

/// A finite point set with positive weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedDesign {
    space: Space,
    points: Vec<Vec<f64>>,
    weights: Vec<f64>,
    name: Option<String>,
    claimed_strength: Option<usize>,
}

impl WeightedDesign {
    /// Validates and builds a design. Rows of a projective design are
    /// representatives on `S^d` and are replaced by their canonical form.
    pub fn new(space: Space, points: Vec<Vec<f64>>, weights: Vec<f64>) -> Result<Self> {
        space.validate()?;
        if points.is_empty() {
            return Err(DesignError::InvalidDesign("a design needs at least one point".into()));
        }
        if weights.len() != points.len() {
            return Err(DesignError::InvalidDesign(format!(
                "{} weights for {} points",
                weights.len(),
                points.len()
            )));
        }
        if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w > 0.0)) {
            return Err(DesignError::InvalidDesign(format!("weight {w} is not positive")));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(DesignError::InvalidDesign(format!("weights sum to {total}, not 1")));
        }
        let expected = space.ambient_dim();
        for row in &points {
            if row.len() != expected {
                return Err(DesignError::DimensionMismatch {
                    expected,
                    found: row.len(),
                });
            }
            SpherePoint::new(row.clone())?;
        }
        let points = match space {
            Space::Sphere { .. } => points,
            Space::Projective { algebra, .. } => {
                points.iter().map(|p| canonicalize(algebra, p)).collect()
            }
        };
        if let Some((i, j)) = find_coincident(space, &points) {
            return Err(DesignError::InvalidDesign(format!(
                "points {i} and {j} coincide"
            )));
        }
        Ok(Self {
            space,
            points,
            weights,
            name: None,
            claimed_strength: None,
        })
    }

    /// A design with the constant weight `1/|X|`.
    pub fn uniform(space: Space, points: Vec<Vec<f64>>) -> Result<Self> {
        let n = points.len().max(1);
        Self::new(space, points, vec![1.0 / n as f64; n])
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_claimed_strength(mut self, t: Option<usize>) -> Self {
        self.claimed_strength = t;
        self
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn claimed_strength(&self) -> Option<usize> {
        self.claimed_strength
    }

    pub fn is_uniform(&self) -> bool {
        let w0 = self.weights[0];
        self.weights.iter().all(|w| (w - w0).abs() <= 1e-15)
    }

    pub fn sphere_point(&self, i: usize) -> Result<SpherePoint> {
        SpherePoint::new(self.points[i].clone())
    }

    pub fn projective_point(&self, i: usize) -> Result<ProjectivePoint> {
        match self.space {
            Space::Projective { algebra, n } => {
                ProjectivePoint::from_representative(algebra, n, &self.points[i])
            }
            Space::Sphere { .. } => Err(DesignError::InvalidSpace(format!(
                "{} is not a projective space",
                self.space
            ))),
        }
    }
}

/// First pair of points closer than [`EQ_TOL`], comparing projectors on
/// projective spaces. Candidates are found by sorting along a fixed generic
/// direction, so well separated point sets cost `O(N log N)`.
pub(crate) fn find_coincident(space: Space, points: &[Vec<f64>]) -> Option<(usize, usize)> {
    let keys: Vec<Vec<f64>> = match space {
        Space::Sphere { .. } => points.to_vec(),
        Space::Projective { algebra, .. } => points
            .iter()
            .map(|p| projector_coordinates(algebra, p))
            .collect(),
    };
    let dir: Vec<f64> = (0..keys.first().map_or(0, Vec::len))
        .map(|i| (1.0 + i as f64 * 0.618_033_988_749_895).sin())
        .collect();
    let scale: f64 = dir.iter().map(|d| d.abs()).sum();
    let proj: Vec<f64> = keys
        .iter()
        .map(|k| k.iter().zip(&dir).map(|(a, b)| a * b).sum())
        .collect();
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| proj[a].total_cmp(&proj[b]));
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[pos + 1..] {
            if proj[j] - proj[i] > EQ_TOL * scale {
                break;
            }
            let dist = keys[i]
                .iter()
                .zip(&keys[j])
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            if dist <= EQ_TOL {
                return Some((i.min(j), i.max(j)));
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Moment,
    Gegenbauer,
    LiftOracle,
    InnerProduct,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Moment => "moment",
            Method::Gegenbauer => "gegenbauer",
            Method::LiftOracle => "lift-oracle",
            Method::InnerProduct => "innerproduct",
        })
    }
}

impl FromStr for Method {
    type Err = DesignError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "moment" => Ok(Method::Moment),
            "gegenbauer" => Ok(Method::Gegenbauer),
            "lift-oracle" => Ok(Method::LiftOracle),
            "innerproduct" | "inner-product" => Ok(Method::InnerProduct),
            other => Err(DesignError::Unsupported(format!("unknown method `{other}`"))),
        }
    }
}

/// Worst deviation per degree `0..=t` and the resulting verdicts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub method: Method,
    pub tested_strength: usize,
    pub tolerance: f64,
    pub per_degree_deviation: Vec<f64>,
}

impl VerificationReport {
    pub fn verdict(&self, degree: usize) -> bool {
        self.per_degree_deviation[degree] <= self.tolerance
    }

    pub fn verdicts(&self) -> Vec<bool> {
        (0..=self.tested_strength).map(|s| self.verdict(s)).collect()
    }

    /// Passes at every degree up to `tested_strength`.
    pub fn passes(&self) -> bool {
        self.passes_at(self.tested_strength)
    }

    /// Passes at every degree up to `t`.
    pub fn passes_at(&self, t: usize) -> bool {
        (0..=t.min(self.tested_strength)).all(|s| self.verdict(s))
    }

    pub fn failing_degrees(&self) -> Vec<usize> {
        (0..=self.tested_strength).filter(|&s| !self.verdict(s)).collect()
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.failing_degrees().first().copied()
    }

    /// Largest `t` passed, `None` when even degree 0 fails.
    pub fn certified_strength(&self) -> Option<usize> {
        match self.first_failure() {
            Some(0) => None,
            Some(s) => Some(s - 1),
            None => Some(self.tested_strength),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "method {}  strength {}  tolerance {:e}",
            self.method, self.tested_strength, self.tolerance
        )?;
        writeln!(f, "{:>6}  {:>12}  verdict", "degree", "deviation")?;
        for (s, dev) in self.per_degree_deviation.iter().enumerate() {
            let verdict = if self.verdict(s) { "pass" } else { "FAIL" };
            writeln!(f, "{s:>6}  {dev:>12.3e}  {verdict}")?;
        }
        match self.first_failure() {
            None => write!(f, "result: pass at t = {}", self.tested_strength),
            Some(s) => write!(f, "result: fail at degree {s}"),
        }
    }
}

fn require_sphere(design: &WeightedDesign) -> Result<usize> {
    match design.space() {
        Space::Sphere { m } => Ok(m),
        other => Err(DesignError::InvalidSpace(format!("{other} is not a sphere"))),
    }
}

/// Checks every monomial of degree `≤ t` against its exact sphere average.
pub fn verify_spherical(design: &WeightedDesign, t: usize, tol: f64) -> Result<VerificationReport> {
    verify_spherical_capped(design, t, tol, DEFAULT_MONOMIAL_CAP)
}

pub fn verify_spherical_capped(
    design: &WeightedDesign,
    t: usize,
    tol: f64,
    cap: u128,
) -> Result<VerificationReport> {
    let m = require_sphere(design)?;
    let mut deviation = vec![0.0f64; t + 1];
    walk_weighted_moments(m, t, design.points(), design.weights(), cap, |_, deg, sum, avg| {
        deviation[deg] = deviation[deg].max((sum - avg).abs());
    })?;
    Ok(VerificationReport {
        method: Method::Moment,
        tested_strength: t,
        tolerance: tol,
        per_degree_deviation: deviation,
    })
}

/// Checks `Σ_{i,j} λ_i λ_j P_l(⟨x_i, x_j⟩) = 0` for each harmonic degree
/// `1 ≤ l ≤ t`, with `P_l` the normalized Gegenbauer kernel of `S^m`.
/// Degree 0 reports `|Σ λ − 1|`.
pub fn verify_spherical_gegenbauer(
    design: &WeightedDesign,
    t: usize,
    tol: f64,
) -> Result<VerificationReport> {
    let m = require_sphere(design)?;
    let pts = design.points();
    let w = design.weights();
    let mut sums = vec![0.0f64; t + 1];
    for i in 0..pts.len() {
        for j in i..pts.len() {
            let u: f64 = pts[i].iter().zip(&pts[j]).map(|(a, b)| a * b).sum();
            let factor = if i == j { 1.0 } else { 2.0 } * w[i] * w[j];
            for (s, p) in sums.iter_mut().zip(gegenbauer_kernels(m, t, u.clamp(-1.0, 1.0))) {
                *s += factor * p;
            }
        }
    }
    let total: f64 = w.iter().sum();
    let mut deviation: Vec<f64> = sums.iter().map(|s| s.abs()).collect();
    deviation[0] = (total - 1.0).abs();
    Ok(VerificationReport {
        method: Method::Gegenbauer,
        tested_strength: t,
        tolerance: tol,
        per_degree_deviation: deviation,
    })
}

/// `E|⟨x, ω⟩_𝔽|^{2s}` for uniform `ω ∈ S^d`: `∏_{i<s} ((k+1)/2 + i) / ((d+1)/2 + i)`.
pub fn projective_inner_product_moment(k: usize, d: usize, s: usize) -> f64 {
    (0..s)
        .map(|i| ((k + 1) as f64 / 2.0 + i as f64) / ((d + 1) as f64 / 2.0 + i as f64))
        .product()
}

/// `|Σ_i x̄_i y_i|²`, the squared modulus of the 𝔽-Hermitian inner product.
fn hermitian_overlap_sqr(algebra: Algebra, x: &[f64], y: &[f64]) -> f64 {
    let dim = algebra.dim();
    let mut acc = vec![0.0; dim];
    let mut conj = vec![0.0; dim];
    let mut prod = vec![0.0; dim];
    for (xi, yi) in x.chunks(dim).zip(y.chunks(dim)) {
        algebra::conj_into(xi, &mut conj);
        algebra::mul_into(&conj, yi, &mut prod);
        acc.iter_mut().zip(&prod).for_each(|(a, p)| *a += p);
    }
    algebra::norm_sqr(&acc)
}

/// Verifies a design on `𝔽P^n` at projective strength `t`.
///
/// `LiftOracle` lifts the design with `(2t+1)`-designs on every fiber and
/// verifies the lift on `S^d` at `2t+1`; projective degree `s` reports the worst
/// of sphere degrees `2s` and `2s+1`. `InnerProduct` compares
/// `Σ_y λ(y) |⟨x, y⟩|^{2s}` with its sphere average for seeded sample points
/// `x` and every design point; it is unavailable over 𝕆.
pub fn verify_projective(
    design: &WeightedDesign,
    t: usize,
    tol: f64,
    method: Method,
) -> Result<VerificationReport> {
    let Space::Projective { algebra, n } = design.space() else {
        return Err(DesignError::InvalidSpace(format!(
            "{} is not a projective space",
            design.space()
        )));
    };
    let fibration = Fibration::projective(algebra, n)?;
    match method {
        Method::LiftOracle => {
            let fiber = fiber_design(fibration.k(), 2 * t + 1)?;
            let lifted = lift(&LiftSpec::new(fibration, design.clone(), fiber))?;
            let sphere = verify_spherical(&lifted, 2 * t + 1, tol)?;
            let deviation = (0..=t)
                .map(|s| {
                    sphere.per_degree_deviation[2 * s].max(sphere.per_degree_deviation[2 * s + 1])
                })
                .collect();
            Ok(VerificationReport {
                method,
                tested_strength: t,
                tolerance: tol,
                per_degree_deviation: deviation,
            })
        }
        Method::InnerProduct => {
            if algebra == Algebra::Octonion {
                return Err(DesignError::Unsupported(
                    "the inner-product test has no spanning-set guarantee over O".into(),
                ));
            }
            let d = fibration.d();
            let mut rng = ChaCha8Rng::seed_from_u64(INNER_PRODUCT_SEED);
            let samples: Vec<Vec<f64>> = (0..INNER_PRODUCT_SAMPLES)
                .map(|_| random_sphere_point(&mut rng, d).into_coords())
                .chain(design.points().iter().cloned())
                .collect();
            let targets: Vec<f64> = (0..=t)
                .map(|s| projective_inner_product_moment(fibration.k(), d, s))
                .collect();
            let mut deviation = vec![0.0f64; t + 1];
            for x in &samples {
                let mut sums = vec![0.0; t + 1];
                for (y, w) in design.points().iter().zip(design.weights()) {
                    let g = hermitian_overlap_sqr(algebra, x, y);
                    let mut power = 1.0;
                    for s in sums.iter_mut() {
                        *s += w * power;
                        power *= g;
                    }
                }
                for (dev, (s, c)) in deviation.iter_mut().zip(sums.iter().zip(&targets)) {
                    *dev = dev.max((s - c).abs());
                }
            }
            Ok(VerificationReport {
                method,
                tested_strength: t,
                tolerance: tol,
                per_degree_deviation: deviation,
            })
        }
        Method::Moment | Method::Gegenbauer => Err(DesignError::Unsupported(format!(
            "method {method} applies to spherical designs; use lift-oracle or innerproduct"
        ))),
    }
}

/// Dispatches to the verifier for `method`, defaulting to `moment` on spheres
/// and `lift-oracle` on projective spaces.
pub fn verify(
    design: &WeightedDesign,
    t: usize,
    tol: f64,
    method: Option<Method>,
) -> Result<VerificationReport> {
    match (design.space(), method) {
        (Space::Sphere { .. }, None | Some(Method::Moment)) => verify_spherical(design, t, tol),
        (Space::Sphere { .. }, Some(Method::Gegenbauer)) => {
            verify_spherical_gegenbauer(design, t, tol)
        }
        (Space::Sphere { .. }, Some(other)) => Err(DesignError::Unsupported(format!(
            "method {other} applies to projective designs"
        ))),
        (Space::Projective { .. }, None) => verify_projective(design, t, tol, Method::LiftOracle),
        (Space::Projective { .. }, Some(method)) => verify_projective(design, t, tol, method),
    }
}
