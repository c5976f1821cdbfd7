//! Lifting designs along fibrations `S^d → Σ` and collapsing them back.
//!
//! A lift places a fiber design on every fiber above a base design and weights
//! each point by the product of its base and fiber weights. A collapse groups a
//! sphere design by image and sums the weights of each group.

use rand::Rng;

use crate::algebra::Algebra;
use crate::designs::{find_coincident, WeightedDesign};
use crate::error::{DesignError, Result};
use crate::geometry::{
    hopf_chart, hopf_chart_inverse, random_sphere_point, Fibration, Space, SpherePoint, EQ_TOL,
};

/// Image distances in `(EQ_TOL, AMBIGUITY_TOL]` are neither clearly equal nor
/// clearly distinct; collapsing rejects them.
pub const AMBIGUITY_TOL: f64 = 1e-6;

/// Fiber designs for a lift: one shared design, or one per base point.
#[derive(Debug, Clone)]
pub enum FiberDesigns {
    Uniform(WeightedDesign),
    PerBase(Vec<WeightedDesign>),
}

impl FiberDesigns {
    fn get(&self, i: usize) -> &WeightedDesign {
        match self {
            FiberDesigns::Uniform(d) => d,
            FiberDesigns::PerBase(ds) => &ds[i],
        }
    }
}

#[derive(Debug, Clone)]
pub struct LiftSpec {
    pub fibration: Fibration,
    pub base: WeightedDesign,
    pub fibers: FiberDesigns,
    /// Explicit fiber base points `z_y ∈ S^d`, one per base point; the default
    /// base points are used when absent.
    pub basepoints: Option<Vec<Vec<f64>>>,
}

impl LiftSpec {
    pub fn new(fibration: Fibration, base: WeightedDesign, fiber: WeightedDesign) -> Self {
        Self {
            fibration,
            base,
            fibers: FiberDesigns::Uniform(fiber),
            basepoints: None,
        }
    }

    pub fn with_fibers(mut self, fibers: Vec<WeightedDesign>) -> Self {
        self.fibers = FiberDesigns::PerBase(fibers);
        self
    }

    pub fn with_basepoints(mut self, basepoints: Vec<Vec<f64>>) -> Self {
        self.basepoints = Some(basepoints);
        self
    }
}

/// Uniformly random points `z_y` on the fibers above every base point.
pub fn random_basepoints<R: Rng + ?Sized>(
    fibration: &Fibration,
    base: &WeightedDesign,
    rng: &mut R,
) -> Result<Vec<Vec<f64>>> {
    base.points()
        .iter()
        .map(|w| {
            let z = random_sphere_point(rng, fibration.k());
            fibration.fiber_point(w, z.coords())
        })
        .collect()
}

/// `X = { z_y (u_y z) : y ∈ Y, z ∈ Z_y }` with `λ_X = λ_Y λ_{Z_y}`.
///
/// `u_y` is the unit taking the default base point of the fiber to the chosen
/// `z_y`; it is 1 without explicit base points. Over ℝ, ℂ and ℍ this is the
/// same as `z_y z`.
pub fn lift(spec: &LiftSpec) -> Result<WeightedDesign> {
    let fib = &spec.fibration;
    if spec.base.space() != fib.base_space() {
        return Err(DesignError::InvalidSpace(format!(
            "base design lives on {}, the fibration's base is {}",
            spec.base.space(),
            fib.base_space()
        )));
    }
    let count = spec.base.len();
    if let FiberDesigns::PerBase(ds) = &spec.fibers {
        if ds.len() != count {
            return Err(DesignError::DimensionMismatch {
                expected: count,
                found: ds.len(),
            });
        }
    }
    if let Some(bps) = &spec.basepoints {
        if bps.len() != count {
            return Err(DesignError::DimensionMismatch {
                expected: count,
                found: bps.len(),
            });
        }
    }
    let d = fib.d();
    let mut points = Vec::new();
    let mut weights = Vec::new();
    for (i, (y, lambda)) in spec.base.points().iter().zip(spec.base.weights()).enumerate() {
        let fiber = spec.fibers.get(i);
        if fiber.space() != fib.fiber_space() {
            return Err(DesignError::InvalidSpace(format!(
                "fiber design lives on {}, the fiber is {}",
                fiber.space(),
                fib.fiber_space()
            )));
        }
        let default = fib.fiber_basepoint(y)?;
        let phase = match &spec.basepoints {
            None => None,
            Some(bps) => {
                let z_y = SpherePoint::new(bps[i].clone())
                    .map_err(|_| DesignError::BasepointNotInFiber { index: i })?;
                let image = fib.project(z_y.coords())?;
                if fib.base_distance(&image, y) > EQ_TOL {
                    return Err(DesignError::BasepointNotInFiber { index: i });
                }
                Some(fib.phase_of(&default, z_y.coords()))
            }
        };
        for (z, mu) in fiber.points().iter().zip(fiber.weights()) {
            let mut x = vec![0.0; d + 1];
            fib.fiber_point_into(&default, phase.as_deref(), z, &mut x);
            let norm = x.iter().map(|c| c * c).sum::<f64>().sqrt();
            x.iter_mut().for_each(|c| *c /= norm);
            points.push(x);
            weights.push(lambda * mu);
        }
    }
    let space = fib.total_space();
    if let Some((first, second)) = find_coincident(space, &points) {
        return Err(DesignError::PointCollision { first, second });
    }
    let total: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= total);
    WeightedDesign::new(space, points, weights)
}

/// Groups the points of a design on `S^d` by their image under the fibration
/// and sums the weights of each group. The result is a design on the base,
/// tagged with claimed strength `⌊t/2⌋` for an input of strength `t`.
pub fn collapse(design: &WeightedDesign, fibration: Fibration, t: usize) -> Result<WeightedDesign> {
    if design.space() != fibration.total_space() {
        return Err(DesignError::InvalidSpace(format!(
            "design lives on {}, the fibration's total space is {}",
            design.space(),
            fibration.total_space()
        )));
    }
    let mut reps: Vec<Vec<f64>> = Vec::new();
    let mut owners: Vec<usize> = Vec::new();
    let mut weights: Vec<f64> = Vec::new();
    for (i, (x, lambda)) in design.points().iter().zip(design.weights()).enumerate() {
        let image = fibration.project(x)?;
        let mut group = None;
        for (g, rep) in reps.iter().enumerate() {
            let dist = fibration.base_distance(&image, rep);
            if dist <= EQ_TOL {
                group = Some(g);
                break;
            }
            if dist <= AMBIGUITY_TOL {
                return Err(DesignError::GroupingAmbiguity {
                    first: owners[g],
                    second: i,
                    distance: dist,
                });
            }
        }
        match group {
            Some(g) => weights[g] += lambda,
            None => {
                reps.push(image);
                owners.push(i);
                weights.push(*lambda);
            }
        }
    }
    let reps = reps
        .into_iter()
        .map(|r| {
            let norm = r.iter().map(|c| c * c).sum::<f64>().sqrt();
            r.into_iter().map(|c| c / norm).collect()
        })
        .collect();
    let total: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= total);
    Ok(WeightedDesign::new(fibration.base_space(), reps, weights)?.with_claimed_strength(Some(t / 2)))
}

/// Carries a design on `𝔽P^1` to `S^{k+1}` through the Hopf chart; weights
/// and strength are unchanged.
pub fn projective_line_to_sphere(design: &WeightedDesign) -> Result<WeightedDesign> {
    let Space::Projective { n: 1, .. } = design.space() else {
        return Err(DesignError::InvalidSpace(format!(
            "{} is not a projective line",
            design.space()
        )));
    };
    let points = (0..design.len())
        .map(|i| Ok(hopf_chart(&design.projective_point(i)?)?.into_coords()))
        .collect::<Result<Vec<_>>>()?;
    let out = WeightedDesign::new(Space::sphere(design.space().ambient_dim() / 2), points, design.weights().to_vec())?;
    Ok(out.with_claimed_strength(design.claimed_strength()))
}

/// Inverse of [`projective_line_to_sphere`] for a design on `S^{dim 𝔽}`.
pub fn sphere_to_projective_line(design: &WeightedDesign, algebra: Algebra) -> Result<WeightedDesign> {
    let space = Space::projective(algebra, 1)?;
    if design.space() != Space::sphere(algebra.dim()) {
        return Err(DesignError::InvalidSpace(format!(
            "{} is not S^{} for {algebra}P^1",
            design.space(),
            algebra.dim()
        )));
    }
    let points = (0..design.len())
        .map(|i| Ok(hopf_chart_inverse(&design.sphere_point(i)?, algebra)?.rep().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    let out = WeightedDesign::new(space, points, design.weights().to_vec())?;
    Ok(out.with_claimed_strength(design.claimed_strength()))
}
