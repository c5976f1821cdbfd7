//! Spheres, projective spaces over ℝ, ℂ, ℍ, 𝕆 and the maps relating them.
//!
//! Points are stored as real coordinate vectors. A point of `S^d ⊂ 𝔽^{n+1}` is
//! read as `n + 1` consecutive blocks of `dim(𝔽)` real coefficients, and a point
//! of `𝔽P^n` is stored through a canonical representative on `S^d`: the last
//! nonzero block `ω_j` is rotated onto the positive real axis,
//! `ω ↦ (ω ω̄_j) / |ω_j|`.
//!
//! Octonionic classes are only closed under right multiplication by unit
//! scalars when the representative has a real coordinate, so every base point
//! produced here carries one, and fiber points are formed as `z_w (u z)`.

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::algebra::{self, Algebra, AlgebraElement};
use crate::error::{DesignError, Result};

/// Unit-norm tolerance for sphere points.
pub const NORM_TOL: f64 = 1e-12;
/// Tolerance for identifying two points or two projective classes.
pub const EQ_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Space {
    Sphere { m: usize },
    Projective { algebra: Algebra, n: usize },
}

impl Space {
    pub fn sphere(m: usize) -> Self {
        Space::Sphere { m }
    }

    pub fn projective(algebra: Algebra, n: usize) -> Result<Self> {
        let space = Space::Projective { algebra, n };
        space.validate()?;
        Ok(space)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Space::Sphere { .. } => Ok(()),
            Space::Projective { n: 0, .. } => {
                Err(DesignError::InvalidSpace("projective spaces need n >= 1".into()))
            }
            Space::Projective {
                algebra: Algebra::Octonion,
                n,
            } if n != 1 => Err(DesignError::InvalidSpace(format!(
                "OP^{n} is not supported; octonionic projective spaces need n = 1"
            ))),
            Space::Projective { .. } => Ok(()),
        }
    }

    /// Length of a coordinate row: `m + 1` on `S^m`, `d + 1` on `𝔽P^n`.
    pub fn ambient_dim(&self) -> usize {
        match *self {
            Space::Sphere { m } => m + 1,
            Space::Projective { algebra, n } => algebra.dim() * (n + 1),
        }
    }

    pub fn is_sphere(&self) -> bool {
        matches!(self, Space::Sphere { .. })
    }
}

impl std::fmt::Display for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Space::Sphere { m } => write!(f, "S^{m}"),
            Space::Projective { algebra, n } => write!(f, "{algebra}P^{n}"),
        }
    }
}

/// A unit vector in `ℝ^{m+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpherePoint {
    coords: Vec<f64>,
}

impl SpherePoint {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(DesignError::InvalidSpace("empty coordinate vector".into()));
        }
        let norm = algebra::norm_sqr(&coords).sqrt();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(DesignError::NotUnit { norm });
        }
        Ok(Self { coords })
    }

    /// Scales a nonzero vector onto the sphere.
    pub fn normalized(mut coords: Vec<f64>) -> Result<Self> {
        let norm = algebra::norm_sqr(&coords).sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(DesignError::NotUnit { norm });
        }
        coords.iter_mut().for_each(|c| *c /= norm);
        Ok(Self { coords })
    }

    /// The sphere dimension `m`.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    pub fn dot(&self, other: &SpherePoint) -> f64 {
        self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).sum()
    }

    /// The `index`-th 𝔽-coordinate when the point is read as a tuple over `algebra`.
    pub fn coordinate(&self, algebra: Algebra, index: usize) -> Result<AlgebraElement> {
        block(&self.coords, algebra.dim(), index)
    }
}

fn block(coords: &[f64], dim: usize, index: usize) -> Result<AlgebraElement> {
    let blocks = coords.len() / dim;
    if index >= blocks || !coords.len().is_multiple_of(dim) {
        return Err(DesignError::IndexOutOfRange {
            index,
            dim: blocks,
        });
    }
    AlgebraElement::new(
        Algebra::from_dim(dim).expect("block dimension is 1, 2, 4 or 8"),
        &coords[index * dim..(index + 1) * dim],
    )
}

pub fn random_sphere_point<R: Rng + ?Sized>(rng: &mut R, m: usize) -> SpherePoint {
    loop {
        let v: Vec<f64> = (0..=m).map(|_| rng.sample(StandardNormal)).collect();
        if let Ok(p) = SpherePoint::normalized(v) {
            return p;
        }
    }
}

/// Rotates the last nonzero 𝔽-block of `coords` onto the positive real axis.
///
/// Applying it to its own output returns the input bit for bit.
pub fn canonicalize(algebra: Algebra, coords: &[f64]) -> Vec<f64> {
    let dim = algebra.dim();
    let Some(j) = (0..coords.len() / dim)
        .rev()
        .find(|&j| algebra::norm_sqr(&coords[j * dim..(j + 1) * dim]) > 0.0)
    else {
        return coords.to_vec();
    };
    let pivot = &coords[j * dim..(j + 1) * dim];
    if pivot[0] > 0.0 && pivot[1..].iter().all(|&c| c == 0.0) {
        return coords.iter().map(|c| c + 0.0).collect();
    }
    let r = algebra::norm_sqr(pivot).sqrt();
    let mut phase = vec![0.0; dim];
    algebra::conj_into(pivot, &mut phase);
    phase.iter_mut().for_each(|c| *c /= r);

    let mut out = vec![0.0; coords.len()];
    for (src, dst) in coords.chunks(dim).zip(out.chunks_mut(dim)) {
        algebra::mul_into(src, &phase, dst);
    }
    let p = &mut out[j * dim..(j + 1) * dim];
    p.iter_mut().for_each(|c| *c = 0.0);
    p[0] = r;
    out.iter().map(|c| c + 0.0).collect()
}

/// The entries `ω_i ω̄_j` (`i ≤ j`) of the rank-one Hermitian projector of `ω`.
///
/// They depend only on the class `[ω]`, including for `𝕆P¹`, where they are
/// the Hopf image up to a linear change of coordinates.
pub fn projector_coordinates(algebra: Algebra, coords: &[f64]) -> Vec<f64> {
    let dim = algebra.dim();
    let blocks: Vec<&[f64]> = coords.chunks(dim).collect();
    let mut out = Vec::with_capacity(blocks.len() * blocks.len() * dim);
    let mut conj = vec![0.0; dim];
    let mut prod = vec![0.0; dim];
    for (i, a) in blocks.iter().enumerate() {
        out.push(algebra::norm_sqr(a));
        for b in &blocks[i + 1..] {
            algebra::conj_into(b, &mut conj);
            algebra::mul_into(a, &conj, &mut prod);
            out.extend_from_slice(&prod);
        }
    }
    out
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// A point of `𝔽P^n`, held as its canonical representative.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectivePoint {
    algebra: Algebra,
    n: usize,
    rep: Vec<f64>,
}

impl ProjectivePoint {
    /// The class of a unit vector `ω ∈ S^d ⊂ 𝔽^{n+1}`.
    pub fn from_representative(algebra: Algebra, n: usize, coords: &[f64]) -> Result<Self> {
        let space = Space::projective(algebra, n)?;
        if coords.len() != space.ambient_dim() {
            return Err(DesignError::DimensionMismatch {
                expected: space.ambient_dim(),
                found: coords.len(),
            });
        }
        let omega = SpherePoint::new(coords.to_vec())?;
        Ok(Self {
            algebra,
            n,
            rep: canonicalize(algebra, omega.coords()),
        })
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> Space {
        Space::Projective {
            algebra: self.algebra,
            n: self.n,
        }
    }

    pub fn rep(&self) -> &[f64] {
        &self.rep
    }

    pub fn coordinate(&self, index: usize) -> Result<AlgebraElement> {
        block(&self.rep, self.algebra.dim(), index)
    }

    pub fn projector(&self) -> Vec<f64> {
        projector_coordinates(self.algebra, &self.rep)
    }

    /// Max-norm distance between the projectors of two classes.
    pub fn distance(&self, other: &ProjectivePoint) -> f64 {
        if self.space() != other.space() {
            return f64::INFINITY;
        }
        max_abs_diff(&self.projector(), &other.projector())
    }

    pub fn approx_eq(&self, other: &ProjectivePoint, tol: f64) -> bool {
        self.distance(other) <= tol
    }
}

/// `ω ↦ [ω]`, the quotient `S^d → 𝔽P^n`.
pub fn projective_map(omega: &SpherePoint, algebra: Algebra, n: usize) -> Result<ProjectivePoint> {
    ProjectivePoint::from_representative(algebra, n, omega.coords())
}

fn hopf_into(dim: usize, x: &[f64], out: &mut [f64]) {
    let (a, b) = x.split_at(dim);
    out[0] = algebra::norm_sqr(a) - algebra::norm_sqr(b);
    let mut conj = vec![0.0; dim];
    algebra::conj_into(b, &mut conj);
    algebra::mul_into(a, &conj, &mut out[1..]);
    out[1..].iter_mut().for_each(|c| *c *= 2.0);
}

/// `(ω₁, ω₂) ↦ (|ω₁|² − |ω₂|², 2 ω₁ ω̄₂)`, from `S^{2k+1}` to `S^{k+1}`.
pub fn hopf_map(omega: &SpherePoint, algebra: Algebra) -> Result<SpherePoint> {
    let dim = algebra.dim();
    if omega.coords().len() != 2 * dim {
        return Err(DesignError::DimensionMismatch {
            expected: 2 * dim,
            found: omega.coords().len(),
        });
    }
    let mut out = vec![0.0; dim + 1];
    hopf_into(dim, omega.coords(), &mut out);
    SpherePoint::normalized(out)
}

/// The identification `𝔽P¹ → S^{k+1}`, `[(a, b)] ↦ (|a|² − |b|², 2 a b̄)`.
pub fn hopf_chart(p: &ProjectivePoint) -> Result<SpherePoint> {
    if p.n() != 1 {
        return Err(DesignError::InvalidSpace(format!(
            "the Hopf chart is defined on {}P^1, not {}",
            p.algebra(),
            p.space()
        )));
    }
    hopf_map(&SpherePoint { coords: p.rep().to_vec() }, p.algebra())
}

/// A point of the Hopf fiber over `(ξ, η) ∈ S^{k+1}` with one real positive coordinate.
///
/// For `ξ ≥ 0` this is `(√(1+ξ), η̄/√(1+ξ)) / √2`; for `ξ < 0` the same fiber is
/// entered through `(η/√(1−ξ), √(1−ξ)) / √2`, which stays well conditioned
/// near the south pole and gives `(0, 1)` at `ξ = −1`.
fn hopf_basepoint(dim: usize, y: &[f64]) -> Vec<f64> {
    let xi = y[0].clamp(-1.0, 1.0);
    let eta = &y[1..];
    let mut out = vec![0.0; 2 * dim];
    if xi >= 0.0 {
        let s = (1.0 + xi).sqrt();
        out[0] = s / std::f64::consts::SQRT_2;
        algebra::conj_into(eta, &mut out[dim..]);
        out[dim..]
            .iter_mut()
            .for_each(|c| *c /= std::f64::consts::SQRT_2 * s);
    } else {
        let s = (1.0 - xi).sqrt();
        for (o, e) in out[..dim].iter_mut().zip(eta) {
            *o = e / (std::f64::consts::SQRT_2 * s);
        }
        out[dim] = s / std::f64::consts::SQRT_2;
    }
    let norm = algebra::norm_sqr(&out).sqrt();
    out.iter_mut().for_each(|c| *c = *c / norm + 0.0);
    out
}

/// Inverse of [`hopf_chart`].
pub fn hopf_chart_inverse(s: &SpherePoint, algebra: Algebra) -> Result<ProjectivePoint> {
    let dim = algebra.dim();
    if s.coords().len() != dim + 1 {
        return Err(DesignError::DimensionMismatch {
            expected: dim + 1,
            found: s.coords().len(),
        });
    }
    ProjectivePoint::from_representative(algebra, 1, &hopf_basepoint(dim, s.coords()))
}

/// The bundle `S^d → Σ` used to relate designs: either `Π_𝔽 : S^d → 𝔽P^n` or,
/// for `n = 1`, the Hopf map `π_𝔽 : S^{2k+1} → S^{k+1}`. Fibers are spheres `S^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "map", rename_all = "lowercase")]
pub enum Fibration {
    Projective { algebra: Algebra, n: usize },
    Hopf { algebra: Algebra },
}

impl Fibration {
    pub fn projective(algebra: Algebra, n: usize) -> Result<Self> {
        Space::projective(algebra, n)?;
        Ok(Fibration::Projective { algebra, n })
    }

    pub fn hopf(algebra: Algebra) -> Self {
        Fibration::Hopf { algebra }
    }

    /// The Hopf fibration whose base is `S^m`, if `m ∈ {1, 2, 4, 8}`.
    pub fn hopf_over(m: usize) -> Option<Self> {
        Algebra::from_dim(m).map(Fibration::hopf)
    }

    pub fn algebra(&self) -> Algebra {
        match *self {
            Fibration::Projective { algebra, .. } | Fibration::Hopf { algebra } => algebra,
        }
    }

    fn n(&self) -> usize {
        match *self {
            Fibration::Projective { n, .. } => n,
            Fibration::Hopf { .. } => 1,
        }
    }

    /// Fiber dimension `k = dim(𝔽) − 1`.
    pub fn k(&self) -> usize {
        self.algebra().k()
    }

    /// Total sphere dimension `d = (k+1) n + k`.
    pub fn d(&self) -> usize {
        (self.k() + 1) * self.n() + self.k()
    }

    pub fn total_space(&self) -> Space {
        Space::sphere(self.d())
    }

    pub fn fiber_space(&self) -> Space {
        Space::sphere(self.k())
    }

    pub fn base_space(&self) -> Space {
        match *self {
            Fibration::Projective { algebra, n } => Space::Projective { algebra, n },
            Fibration::Hopf { algebra } => Space::sphere(algebra.dim()),
        }
    }

    fn check_len(&self, coords: &[f64], space: Space) -> Result<()> {
        if coords.len() != space.ambient_dim() {
            return Err(DesignError::DimensionMismatch {
                expected: space.ambient_dim(),
                found: coords.len(),
            });
        }
        Ok(())
    }

    /// Base coordinates of the image of `x ∈ S^d`: the canonical representative
    /// for projective bases, the Hopf image for Hopf bases.
    pub fn project(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_len(x, self.total_space())?;
        Ok(match *self {
            Fibration::Projective { algebra, .. } => canonicalize(algebra, x),
            Fibration::Hopf { algebra } => {
                let mut out = vec![0.0; algebra.dim() + 1];
                hopf_into(algebra.dim(), x, &mut out);
                out
            }
        })
    }

    /// Distance between two base points: projector distance on `𝔽P^n`,
    /// max-coordinate distance on `S^{k+1}`.
    pub fn base_distance(&self, a: &[f64], b: &[f64]) -> f64 {
        match *self {
            Fibration::Projective { algebra, .. } => max_abs_diff(
                &projector_coordinates(algebra, a),
                &projector_coordinates(algebra, b),
            ),
            Fibration::Hopf { .. } => max_abs_diff(a, b),
        }
    }

    /// The default base point `z_w` of the fiber over `w`.
    pub fn fiber_basepoint(&self, w: &[f64]) -> Result<Vec<f64>> {
        self.check_len(w, self.base_space())?;
        Ok(match *self {
            Fibration::Projective { algebra, .. } => canonicalize(algebra, w),
            Fibration::Hopf { algebra } => hopf_basepoint(algebra.dim(), w),
        })
    }

    /// Writes `z_w (u z)` into `out`, with `phase = u` (or `u = 1` when `None`).
    pub(crate) fn fiber_point_into(
        &self,
        basepoint: &[f64],
        phase: Option<&[f64]>,
        z: &[f64],
        out: &mut [f64],
    ) {
        let dim = self.algebra().dim();
        let mut v = z.to_vec();
        if let Some(u) = phase {
            algebra::mul_into(u, z, &mut v);
        }
        for (src, dst) in basepoint.chunks(dim).zip(out.chunks_mut(dim)) {
            algebra::mul_into(src, &v, dst);
        }
    }

    /// `ζ_w(z) = z_w z` for the default base point of the fiber over `w`.
    pub fn fiber_point(&self, w: &[f64], z: &[f64]) -> Result<Vec<f64>> {
        self.check_len(z, self.fiber_space())?;
        let basepoint = self.fiber_basepoint(w)?;
        let mut out = vec![0.0; basepoint.len()];
        self.fiber_point_into(&basepoint, None, z, &mut out);
        Ok(out)
    }

    /// The unit `u` with `z_y = z_w u`, for a point `z_y` of the fiber through
    /// the default base point `z_w`.
    pub(crate) fn phase_of(&self, basepoint: &[f64], z_y: &[f64]) -> Vec<f64> {
        let dim = self.algebra().dim();
        let (j, r) = basepoint
            .chunks(dim)
            .enumerate()
            .filter(|(_, b)| b[1..].iter().all(|&c| c == 0.0) && b[0] > 0.0)
            .map(|(j, b)| (j, b[0]))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("default base points carry a real positive coordinate");
        let mut u: Vec<f64> = z_y[j * dim..(j + 1) * dim].iter().map(|c| c / r).collect();
        let norm = algebra::norm_sqr(&u).sqrt();
        u.iter_mut().for_each(|c| *c /= norm);
        u
    }
}

/// `([ω], z) ↦ (ω ω̄_{n+1}) z / |ω_{n+1}|`, defined when the last 𝔽-coordinate is nonzero.
pub fn trivialization(w: &ProjectivePoint, z: &SpherePoint) -> Result<SpherePoint> {
    let algebra = w.algebra();
    let dim = algebra.dim();
    if z.coords().len() != dim {
        return Err(DesignError::DimensionMismatch {
            expected: dim,
            found: z.coords().len(),
        });
    }
    let omega = w.rep();
    let last = &omega[omega.len() - dim..];
    let r = algebra::norm_sqr(last).sqrt();
    if r == 0.0 {
        return Err(DesignError::InvalidSpace(
            "trivialization needs a nonzero last coordinate".into(),
        ));
    }
    let mut conj = vec![0.0; dim];
    algebra::conj_into(last, &mut conj);
    let mut tmp = vec![0.0; dim];
    let mut out = vec![0.0; omega.len()];
    for (src, dst) in omega.chunks(dim).zip(out.chunks_mut(dim)) {
        algebra::mul_into(src, &conj, &mut tmp);
        tmp.iter_mut().for_each(|c| *c /= r);
        algebra::mul_into(&tmp, z.coords(), dst);
    }
    Ok(SpherePoint { coords: out })
}

/// Typed form of [`Fibration::fiber_basepoint`].
pub fn fiber_basepoint(fibration: &Fibration, w: &[f64]) -> Result<SpherePoint> {
    SpherePoint::normalized(fibration.fiber_basepoint(w)?)
}

/// Typed form of [`Fibration::fiber_point`].
pub fn fiber_point(fibration: &Fibration, w: &[f64], z: &SpherePoint) -> Result<SpherePoint> {
    SpherePoint::new(fibration.fiber_point(w, z.coords())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn sp(v: &[f64]) -> SpherePoint {
        SpherePoint::new(v.to_vec()).unwrap()
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && max_abs_diff(a, b) <= tol
    }

    fn right_multiply(algebra: Algebra, omega: &[f64], z: &[f64]) -> Vec<f64> {
        let dim = algebra.dim();
        let mut out = vec![0.0; omega.len()];
        for (src, dst) in omega.chunks(dim).zip(out.chunks_mut(dim)) {
            algebra::mul_into(src, z, dst);
        }
        out
    }

    #[test]
    fn space_invariants() {
        assert!(Space::projective(Algebra::Octonion, 2).is_err());
        assert!(Space::projective(Algebra::Complex, 0).is_err());
        for alg in Algebra::ALL {
            let f = Fibration::projective(alg, 1).unwrap();
            assert_eq!(f.d(), 2 * alg.k() + 1);
            assert_eq!(f.base_space().ambient_dim(), f.total_space().ambient_dim());
        }
        let f = Fibration::projective(Algebra::Quaternion, 2).unwrap();
        assert_eq!((f.k(), f.d()), (3, 11));
    }

    #[test]
    fn projective_map_examples() {
        let c = Algebra::Complex;
        let p = projective_map(&sp(&[1.0, 0.0, 0.0, 0.0]), c, 1).unwrap();
        assert_eq!(p.rep(), &[1.0, 0.0, 0.0, 0.0]);
        let q = projective_map(&sp(&[0.0, 1.0, 0.0, 0.0]), c, 1).unwrap();
        assert_eq!(q.rep(), p.rep());
        assert!(p.approx_eq(&q, EQ_TOL));
        assert!(matches!(
            projective_map(&sp(&[1.0, 0.0, 0.0]), c, 1),
            Err(DesignError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn canonical_form_has_real_positive_last_coordinate() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for alg in Algebra::ALL {
            let w = random_sphere_point(&mut rng, 2 * alg.dim() - 1);
            let c = canonicalize(alg, w.coords());
            let last = &c[alg.dim()..];
            assert!(last[0] > 0.0 && last[1..].iter().all(|&x| x == 0.0));
            assert_eq!(canonicalize(alg, &c), c);
        }
    }

    #[test]
    fn orbit_invariance_for_octonionic_canonical_representatives() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let o = Algebra::Octonion;
        for _ in 0..100 {
            let w = projective_map(&random_sphere_point(&mut rng, 15), o, 1).unwrap();
            let z = random_sphere_point(&mut rng, 7);
            let moved = right_multiply(o, w.rep(), z.coords());
            let p = ProjectivePoint::from_representative(o, 1, &moved).unwrap();
            assert!(p.approx_eq(&w, EQ_TOL));
            assert!(close(p.rep(), w.rep(), EQ_TOL));
        }
    }

    #[test]
    fn octonionic_right_multiplication_of_general_vectors_leaves_the_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let o = Algebra::Octonion;
        let omega = random_sphere_point(&mut rng, 15);
        let z = random_sphere_point(&mut rng, 7);
        let a = projective_map(&omega, o, 1).unwrap();
        let b = ProjectivePoint::from_representative(o, 1, &right_multiply(o, omega.coords(), z.coords())).unwrap();
        assert!(a.distance(&b) > 1e-3);
    }

    #[test]
    fn hopf_map_examples() {
        let c = Algebra::Complex;
        assert_eq!(hopf_map(&sp(&[1.0, 0.0, 0.0, 0.0]), c).unwrap().coords(), &[1.0, 0.0, 0.0]);
        let h = hopf_map(&sp(&[FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2, 0.0]), c).unwrap();
        assert!(close(h.coords(), &[0.0, 1.0, 0.0], 1e-15));
    }

    #[test]
    fn hopf_chart_examples() {
        for alg in Algebra::ALL {
            let dim = alg.dim();
            let mut north = vec![0.0; 2 * dim];
            north[0] = 1.0;
            let mut south = vec![0.0; 2 * dim];
            south[dim] = 1.0;
            let mut s_north = vec![0.0; dim + 1];
            s_north[0] = 1.0;
            let mut s_south = vec![0.0; dim + 1];
            s_south[0] = -1.0;
            let pn = ProjectivePoint::from_representative(alg, 1, &north).unwrap();
            let ps = ProjectivePoint::from_representative(alg, 1, &south).unwrap();
            assert_eq!(hopf_chart(&pn).unwrap().coords(), &s_north[..]);
            assert_eq!(hopf_chart(&ps).unwrap().coords(), &s_south[..]);
            assert!(hopf_chart_inverse(&sp(&s_north), alg).unwrap().approx_eq(&pn, 0.0));
            assert!(hopf_chart_inverse(&sp(&s_south), alg).unwrap().approx_eq(&ps, 0.0));
        }
        let p = ProjectivePoint::from_representative(Algebra::Complex, 2, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(hopf_chart(&p).is_err());
    }

    #[test]
    fn hopf_chart_inverse_on_the_equator() {
        let p = hopf_chart_inverse(&sp(&[0.0, 1.0, 0.0]), Algebra::Complex).unwrap();
        let expected =
            ProjectivePoint::from_representative(Algebra::Complex, 1, &[FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2, 0.0]).unwrap();
        assert!(p.approx_eq(&expected, 1e-15));
        assert!(close(p.rep(), expected.rep(), 1e-15));
    }

    #[test]
    fn fiber_basepoint_examples() {
        let f = Fibration::hopf(Algebra::Complex);
        assert_eq!(f.fiber_basepoint(&[1.0, 0.0, 0.0]).unwrap(), vec![1.0, 0.0, 0.0, 0.0]);
        assert_eq!(f.fiber_basepoint(&[-1.0, 0.0, 0.0]).unwrap(), vec![0.0, 0.0, 1.0, 0.0]);
        let g = Fibration::projective(Algebra::Complex, 1).unwrap();
        let w = canonicalize(Algebra::Complex, &[0.6, 0.0, 0.0, 0.8]);
        assert_eq!(g.fiber_basepoint(&w).unwrap(), w);
    }

    #[test]
    fn fiber_point_examples() {
        let f = Fibration::hopf(Algebra::Complex);
        let s = [-1.0, 0.0, 0.0];
        assert_eq!(f.fiber_point(&s, &[1.0, 0.0]).unwrap(), f.fiber_basepoint(&s).unwrap());
        let theta = 2.0 * PI / 3.0;
        let p = f.fiber_point(&s, &[theta.cos(), theta.sin()]).unwrap();
        assert!(close(&p, &[0.0, 0.0, theta.cos(), theta.sin()], 1e-15));
    }

    #[test]
    fn random_points_compose_and_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for alg in Algebra::ALL {
            let k = alg.k();
            let hopf = Fibration::hopf(alg);
            for _ in 0..200 {
                let omega = random_sphere_point(&mut rng, 2 * k + 1);
                let h = hopf_map(&omega, alg).unwrap();
                assert!((algebra::norm_sqr(h.coords()) - 1.0).abs() < 1e-12);
                let chart = hopf_chart(&projective_map(&omega, alg, 1).unwrap()).unwrap();
                assert!(close(chart.coords(), h.coords(), 1e-12));

                let s = random_sphere_point(&mut rng, k + 1);
                let back = hopf_chart(&hopf_chart_inverse(&s, alg).unwrap()).unwrap();
                assert!(close(back.coords(), s.coords(), 1e-10));

                let z = random_sphere_point(&mut rng, k);
                let x = fiber_point(&hopf, s.coords(), &z).unwrap();
                assert!(close(hopf_map(&x, alg).unwrap().coords(), s.coords(), 1e-10));
            }
        }
    }

    #[test]
    fn fiber_points_agree_with_the_trivialization() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for (alg, n) in [(Algebra::Real, 3), (Algebra::Complex, 2), (Algebra::Quaternion, 2), (Algebra::Octonion, 1)] {
            let fib = Fibration::projective(alg, n).unwrap();
            for _ in 0..50 {
                let w = projective_map(&random_sphere_point(&mut rng, fib.d()), alg, n).unwrap();
                let z = random_sphere_point(&mut rng, alg.k());
                let x = fiber_point(&fib, w.rep(), &z).unwrap();
                let phi = trivialization(&w, &z).unwrap();
                assert!(close(x.coords(), phi.coords(), 1e-12));
                let back = projective_map(&x, alg, n).unwrap();
                assert!(back.approx_eq(&w, EQ_TOL));
            }
        }
    }

    #[test]
    fn octonionic_lifts_stay_in_the_fiber_with_a_phase() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let fib = Fibration::hopf(Algebra::Octonion);
        for _ in 0..100 {
            let s = random_sphere_point(&mut rng, 8);
            let b = fib.fiber_basepoint(s.coords()).unwrap();
            let u = random_sphere_point(&mut rng, 7);
            let z = random_sphere_point(&mut rng, 7);
            let mut zy = vec![0.0; 16];
            fib.fiber_point_into(&b, None, u.coords(), &mut zy);
            let recovered = fib.phase_of(&b, &zy);
            assert!(close(&recovered, u.coords(), 1e-12));
            let mut x = vec![0.0; 16];
            fib.fiber_point_into(&b, Some(&recovered), z.coords(), &mut x);
            assert!(close(&fib.project(&x).unwrap(), s.coords(), 1e-10));
        }
    }

    proptest::proptest! {
        #[test]
        fn associative_orbits_are_classes(
            seed in 0u64..10_000,
            alg in proptest::sample::select(vec![Algebra::Real, Algebra::Complex, Algebra::Quaternion]),
            n in 1usize..4,
        ) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let d = alg.dim() * (n + 1) - 1;
            let omega = random_sphere_point(&mut rng, d);
            let z = random_sphere_point(&mut rng, alg.k());
            let a = projective_map(&omega, alg, n).unwrap();
            let b = ProjectivePoint::from_representative(alg, n, &right_multiply(alg, omega.coords(), z.coords())).unwrap();
            proptest::prop_assert!(a.approx_eq(&b, EQ_TOL));
            proptest::prop_assert!(close(a.rep(), b.rep(), EQ_TOL));
            let again = canonicalize(alg, a.rep());
            proptest::prop_assert_eq!(again, a.rep().to_vec());
        }
    }
}
