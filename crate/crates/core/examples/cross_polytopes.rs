//! The coordinate frame of 𝔽P^n is a projective 1-design. Lifting it with
//! cross-polytope fibers gives the cross-polytope on S^d, a 3-design.

use hopf_designs::algebra::Algebra;
use hopf_designs::construct::{lift, LiftSpec};
use hopf_designs::designs::{fiber_design, verify_spherical, WeightedDesign, DEFAULT_TOL};
use hopf_designs::geometry::{Fibration, Space};

fn frame(algebra: Algebra, n: usize) -> Result<WeightedDesign, Box<dyn std::error::Error>> {
    let space = Space::projective(algebra, n)?;
    let points = (0..=n)
        .map(|i| {
            let mut p = vec![0.0; space.ambient_dim()];
            p[i * algebra.dim()] = 1.0;
            p
        })
        .collect();
    Ok(WeightedDesign::uniform(space, points)?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (algebra, n) in [(Algebra::Real, 3), (Algebra::Complex, 2), (Algebra::Quaternion, 2), (Algebra::Octonion, 1)] {
        let fib = Fibration::projective(algebra, n)?;
        let x = lift(&LiftSpec::new(fib, frame(algebra, n)?, fiber_design(fib.k(), 3)?))?;
        let report = verify_spherical(&x, 4, DEFAULT_TOL)?;
        println!(
            "{}P^{n}: {} points on S^{}, strength {:?}",
            algebra.tag(),
            x.len(),
            fib.d(),
            report.certified_strength()
        );
    }
    Ok(())
}
