//! Lift designs on S² through the complex Hopf map S³ → S².
//!
//! The two poles with a triangle in each fiber give a 6-point 2-design on S³;
//! the octahedron with an octagon in each fiber gives a 48-point 7-design.

use hopf_designs::algebra::Algebra;
use hopf_designs::construct::{lift, LiftSpec};
use hopf_designs::designs::{catalog, verify_spherical, DEFAULT_TOL};
use hopf_designs::geometry::Fibration;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let hopf = Fibration::hopf(Algebra::Complex);
    for (base, fiber, t) in [("poles", "polygon(3)", 2), ("octahedron", "polygon(8)", 7)] {
        let x = lift(&LiftSpec::new(hopf, catalog(base)?, catalog(fiber)?))?;
        println!("{base} x {fiber}: {} points on S^3", x.len());
        println!("{}", verify_spherical(&x, t + 1, DEFAULT_TOL)?);
    }
    Ok(())
}
