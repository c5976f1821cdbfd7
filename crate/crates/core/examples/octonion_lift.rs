//! The octonionic Hopf map S¹⁵ → S⁸: a regular simplex on S⁸ (a 2-design)
//! with E8 fibers lifts to a 2400-point 5-design on S¹⁵.

use hopf_designs::algebra::Algebra;
use hopf_designs::construct::{collapse, lift, LiftSpec};
use hopf_designs::designs::{catalog, verify_spherical, DEFAULT_TOL};
use hopf_designs::geometry::Fibration;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let hopf = Fibration::hopf(Algebra::Octonion);
    let x = lift(&LiftSpec::new(hopf, catalog("simplex(8)")?, catalog("e8_roots")?))?;
    println!("{} points on S^15", x.len());
    println!("{}", verify_spherical(&x, 6, DEFAULT_TOL)?);

    let y = collapse(&x, hopf, 5)?;
    println!("collapsed back to {} points on S^8", y.len());
    Ok(())
}
