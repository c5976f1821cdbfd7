//! Averaging a polynomial over a Hopf fiber with a fiber design. The average
//! is exact once the design's strength reaches the polynomial's degree, and
//! it does not depend on where the fiber is entered.

use hopf_designs::algebra::Algebra;
use hopf_designs::designs::fiber_design;
use hopf_designs::geometry::{hopf_map, Fibration, SpherePoint};
use hopf_designs::moments::fiber_average;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let hopf = Fibration::hopf(Algebra::Quaternion);
    let f = |x: &[f64]| x[0].powi(2) * x[5].powi(2) - x[1] * x[3] * x[6].powi(2);
    let w = hopf_map(&SpherePoint::normalized(vec![0.3, -1.0, 0.2, 0.7, 0.1, 0.4, -0.6, 0.9])?, Algebra::Quaternion)?;
    for t in 1..=5 {
        let avg = fiber_average(&f, &hopf, w.coords(), &fiber_design(hopf.k(), t)?)?;
        println!("fiber design of strength {t}: {avg:+.15}");
    }
    Ok(())
}
