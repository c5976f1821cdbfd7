//! Push the 24 roots of D4 down the complex Hopf map. The six hexagonal fibers
//! collapse to the four vertices of a tetrahedron, a 2-design on S².

use hopf_designs::algebra::Algebra;
use hopf_designs::construct::collapse;
use hopf_designs::designs::{catalog, verify_spherical, DEFAULT_TOL};
use hopf_designs::geometry::Fibration;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d4 = catalog("d4_roots")?;
    println!("{}", verify_spherical(&d4, 6, DEFAULT_TOL)?);

    let y = collapse(&d4, Fibration::hopf(Algebra::Complex), 5)?;
    for (p, w) in y.points().iter().zip(y.weights()) {
        println!("{w:.4}  [{:+.6}, {:+.6}, {:+.6}]", p[0], p[1], p[2]);
    }
    println!("{}", verify_spherical(&y, 3, DEFAULT_TOL)?);
    Ok(())
}
