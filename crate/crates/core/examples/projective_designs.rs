//! Designs on projective lines. 𝔽P¹ is the sphere S^{k+1}, and a sphere
//! t-design becomes a projective t-design there. Both projective verifiers
//! find the same strength.

use hopf_designs::algebra::Algebra;
use hopf_designs::construct::sphere_to_projective_line;
use hopf_designs::designs::{catalog, verify_projective, Method, DEFAULT_TOL};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, algebra) in [
        ("polygon(6)", Algebra::Real),
        ("icosahedron", Algebra::Complex),
        ("cross_polytope(4)", Algebra::Quaternion),
    ] {
        let p = sphere_to_projective_line(&catalog(name)?, algebra)?;
        for method in [Method::LiftOracle, Method::InnerProduct] {
            let r = verify_projective(&p, 6, DEFAULT_TOL, method)?;
            println!("{name:<18} {}P^1 {method:<13} strength {:?}", algebra.tag(), r.certified_strength());
        }
    }
    Ok(())
}
