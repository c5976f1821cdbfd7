//! The monomial-moment verifier and the Gegenbauer pair-sum verifier agree on
//! which catalog designs pass. Large monomial tables hit the cap; the
//! Gegenbauer route still works there.

use hopf_designs::designs::{catalog, verify_spherical, verify_spherical_gegenbauer, DEFAULT_TOL};
use hopf_designs::error::DesignError;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, t) in [("octahedron", 4), ("icosahedron", 6), ("d4_roots", 6), ("e8_roots", 8), ("polygon(7)", 7)] {
        let d = catalog(name)?;
        let moment = verify_spherical(&d, t, DEFAULT_TOL)?;
        let gegenbauer = verify_spherical_gegenbauer(&d, t, DEFAULT_TOL)?;
        println!(
            "{name:<12} t={t}  moment {:?}  gegenbauer {:?}",
            moment.certified_strength(),
            gegenbauer.certified_strength()
        );
    }

    let big = catalog("cross_polytope(15)")?;
    match verify_spherical(&big, 10, DEFAULT_TOL) {
        Err(e @ DesignError::CapExceeded { .. }) => println!("moment verifier: {e}"),
        other => println!("moment verifier: {other:?}"),
    }
    let r = verify_spherical_gegenbauer(&big, 10, DEFAULT_TOL)?;
    println!("gegenbauer: first failure at degree {:?}", r.first_failure());
    Ok(())
}
