//! Division-algebra arithmetic and the maps built from it.

use hopf_designs::algebra::{Algebra, AlgebraElement};
use hopf_designs::geometry::{canonicalize, hopf_map, projective_map, SpherePoint};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = |i| AlgebraElement::basis(Algebra::Octonion, i);
    let (e1, e2, e4) = (e(1)?, e(2)?, e(4)?);
    let left = e1.multiply(&e2)?.multiply(&e4)?;
    let right = e1.multiply(&e2.multiply(&e4)?)?;
    println!("(e1 e2) e4 = {:?}", left.coeffs());
    println!("e1 (e2 e4) = {:?}", right.coeffs());

    let q = AlgebraElement::new(Algebra::Quaternion, &[0.5, -0.5, 0.5, 0.5])?;
    println!("|q|^2 = {}, q q̄ = {:?}", q.norm_sqr(), q.multiply(&q.conjugate())?.coeffs());

    // A point on S^3 seen through both maps.
    let w = SpherePoint::normalized(vec![1.0, 2.0, -0.5, 0.3])?;
    println!("Hopf image on S^2: {:?}", hopf_map(&w, Algebra::Complex)?.coords());
    let p = projective_map(&w, Algebra::Complex, 1)?;
    println!("class in CP^1: rep {:?}", p.rep());
    println!("canonicalize is idempotent: {}", canonicalize(Algebra::Complex, p.rep()) == p.rep());
    Ok(())
}
