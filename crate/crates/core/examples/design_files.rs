//! Write a lifted design to JSON, read it back and verify the file.

use hopf_designs::algebra::Algebra;
use hopf_designs::construct::{lift, LiftSpec};
use hopf_designs::designs::{catalog, verify, DEFAULT_TOL};
use hopf_designs::geometry::Fibration;
use hopf_designs::cli::{design_to_json, read_design, write_design};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = lift(&LiftSpec::new(Fibration::hopf(Algebra::Complex), catalog("tetrahedron")?, catalog("polygon(6)")?))?
        .with_name("tetrahedron x hexagon")
        .with_claimed_strength(Some(5));
    let text = design_to_json(&x);
    println!("{}", text.lines().take(12).collect::<Vec<_>>().join("\n"));

    let path = std::env::temp_dir().join("tetrahedron_hexagon.json");
    write_design(&path, &x)?;
    let back = read_design(&path)?;
    assert_eq!(back, x);
    println!("read {} points from {}", back.len(), path.display());
    println!("{}", verify(&back, 5, DEFAULT_TOL, None)?);
    Ok(())
}
