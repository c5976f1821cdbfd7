//! Hopf lifts of small designs on `S^2` with regular polygons on the circle
//! fibers: a `⌊t/2⌋`-design `Y` and `Z_y = V_{t+1}` give a `t`-design on `S^3`
//! of size `|Y| (t + 1)`.

use std::fmt;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::construct::{lift, LiftSpec};
use crate::designs::{catalog, verify_spherical, DEFAULT_TOL};
use crate::error::Result;
use crate::geometry::Fibration;

/// `(t, base, reference |Y|, reference |X|, smallest known t-design on S^3)`.
pub const HOPF_ROWS: [(usize, &str, usize, usize, usize); 10] = [
    (0, "point(2)", 1, 1, 1),
    (1, "point(2)", 1, 2, 2),
    (2, "pole_pair_s2", 2, 6, 5),
    (3, "pole_pair_s2", 2, 8, 8),
    (4, "tetrahedron", 4, 20, 20),
    (5, "tetrahedron", 4, 24, 24),
    (6, "octahedron", 6, 42, 42),
    (7, "octahedron", 6, 48, 48),
    (8, "icosahedron", 12, 108, 96),
    (11, "icosahedron", 12, 144, 120),
];

#[derive(Debug, Clone, Serialize)]
pub struct HopfRow {
    pub t: usize,
    pub base: String,
    pub base_size: usize,
    pub fiber_size: usize,
    pub lifted_size: usize,
    pub reference_base_size: usize,
    pub reference_lifted_size: usize,
    pub smallest_known: usize,
    pub verified: bool,
    pub max_deviation: f64,
}

impl HopfRow {
    pub fn matches_reference(&self) -> bool {
        self.base_size == self.reference_base_size && self.lifted_size == self.reference_lifted_size
    }
}

/// Builds and verifies one row: `lift(base, V_{t+1})` over the complex Hopf map.
pub fn hopf_row(t: usize, base: &str) -> Result<HopfRow> {
    let (ref_y, ref_x, known) = HOPF_ROWS
        .iter()
        .find(|r| r.0 == t)
        .map_or((0, 0, 0), |r| (r.2, r.3, r.4));
    let base_design = catalog(base)?;
    let fiber = catalog(&format!("polygon({})", t + 1))?;
    let x = lift(&LiftSpec::new(Fibration::hopf(Algebra::Complex), base_design.clone(), fiber))?;
    let report = verify_spherical(&x, t, DEFAULT_TOL)?;
    Ok(HopfRow {
        t,
        base: base.to_string(),
        base_size: base_design.len(),
        fiber_size: t + 1,
        lifted_size: x.len(),
        reference_base_size: ref_y,
        reference_lifted_size: ref_x,
        smallest_known: known,
        verified: report.passes(),
        max_deviation: report.per_degree_deviation.iter().copied().fold(0.0, f64::max),
    })
}

pub fn hopf_table() -> Result<Vec<HopfRow>> {
    HOPF_ROWS.iter().map(|&(t, base, ..)| hopf_row(t, base)).collect()
}

pub struct HopfTable<'a>(pub &'a [HopfRow]);

impl fmt::Display for HopfTable<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>3}  {:<13} {:>4} {:>4} {:>5}  {:>6} {:>6}  {:>7}  {:<8} {:>10}",
            "t", "base", "|Y|", "|Z|", "|X|", "ref|Y|", "ref|X|", "known", "verified", "max dev"
        )?;
        for r in self.0 {
            writeln!(
                f,
                "{:>3}  {:<13} {:>4} {:>4} {:>5}  {:>6} {:>6}  {:>7}  {:<8} {:>10.2e}",
                r.t,
                r.base,
                r.base_size,
                r.fiber_size,
                r.lifted_size,
                r.reference_base_size,
                r.reference_lifted_size,
                r.smallest_known,
                if r.verified { "yes" } else { "NO" },
                r.max_deviation
            )?;
        }
        write!(
            f,
            "`known` is the smallest t-design on S^3 reported in the literature; not reproduced here."
        )
    }
}
