//! Fiber quadratures: designs on `S^k` for `k ∈ {0, 1, 3, 7}` of a requested strength.

use super::{catalog_entry, gauss_product_s2, CatalogName, WeightedDesign};
use crate::algebra::Algebra;
use crate::construct::{lift, LiftSpec};
use crate::error::{DesignError, Result};
use crate::geometry::Fibration;

/// A design on `S^k` of strength at least `t`.
///
/// On `S^3` beyond the `D_4` roots, a `⌊t/2⌋` product rule on `S^2` is lifted through the
/// complex Hopf map with regular polygons on the circle fibers. On `S^7` the
/// catalog stops at the `E_8` roots, strength 7.
pub fn fiber_design(k: usize, t: usize) -> Result<WeightedDesign> {
    let named = |name| Ok(catalog_entry(name)?.design);
    match k {
        0 => named(CatalogName::CrossPolytope(0)),
        1 => named(CatalogName::Polygon(t + 1)),
        3 if t <= 3 => named(CatalogName::CrossPolytope(3)),
        3 if t <= 5 => named(CatalogName::D4Roots),
        3 => {
            let base = gauss_product_s2(t / 2)?;
            let circle = catalog_entry(CatalogName::Polygon(t + 1))?.design;
            Ok(lift(&LiftSpec::new(Fibration::hopf(Algebra::Complex), base, circle))?
                .with_name(format!("hopf_product_s3({t})"))
                .with_claimed_strength(Some(t)))
        }
        7 if t <= 3 => named(CatalogName::CrossPolytope(7)),
        7 if t <= 7 => named(CatalogName::E8Roots),
        7 => Err(DesignError::Unsupported(format!(
            "no fiber design of strength {t} on S^7 is available (maximum 7)"
        ))),
        other => Err(DesignError::InvalidSpace(format!(
            "S^{other} is not a fiber of a division-algebra fibration"
        ))),
    }
}
