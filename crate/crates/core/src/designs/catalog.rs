//! Named designs with certified strengths.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::WeightedDesign;
use crate::error::{DesignError, Result};
use crate::geometry::Space;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogName {
    /// Regular `N`-gon `V_N` on `S^1`.
    Polygon(usize),
    /// `{±e_0}` on `S^m`.
    Poles(usize),
    /// `{±e_i}` on `S^m`.
    CrossPolytope(usize),
    Octahedron,
    Tetrahedron,
    /// `(0, ±1, ±φ)` and its cyclic permutations, normalized.
    Icosahedron,
    /// The 24 normalized roots of `D_4` on `S^3`.
    D4Roots,
    /// The 240 normalized roots of `E_8` on `S^7`.
    E8Roots,
    /// The poles of `S^2`.
    PolePairS2,
    /// The single point `e_0` on `S^m`.
    Point(usize),
    /// The `m + 2` vertices of a regular simplex on `S^m`.
    Simplex(usize),
}

/// Certified strength of a catalog design.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strength {
    Finite(usize),
    /// Designs on `S^0` containing both points average every polynomial.
    Unbounded,
}

impl Strength {
    pub fn finite(self) -> Option<usize> {
        match self {
            Strength::Finite(t) => Some(t),
            Strength::Unbounded => None,
        }
    }

    pub fn at_least(self, t: usize) -> bool {
        match self {
            Strength::Finite(s) => s >= t,
            Strength::Unbounded => true,
        }
    }
}

impl fmt::Display for Strength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strength::Finite(t) => write!(f, "{t}"),
            Strength::Unbounded => f.write_str("unbounded"),
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogName::Polygon(n) => write!(f, "polygon({n})"),
            CatalogName::Poles(m) => write!(f, "poles({m})"),
            CatalogName::CrossPolytope(m) => write!(f, "cross_polytope({m})"),
            CatalogName::Octahedron => f.write_str("octahedron"),
            CatalogName::Tetrahedron => f.write_str("tetrahedron"),
            CatalogName::Icosahedron => f.write_str("icosahedron"),
            CatalogName::D4Roots => f.write_str("d4_roots"),
            CatalogName::E8Roots => f.write_str("e8_roots"),
            CatalogName::PolePairS2 => f.write_str("pole_pair_s2"),
            CatalogName::Point(m) => write!(f, "point({m})"),
            CatalogName::Simplex(m) => write!(f, "simplex({m})"),
        }
    }
}

impl FromStr for CatalogName {
    type Err = DesignError;

    /// Accepts `name`, `name(arg)` and a `catalog:` prefix. Bare `poles` means `poles(2)`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || DesignError::UnknownCatalogEntry(s.to_string());
        let body = s.trim();
        let body = body.strip_prefix("catalog:").unwrap_or(body);
        let (head, arg) = match body.split_once('(') {
            Some((head, rest)) => {
                let arg = rest.strip_suffix(')').ok_or_else(unknown)?;
                (head, Some(arg.trim().parse::<usize>().map_err(|_| unknown())?))
            }
            None => (body, None),
        };
        Ok(match (head, arg) {
            ("polygon", Some(n)) if n >= 1 => CatalogName::Polygon(n),
            ("poles", Some(m)) => CatalogName::Poles(m),
            ("poles", None) => CatalogName::Poles(2),
            ("cross_polytope", Some(m)) => CatalogName::CrossPolytope(m),
            ("point", Some(m)) => CatalogName::Point(m),
            ("simplex", Some(m)) => CatalogName::Simplex(m),
            ("octahedron", None) => CatalogName::Octahedron,
            ("tetrahedron", None) => CatalogName::Tetrahedron,
            ("icosahedron", None) => CatalogName::Icosahedron,
            ("d4_roots", None) => CatalogName::D4Roots,
            ("e8_roots", None) => CatalogName::E8Roots,
            ("pole_pair_s2", None) => CatalogName::PolePairS2,
            _ => return Err(unknown()),
        })
    }
}

/// A catalog design together with its certified strength.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: CatalogName,
    pub strength: Strength,
    pub design: WeightedDesign,
}

impl CatalogName {
    pub fn strength(&self) -> Strength {
        match *self {
            CatalogName::Polygon(n) => Strength::Finite(n - 1),
            CatalogName::Poles(0) | CatalogName::CrossPolytope(0) | CatalogName::Simplex(0) => {
                Strength::Unbounded
            }
            CatalogName::Poles(_) | CatalogName::PolePairS2 => Strength::Finite(1),
            CatalogName::CrossPolytope(_) | CatalogName::Octahedron => Strength::Finite(3),
            CatalogName::Tetrahedron | CatalogName::Simplex(_) => Strength::Finite(2),
            CatalogName::D4Roots | CatalogName::Icosahedron => Strength::Finite(5),
            CatalogName::E8Roots => Strength::Finite(7),
            CatalogName::Point(_) => Strength::Finite(0),
        }
    }

    pub fn space(&self) -> Space {
        Space::sphere(match *self {
            CatalogName::Polygon(_) => 1,
            CatalogName::Poles(m)
            | CatalogName::CrossPolytope(m)
            | CatalogName::Point(m)
            | CatalogName::Simplex(m) => m,
            CatalogName::Octahedron
            | CatalogName::Tetrahedron
            | CatalogName::Icosahedron
            | CatalogName::PolePairS2 => 2,
            CatalogName::D4Roots => 3,
            CatalogName::E8Roots => 7,
        })
    }

    fn points(&self) -> Vec<Vec<f64>> {
        match *self {
            CatalogName::Polygon(n) => polygon(n),
            CatalogName::Poles(m) => signed_units(m + 1, 1),
            CatalogName::PolePairS2 => signed_units(3, 1),
            CatalogName::CrossPolytope(m) => signed_units(m + 1, m + 1),
            CatalogName::Octahedron => signed_units(3, 3),
            CatalogName::Point(m) => {
                let mut p = vec![0.0; m + 1];
                p[0] = 1.0;
                vec![p]
            }
            CatalogName::Simplex(m) => simplex(m),
            CatalogName::Tetrahedron => tetrahedron(),
            CatalogName::Icosahedron => icosahedron(),
            CatalogName::D4Roots => d4_roots(),
            CatalogName::E8Roots => e8_roots(),
        }
    }
}

fn polygon(n: usize) -> Vec<Vec<f64>> {
    (0..n)
        .map(|j| {
            let (s, c) = (2.0 * PI * j as f64 / n as f64).sin_cos();
            vec![c, s]
        })
        .collect()
}

/// `+e_0, −e_0, +e_1, −e_1, …` for the first `count` axes of `ℝ^dim`.
fn signed_units(dim: usize, count: usize) -> Vec<Vec<f64>> {
    let mut out = Vec::with_capacity(2 * count);
    for i in 0..count {
        for sign in [1.0, -1.0] {
            let mut p = vec![0.0; dim];
            p[i] = sign;
            out.push(p);
        }
    }
    out
}

/// Vertices `e_i − c` of the standard simplex in `ℝ^{m+2}`, written in the
/// Helmert basis of the hyperplane `Σ x = 0` and normalized.
fn simplex(m: usize) -> Vec<Vec<f64>> {
    let verts = m + 2;
    (0..verts)
        .map(|i| {
            let coords: Vec<f64> = (1..verts)
                .map(|j| {
                    let jf = j as f64;
                    let h = if i < j {
                        1.0
                    } else if i == j {
                        -jf
                    } else {
                        0.0
                    };
                    h / (jf * (jf + 1.0)).sqrt()
                })
                .collect();
            let norm = coords.iter().map(|c| c * c).sum::<f64>().sqrt();
            coords.into_iter().map(|c| c / norm).collect()
        })
        .collect()
}

/// `(±1, ±1, ±1)/√3` with an even number of minus signs.
fn tetrahedron() -> Vec<Vec<f64>> {
    let s = 1.0 / 3f64.sqrt();
    [[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]]
        .iter()
        .map(|v| v.iter().map(|c| c * s).collect())
        .collect()
}

fn icosahedron() -> Vec<Vec<f64>> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let r = (1.0 + phi * phi).sqrt();
    let mut out = Vec::with_capacity(12);
    for shift in 0..3 {
        for (a, b) in [(1.0, phi), (1.0, -phi), (-1.0, phi), (-1.0, -phi)] {
            let mut p = vec![0.0; 3];
            p[(shift + 1) % 3] = a / r;
            p[(shift + 2) % 3] = b / r;
            out.push(p);
        }
    }
    out
}

/// The 24 roots of `D_4` as the orbits of `p_1 = (1, 0)` and
/// `p_m = (e^{iπ/6}/√3, √(2/3) e^{2πim/3})`, `m = 0, 1, 2`, under the sixth
/// roots of unity in `ℂ^2 = ℝ^4`. Each orbit is a hexagon in one complex Hopf
/// fiber; the four fibers lie over the vertices of a tetrahedron.
fn d4_roots() -> Vec<Vec<f64>> {
    let h = 3f64.sqrt() / 2.0;
    // e^{ikπ/3}, k = 0..6, in closed form so every build produces the same bits.
    let sixth = [(1.0, 0.0), (0.5, h), (-0.5, h), (-1.0, 0.0), (-0.5, -h), (0.5, -h)];
    let r = (2.0f64 / 3.0).sqrt();
    let t = 1.0 / 3f64.sqrt();
    let mut reps = vec![[1.0, 0.0, 0.0, 0.0]];
    for (c, s) in [sixth[0], sixth[2], sixth[4]] {
        reps.push([t * h, t * 0.5, r * c, r * s]);
    }
    let mut out = Vec::with_capacity(24);
    for p in reps {
        for (c, s) in sixth {
            out.push(vec![
                c * p[0] - s * p[1],
                s * p[0] + c * p[1],
                c * p[2] - s * p[3],
                s * p[2] + c * p[3],
            ]);
        }
    }
    out
}

/// The 112 vectors `(±1, ±1, 0⁶)` and the 128 vectors `(±½)⁸` with an even
/// number of minus signs, normalized.
fn e8_roots() -> Vec<Vec<f64>> {
    let mut out = Vec::with_capacity(240);
    for i in 0..8 {
        for j in i + 1..8 {
            for (si, sj) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                let mut p = vec![0.0; 8];
                p[i] = si * FRAC_1_SQRT_2;
                p[j] = sj * FRAC_1_SQRT_2;
                out.push(p);
            }
        }
    }
    let h = 0.5 * FRAC_1_SQRT_2;
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            out.push((0..8).map(|b| if mask >> b & 1 == 1 { -h } else { h }).collect());
        }
    }
    out
}

/// Builds a catalog design. Its name and claimed strength are filled in.
pub fn catalog_entry(name: CatalogName) -> Result<CatalogEntry> {
    let design = WeightedDesign::uniform(name.space(), name.points())?
        .with_name(name.to_string())
        .with_claimed_strength(name.strength().finite());
    Ok(CatalogEntry {
        name,
        strength: name.strength(),
        design,
    })
}

/// Parses `name` and builds the design.
pub fn catalog(name: &str) -> Result<WeightedDesign> {
    Ok(catalog_entry(name.parse()?)?.design)
}

#[derive(Debug, Clone, Serialize)]
pub struct ListingRow {
    pub name: String,
    pub space: String,
    pub size: String,
    pub strength: String,
}

/// One row per catalog family, parameterized names shown with their argument.
pub fn catalog_listing() -> Vec<ListingRow> {
    let row = |name: &str, space: &str, size: &str, strength: &str| ListingRow {
        name: name.into(),
        space: space.into(),
        size: size.into(),
        strength: strength.into(),
    };
    vec![
        row("polygon(N)", "S^1", "N", "N-1"),
        row("poles(m)", "S^m", "2", "1 (unbounded on S^0)"),
        row("cross_polytope(m)", "S^m", "2(m+1)", "3 (unbounded on S^0)"),
        row("simplex(m)", "S^m", "m+2", "2 (unbounded on S^0)"),
        row("point(m)", "S^m", "1", "0"),
        row("octahedron", "S^2", "6", "3"),
        row("tetrahedron", "S^2", "4", "2"),
        row("icosahedron", "S^2", "12", "5"),
        row("pole_pair_s2", "S^2", "2", "1"),
        row("d4_roots", "S^3", "24", "5"),
        row("e8_roots", "S^7", "240", "7"),
    ]
}
