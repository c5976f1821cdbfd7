//! JSON design files.
//!
//! ```json
//! {"schema": 1,
//!  "space": {"kind": "projective", "algebra": "C", "n": 1},
//!  "points": [[1.0, 0.0, 0.0, 0.0]],
//!  "weights": [1.0],
//!  "meta": {"name": "example", "claimed_strength": 0}}
//! ```
//!
//! `weights` may be omitted for uniform designs. Floats are written in the
//! shortest form that parses back to the same bits.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::designs::{catalog, WeightedDesign};
use crate::error::{DesignError, Result};
use crate::geometry::Space;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_strength: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DesignFile {
    #[serde(default = "schema_version")]
    pub schema: u32,
    pub space: Space,
    pub points: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<f64>>,
    #[serde(default)]
    pub meta: Meta,
}

fn schema_version() -> u32 {
    SCHEMA_VERSION
}

impl DesignFile {
    /// Weights are omitted exactly when every weight is bitwise `1/N`.
    pub fn from_design(design: &WeightedDesign) -> Self {
        let uniform = 1.0 / design.len() as f64;
        let weights = if design.weights().iter().all(|&w| w == uniform) {
            None
        } else {
            Some(design.weights().to_vec())
        };
        Self {
            schema: SCHEMA_VERSION,
            space: design.space(),
            points: design.points().to_vec(),
            weights,
            meta: Meta {
                name: design.name().map(str::to_string),
                claimed_strength: design.claimed_strength(),
            },
        }
    }

    pub fn into_design(self) -> Result<WeightedDesign> {
        if self.schema != SCHEMA_VERSION {
            return Err(DesignError::InvalidDesign(format!(
                "unsupported schema version {}",
                self.schema
            )));
        }
        let design = match self.weights {
            Some(w) => WeightedDesign::new(self.space, self.points, w)?,
            None => WeightedDesign::uniform(self.space, self.points)?,
        };
        let design = design.with_claimed_strength(self.meta.claimed_strength);
        Ok(match self.meta.name {
            Some(name) => design.with_name(name),
            None => design,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("design files serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| DesignError::InvalidDesign(format!("malformed design file: {e}")))
    }
}

pub fn design_to_json(design: &WeightedDesign) -> String {
    DesignFile::from_design(design).to_json()
}

pub fn design_from_json(text: &str) -> Result<WeightedDesign> {
    DesignFile::from_json(text)?.into_design()
}

pub fn write_design(path: &Path, design: &WeightedDesign) -> Result<()> {
    fs::write(path, design_to_json(design) + "\n")
        .map_err(|e| DesignError::InvalidDesign(format!("cannot write {}: {e}", path.display())))
}

pub fn read_design(path: &Path) -> Result<WeightedDesign> {
    let text = fs::read_to_string(path)
        .map_err(|e| DesignError::InvalidDesign(format!("cannot read {}: {e}", path.display())))?;
    design_from_json(&text)
}

/// Resolves a design source: `catalog:NAME`, an existing file, or a bare
/// catalog name.
pub fn load_design(source: &str) -> Result<WeightedDesign> {
    if source.starts_with("catalog:") {
        return catalog(source);
    }
    let path = Path::new(source);
    if path.exists() {
        return read_design(path);
    }
    catalog(source).map_err(|_| {
        DesignError::InvalidDesign(format!("`{source}` is neither a file nor a catalog entry"))
    })
}
