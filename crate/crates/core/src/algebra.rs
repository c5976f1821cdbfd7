//! Real-coefficient arithmetic in the normed division algebras ℝ, ℂ, ℍ and 𝕆.
//!
//! All four algebras share one multiplication table on the basis `e_0, …, e_7`;
//! ℝ, ℂ and ℍ are the subalgebras spanned by the first 1, 2 and 4 basis units.
//! The octonion table is fixed by the oriented Fano lines
//!
//! ```text
//! (1,2,3) (1,4,5) (2,4,6) (3,4,7) (1,7,6) (2,5,7) (3,6,5)
//! ```
//!
//! where a line `(i,j,k)` means `e_i e_j = -e_j e_i = e_k`, closed under cyclic
//! rotation, and `e_i² = -1` for `i ≠ 0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{DesignError, Result};

/// One of the four normed division algebras over ℝ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Algebra {
    #[serde(rename = "R")]
    Real,
    #[serde(rename = "C")]
    Complex,
    #[serde(rename = "H")]
    Quaternion,
    #[serde(rename = "O")]
    Octonion,
}

impl Algebra {
    pub const ALL: [Algebra; 4] = [
        Algebra::Real,
        Algebra::Complex,
        Algebra::Quaternion,
        Algebra::Octonion,
    ];

    /// Real dimension `(𝔽:ℝ)`.
    pub const fn dim(self) -> usize {
        match self {
            Algebra::Real => 1,
            Algebra::Complex => 2,
            Algebra::Quaternion => 4,
            Algebra::Octonion => 8,
        }
    }

    /// Dimension of the sphere of unit elements, `dim - 1`.
    pub const fn k(self) -> usize {
        self.dim() - 1
    }

    pub fn from_dim(dim: usize) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.dim() == dim)
    }

    pub fn tag(self) -> char {
        match self {
            Algebra::Real => 'R',
            Algebra::Complex => 'C',
            Algebra::Quaternion => 'H',
            Algebra::Octonion => 'O',
        }
    }

    pub fn is_associative(self) -> bool {
        self != Algebra::Octonion
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

impl FromStr for Algebra {
    type Err = DesignError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "r" => Ok(Algebra::Real),
            "C" | "c" => Ok(Algebra::Complex),
            "H" | "h" => Ok(Algebra::Quaternion),
            "O" | "o" => Ok(Algebra::Octonion),
            other => Err(DesignError::InvalidSpace(format!(
                "unknown algebra `{other}` (expected R, C, H or O)"
            ))),
        }
    }
}

const FANO_LINES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [2, 4, 6],
    [3, 4, 7],
    [1, 7, 6],
    [2, 5, 7],
    [3, 6, 5],
];

/// `TABLE[i][j] = (sign, k)` with `e_i e_j = sign · e_k`.
const TABLE: [[(i8, u8); 8]; 8] = build_table();

const fn build_table() -> [[(i8, u8); 8]; 8] {
    let mut t = [[(0i8, 0u8); 8]; 8];
    let mut i = 0;
    while i < 8 {
        t[0][i] = (1, i as u8);
        t[i][0] = (1, i as u8);
        i += 1;
    }
    i = 1;
    while i < 8 {
        t[i][i] = (-1, 0);
        i += 1;
    }
    let mut l = 0;
    while l < FANO_LINES.len() {
        let [a, b, c] = FANO_LINES[l];
        t[a][b] = (1, c as u8);
        t[b][a] = (-1, c as u8);
        t[b][c] = (1, a as u8);
        t[c][b] = (-1, a as u8);
        t[c][a] = (1, b as u8);
        t[a][c] = (-1, b as u8);
        l += 1;
    }
    t
}

/// Writes the product `a · b` of two coefficient slices of length `dim` into `out`.
pub(crate) fn mul_into(a: &[f64], b: &[f64], out: &mut [f64]) {
    let dim = a.len();
    debug_assert!(b.len() == dim && out.len() == dim);
    out.iter_mut().for_each(|o| *o = 0.0);
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0.0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            let (sign, k) = TABLE[i][j];
            out[k as usize] += f64::from(sign) * ai * bj;
        }
    }
}

pub(crate) fn conj_into(a: &[f64], out: &mut [f64]) {
    out[0] = a[0];
    for i in 1..a.len() {
        out[i] = -a[i];
    }
}

pub(crate) fn norm_sqr(a: &[f64]) -> f64 {
    a.iter().map(|x| x * x).sum()
}

/// An element of 𝔽 stored as real coefficients over `e_0, …, e_{dim-1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgebraElement {
    algebra: Algebra,
    coeffs: [f64; 8],
}

impl AlgebraElement {
    pub fn new(algebra: Algebra, coeffs: &[f64]) -> Result<Self> {
        if coeffs.len() != algebra.dim() {
            return Err(DesignError::DimensionMismatch {
                expected: algebra.dim(),
                found: coeffs.len(),
            });
        }
        let mut c = [0.0; 8];
        c[..coeffs.len()].copy_from_slice(coeffs);
        Ok(Self { algebra, coeffs: c })
    }

    pub fn zero(algebra: Algebra) -> Self {
        Self {
            algebra,
            coeffs: [0.0; 8],
        }
    }

    pub fn from_real(algebra: Algebra, x: f64) -> Self {
        let mut e = Self::zero(algebra);
        e.coeffs[0] = x;
        e
    }

    pub fn one(algebra: Algebra) -> Self {
        Self::from_real(algebra, 1.0)
    }

    /// The basis unit `e_index`.
    pub fn basis(algebra: Algebra, index: usize) -> Result<Self> {
        if index >= algebra.dim() {
            return Err(DesignError::IndexOutOfRange {
                index,
                dim: algebra.dim(),
            });
        }
        let mut e = Self::zero(algebra);
        e.coeffs[index] = 1.0;
        Ok(e)
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs[..self.algebra.dim()]
    }

    /// Product `self · other`; fails if the operands live in different algebras.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(DesignError::AlgebraMismatch(self.algebra, other.algebra));
        }
        let dim = self.algebra.dim();
        let mut out = Self::zero(self.algebra);
        mul_into(
            &self.coeffs[..dim],
            &other.coeffs[..dim],
            &mut out.coeffs[..dim],
        );
        Ok(out)
    }

    pub fn conjugate(&self) -> Self {
        let mut out = *self;
        for c in &mut out.coeffs[1..] {
            *c = -*c;
        }
        out
    }

    pub fn norm_sqr(&self) -> f64 {
        norm_sqr(self.coeffs())
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// The real coefficient of `e_index`.
    pub fn real_part_extract(&self, index: usize) -> Result<f64> {
        if index >= self.algebra.dim() {
            return Err(DesignError::IndexOutOfRange {
                index,
                dim: self.algebra.dim(),
            });
        }
        Ok(self.coeffs[index])
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = *self;
        out.coeffs.iter_mut().for_each(|c| *c *= s);
        out
    }

    fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        let mut out = *self;
        for (o, b) in out.coeffs.iter_mut().zip(other.coeffs) {
            *o = f(*o, b);
        }
        out
    }
}

impl Mul for AlgebraElement {
    type Output = AlgebraElement;

    /// Panics on algebra mismatch; use [`AlgebraElement::multiply`] for a checked product.
    fn mul(self, rhs: Self) -> Self {
        self.multiply(&rhs).expect("algebra mismatch in product")
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: Self) -> Self {
        self.zip_with(&rhs, |a, b| a + b)
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, rhs: Self) -> Self {
        self.zip_with(&rhs, |a, b| a - b)
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}
