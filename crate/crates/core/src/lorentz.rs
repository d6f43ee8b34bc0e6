//! Linear algebra of the Lorentz–Minkowski spaces L³ (signature `++-`) and
//! L⁴ (signature `++-+`).
//!
//! Every orientation-dependent quantity in the crate (geodesic curvature,
//! principal normal, surface normal) goes through [`det3`] / [`det4`] with
//! rows taken in argument order.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{GeometryError, Result};

/// Default tolerance on `<v, v>` below which a vector is treated as lightlike.
pub const CAUSAL_TOL: f64 = 1e-10;

/// A vector of L³ with metric `dx² + dy² - dz²`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LVec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// A vector of L⁴ with metric `dx1² + dx2² - dx3² + dx4²`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LVec4 {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub x4: f64,
}

/// Causal character of a vector, decided on `<v, v>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Causal {
    Spacelike,
    Timelike,
    Lightlike,
}

impl Causal {
    /// `+1` for spacelike, `-1` for timelike, `0` for lightlike.
    pub fn sign(self) -> f64 {
        match self {
            Causal::Spacelike => 1.0,
            Causal::Timelike => -1.0,
            Causal::Lightlike => 0.0,
        }
    }
}

impl LVec3 {
    pub const E1: LVec3 = LVec3::new_unchecked(1.0, 0.0, 0.0);
    pub const E2: LVec3 = LVec3::new_unchecked(0.0, 1.0, 0.0);
    pub const E3: LVec3 = LVec3::new_unchecked(0.0, 0.0, 1.0);
    pub const ZERO: LVec3 = LVec3::new_unchecked(0.0, 0.0, 0.0);

    /// Checked constructor; rejects NaN and infinities.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() && z.is_finite() {
            Ok(Self { x, y, z })
        } else {
            Err(GeometryError::NonFinite("LVec3"))
        }
    }

    pub const fn new_unchecked(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// Embeds into L⁴ as `(x, y, z, 0)`.
    pub fn lift(self) -> LVec4 {
        LVec4::new_unchecked(self.x, self.y, self.z, 0.0)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Largest absolute component.
    pub fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }
}

impl LVec4 {
    pub const ZERO: LVec4 = LVec4::new_unchecked(0.0, 0.0, 0.0, 0.0);

    pub fn new(x1: f64, x2: f64, x3: f64, x4: f64) -> Result<Self> {
        if [x1, x2, x3, x4].iter().all(|c| c.is_finite()) {
            Ok(Self { x1, x2, x3, x4 })
        } else {
            Err(GeometryError::NonFinite("LVec4"))
        }
    }

    pub const fn new_unchecked(x1: f64, x2: f64, x3: f64, x4: f64) -> Self {
        Self { x1, x2, x3, x4 }
    }

    pub fn basis(i: usize) -> Self {
        let mut c = [0.0; 4];
        c[i] = 1.0;
        Self::from_array(c)
    }

    pub fn from_array(c: [f64; 4]) -> Self {
        Self::new_unchecked(c[0], c[1], c[2], c[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.x1, self.x2, self.x3, self.x4]
    }

    pub fn is_finite(self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    pub fn max_abs(self) -> f64 {
        self.to_array().iter().fold(0.0_f64, |m, c| m.max(c.abs()))
    }
}

macro_rules! impl_vector_ops {
    ($ty:ident, $($f:ident),+) => {
        impl Add for $ty {
            type Output = $ty;
            fn add(self, o: $ty) -> $ty {
                $ty { $($f: self.$f + o.$f),+ }
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, o: $ty) -> $ty {
                $ty { $($f: self.$f - o.$f),+ }
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty { $($f: -self.$f),+ }
            }
        }
        impl Mul<f64> for $ty {
            type Output = $ty;
            fn mul(self, k: f64) -> $ty {
                $ty { $($f: self.$f * k),+ }
            }
        }
        impl Mul<$ty> for f64 {
            type Output = $ty;
            fn mul(self, v: $ty) -> $ty {
                v * self
            }
        }
    };
}

impl_vector_ops!(LVec3, x, y, z);
impl_vector_ops!(LVec4, x1, x2, x3, x4);

/// Lorentzian inner product on L³.
pub fn inner3(a: LVec3, b: LVec3) -> f64 {
    a.x * b.x + a.y * b.y - a.z * b.z
}

/// Lorentzian inner product on L⁴.
pub fn inner4(a: LVec4, b: LVec4) -> f64 {
    a.x1 * b.x1 + a.x2 * b.x2 - a.x3 * b.x3 + a.x4 * b.x4
}

/// Determinant of the 3×3 matrix with rows `a`, `b`, `c`.
pub fn det3(a: LVec3, b: LVec3, c: LVec3) -> f64 {
    a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) + a.z * (b.x * c.y - b.y * c.x)
}

/// Lorentzian cross product: the unique `w` with `inner3(w, c) = det3(a, b, c)`.
pub fn cross3(a: LVec3, b: LVec3) -> LVec3 {
    LVec3 {
        x: a.y * b.z - a.z * b.y,
        y: a.z * b.x - a.x * b.z,
        z: -(a.x * b.y - a.y * b.x),
    }
}

/// Determinant of the 4×4 matrix with rows `a`, `b`, `c`, `d`.
pub fn det4(a: LVec4, b: LVec4, c: LVec4, d: LVec4) -> f64 {
    let w = cofactors4(a, b, c);
    let d = d.to_array();
    (0..4).map(|i| w[i] * d[i]).sum()
}

/// Lorentzian triple cross product in L⁴: the unique `w` with
/// `inner4(w, d) = det4(a, b, c, d)` for every `d`.
pub fn cross4(a: LVec4, b: LVec4, c: LVec4) -> LVec4 {
    let w = cofactors4(a, b, c);
    LVec4::new_unchecked(w[0], w[1], -w[2], w[3])
}

// Euclidean cofactors of the last row: det4(a, b, c, d) = sum_i w[i] * d[i].
fn cofactors4(a: LVec4, b: LVec4, c: LVec4) -> [f64; 4] {
    let (a, b, c) = (a.to_array(), b.to_array(), c.to_array());
    let minor = |skip: usize| {
        let cols: Vec<usize> = (0..4).filter(|&j| j != skip).collect();
        let r = |v: &[f64; 4]| LVec3::new_unchecked(v[cols[0]], v[cols[1]], v[cols[2]]);
        det3(r(&a), r(&b), r(&c))
    };
    // Expansion along the fourth row: sign (-1)^(3 + i).
    [-minor(0), minor(1), -minor(2), minor(3)]
}

/// Classifies a squared norm `<v, v>` with tolerance `tol`.
pub fn causal_character(v2: f64, tol: f64) -> Causal {
    if v2 > tol {
        Causal::Spacelike
    } else if v2 < -tol {
        Causal::Timelike
    } else {
        Causal::Lightlike
    }
}
