//! Gerstewitz-type scalarizations and the vectorizing maps built on them.
//!
//! With row scales `s_j = -λ_j·e > 0` and a finite set `A`,
//!
//! ```text
//! φ_{e,A}(y)   = inf { t : y ∈ te + A + C } = min_{a∈A} max_j λ_j·(a - y) / s_j
//! φ^u_{e,A}(y) = sup { t : y ∈ te + A - C } = max_{a∈A} min_j λ_j·(a - y) / s_j
//! G^ℓ_e(A, B)  = sup_{b∈B} φ_{e,A}(b)
//! G^u_e(B, A)  = -G^ℓ_e(-B, -A)        = inf_{a∈A} φ^u_{e,B}(a)
//! w_e(A, B)    = (-G^ℓ_e(A, B), G^u_e(B, A))
//! v_e(A)       = w_e({0}, A)
//! ```
//!
//! `φ_{e,A}` only depends on the minimal points of `A`, and the supremum over
//! `B` is attained at minimal points of `B` since `φ_{e,A}` decreases along
//! `C`. The upper-type quantities mirror this with maximal points. Both sides
//! therefore run on the pruned fronts carried by [`Cloud`].

use std::fmt;

use crate::error::Result;
use crate::geometry::{Cone, Direction, Vector};
use crate::sets::{discretize, negate, Cloud, DiscretizationPolicy, Shape};

/// A value of `w_e` or `v_e`, ordered by the nonnegative orthant of `R²`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VecValue {
    /// `-G^ℓ_e(A, B)`
    pub first: f64,
    /// `G^u_e(B, A)`
    pub second: f64,
}

impl VecValue {
    pub const ZERO: VecValue = VecValue {
        first: 0.0,
        second: 0.0,
    };

    pub fn new(first: f64, second: f64) -> Self {
        VecValue { first, second }
    }

    /// `(0,0) ≤ self`, each coordinate allowed to dip `tol` below zero.
    pub fn is_nonnegative(&self, tol: f64) -> bool {
        self.first >= -tol && self.second >= -tol
    }

    /// `(0,0) < self` componentwise, each coordinate exceeding `tol`.
    pub fn is_positive(&self, tol: f64) -> bool {
        self.first > tol && self.second > tol
    }

    pub fn is_finite(&self) -> bool {
        self.first.is_finite() && self.second.is_finite()
    }

    pub fn approx_eq(&self, other: &VecValue, tol: f64) -> bool {
        (self.first - other.first).abs() <= tol && (self.second - other.second).abs() <= tol
    }

    pub fn to_vector(self) -> Vector {
        Vector::new(vec![self.first, self.second])
    }
}

impl fmt::Display for VecValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Print 0 for -0.
        write!(f, "({}, {})", self.first + 0.0, self.second + 0.0)
    }
}

/// `φ_{e,A}(y)`.
pub fn phi_lower(e: &Direction, a: &Cloud, y: &Vector, c: &Cone) -> Result<f64> {
    let scales = e.scales(c)?;
    y.check_dim(c.dim())?;
    a.check_cone(c)?;
    Ok(a.lower_front().phi(&c.scores(y), &scales))
}

/// `φ^u_{e,A}(y)`, evaluated as `-φ_{e,-A}(-y)`.
pub fn phi_upper(e: &Direction, a: &Cloud, y: &Vector, c: &Cone) -> Result<f64> {
    let scales = e.scales(c)?;
    y.check_dim(c.dim())?;
    a.check_cone(c)?;
    Ok(-a.upper_front().phi(&c.scores(&-y), &scales))
}

/// `G^ℓ_e(A, B)` over prepared clouds.
pub fn g_lower_clouds(e: &Direction, a: &Cloud, b: &Cloud, c: &Cone) -> Result<f64> {
    let scales = e.scales(c)?;
    a.check_cone(c)?;
    b.check_cone(c)?;
    let front = a.lower_front();
    Ok(b
        .lower_front()
        .rows()
        .map(|y| front.phi(y, &scales))
        .fold(f64::NEG_INFINITY, f64::max))
}

/// `G^u_e(B, A) = -G^ℓ_e(-B, -A)` over prepared clouds.
pub fn g_upper_clouds(e: &Direction, b: &Cloud, a: &Cloud, c: &Cone) -> Result<f64> {
    let scales = e.scales(c)?;
    a.check_cone(c)?;
    b.check_cone(c)?;
    // The maximal front of X is stored as the minimal front of -X.
    let front = b.upper_front();
    let sup = a
        .upper_front()
        .rows()
        .map(|y| front.phi(y, &scales))
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(-sup)
}

pub fn w_clouds(e: &Direction, a: &Cloud, b: &Cloud, c: &Cone) -> Result<VecValue> {
    Ok(VecValue {
        first: -g_lower_clouds(e, a, b, c)?,
        second: g_upper_clouds(e, b, a, c)?,
    })
}

pub fn v_cloud(e: &Direction, a: &Cloud, c: &Cone) -> Result<VecValue> {
    let origin = Cloud::exact(vec![Vector::zeros(c.dim())], c)?;
    w_clouds(e, &origin, a, c)
}

/// `G^ℓ_e(A, B) = sup_{b∈B} φ_{e,A}(b)`.
pub fn g_lower(
    e: &Direction,
    a: &Shape,
    b: &Shape,
    c: &Cone,
    p: &DiscretizationPolicy,
) -> Result<f64> {
    g_lower_clouds(e, &discretize(a, p, c)?, &discretize(b, p, c)?, c)
}

/// `G^u_e(B, A) = -G^ℓ_e(-B, -A)`.
pub fn g_upper(
    e: &Direction,
    b: &Shape,
    a: &Shape,
    c: &Cone,
    p: &DiscretizationPolicy,
) -> Result<f64> {
    Ok(-g_lower(e, &negate(b), &negate(a), c, p)?)
}

/// Gerstewitz vectorizing function `w_e(A, B) = (-G^ℓ_e(A, B), G^u_e(B, A))`.
pub fn w(
    e: &Direction,
    a: &Shape,
    b: &Shape,
    c: &Cone,
    p: &DiscretizationPolicy,
) -> Result<VecValue> {
    w_clouds(e, &discretize(a, p, c)?, &discretize(b, p, c)?, c)
}

/// `v_e(A) = w_e({0}, A)`.
pub fn v(e: &Direction, a: &Shape, c: &Cone, p: &DiscretizationPolicy) -> Result<VecValue> {
    w(e, &Shape::origin(c.dim()), a, c, p)
}
