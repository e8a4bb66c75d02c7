//! Brute-force reference implementations shared by the integration tests.
//!
//! Everything here works from the definitions: cone membership through the
//! dual rows, `φ` by bisection on `t`, set relations by pairwise search.
//! Nothing calls into the library's fronts or closed forms.

#![allow(dead_code)]

use rand::Rng;
use setvec::{Cone, Direction, Shape, Vector};

pub type P2 = [f64; 2];

#[derive(Clone, Debug)]
pub struct OracleCone {
    pub rows: Vec<P2>,
}

impl OracleCone {
    pub fn orthant() -> Self {
        OracleCone {
            rows: vec![[1.0, 0.0], [0.0, 1.0]],
        }
    }

    pub fn contains(&self, v: P2, strict: bool) -> bool {
        self.rows.iter().all(|r| {
            let d = r[0] * v[0] + r[1] * v[1];
            if strict {
                d > 0.0
            } else {
                d >= 0.0
            }
        })
    }

    pub fn to_cone(&self) -> Cone {
        Cone::polyhedral(self.rows.iter().map(|r| Vector::new(r.to_vec())).collect()).unwrap()
    }
}

/// Two independent unit rows at least 25° apart and at most 155°.
pub fn random_two_row_cone(rng: &mut impl Rng) -> OracleCone {
    loop {
        let a: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let gap: f64 = rng.gen_range(25f64.to_radians()..155f64.to_radians());
        let b = a + gap;
        let rows = vec![[a.cos(), a.sin()], [b.cos(), b.sin()]];
        let det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
        if det.abs() > 0.3 {
            return OracleCone { rows };
        }
    }
}

/// `-w` for the interior point `w` with `λ_1·w = 1` and `λ_2·w = ratio`.
pub fn interior_direction(c: &OracleCone, ratio: f64) -> P2 {
    let [r1, r2] = [c.rows[0], c.rows[1]];
    let det = r1[0] * r2[1] - r1[1] * r2[0];
    let w = [(r2[1] - r1[1] * ratio) / det, (r1[0] * ratio - r2[0]) / det];
    [-w[0], -w[1]]
}

pub fn direction(e: P2, c: &Cone) -> Direction {
    Direction::new(Vector::new(e.to_vec()), c).unwrap()
}

pub fn points_shape(points: &[P2]) -> Shape {
    Shape::PointCloud(points.iter().map(|p| Vector::new(p.to_vec())).collect())
}

pub fn sub(a: P2, b: P2) -> P2 {
    [a[0] - b[0], a[1] - b[1]]
}

pub fn add(a: P2, b: P2) -> P2 {
    [a[0] + b[0], a[1] + b[1]]
}

pub fn scale(a: P2, t: f64) -> P2 {
    [a[0] * t, a[1] * t]
}

/// Smallest `t` with `pred(t)` for a predicate that is false then true.
pub fn bisect(pred: impl Fn(f64) -> bool) -> f64 {
    let (mut lo, mut hi) = (-1.0, 1.0);
    while pred(lo) {
        lo *= 2.0;
    }
    while !pred(hi) {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// `inf { t : y ∈ te + A + C }` for a finite `A`.
pub fn phi_lower(c: &OracleCone, e: P2, a: &[P2], y: P2) -> f64 {
    bisect(|t| {
        let z = sub(y, scale(e, t));
        a.iter().any(|&p| c.contains(sub(z, p), false))
    })
}

/// `sup { t : y ∈ te + A - C }` for a finite `A`.
pub fn phi_upper(c: &OracleCone, e: P2, a: &[P2], y: P2) -> f64 {
    // y - te ∈ A - C holds for small t and fails for large t.
    bisect(|t| {
        let z = sub(y, scale(e, t));
        !a.iter().any(|&p| c.contains(sub(p, z), false))
    })
}

/// Minimum of a convex function on `[0, 1]` by ternary search.
pub fn convex_min(f: impl Fn(f64) -> f64) -> f64 {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if f(m1) <= f(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    f(lo).min(f(0.0)).min(f(1.0))
}

/// `inf { t : y ∈ te + [a, b] + C }` for a segment.
pub fn phi_lower_segment(c: &OracleCone, e: P2, a: P2, b: P2, y: P2) -> f64 {
    bisect(|t| {
        let z = sub(y, scale(e, t));
        let worst = |s: f64| {
            let p = add(scale(a, 1.0 - s), scale(b, s));
            let d = sub(z, p);
            c.rows
                .iter()
                .map(|r| -(r[0] * d[0] + r[1] * d[1]))
                .fold(f64::NEG_INFINITY, f64::max)
        };
        convex_min(worst) <= 0.0
    })
}

pub fn g_lower(c: &OracleCone, e: P2, a: &[P2], b: &[P2]) -> f64 {
    b.iter()
        .map(|&y| phi_lower(c, e, a, y))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// `G^u(B, A) = inf_{a∈A} φ^u_B(a)`.
pub fn g_upper(c: &OracleCone, e: P2, b: &[P2], a: &[P2]) -> f64 {
    a.iter()
        .map(|&y| phi_upper(c, e, b, y))
        .fold(f64::INFINITY, f64::min)
}

pub fn w(c: &OracleCone, e: P2, a: &[P2], b: &[P2]) -> (f64, f64) {
    (-g_lower(c, e, a, b), g_upper(c, e, b, a))
}

/// `B ⊂ A + C` (`A + int C` when strict).
pub fn lower_leq(c: &OracleCone, a: &[P2], b: &[P2], strict: bool) -> bool {
    b.iter()
        .all(|&y| a.iter().any(|&x| c.contains(sub(y, x), strict)))
}

/// `A ⊂ B - C` (`B - int C` when strict).
pub fn upper_leq(c: &OracleCone, a: &[P2], b: &[P2], strict: bool) -> bool {
    a.iter()
        .all(|&x| b.iter().any(|&y| c.contains(sub(y, x), strict)))
}

pub fn set_leq(c: &OracleCone, a: &[P2], b: &[P2], strict: bool) -> bool {
    lower_leq(c, a, b, strict) && upper_leq(c, a, b, strict)
}

/// Minimal (`min`) or maximal members of a finite family under `⪯ˢ`.
pub fn efficient(c: &OracleCone, family: &[Vec<P2>], min: bool, weak: bool) -> Vec<usize> {
    let better = |x: &[P2], y: &[P2]| {
        let (lo, hi) = if min { (x, y) } else { (y, x) };
        if weak {
            set_leq(c, lo, hi, true)
        } else {
            set_leq(c, lo, hi, false) && !set_leq(c, hi, lo, false)
        }
    };
    (0..family.len())
        .filter(|&i| !(0..family.len()).any(|j| better(&family[j], &family[i])))
        .collect()
}

pub fn random_points(rng: &mut impl Rng, max: usize, span: f64) -> Vec<P2> {
    let k = rng.gen_range(1..=max);
    (0..k)
        .map(|_| [rng.gen_range(-span..span), rng.gen_range(-span..span)])
        .collect()
}
