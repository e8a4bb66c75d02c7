//! Concrete set representations and their finite surrogates.
//!
//! Every [`Shape`] is nonempty, closed and bounded, so it is `C`-compact and
//! `∓C`-bounded for any pointed polyhedral cone with nonempty interior.
//! Continuous shapes are replaced by boundary samples: for such sets the
//! extreme behaviour relevant to `A + C`, `A - C` and the scalarizations is
//! attained on the boundary.

use std::collections::{HashMap, HashSet};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{Cone, Vector};

#[derive(Clone, Debug, PartialEq)]
pub enum Shape {
    PointCloud(Vec<Vector>),
    Ball { center: Vector, radius: f64 },
    Box { lo: Vector, hi: Vector },
    Segment { a: Vector, b: Vector },
    Union(Vec<Shape>),
}

impl Shape {
    pub fn point(p: Vector) -> Shape {
        Shape::PointCloud(vec![p])
    }

    pub fn origin(dim: usize) -> Shape {
        Shape::point(Vector::zeros(dim))
    }

    /// Checks the shape invariants and returns the ambient dimension.
    pub fn validate(&self) -> Result<usize> {
        let finite = |v: &Vector| {
            if v.is_finite() {
                Ok(())
            } else {
                Err(Error::InvalidShape(format!("non-finite coordinate in {v}")))
            }
        };
        match self {
            Shape::PointCloud(points) => {
                let first = points
                    .first()
                    .ok_or_else(|| Error::InvalidShape("empty point cloud".into()))?;
                for p in points {
                    p.check_dim(first.dim())?;
                    finite(p)?;
                }
                Ok(first.dim())
            }
            Shape::Ball { center, radius } => {
                finite(center)?;
                if !(radius.is_finite() && *radius >= 0.0) {
                    return Err(Error::InvalidShape(format!("ball radius {radius} must be ≥ 0")));
                }
                Ok(center.dim())
            }
            Shape::Box { lo, hi } => {
                finite(lo)?;
                finite(hi)?;
                hi.check_dim(lo.dim())?;
                if lo.coords().iter().zip(hi.coords()).any(|(l, h)| l > h) {
                    return Err(Error::InvalidShape(format!("box lo {lo} exceeds hi {hi}")));
                }
                Ok(lo.dim())
            }
            Shape::Segment { a, b } => {
                finite(a)?;
                finite(b)?;
                b.check_dim(a.dim())?;
                Ok(a.dim())
            }
            Shape::Union(parts) => {
                let first = parts
                    .first()
                    .ok_or_else(|| Error::InvalidShape("empty union".into()))?
                    .validate()?;
                for part in &parts[1..] {
                    let d = part.validate()?;
                    if d != first {
                        return Err(Error::DimensionMismatch {
                            expected: first,
                            found: d,
                        });
                    }
                }
                Ok(first)
            }
        }
    }

    /// Analytic membership, used to check that sampling never extrapolates.
    pub fn contains(&self, y: &Vector, tol: f64) -> bool {
        match self {
            Shape::PointCloud(points) => points.iter().any(|p| p.approx_eq(y, tol)),
            Shape::Ball { center, radius } => (y - center).euclidean_norm() <= radius + tol,
            Shape::Box { lo, hi } => y
                .coords()
                .iter()
                .zip(lo.coords().iter().zip(hi.coords()))
                .all(|(x, (l, h))| *x >= l - tol && *x <= h + tol),
            Shape::Segment { a, b } => {
                let d = b - a;
                let len2 = d.dot(&d);
                let t = if len2 == 0.0 {
                    0.0
                } else {
                    ((y - a).dot(&d) / len2).clamp(0.0, 1.0)
                };
                (&(a + &d.scale(t)) - y).euclidean_norm() <= tol
            }
            Shape::Union(parts) => parts.iter().any(|s| s.contains(y, tol)),
        }
    }
}

/// Pointwise negation `-A`.
pub fn negate(s: &Shape) -> Shape {
    match s {
        Shape::PointCloud(points) => Shape::PointCloud(points.iter().map(|p| -p).collect()),
        Shape::Ball { center, radius } => Shape::Ball {
            center: -center,
            radius: *radius,
        },
        Shape::Box { lo, hi } => Shape::Box { lo: -hi, hi: -lo },
        Shape::Segment { a, b } => Shape::Segment { a: -a, b: -b },
        Shape::Union(parts) => Shape::Union(parts.iter().map(negate).collect()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiscretizationPolicy {
    pub samples_per_curve: usize,
    pub prune: bool,
}

impl Default for DiscretizationPolicy {
    fn default() -> Self {
        DiscretizationPolicy {
            samples_per_curve: 512,
            prune: true,
        }
    }
}

impl DiscretizationPolicy {
    pub fn with_samples(samples_per_curve: usize) -> Self {
        DiscretizationPolicy {
            samples_per_curve,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples_per_curve < 4 {
            return Err(Error::InvalidShape(format!(
                "samples_per_curve must be ≥ 4, got {}",
                self.samples_per_curve
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Exact,
    Sampled,
}

/// Which extension of a set a membership query targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `A + C`
    Upper,
    /// `A - C`
    Lower,
}

/// Cone-score vectors `(λ_j·p)_j` of a point set, optionally reduced to its
/// minimal elements, together with the chords of the set joining them.
///
/// For two-row cones the reduced set is kept as a staircase: first score
/// strictly increasing, second strictly decreasing. A chord can only join
/// neighbours there, so `linked[k]` records whether vertices `k` and `k + 1`
/// are joined. Queries then run in `O(log k)` instead of a linear scan.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Front {
    width: usize,
    scores: Vec<f64>,
    source: Vec<usize>,
    staircase: bool,
    linked: Vec<bool>,
    /// Chords as pairs of row indices, outside the staircase case.
    chords: Vec<(usize, usize)>,
}

impl Front {
    fn build(scores: Vec<Vec<f64>>, width: usize, prune: bool, chords: &[(usize, usize)]) -> Front {
        let keep: Vec<usize> = if !prune {
            (0..scores.len()).collect()
        } else if width == 2 {
            let mut order: Vec<usize> = (0..scores.len()).collect();
            order.sort_by(|&a, &b| {
                scores[a][0]
                    .total_cmp(&scores[b][0])
                    .then(scores[a][1].total_cmp(&scores[b][1]))
            });
            let mut best = f64::INFINITY;
            order
                .into_iter()
                .filter(|&i| {
                    let keep = scores[i][1] < best;
                    if keep {
                        best = scores[i][1];
                    }
                    keep
                })
                .collect()
        } else {
            let mut keep: Vec<usize> = Vec::new();
            for (i, s) in scores.iter().enumerate() {
                let dominated = scores.iter().enumerate().any(|(j, t)| {
                    let le = t.iter().zip(s).all(|(a, b)| a <= b);
                    // Exact duplicates keep their first occurrence only.
                    le && (t != s || j < i)
                });
                if !dominated {
                    keep.push(i);
                }
            }
            keep
        };
        let staircase = prune && width == 2;
        let pairs: HashSet<(usize, usize)> = chords
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        let (linked, chords) = if staircase {
            let linked = keep
                .windows(2)
                .map(|w| pairs.contains(&(w[0].min(w[1]), w[0].max(w[1]))))
                .collect();
            (linked, Vec::new())
        } else {
            let row_of: HashMap<usize, usize> =
                keep.iter().enumerate().map(|(row, &i)| (i, row)).collect();
            let mut rows: Vec<(usize, usize)> = pairs
                .iter()
                .filter_map(|(a, b)| Some((*row_of.get(a)?, *row_of.get(b)?)))
                .collect();
            rows.sort_unstable();
            (Vec::new(), rows)
        };
        Front {
            width,
            scores: keep.iter().flat_map(|&i| scores[i].iter().copied()).collect(),
            source: keep,
            staircase,
            linked,
            chords,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.source.len()
    }

    fn row(&self, i: usize) -> &[f64] {
        &self.scores[i * self.width..(i + 1) * self.width]
    }

    /// Vertices of the front; chords are not sampled.
    pub(crate) fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.scores.chunks_exact(self.width)
    }

    /// Whether some member `a` satisfies `a_j ≤ y_j` (`<` when strict) for all `j`.
    pub(crate) fn covers(&self, y: &[f64], strict: bool) -> bool {
        let below = |a: f64, b: f64| if strict { a < b } else { a <= b };
        if self.staircase {
            let idx = partition_point(self.len(), |i| below(self.row(i)[0], y[0]));
            if idx == 0 {
                return false;
            }
            let u = self.row(idx - 1);
            if below(u[1], y[1]) {
                return true;
            }
            if idx == self.len() || !self.linked[idx - 1] {
                return false;
            }
            // Second score of the chord where the first score reaches y[0].
            let w = self.row(idx);
            let t = (y[0] - u[0]) / (w[0] - u[0]);
            below(u[1] + t * (w[1] - u[1]), y[1])
        } else {
            let ones = vec![1.0; self.width];
            self.rows()
                .any(|a| a.iter().zip(y).all(|(&ai, &yi)| below(ai, yi)))
                || self.chords.iter().any(|&(i, j)| {
                    let m = chord_minimax(self.row(i), self.row(j), y, &ones);
                    if strict {
                        m < 0.0
                    } else {
                        m <= 0.0
                    }
                })
        }
    }

    /// `min_a max_j (a_j - y_j) / s_j`.
    pub(crate) fn phi(&self, y: &[f64], scales: &[f64]) -> f64 {
        let gap = |a: &[f64]| {
            a.iter()
                .zip(y)
                .zip(scales)
                .map(|((ai, yi), s)| (ai - yi) / s)
                .fold(f64::NEG_INFINITY, f64::max)
        };
        if self.staircase {
            // First gap increases along the staircase, second decreases; the
            // minimum of their maximum sits at the crossing, possibly inside
            // the chord that straddles it.
            let d = |i: usize, j: usize| (self.row(i)[j] - y[j]) / scales[j];
            let p = partition_point(self.len(), |i| d(i, 0) < d(i, 1));
            let mut best = f64::INFINITY;
            if p > 0 {
                best = best.min(gap(self.row(p - 1)));
            }
            if p < self.len() {
                best = best.min(gap(self.row(p)));
            }
            if p > 0 && p < self.len() && self.linked[p - 1] {
                let (u0, u1) = (d(p - 1, 0), d(p - 1, 1));
                let (w0, w1) = (d(p, 0), d(p, 1));
                let t = ((u1 - u0) / ((w0 - u0) - (w1 - u1))).clamp(0.0, 1.0);
                best = best.min((u0 + t * (w0 - u0)).max(u1 + t * (w1 - u1)));
            }
            best
        } else {
            let vertices = self.rows().map(gap).fold(f64::INFINITY, f64::min);
            self.chords
                .iter()
                .map(|&(i, j)| chord_minimax(self.row(i), self.row(j), y, scales))
                .fold(vertices, f64::min)
        }
    }
}

/// `min_{t∈[0,1]} max_j ((1-t) u_j + t w_j - y_j) / s_j`.
///
/// The objective is convex and piecewise linear in `t`, so the minimum is at
/// an endpoint or where two of the linear pieces cross.
fn chord_minimax(u: &[f64], w: &[f64], y: &[f64], scales: &[f64]) -> f64 {
    let k = u.len();
    let a: Vec<f64> = (0..k).map(|j| (u[j] - y[j]) / scales[j]).collect();
    let b: Vec<f64> = (0..k).map(|j| (w[j] - u[j]) / scales[j]).collect();
    let at = |t: f64| {
        (0..k)
            .map(|j| a[j] + t * b[j])
            .fold(f64::NEG_INFINITY, f64::max)
    };
    let mut best = at(0.0).min(at(1.0));
    for i in 0..k {
        for j in i + 1..k {
            let slope = b[i] - b[j];
            if slope != 0.0 {
                let t = (a[j] - a[i]) / slope;
                if t > 0.0 && t < 1.0 {
                    best = best.min(at(t));
                }
            }
        }
    }
    best
}

fn partition_point(len: usize, pred: impl Fn(usize) -> bool) -> usize {
    let (mut lo, mut hi) = (0, len);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if pred(mid) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Finite surrogate of a shape, bound to the cone it was prepared for.
#[derive(Clone, Debug, PartialEq)]
pub struct Cloud {
    points: Vec<Vector>,
    provenance: Provenance,
    /// Index pairs of points whose connecting segment lies in the set.
    chords: Vec<(usize, usize)>,
    cone: Cone,
    pruned: bool,
    /// Minimal elements of the points.
    lower: Front,
    /// Minimal elements of the negated points, i.e. maximal elements of the points.
    upper: Front,
}

impl Cloud {
    pub fn new(points: Vec<Vector>, provenance: Provenance, c: &Cone, prune: bool) -> Result<Cloud> {
        Cloud::with_chords(points, Vec::new(), provenance, c, prune)
    }

    /// Cloud whose surrogate also contains the segments `[p_i, p_j]` for
    /// each listed pair. Every such segment must lie in the represented set.
    pub fn with_chords(
        points: Vec<Vector>,
        chords: Vec<(usize, usize)>,
        provenance: Provenance,
        c: &Cone,
        prune: bool,
    ) -> Result<Cloud> {
        if chords.iter().any(|&(i, j)| i >= points.len() || j >= points.len()) {
            return Err(Error::InvalidShape("chord index out of range".into()));
        }
        if points.is_empty() {
            return Err(Error::EmptyInput("cloud needs at least one point"));
        }
        for p in &points {
            p.check_dim(c.dim())?;
        }
        let width = c.dual_rows().len();
        let lower = Front::build(points.iter().map(|p| c.scores(p)).collect(), width, prune, &chords);
        let upper = Front::build(
            points.iter().map(|p| c.scores(&-p)).collect(),
            width,
            prune,
            &chords,
        );
        Ok(Cloud {
            points,
            provenance,
            chords,
            cone: c.clone(),
            pruned: prune,
            lower,
            upper,
        })
    }

    /// Exact cloud from explicit points.
    pub fn exact(points: Vec<Vector>, c: &Cone) -> Result<Cloud> {
        Cloud::new(points, Provenance::Exact, c, true)
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn dim(&self) -> usize {
        self.cone.dim()
    }

    pub fn is_pruned(&self) -> bool {
        self.pruned
    }

    /// Minimal (`Side::Upper`, generating `A + C`) or maximal
    /// (`Side::Lower`, generating `A - C`) points, when pruned.
    pub fn front_points(&self, side: Side) -> Vec<Vector> {
        let front = match side {
            Side::Upper => &self.lower,
            Side::Lower => &self.upper,
        };
        front.source.iter().map(|&i| self.points[i].clone()).collect()
    }

    pub fn negated(&self) -> Cloud {
        Cloud {
            points: self.points.iter().map(|p| -p).collect(),
            provenance: self.provenance,
            chords: self.chords.clone(),
            cone: self.cone.clone(),
            pruned: self.pruned,
            lower: self.upper.clone(),
            upper: self.lower.clone(),
        }
    }

    pub(crate) fn lower_front(&self) -> &Front {
        &self.lower
    }

    pub(crate) fn upper_front(&self) -> &Front {
        &self.upper
    }

    pub(crate) fn check_cone(&self, c: &Cone) -> Result<()> {
        if self.cone != *c {
            return Err(Error::Unsupported(
                "cloud was prepared for a different cone".into(),
            ));
        }
        Ok(())
    }
}

/// Finite surrogate of `s`: point clouds pass through, curves and boundaries
/// are sampled.
pub fn discretize(s: &Shape, p: &DiscretizationPolicy, c: &Cone) -> Result<Cloud> {
    p.validate()?;
    let dim = s.validate()?;
    if dim != c.dim() {
        return Err(Error::DimensionMismatch {
            expected: c.dim(),
            found: dim,
        });
    }
    let mut points = Vec::new();
    let mut chords = Vec::new();
    let exact = sample_into(s, p.samples_per_curve, &mut points, &mut chords)?;
    let provenance = if exact {
        Provenance::Exact
    } else {
        Provenance::Sampled
    };
    Cloud::with_chords(points, chords, provenance, c, p.prune)
}

/// Appends samples of `s` and the chords between consecutive samples of a
/// curve; returns whether the samples reproduce `s` exactly.
fn sample_into(
    s: &Shape,
    n: usize,
    out: &mut Vec<Vector>,
    chords: &mut Vec<(usize, usize)>,
) -> Result<bool> {
    let start = out.len();
    // Chains the samples appended since `start`, optionally closing the loop.
    let chain = |out: &Vec<Vector>, chords: &mut Vec<(usize, usize)>, closed: bool| {
        let end = out.len();
        chords.extend((start..end.saturating_sub(1)).map(|i| (i, i + 1)));
        if closed && end - start > 2 {
            chords.push((end - 1, start));
        }
    };
    match s {
        Shape::PointCloud(points) => {
            out.extend(points.iter().cloned());
            Ok(true)
        }
        Shape::Segment { a, b } => {
            out.extend((0..n).map(|i| lerp(a, b, i as f64 / (n - 1) as f64)));
            chain(out, chords, false);
            Ok(false)
        }
        Shape::Ball { center, radius } => match center.dim() {
            1 => {
                out.push(Vector::new(vec![center[0] - radius]));
                out.push(Vector::new(vec![center[0] + radius]));
                Ok(true)
            }
            2 => {
                out.extend((0..n).map(|i| {
                    let (sin, cos) = unit_circle(i, n);
                    Vector::new(vec![center[0] + radius * cos, center[1] + radius * sin])
                }));
                // Chords of a disk lie inside it.
                chain(out, chords, true);
                Ok(false)
            }
            d => Err(Error::Unsupported(format!(
                "ball boundary sampling is implemented for dimension ≤ 2, got {d}"
            ))),
        },
        Shape::Box { lo, hi } => match lo.dim() {
            1 => {
                out.push(lo.clone());
                out.push(hi.clone());
                Ok(true)
            }
            2 => {
                let corners = [
                    lo.clone(),
                    Vector::new(vec![hi[0], lo[1]]),
                    hi.clone(),
                    Vector::new(vec![lo[0], hi[1]]),
                ];
                let per_edge = (n / 4).max(1);
                for k in 0..4 {
                    let (from, to) = (&corners[k], &corners[(k + 1) % 4]);
                    out.extend((0..per_edge).map(|i| lerp(from, to, i as f64 / per_edge as f64)));
                }
                chain(out, chords, true);
                Ok(false)
            }
            d => Err(Error::Unsupported(format!(
                "box boundary sampling is implemented for dimension ≤ 2, got {d}"
            ))),
        },
        Shape::Union(parts) => {
            let mut exact = true;
            for part in parts {
                exact &= sample_into(part, n, out, chords)?;
            }
            Ok(exact)
        }
    }
}

/// `(1 - t) a + t b`, exact at both endpoints.
fn lerp(a: &Vector, b: &Vector, t: f64) -> Vector {
    Vector::new(
        a.coords()
            .iter()
            .zip(b.coords())
            .map(|(x, y)| (1.0 - t) * x + t * y)
            .collect(),
    )
}

/// `(sin, cos)` of `2π i / n`, exact at quarter turns.
fn unit_circle(i: usize, n: usize) -> (f64, f64) {
    if (4 * i) % n == 0 {
        return match (4 * i / n) % 4 {
            0 => (0.0, 1.0),
            1 => (1.0, 0.0),
            2 => (0.0, -1.0),
            _ => (-1.0, 0.0),
        };
    }
    (2.0 * PI * i as f64 / n as f64).sin_cos()
}

/// `y ∈ A + C` (upper) or `y ∈ A - C` (lower).
pub fn in_extended_set(a: &Cloud, y: &Vector, c: &Cone, side: Side) -> Result<bool> {
    membership(a, y, c, side, false)
}

/// `y ∈ A + int(C)` (upper) or `y ∈ A - int(C)` (lower).
pub fn in_extended_interior(a: &Cloud, y: &Vector, c: &Cone, side: Side) -> Result<bool> {
    membership(a, y, c, side, true)
}

fn membership(a: &Cloud, y: &Vector, c: &Cone, side: Side, strict: bool) -> Result<bool> {
    y.check_dim(c.dim())?;
    a.check_cone(c)?;
    Ok(match side {
        Side::Upper => a.lower.covers(&c.scores(y), strict),
        Side::Lower => a.upper.covers(&c.scores(&-y), strict),
    })
}
