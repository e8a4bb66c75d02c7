//! Vectors, polyhedral ordering cones and point-level dominance.
//!
//! A cone is stored through its dual halfspace rows, `C = {v : λ_j·v ≥ 0 for all j}`.
//! Membership, interior membership and every scalarization formula downstream
//! reduce to dot products against these rows.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute max-norm tolerance used to decide `f(x) = f(y)` ties.
pub const DEFAULT_TIE_TOL: f64 = 1e-9;

const MAX_PERCEPTRON_UPDATES: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Vector(Vec<f64>);

impl Vector {
    pub fn new(coords: Vec<f64>) -> Self {
        Vector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![0.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: f64) -> Vector {
        Vector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn max_norm(&self) -> f64 {
        self.0.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    pub fn euclidean_norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Max-norm closeness.
    pub fn approx_eq(&self, other: &Vector, tol: f64) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| (a - b).abs() <= tol)
    }

    pub(crate) fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: self.dim(),
            });
        }
        Ok(())
    }
}

impl From<Vec<f64>> for Vector {
    fn from(v: Vec<f64>) -> Self {
        Vector(v)
    }
}

impl<const N: usize> From<[f64; N]> for Vector {
    fn from(v: [f64; N]) -> Self {
        Vector(v.to_vec())
    }
}

impl Index<usize> for Vector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Min,
    Max,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeKind {
    Orthant,
    General,
}

/// Pointed convex polyhedral cone with nonempty interior.
#[derive(Clone, Debug, PartialEq)]
pub struct Cone {
    dim: usize,
    dual_rows: Vec<Vector>,
    kind: ConeKind,
    interior_witness: Vector,
}

impl Cone {
    /// The nonnegative orthant of `R^dim`.
    pub fn orthant(dim: usize) -> Result<Cone> {
        if dim == 0 {
            return Err(Error::InvalidCone("dimension must be positive".into()));
        }
        let dual_rows = (0..dim)
            .map(|i| {
                let mut row = vec![0.0; dim];
                row[i] = 1.0;
                Vector(row)
            })
            .collect();
        Ok(Cone {
            dim,
            dual_rows,
            kind: ConeKind::Orthant,
            interior_witness: Vector(vec![1.0; dim]),
        })
    }

    /// Builds `{v : λ_j·v ≥ 0}` from halfspace normals, searching for an
    /// interior witness. Fails if the cone is not pointed or has empty interior.
    pub fn polyhedral(dual_rows: Vec<Vector>) -> Result<Cone> {
        let dim = Self::validate_rows(&dual_rows)?;
        let witness = find_interior_witness(&dual_rows).ok_or_else(|| {
            Error::InvalidCone("empty interior: no v with λ_j·v > 0 for all rows".into())
        })?;
        Ok(Self::assemble(dim, dual_rows, witness))
    }

    /// Like [`Cone::polyhedral`] but with a caller-supplied interior point.
    pub fn with_witness(dual_rows: Vec<Vector>, witness: Vector) -> Result<Cone> {
        let dim = Self::validate_rows(&dual_rows)?;
        witness.check_dim(dim)?;
        let slack = dual_rows
            .iter()
            .map(|row| row.dot(&witness))
            .fold(f64::INFINITY, f64::min);
        if !(slack > 0.0) {
            return Err(Error::InvalidCone("supplied witness is not interior".into()));
        }
        Ok(Self::assemble(dim, dual_rows, witness.scale(1.0 / slack)))
    }

    fn validate_rows(dual_rows: &[Vector]) -> Result<usize> {
        let first = dual_rows
            .first()
            .ok_or_else(|| Error::InvalidCone("no dual rows".into()))?;
        let dim = first.dim();
        if dim == 0 {
            return Err(Error::InvalidCone("dimension must be positive".into()));
        }
        for row in dual_rows {
            row.check_dim(dim)?;
            if !row.is_finite() || row.max_norm() == 0.0 {
                return Err(Error::InvalidCone(format!("degenerate dual row {row}")));
            }
        }
        // Pointed iff the rows span R^n (trivial lineality space).
        if rank(dual_rows, dim) < dim {
            return Err(Error::InvalidCone(
                "not pointed: dual rows do not span the ambient space".into(),
            ));
        }
        Ok(dim)
    }

    fn assemble(dim: usize, dual_rows: Vec<Vector>, interior_witness: Vector) -> Cone {
        let is_orthant = dual_rows.len() == dim
            && dual_rows.iter().enumerate().all(|(i, row)| {
                row.coords()
                    .iter()
                    .enumerate()
                    .all(|(k, &x)| x == if k == i { 1.0 } else { 0.0 })
            });
        Cone {
            dim,
            dual_rows,
            kind: if is_orthant {
                ConeKind::Orthant
            } else {
                ConeKind::General
            },
            interior_witness,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn dual_rows(&self) -> &[Vector] {
        &self.dual_rows
    }

    pub fn kind(&self) -> ConeKind {
        self.kind
    }

    /// A point with `λ_j·v ≥ 1` for every row.
    pub fn interior_witness(&self) -> &Vector {
        &self.interior_witness
    }

    /// Row scores `(λ_j·v)_j`.
    pub(crate) fn scores(&self, v: &Vector) -> Vec<f64> {
        match self.kind {
            ConeKind::Orthant => v.coords().to_vec(),
            ConeKind::General => self.dual_rows.iter().map(|row| row.dot(v)).collect(),
        }
    }
}

/// Rank by Gaussian elimination with partial pivoting.
fn rank(rows: &[Vector], dim: usize) -> usize {
    let mut m: Vec<Vec<f64>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    let scale = m
        .iter()
        .flatten()
        .fold(0.0f64, |acc, x| acc.max(x.abs()))
        .max(f64::MIN_POSITIVE);
    let eps = 1e-12 * scale;
    let mut rank = 0;
    for col in 0..dim {
        let pivot = (rank..m.len()).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()));
        let Some(p) = pivot else { break };
        if m[p][col].abs() <= eps {
            continue;
        }
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            let f = m[r][col] / m[rank][col];
            for k in col..dim {
                m[r][k] -= f * m[rank][k];
            }
        }
        rank += 1;
    }
    rank
}

/// Perceptron search for `v` with `λ_j·v > 0` for all rows, rescaled so the
/// smallest slack is 1.
fn find_interior_witness(rows: &[Vector]) -> Option<Vector> {
    let dim = rows[0].dim();
    let units: Vec<Vector> = rows.iter().map(|r| r.scale(1.0 / r.euclidean_norm())).collect();
    let mut v = units.iter().fold(Vector::zeros(dim), |acc, u| &acc + u);
    for _ in 0..MAX_PERCEPTRON_UPDATES {
        match units.iter().find(|u| u.dot(&v) <= 1e-12 * v.euclidean_norm()) {
            Some(u) => v = &v + u,
            None => {
                let slack = rows.iter().map(|r| r.dot(&v)).fold(f64::INFINITY, f64::min);
                return Some(v.scale(1.0 / slack));
            }
        }
    }
    None
}

/// Ordering direction `e ∈ -int(C)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Direction {
    e: Vector,
}

impl Direction {
    pub fn new(e: Vector, cone: &Cone) -> Result<Direction> {
        e.check_dim(cone.dim())?;
        if !e.is_finite() {
            return Err(Error::InvalidDirection(format!("{e} has non-finite entries")));
        }
        if let Some(row) = cone.dual_rows().iter().find(|row| row.dot(&e) >= 0.0) {
            return Err(Error::InvalidDirection(format!(
                "{e} has λ·e ≥ 0 for dual row {row}"
            )));
        }
        Ok(Direction { e })
    }

    /// `-w / |w|_∞` for the cone's stored interior witness.
    pub fn from_interior_witness(cone: &Cone) -> Direction {
        let w = cone.interior_witness();
        Direction {
            e: w.scale(-1.0 / w.max_norm()),
        }
    }

    pub fn vector(&self) -> &Vector {
        &self.e
    }

    /// `-λ_j·e > 0` for each row of `cone`.
    pub(crate) fn scales(&self, cone: &Cone) -> Result<Vec<f64>> {
        self.e.check_dim(cone.dim())?;
        let scales: Vec<f64> = cone.dual_rows().iter().map(|row| -row.dot(&self.e)).collect();
        if scales.iter().any(|&s| !(s > 0.0)) {
            return Err(Error::InvalidDirection(format!(
                "{} is not in -int(C) for this cone",
                self.e
            )));
        }
        Ok(scales)
    }
}

/// `v ∈ C`.
pub fn cone_contains(c: &Cone, v: &Vector) -> Result<bool> {
    v.check_dim(c.dim())?;
    Ok(c.dual_rows().iter().all(|row| row.dot(v) >= 0.0))
}

/// `v ∈ int(C)`.
pub fn cone_interior_contains(c: &Cone, v: &Vector) -> Result<bool> {
    v.check_dim(c.dim())?;
    Ok(c.dual_rows().iter().all(|row| row.dot(v) > 0.0))
}

/// `a` dominates `b` in the given sense: `a ≤_C b` (min) or `b ≤_C a` (max),
/// through the interior when `strict`.
fn dominates(c: &Cone, a: &Vector, b: &Vector, sense: Sense, strict: bool) -> Result<bool> {
    let diff = match sense {
        Sense::Min => b - a,
        Sense::Max => a - b,
    };
    if strict {
        cone_interior_contains(c, &diff)
    } else {
        cone_contains(c, &diff)
    }
}

/// Indices of the (weakly) minimal or maximal points of a finite set.
pub fn efficient_points(points: &[Vector], c: &Cone, sense: Sense, weak: bool) -> Result<Vec<usize>> {
    if points.is_empty() {
        return Err(Error::EmptyInput("efficient_points needs at least one point"));
    }
    let mut out = Vec::new();
    'candidates: for (i, p) in points.iter().enumerate() {
        for q in points {
            let beaten = if weak {
                dominates(c, q, p, sense, true)?
            } else {
                !q.approx_eq(p, DEFAULT_TIE_TOL) && dominates(c, q, p, sense, false)?
            };
            if beaten {
                continue 'candidates;
            }
        }
        out.push(i);
    }
    Ok(out)
}

fn check_values<K>(values: &BTreeMap<K, Vector>, c: &Cone) -> Result<()> {
    let first = values
        .values()
        .next()
        .ok_or(Error::EmptyInput("objective table is empty"))?;
    first.check_dim(c.dim())?;
    for v in values.values() {
        v.check_dim(first.dim())?;
    }
    Ok(())
}

/// Pareto solutions of a vector problem over a finite decision set.
pub fn pareto_solutions<K: Ord + Clone>(
    values: &BTreeMap<K, Vector>,
    c: &Cone,
    sense: Sense,
) -> Result<BTreeSet<K>> {
    pareto_solutions_tol(values, c, sense, DEFAULT_TIE_TOL)
}

/// [`pareto_solutions`] with an explicit tie tolerance for `f(x) ≠ f(x̄)`.
pub fn pareto_solutions_tol<K: Ord + Clone>(
    values: &BTreeMap<K, Vector>,
    c: &Cone,
    sense: Sense,
    tie_tol: f64,
) -> Result<BTreeSet<K>> {
    check_values(values, c)?;
    let mut out = BTreeSet::new();
    'candidates: for (id, v) in values {
        for other in values.values() {
            if !other.approx_eq(v, tie_tol) && dominates(c, other, v, sense, false)? {
                continue 'candidates;
            }
        }
        out.insert(id.clone());
    }
    Ok(out)
}

/// Ids whose value dominates every value in the table; possibly empty.
pub fn strongly_solutions<K: Ord + Clone>(
    values: &BTreeMap<K, Vector>,
    c: &Cone,
    sense: Sense,
) -> Result<BTreeSet<K>> {
    check_values(values, c)?;
    let mut out = BTreeSet::new();
    'candidates: for (id, v) in values {
        for other in values.values() {
            if !dominates(c, v, other, sense, false)? {
                continue 'candidates;
            }
        }
        out.insert(id.clone());
    }
    Ok(out)
}
