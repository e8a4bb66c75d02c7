//! Problem files.
//!
//! A problem is a JSON document. Sets are written as externally tagged
//! shapes, e.g. `{"ball": {"center": [0, 0], "radius": 1}}`. In a family
//! template every number becomes a coefficient list `[c0, c1, ...]` meaning
//! `c0 + c1 x + c2 x² + ...` in the family parameter, degree at most 4.
//!
//! ```json
//! {
//!   "dim": 2,
//!   "cone": {"type": "orthant"},
//!   "e": [-1, -1],
//!   "sense": "min",
//!   "relation": "s",
//!   "weak": false,
//!   "discretization": {"samples_per_curve": 512, "prune": true},
//!   "family": {
//!     "param": "x",
//!     "grid": {"from": 0, "to": 2, "steps": 5},
//!     "pieces": [{"interval": [0, 2], "open_right": true, "set": {"points": [[[6, 1], [6, 1]]]}}],
//!     "overrides": [{"at": 2, "set": {"points": [[6, 6]]}}]
//!   }
//! }
//! ```
//!
//! `grid.steps` counts grid points, endpoints included.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Cone, Direction, Sense, Vector};
use crate::set_orders::{Family, FamilyEntry, OrderKind};
use crate::sets::{DiscretizationPolicy, Shape};

const MAX_TEMPLATE_DEGREE: usize = 4;
const OVERRIDE_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Problem {
    pub dim: usize,
    pub cone: ConeSpec,
    pub e: Vec<f64>,
    pub sense: Sense,
    pub relation: OrderKind,
    #[serde(default)]
    pub weak: bool,
    #[serde(default)]
    pub discretization: DiscretizationSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decisions: Option<Vec<Decision>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum ConeSpec {
    Orthant,
    Polyhedral { dual_rows: Vec<Vec<f64>> },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiscretizationSpec {
    #[serde(default = "default_samples")]
    pub samples_per_curve: usize,
    #[serde(default = "default_prune")]
    pub prune: bool,
}

fn default_samples() -> usize {
    DiscretizationPolicy::default().samples_per_curve
}

fn default_prune() -> bool {
    true
}

impl Default for DiscretizationSpec {
    fn default() -> Self {
        DiscretizationSpec {
            samples_per_curve: default_samples(),
            prune: default_prune(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Decision {
    pub id: String,
    pub set: ShapeExpr,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySpec {
    pub param: String,
    pub grid: Grid,
    #[serde(default)]
    pub pieces: Vec<Piece>,
    #[serde(default)]
    pub overrides: Vec<Override>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Grid {
    pub from: f64,
    pub to: f64,
    pub steps: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Piece {
    pub interval: [f64; 2],
    #[serde(default)]
    pub open_right: bool,
    pub set: ShapeTemplate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Override {
    pub at: f64,
    pub set: ShapeExpr,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum ShapeExpr {
    Points(Vec<Vec<f64>>),
    Ball { center: Vec<f64>, radius: f64 },
    Box { lo: Vec<f64>, hi: Vec<f64> },
    Segment { a: Vec<f64>, b: Vec<f64> },
    Union(Vec<ShapeExpr>),
}

/// Polynomial in the family parameter, lowest degree first.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly(pub Vec<f64>);

impl Poly {
    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum ShapeTemplate {
    Points(Vec<Vec<Poly>>),
    Ball { center: Vec<Poly>, radius: Poly },
    Box { lo: Vec<Poly>, hi: Vec<Poly> },
    Segment { a: Vec<Poly>, b: Vec<Poly> },
    Union(Vec<ShapeTemplate>),
}

impl ShapeExpr {
    pub fn to_shape(&self) -> Shape {
        let vec = |v: &[f64]| Vector::new(v.to_vec());
        match self {
            ShapeExpr::Points(points) => Shape::PointCloud(points.iter().map(|p| vec(p)).collect()),
            ShapeExpr::Ball { center, radius } => Shape::Ball {
                center: vec(center),
                radius: *radius,
            },
            ShapeExpr::Box { lo, hi } => Shape::Box {
                lo: vec(lo),
                hi: vec(hi),
            },
            ShapeExpr::Segment { a, b } => Shape::Segment { a: vec(a), b: vec(b) },
            ShapeExpr::Union(parts) => Shape::Union(parts.iter().map(ShapeExpr::to_shape).collect()),
        }
    }
}

impl ShapeTemplate {
    pub fn eval(&self, x: f64) -> Shape {
        let vec = |v: &[Poly]| Vector::new(v.iter().map(|c| c.eval(x)).collect());
        match self {
            ShapeTemplate::Points(points) => {
                Shape::PointCloud(points.iter().map(|p| vec(p)).collect())
            }
            ShapeTemplate::Ball { center, radius } => Shape::Ball {
                center: vec(center),
                radius: radius.eval(x),
            },
            ShapeTemplate::Box { lo, hi } => Shape::Box {
                lo: vec(lo),
                hi: vec(hi),
            },
            ShapeTemplate::Segment { a, b } => Shape::Segment { a: vec(a), b: vec(b) },
            ShapeTemplate::Union(parts) => Shape::Union(parts.iter().map(|t| t.eval(x)).collect()),
        }
    }

    fn check_degree(&self, at: &str) -> Result<()> {
        let check = |p: &Poly| {
            if p.0.is_empty() || p.0.len() > MAX_TEMPLATE_DEGREE + 1 {
                Err(Error::parse(
                    at,
                    format!(
                        "coefficient list must have 1 to {} entries, got {}",
                        MAX_TEMPLATE_DEGREE + 1,
                        p.0.len()
                    ),
                ))
            } else {
                Ok(())
            }
        };
        match self {
            ShapeTemplate::Points(points) => points.iter().flatten().try_for_each(check),
            ShapeTemplate::Ball { center, radius } => {
                center.iter().try_for_each(check)?;
                check(radius)
            }
            ShapeTemplate::Box { lo: a, hi: b } | ShapeTemplate::Segment { a, b } => {
                a.iter().chain(b).try_for_each(check)
            }
            ShapeTemplate::Union(parts) => parts.iter().try_for_each(|t| t.check_degree(at)),
        }
    }
}

impl Grid {
    pub fn points(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.from];
        }
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                let t = i as f64 / last;
                (1.0 - t) * self.from + t * self.to
            })
            .collect()
    }
}

impl Piece {
    fn covers(&self, x: f64) -> bool {
        let [lo, hi] = self.interval;
        x >= lo && (x < hi || (!self.open_right && x == hi))
    }
}

fn intervals_overlap(a: &Piece, b: &Piece) -> bool {
    let lo = a.interval[0].max(b.interval[0]);
    let hi = a.interval[1].min(b.interval[1]);
    if lo < hi {
        return true;
    }
    // Touching at a single point: both must contain it.
    lo == hi && a.covers(lo) && b.covers(lo)
}

/// `%g`-style rendering with 6 significant digits.
pub fn format_param(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    let trim = |s: String| {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    };
    // Rounding can carry into the next decade (e.g. 999999.7).
    let rounded: f64 = format!("{x:.5e}").parse().unwrap_or(x);
    let exp = if rounded != 0.0 {
        rounded.abs().log10().floor() as i32
    } else {
        exp
    };
    if (-4..6).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        trim(format!("{rounded:.decimals$}"))
    } else {
        let s = format!("{rounded:.5e}");
        let (mantissa, exponent) = s.split_once('e').unwrap_or((&s, "0"));
        let exponent: i32 = exponent.parse().unwrap_or(0);
        format!(
            "{}e{}{:02}",
            trim(mantissa.to_string()),
            if exponent < 0 { '-' } else { '+' },
            exponent.abs()
        )
    }
}

impl Problem {
    pub fn cone(&self) -> Result<Cone> {
        let cone = match &self.cone {
            ConeSpec::Orthant => Cone::orthant(self.dim),
            ConeSpec::Polyhedral { dual_rows } => {
                Cone::polyhedral(dual_rows.iter().map(|r| Vector::new(r.clone())).collect())
            }
        }
        .map_err(|err| Error::parse("cone", err.to_string()))?;
        if cone.dim() != self.dim {
            return Err(Error::parse(
                "cone.dual_rows",
                format!("rows have dimension {}, problem has dim {}", cone.dim(), self.dim),
            ));
        }
        Ok(cone)
    }

    pub fn direction(&self, cone: &Cone) -> Result<Direction> {
        Direction::new(Vector::new(self.e.clone()), cone).map_err(|err| match err {
            Error::InvalidDirection(_) => Error::parse("e", "direction not in −int(C)"),
            other => Error::parse("e", other.to_string()),
        })
    }

    pub fn policy(&self) -> DiscretizationPolicy {
        DiscretizationPolicy {
            samples_per_curve: self.discretization.samples_per_curve,
            prune: self.discretization.prune,
        }
    }

    /// Checks every invariant, including that the family expands cleanly.
    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::parse("dim", "must be positive"));
        }
        let cone = self.cone()?;
        self.direction(&cone)?;
        self.policy()
            .validate()
            .map_err(|err| Error::parse("discretization.samples_per_curve", err.to_string()))?;
        expand_family(self).map(|_| ())
    }

    pub fn is_parametric(&self) -> bool {
        self.family.is_some()
    }
}

pub fn parse_problem(text: &str) -> Result<Problem> {
    let problem: Problem = serde_json::from_str(text).map_err(|err| {
        Error::parse(
            format!("line {} column {}", err.line(), err.column()),
            err.to_string(),
        )
    })?;
    problem.validate()?;
    Ok(problem)
}

/// Canonical pretty-printed form; `parse_problem(&emit_problem(p))` reproduces `p`.
pub fn emit_problem(p: &Problem) -> String {
    serde_json::to_string_pretty(p).expect("problem serialization is infallible")
}

fn checked_shape(shape: Shape, dim: usize, at: &str) -> Result<Shape> {
    let d = shape
        .validate()
        .map_err(|err| Error::parse(at, err.to_string()))?;
    if d != dim {
        return Err(Error::parse(at, format!("set has dimension {d}, problem has dim {dim}")));
    }
    Ok(shape)
}

/// The family `F(x)` as listed or sampled on the parameter grid.
///
/// Overrides beat pieces; ids of sampled members are the formatted parameter values.
pub fn expand_family(p: &Problem) -> Result<Family> {
    let entries = match (&p.decisions, &p.family) {
        (Some(_), Some(_)) => {
            return Err(Error::parse(
                "decisions/family",
                "exactly one of `decisions` and `family` may be present",
            ))
        }
        (None, None) => {
            return Err(Error::parse(
                "decisions/family",
                "one of `decisions` or `family` is required",
            ))
        }
        (Some(decisions), None) => {
            if decisions.is_empty() {
                return Err(Error::EmptyInput("problem has no decisions"));
            }
            let mut seen = HashMap::new();
            decisions
                .iter()
                .enumerate()
                .map(|(i, d)| {
                    if let Some(prev) = seen.insert(d.id.as_str(), i) {
                        return Err(Error::parse(
                            format!("decisions[{i}].id"),
                            format!("duplicate id `{}` (also decisions[{prev}])", d.id),
                        ));
                    }
                    Ok(FamilyEntry {
                        id: d.id.clone(),
                        param: None,
                        shape: checked_shape(d.set.to_shape(), p.dim, &format!("decisions[{i}].set"))?,
                    })
                })
                .collect::<Result<Vec<_>>>()?
        }
        (None, Some(spec)) => expand_template(spec, p.dim)?,
    };
    Family::new(entries).map_err(|err| Error::parse("family", err.to_string()))
}

fn expand_template(spec: &FamilySpec, dim: usize) -> Result<Vec<FamilyEntry>> {
    let Grid { from, to, steps } = spec.grid;
    if steps < 1 {
        return Err(Error::parse("family.grid.steps", "must be ≥ 1"));
    }
    if !(from.is_finite() && to.is_finite() && from <= to) {
        return Err(Error::parse("family.grid", "need finite bounds with from ≤ to"));
    }
    for (i, piece) in spec.pieces.iter().enumerate() {
        let at = format!("family.pieces[{i}]");
        let [lo, hi] = piece.interval;
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) || (piece.open_right && lo == hi) {
            return Err(Error::parse(format!("{at}.interval"), "empty or malformed interval"));
        }
        piece.set.check_degree(&format!("{at}.set"))?;
        for (j, other) in spec.pieces[..i].iter().enumerate() {
            if intervals_overlap(other, piece) {
                return Err(Error::parse(
                    format!("{at}.interval"),
                    format!("overlaps family.pieces[{j}]"),
                ));
            }
        }
    }

    let grid = spec.grid.points();
    let near = |a: f64, b: f64| (a - b).abs() <= OVERRIDE_TOL * a.abs().max(b.abs()).max(1.0);
    let mut overridden: Vec<Option<usize>> = vec![None; grid.len()];
    for (k, ov) in spec.overrides.iter().enumerate() {
        let at = format!("family.overrides[{k}]");
        let slot = grid
            .iter()
            .position(|&x| near(x, ov.at))
            .ok_or_else(|| Error::parse(format!("{at}.at"), format!("{} is not a grid point", ov.at)))?;
        if overridden[slot].is_some() {
            return Err(Error::parse(format!("{at}.at"), "grid point overridden twice"));
        }
        overridden[slot] = Some(k);
    }

    let mut ids: HashMap<String, f64> = HashMap::new();
    let mut entries = Vec::with_capacity(grid.len());
    for (slot, &x) in grid.iter().enumerate() {
        let shape = if let Some(k) = overridden[slot] {
            checked_shape(
                spec.overrides[k].set.to_shape(),
                dim,
                &format!("family.overrides[{k}].set"),
            )?
        } else {
            let (i, piece) = spec
                .pieces
                .iter()
                .enumerate()
                .find(|(_, piece)| piece.covers(x))
                .ok_or_else(|| {
                    Error::parse(
                        "family.pieces",
                        format!("grid point {} = {x} is covered by no piece or override", spec.param),
                    )
                })?;
            checked_shape(
                piece.set.eval(x),
                dim,
                &format!("family.pieces[{i}].set at {} = {x}", spec.param),
            )?
        };
        let id = format_param(x);
        if let Some(prev) = ids.insert(id.clone(), x) {
            return Err(Error::parse(
                "family.grid",
                format!("grid points {prev} and {x} both render as id `{id}`"),
            ));
        }
        entries.push(FamilyEntry {
            id,
            param: Some(x),
            shape,
        });
    }
    Ok(entries)
}
