//! Command dispatch and report rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::{pareto_solutions_tol, Cone, Direction, Sense, Vector};
use crate::scalarization::{v_cloud, w_clouds, VecValue};
use crate::set_orders::{
    family_efficient_sets, leq_clouds, sign_tol, solve_via_v_tol, solve_via_w_tol, CompareMethod,
    Family, OrderKind, Relation, Report, SolveMethod,
};
use crate::sets::{discretize, Cloud};

use super::problem::{expand_family, Problem};

pub const CSV_HEADER: &str = "id,param,first,second,accepted";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Solve,
    Scalarize,
    Relate,
    /// `scalarize` rendered as CSV.
    Table,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Emit {
    #[default]
    Text,
    Csv,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum Against {
    #[default]
    Origin,
    Id(String),
}

impl std::str::FromStr for Against {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(if s == "origin" {
            Against::Origin
        } else {
            Against::Id(s.to_string())
        })
    }
}

/// Command-line replacements for problem fields.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Overrides {
    pub weak: bool,
    pub sense: Option<Sense>,
    pub e: Option<Vec<f64>>,
    pub samples: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunOptions {
    pub method: SolveMethod,
    pub emit: Emit,
    pub tolerance: Option<f64>,
    pub against: Against,
    pub pair: Option<(String, String)>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            method: SolveMethod::Pairwise,
            emit: Emit::Text,
            tolerance: None,
            against: Against::Origin,
            pair: None,
        }
    }
}

pub fn apply_overrides(p: &mut Problem, o: &Overrides) -> Result<()> {
    if o.weak {
        p.weak = true;
    }
    if let Some(sense) = o.sense {
        p.sense = sense;
    }
    if let Some(e) = &o.e {
        p.e = e.clone();
    }
    if let Some(n) = o.samples {
        p.discretization.samples_per_curve = n;
    }
    p.validate()
}

pub fn run(p: &Problem, command: Command, opts: &RunOptions) -> Result<String> {
    if let Some(tol) = opts.tolerance {
        if !(tol.is_finite() && tol >= 0.0) {
            return Err(Error::parse("--tolerance", "must be a finite nonnegative number"));
        }
    }
    let ctx = Context::new(p)?;
    match command {
        Command::Solve => ctx.solve(opts),
        Command::Scalarize => ctx.scalarize(opts, opts.emit),
        Command::Table => ctx.scalarize(opts, Emit::Csv),
        Command::Relate => ctx.relate(opts),
    }
}

struct Context<'a> {
    problem: &'a Problem,
    family: Family,
    cone: Cone,
    e: Direction,
}

struct Row {
    id: String,
    param: Option<f64>,
    value: Option<VecValue>,
    accepted: bool,
}

fn num(x: f64) -> String {
    // Avoid "-0" in output.
    format!("{}", if x == 0.0 { 0.0 } else { x })
}

fn render_csv(rows: &[Row]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let param = row.param.map(num).unwrap_or_default();
        let (first, second) = row
            .value
            .map(|v| (num(v.first), num(v.second)))
            .unwrap_or_default();
        let _ = writeln!(out, "{},{param},{first},{second},{}", row.id, row.accepted);
    }
    out
}

fn render_table(out: &mut String, rows: &[Row]) {
    let _ = writeln!(out, "  {:<12} {:>22} {:>22}  accepted", "id", "first", "second");
    for row in rows {
        let (first, second) = row
            .value
            .map(|v| (num(v.first), num(v.second)))
            .unwrap_or_default();
        let mark = if row.accepted { "*" } else { "" };
        let _ = writeln!(out, "  {:<12} {first:>22} {second:>22}  {mark}", row.id);
    }
}

impl<'a> Context<'a> {
    fn new(problem: &'a Problem) -> Result<Self> {
        let cone = problem.cone()?;
        let e = problem.direction(&cone)?;
        Ok(Context {
            family: expand_family(problem)?,
            problem,
            cone,
            e,
        })
    }

    fn clouds(&self) -> Result<Vec<Cloud>> {
        let policy = self.problem.policy();
        self.family
            .entries()
            .iter()
            .map(|entry| discretize(&entry.shape, &policy, &self.cone))
            .collect()
    }

    fn tolerance(&self, clouds: &[Cloud], opts: &RunOptions) -> f64 {
        opts.tolerance
            .unwrap_or_else(|| sign_tol(&clouds.iter().collect::<Vec<_>>()))
    }

    fn header(&self, out: &mut String, what: &str) {
        let p = self.problem;
        let _ = writeln!(
            out,
            "{what}: {} members, sense {}, relation {}{}",
            self.family.len(),
            match p.sense {
                Sense::Min => "min",
                Sense::Max => "max",
            },
            p.relation,
            if p.weak { ", weak" } else { "" },
        );
    }

    fn solve(&self, opts: &RunOptions) -> Result<String> {
        let p = self.problem;
        let policy = p.policy();
        if opts.method != SolveMethod::Pairwise && p.relation != OrderKind::Set {
            return Err(Error::Unsupported(format!(
                "method {} only solves relation s, problem uses {}",
                opts.method, p.relation
            )));
        }
        let report = match opts.method {
            SolveMethod::Pairwise => {
                family_efficient_sets(&self.family, p.relation, &self.cone, p.sense, p.weak, &policy)?
            }
            SolveMethod::VopW => solve_via_w_tol(
                &self.family,
                &self.e,
                &self.cone,
                p.sense,
                p.weak,
                &policy,
                opts.tolerance,
            )?,
            SolveMethod::VopV => {
                if p.weak {
                    return Err(Error::Unsupported("method vop-v has no weak variant".into()));
                }
                solve_via_v_tol(&self.family, &self.e, &self.cone, p.sense, &policy, opts.tolerance)?
            }
        };
        Ok(match opts.emit {
            Emit::Csv => render_csv(&self.solve_rows(&report)),
            Emit::Text => self.solve_text(&report),
        })
    }

    fn solve_rows(&self, report: &Report) -> Vec<Row> {
        let values: BTreeMap<&str, VecValue> = match report.method {
            SolveMethod::VopV => report.certificates[0]
                .table
                .iter()
                .map(|(id, v)| (id.as_str(), *v))
                .collect(),
            _ => BTreeMap::new(),
        };
        self.family
            .entries()
            .iter()
            .map(|entry| Row {
                id: entry.id.clone(),
                param: entry.param,
                value: values.get(entry.id.as_str()).copied(),
                accepted: report.solutions.contains(&entry.id),
            })
            .collect()
    }

    fn solve_text(&self, report: &Report) -> String {
        let mut out = String::new();
        self.header(&mut out, &format!("solve ({})", report.method));
        let _ = writeln!(out, "solutions: {}", report.solutions.join(" "));
        for cert in &report.certificates {
            let accepted: Vec<&str> = match &cert.anchor {
                Some(anchor) => {
                    let _ = writeln!(out, "certificate for {anchor}: w-table");
                    vec![anchor.as_str()]
                }
                None => {
                    let _ = writeln!(out, "v-table:");
                    report.solutions.iter().map(String::as_str).collect()
                }
            };
            let rows: Vec<Row> = cert
                .table
                .iter()
                .map(|(id, v)| Row {
                    id: id.clone(),
                    param: None,
                    value: Some(*v),
                    accepted: accepted.contains(&id.as_str()),
                })
                .collect();
            render_table(&mut out, &rows);
        }
        let d = &report.diagnostics;
        if let Some(check) = &d.totality {
            let _ = writeln!(out, "total comparability: {check}");
        }
        if let Some(check) = &d.injectivity {
            let _ = writeln!(out, "injectivity: {check}");
        }
        let _ = writeln!(out, "certified: {}", if d.certified { "yes" } else { "no" });
        for warning in &d.warnings {
            let _ = writeln!(out, "warning: {warning}");
        }
        out
    }

    fn scalarize(&self, opts: &RunOptions, emit: Emit) -> Result<String> {
        let clouds = self.clouds()?;
        let tol = self.tolerance(&clouds, opts);
        let (table, sense) = match &opts.against {
            Against::Origin => (
                clouds
                    .iter()
                    .map(|a| v_cloud(&self.e, a, &self.cone))
                    .collect::<Result<Vec<_>>>()?,
                self.problem.sense,
            ),
            Against::Id(id) => {
                let anchor = &clouds[self.family.index_of(id)?];
                let table = clouds
                    .iter()
                    .map(|x| match self.problem.sense {
                        Sense::Min => w_clouds(&self.e, x, anchor, &self.cone),
                        Sense::Max => w_clouds(&self.e, anchor, x, &self.cone),
                    })
                    .collect::<Result<Vec<_>>>()?;
                (table, Sense::Max)
            }
        };
        let values: BTreeMap<usize, Vector> =
            table.iter().map(|v| v.to_vector()).enumerate().collect();
        let accepted = pareto_solutions_tol(&values, &Cone::orthant(2)?, sense, tol)?;
        let rows: Vec<Row> = self
            .family
            .entries()
            .iter()
            .zip(&table)
            .enumerate()
            .map(|(i, (entry, v))| Row {
                id: entry.id.clone(),
                param: entry.param,
                value: Some(*v),
                accepted: accepted.contains(&i),
            })
            .collect();
        Ok(match emit {
            Emit::Csv => render_csv(&rows),
            Emit::Text => {
                let mut out = String::new();
                match &opts.against {
                    Against::Origin => self.header(&mut out, "v-table"),
                    Against::Id(id) => self.header(&mut out, &format!("w-table against {id}")),
                }
                render_table(&mut out, &rows);
                out
            }
        })
    }

    fn relate(&self, opts: &RunOptions) -> Result<String> {
        if opts.emit == Emit::Csv {
            return Err(Error::Unsupported("relate has no CSV form".into()));
        }
        let (a_id, b_id) = opts
            .pair
            .as_ref()
            .ok_or_else(|| Error::parse("--pair", "relate needs --pair A,B"))?;
        let policy = self.problem.policy();
        let cloud = |id: &str| -> Result<Cloud> {
            discretize(&self.family.get(id)?.shape, &policy, &self.cone)
        };
        let (a, b) = (cloud(a_id)?, cloud(b_id)?);
        let tol = self.tolerance(&[a.clone(), b.clone()], opts);
        let value = w_clouds(&self.e, &a, &b, &self.cone)?;

        let mut out = String::new();
        let _ = writeln!(out, "w({a_id}, {b_id}) = {value}");
        let _ = writeln!(out, "sign tolerance: {tol}");
        for kind in [OrderKind::Lower, OrderKind::Upper, OrderKind::Set] {
            for strict in [false, true] {
                let r = Relation::new(kind, strict);
                let direct = leq_clouds(&a, &b, r, &self.cone, CompareMethod::Direct)?;
                let sign = |x: f64| if strict { x > tol } else { x >= -tol };
                let lower = !matches!(kind, OrderKind::Upper);
                let upper = !matches!(kind, OrderKind::Lower);
                let by_w = (!lower || sign(value.first)) && (!upper || sign(value.second));
                let yes = |b: bool| if b { "yes" } else { "no" };
                let _ = writeln!(
                    out,
                    "{a_id} {}{kind} {b_id}: direct {}, via w {}",
                    if strict { "<" } else { "<=" },
                    yes(direct),
                    yes(by_w)
                );
            }
        }
        Ok(out)
    }
}
