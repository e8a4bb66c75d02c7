//! Set order relations and solvers for finite families of sets.
//!
//! Relations compare two sets `A`, `B`:
//!
//! * lower: `A ⪯ℓ B ⟺ B ⊂ A + C`
//! * upper: `A ⪯u B ⟺ A ⊂ B - C`
//! * set less: both of the above
//!
//! Strict variants replace `C` by `int(C)`. A family is solved either by
//! comparing all pairs directly, through the `w_e` vector problem, or through
//! the cheaper `v_e` vector problem which needs total comparability to be
//! complete.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{pareto_solutions_tol, strongly_solutions, Cone, Direction, Sense, Vector};
use crate::scalarization::{v_cloud, w_clouds, VecValue};
use crate::sets::{discretize, Cloud, DiscretizationPolicy, Provenance, Shape};

/// Sign tolerance for Gerstewitz tests and ties when every set is exact.
pub const EXACT_SIGN_TOL: f64 = 1e-9;
/// Sign tolerance once any set has been sampled.
pub const SAMPLED_SIGN_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    #[serde(rename = "l")]
    Lower,
    #[serde(rename = "u")]
    Upper,
    #[serde(rename = "s")]
    Set,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lower => "l",
            OrderKind::Upper => "u",
            OrderKind::Set => "s",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub kind: OrderKind,
    pub strict: bool,
}

impl Relation {
    pub const SET: Relation = Relation {
        kind: OrderKind::Set,
        strict: false,
    };
    pub const STRICT_SET: Relation = Relation {
        kind: OrderKind::Set,
        strict: true,
    };

    pub fn new(kind: OrderKind, strict: bool) -> Self {
        Relation { kind, strict }
    }
}

/// How a relation between two sets is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompareMethod {
    /// Containment tests on the discretized sets.
    Direct,
    /// Sign tests on `w_e(A, B)` for the cone's default direction.
    Gerstewitz,
}

/// Default sign tolerance for comparisons among `clouds`.
pub fn sign_tol(clouds: &[&Cloud]) -> f64 {
    if clouds.iter().all(|c| c.provenance() == Provenance::Exact) {
        EXACT_SIGN_TOL
    } else {
        SAMPLED_SIGN_TOL
    }
}

/// Relation test on prepared clouds.
pub fn leq_clouds(a: &Cloud, b: &Cloud, r: Relation, c: &Cone, method: CompareMethod) -> Result<bool> {
    a.check_cone(c)?;
    b.check_cone(c)?;
    let lower = matches!(r.kind, OrderKind::Lower | OrderKind::Set);
    let upper = matches!(r.kind, OrderKind::Upper | OrderKind::Set);
    match method {
        CompareMethod::Direct => {
            // B ⊂ A + C reduces to min(B) ⊂ A + C, and A ⊂ B - C to max(A) ⊂ B - C.
            let lower_ok = || {
                b.lower_front()
                    .rows()
                    .all(|y| a.lower_front().covers(y, r.strict))
            };
            let upper_ok = || {
                a.upper_front()
                    .rows()
                    .all(|y| b.upper_front().covers(y, r.strict))
            };
            Ok((!lower || lower_ok()) && (!upper || upper_ok()))
        }
        CompareMethod::Gerstewitz => {
            let e = Direction::from_interior_witness(c);
            let tol = sign_tol(&[a, b]);
            let value = w_clouds(&e, a, b, c)?;
            let sign = |x: f64| if r.strict { x > tol } else { x >= -tol };
            Ok((!lower || sign(value.first)) && (!upper || sign(value.second)))
        }
    }
}

/// `A ⪯ B` (or `A ≺ B`) for the given relation.
pub fn leq_set(
    a: &Shape,
    b: &Shape,
    r: Relation,
    c: &Cone,
    p: &DiscretizationPolicy,
    method: CompareMethod,
) -> Result<bool> {
    leq_clouds(&discretize(a, p, c)?, &discretize(b, p, c)?, r, c, method)
}

/// `A ∼ˢ B`.
pub fn equivalent_s(a: &Shape, b: &Shape, c: &Cone, p: &DiscretizationPolicy) -> Result<bool> {
    let (a, b) = (discretize(a, p, c)?, discretize(b, p, c)?);
    Ok(leq_clouds(&a, &b, Relation::SET, c, CompareMethod::Direct)?
        && leq_clouds(&b, &a, Relation::SET, c, CompareMethod::Direct)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyEntry {
    pub id: String,
    /// Parameter value when the entry was generated from a template.
    pub param: Option<f64>,
    pub shape: Shape,
}

/// Nonempty, ordered collection of sets `F(x)` with unique ids.
#[derive(Clone, Debug, PartialEq)]
pub struct Family {
    entries: Vec<FamilyEntry>,
    dim: usize,
}

impl Family {
    pub fn new(entries: Vec<FamilyEntry>) -> Result<Family> {
        let first = entries
            .first()
            .ok_or(Error::EmptyInput("family has no members"))?;
        let dim = first.shape.validate()?;
        let mut seen = std::collections::HashSet::new();
        for entry in &entries {
            let d = entry.shape.validate()?;
            if d != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: d,
                });
            }
            if !seen.insert(entry.id.as_str()) {
                return Err(Error::InvalidShape(format!("duplicate family id `{}`", entry.id)));
            }
        }
        Ok(Family { entries, dim })
    }

    pub fn from_shapes<I, S>(shapes: I) -> Result<Family>
    where
        I: IntoIterator<Item = (S, Shape)>,
        S: Into<String>,
    {
        Family::new(
            shapes
                .into_iter()
                .map(|(id, shape)| FamilyEntry {
                    id: id.into(),
                    param: None,
                    shape,
                })
                .collect(),
        )
    }

    pub fn entries(&self) -> &[FamilyEntry] {
        &self.entries
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.id.as_str())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.entries
            .iter()
            .position(|e| e.id == id)
            .ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    pub fn get(&self, id: &str) -> Result<&FamilyEntry> {
        Ok(&self.entries[self.index_of(id)?])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMethod {
    Pairwise,
    VopW,
    VopV,
}

impl fmt::Display for SolveMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolveMethod::Pairwise => "pairwise",
            SolveMethod::VopW => "vop-w",
            SolveMethod::VopV => "vop-v",
        })
    }
}

/// A `w_e` table against an anchor id, or the `v_e` table when `anchor` is `None`.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub anchor: Option<String>,
    pub table: Vec<(String, VecValue)>,
}

/// Outcome of a pairwise check; `witness` names an offending pair on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    pub passed: bool,
    pub witness: Option<(String, String)>,
}

impl PairCheck {
    fn pass() -> Self {
        PairCheck {
            passed: true,
            witness: None,
        }
    }

    fn fail(a: &str, b: &str) -> Self {
        PairCheck {
            passed: false,
            witness: Some((a.to_string(), b.to_string())),
        }
    }
}

impl fmt::Display for PairCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => f.write_str("PASSED"),
            Some((a, b)) => write!(f, "FAILED (witness pair {a}, {b})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Diagnostics {
    /// Total `⪯ˢ` comparability of the family.
    pub totality: Option<PairCheck>,
    /// Pairwise distinctness of the `v_e` table.
    pub injectivity: Option<PairCheck>,
    /// Returned ids are proven solutions of the set problem.
    pub certified: bool,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub solutions: Vec<String>,
    pub method: SolveMethod,
    pub certificates: Vec<Certificate>,
    pub diagnostics: Diagnostics,
}

/// Family members discretized once for a fixed cone.
struct Prepared<'a> {
    family: &'a Family,
    clouds: Vec<Cloud>,
    tol: f64,
}

impl<'a> Prepared<'a> {
    fn new(
        family: &'a Family,
        c: &Cone,
        p: &DiscretizationPolicy,
        tol: Option<f64>,
    ) -> Result<Self> {
        if family.dim() != c.dim() {
            return Err(Error::DimensionMismatch {
                expected: c.dim(),
                found: family.dim(),
            });
        }
        let clouds = family
            .entries()
            .iter()
            .map(|entry| discretize(&entry.shape, p, c))
            .collect::<Result<Vec<_>>>()?;
        let tol = tol.unwrap_or_else(|| sign_tol(&clouds.iter().collect::<Vec<_>>()));
        Ok(Prepared { family, clouds, tol })
    }

    fn id(&self, i: usize) -> &str {
        &self.family.entries()[i].id
    }

    fn efficient(&self, r: Relation, c: &Cone, sense: Sense) -> Result<Vec<usize>> {
        let n = self.clouds.len();
        let mut cache: Vec<Option<bool>> = vec![None; n * n];
        let mut rel = |i: usize, j: usize| -> Result<bool> {
            if let Some(known) = cache[i * n + j] {
                return Ok(known);
            }
            let value = leq_clouds(&self.clouds[i], &self.clouds[j], r, c, CompareMethod::Direct)?;
            cache[i * n + j] = Some(value);
            Ok(value)
        };
        let mut out = Vec::new();
        'candidates: for i in 0..n {
            for j in 0..n {
                // min: B ⪯ A implies A ⪯ B; max: A ⪯ B implies B ⪯ A.
                let (below, above) = match sense {
                    Sense::Min => (j, i),
                    Sense::Max => (i, j),
                };
                if rel(below, above)? && !rel(above, below)? {
                    continue 'candidates;
                }
            }
            out.push(i);
        }
        Ok(out)
    }

    fn total_comparability(&self, c: &Cone, strict: bool) -> Result<PairCheck> {
        let r = Relation::new(OrderKind::Set, strict);
        for i in 0..self.clouds.len() {
            for j in i + 1..self.clouds.len() {
                let (a, b) = (&self.clouds[i], &self.clouds[j]);
                if !leq_clouds(a, b, r, c, CompareMethod::Direct)?
                    && !leq_clouds(b, a, r, c, CompareMethod::Direct)?
                {
                    return Ok(PairCheck::fail(self.id(i), self.id(j)));
                }
            }
        }
        Ok(PairCheck::pass())
    }

    fn ids(&self, indices: &[usize]) -> Vec<String> {
        indices.iter().map(|&i| self.id(i).to_string()).collect()
    }
}

/// (Weakly) `♯`-minimal or maximal members by pairwise comparison.
pub fn family_efficient_sets(
    f: &Family,
    r: OrderKind,
    c: &Cone,
    sense: Sense,
    weak: bool,
    p: &DiscretizationPolicy,
) -> Result<Report> {
    let prepared = Prepared::new(f, c, p, None)?;
    let solutions = prepared.efficient(Relation::new(r, weak), c, sense)?;
    Ok(Report {
        solutions: prepared.ids(&solutions),
        method: SolveMethod::Pairwise,
        certificates: Vec::new(),
        diagnostics: Diagnostics {
            certified: true,
            ..Default::default()
        },
    })
}

/// Solves the `s`-problem through the `w_e` vector problems, one per candidate.
///
/// Candidate `x₀` is accepted when it is a Pareto maximizer (a strongly
/// solution when `weak`) of `x ↦ w_e(F(x), F(x₀))` for minimization or
/// `x ↦ w_e(F(x₀), F(x))` for maximization. Accepted ids carry their tables
/// as certificates.
pub fn solve_via_w(
    f: &Family,
    e: &Direction,
    c: &Cone,
    sense: Sense,
    weak: bool,
    p: &DiscretizationPolicy,
) -> Result<Report> {
    solve_via_w_tol(f, e, c, sense, weak, p, None)
}

/// [`solve_via_w`] with an explicit tie tolerance in place of the
/// provenance-based default.
pub fn solve_via_w_tol(
    f: &Family,
    e: &Direction,
    c: &Cone,
    sense: Sense,
    weak: bool,
    p: &DiscretizationPolicy,
    tol: Option<f64>,
) -> Result<Report> {
    e.scales(c)?;
    let prepared = Prepared::new(f, c, p, tol)?;
    let plane = Cone::orthant(2)?;
    let n = prepared.clouds.len();
    let mut solutions = Vec::new();
    let mut certificates = Vec::new();
    for anchor in 0..n {
        let mut values = BTreeMap::new();
        let mut table = Vec::with_capacity(n);
        for x in 0..n {
            let (a, b) = match sense {
                Sense::Min => (&prepared.clouds[x], &prepared.clouds[anchor]),
                Sense::Max => (&prepared.clouds[anchor], &prepared.clouds[x]),
            };
            let value = w_clouds(e, a, b, c)?;
            values.insert(x, value.to_vector());
            table.push((prepared.id(x).to_string(), value));
        }
        let accepted = if weak {
            strongly_solutions(&values, &plane, Sense::Max)?
        } else {
            pareto_solutions_tol(&values, &plane, Sense::Max, prepared.tol)?
        };
        if accepted.contains(&anchor) {
            solutions.push(anchor);
            certificates.push(Certificate {
                anchor: Some(prepared.id(anchor).to_string()),
                table,
            });
        }
    }
    let mut warnings = Vec::new();
    if weak {
        // The strongly-solution test is sufficient for weak efficiency but
        // can reject weak solutions that are comparable to a better member.
        let exact = prepared.efficient(Relation::new(OrderKind::Set, true), c, sense)?;
        for &i in exact.iter().filter(|i| !solutions.contains(i)) {
            warnings.push(format!(
                "id {} is a weak solution of the set problem but not a strongly solution of its w-problem",
                prepared.id(i)
            ));
        }
    }
    Ok(Report {
        solutions: prepared.ids(&solutions),
        method: SolveMethod::VopW,
        certificates,
        diagnostics: Diagnostics {
            certified: true,
            warnings,
            ..Default::default()
        },
    })
}

/// Solves the `s`-problem through the single vector problem `x ↦ v_e(F(x))`.
///
/// The result is sound when the `v_e` table is injective and complete when
/// the family is totally `⪯ˢ`-comparable; both conditions are reported. When
/// comparability fails, the ids found by pairwise comparison but missed by
/// the vector problem are named in a warning.
pub fn solve_via_v(
    f: &Family,
    e: &Direction,
    c: &Cone,
    sense: Sense,
    p: &DiscretizationPolicy,
) -> Result<Report> {
    solve_via_v_tol(f, e, c, sense, p, None)
}

/// [`solve_via_v`] with an explicit tie and injectivity tolerance.
pub fn solve_via_v_tol(
    f: &Family,
    e: &Direction,
    c: &Cone,
    sense: Sense,
    p: &DiscretizationPolicy,
    tol: Option<f64>,
) -> Result<Report> {
    e.scales(c)?;
    let prepared = Prepared::new(f, c, p, tol)?;
    let plane = Cone::orthant(2)?;
    let n = prepared.clouds.len();

    let table: Vec<VecValue> = prepared
        .clouds
        .iter()
        .map(|cloud| v_cloud(e, cloud, c))
        .collect::<Result<_>>()?;
    let values: BTreeMap<usize, Vector> = table.iter().map(|v| v.to_vector()).enumerate().collect();
    let solutions: Vec<usize> = pareto_solutions_tol(&values, &plane, sense, prepared.tol)?
        .into_iter()
        .collect();

    let mut injectivity = PairCheck::pass();
    'pairs: for i in 0..n {
        for j in i + 1..n {
            if table[i].approx_eq(&table[j], prepared.tol) {
                injectivity = PairCheck::fail(prepared.id(i), prepared.id(j));
                break 'pairs;
            }
        }
    }
    let totality = prepared.total_comparability(c, false)?;

    let mut warnings = Vec::new();
    if let Some((a, b)) = &totality.witness {
        warnings.push(format!(
            "total s-comparability fails ({a} and {b} are incomparable); \
             some solutions of the set problem may be missed"
        ));
        let exact = prepared.efficient(Relation::SET, c, sense)?;
        for &i in exact.iter().filter(|i| !solutions.contains(i)) {
            warnings.push(format!(
                "id {} solves the set problem but can not be obtained by Gerstewitz vectorization",
                prepared.id(i)
            ));
        }
    }
    if let Some((a, b)) = &injectivity.witness {
        warnings.push(format!(
            "v-table is not injective ({a} and {b} share a value); returned ids are not certified"
        ));
    }

    Ok(Report {
        solutions: prepared.ids(&solutions),
        method: SolveMethod::VopV,
        certificates: vec![Certificate {
            anchor: None,
            table: (0..n)
                .map(|i| (prepared.id(i).to_string(), table[i]))
                .collect(),
        }],
        diagnostics: Diagnostics {
            certified: injectivity.passed,
            totality: Some(totality),
            injectivity: Some(injectivity),
            warnings,
        },
    })
}

/// Whether every pair of members is `⪯ˢ`-comparable (`≺ˢ` when `strict`).
pub fn check_total_comparability(
    f: &Family,
    c: &Cone,
    strict: bool,
    p: &DiscretizationPolicy,
) -> Result<PairCheck> {
    Prepared::new(f, c, p, None)?.total_comparability(c, strict)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Vector {
        Vector::new(vec![x, y])
    }

    fn cloud(points: &[(f64, f64)]) -> Shape {
        Shape::PointCloud(points.iter().map(|&(x, y)| pt(x, y)).collect())
    }

    fn setup() -> (Cone, Direction, DiscretizationPolicy) {
        let c = Cone::orthant(2).unwrap();
        let e = Direction::new(pt(-1.0, -1.0), &c).unwrap();
        (c, e, DiscretizationPolicy::default())
    }

    fn counterexample() -> Family {
        Family::from_shapes([
            (
                "1",
                Shape::Segment {
                    a: pt(1.0, 1.0),
                    b: pt(2.0, 1.0),
                },
            ),
            ("2", cloud(&[(1.5, 2.0)])),
        ])
        .unwrap()
    }

    #[test]
    fn reflexive_and_equivalent() {
        let (c, _, p) = setup();
        let a = cloud(&[(0.0, 0.0), (2.0, 2.0)]);
        let b = cloud(&[(0.0, 0.0), (1.0, 1.0), (2.0, 2.0)]);
        for method in [CompareMethod::Direct, CompareMethod::Gerstewitz] {
            assert!(leq_set(&a, &a, Relation::SET, &c, &p, method).unwrap());
        }
        assert!(equivalent_s(&a, &a, &c, &p).unwrap());
        assert!(equivalent_s(&a, &b, &c, &p).unwrap());
        assert!(!equivalent_s(&cloud(&[(0.0, 0.0)]), &cloud(&[(1.0, 1.0)]), &c, &p).unwrap());
    }

    #[test]
    fn counterexample_is_incomparable() {
        let (c, _, p) = setup();
        let f = counterexample();
        let (a, b) = (&f.entries()[0].shape, &f.entries()[1].shape);
        for method in [CompareMethod::Direct, CompareMethod::Gerstewitz] {
            assert!(!leq_set(a, b, Relation::SET, &c, &p, method).unwrap());
            assert!(!leq_set(b, a, Relation::SET, &c, &p, method).unwrap());
        }
        let check = check_total_comparability(&f, &c, false, &p).unwrap();
        assert_eq!(check, PairCheck::fail("1", "2"));
    }

    #[test]
    fn counterexample_solvers() {
        let (c, e, p) = setup();
        let f = counterexample();
        let pairwise = family_efficient_sets(&f, OrderKind::Set, &c, Sense::Max, false, &p).unwrap();
        assert_eq!(pairwise.solutions, vec!["1", "2"]);

        let via_v = solve_via_v(&f, &e, &c, Sense::Max, &p).unwrap();
        assert_eq!(via_v.solutions, vec!["2"]);
        assert!(!via_v.diagnostics.totality.as_ref().unwrap().passed);
        assert!(via_v.diagnostics.injectivity.as_ref().unwrap().passed);
        assert!(via_v
            .diagnostics
            .warnings
            .iter()
            .any(|w| w.contains("id 1") && w.contains("can not be obtained by Gerstewitz vectorization")));

        let via_w = solve_via_w(&f, &e, &c, Sense::Max, false, &p).unwrap();
        assert_eq!(via_w.solutions, vec!["1", "2"]);
    }

    #[test]
    fn nested_boxes_are_not_totally_comparable() {
        let (c, _, p) = setup();
        let f = Family::from_shapes((1..=3).map(|k| {
            let k = k as f64;
            (
                format!("{k}"),
                Shape::Box {
                    lo: pt(-k, -k),
                    hi: pt(k, k),
                },
            )
        }))
        .unwrap();
        // [-2,2]² ⊄ [-1,1]² + C and [-2,2]² ⊄ [-1,1]² - C
        assert_eq!(
            check_total_comparability(&f, &c, false, &p).unwrap(),
            PairCheck::fail("1", "2")
        );
    }

    #[test]
    fn translated_chain_is_totally_comparable() {
        let (c, e, p) = setup();
        let base = [(0.0, 1.0), (1.0, 0.0), (0.5, 0.5)];
        let f = Family::from_shapes((0..4).map(|k| {
            let s = k as f64;
            (k.to_string(), cloud(&base.map(|(x, y)| (x + s, y + 2.0 * s))))
        }))
        .unwrap();
        assert!(check_total_comparability(&f, &c, false, &p).unwrap().passed);
        assert!(check_total_comparability(&f, &c, true, &p).unwrap().passed);
        let via_v = solve_via_v(&f, &e, &c, Sense::Min, &p).unwrap();
        assert_eq!(via_v.solutions, vec!["0"]);
        assert!(via_v.diagnostics.certified);
        assert!(via_v.diagnostics.warnings.is_empty());
    }

    #[test]
    fn two_point_family_via_w() {
        let (c, e, p) = setup();
        let f = Family::from_shapes([("a", cloud(&[(0.0, 0.0)])), ("b", cloud(&[(1.0, 1.0)]))]).unwrap();
        let report = solve_via_w(&f, &e, &c, Sense::Min, false, &p).unwrap();
        assert_eq!(report.solutions, vec!["a"]);
        let table = &report.certificates[0].table;
        assert_eq!(table[0].1, VecValue::ZERO);
        assert_eq!(table[1].1, VecValue::new(-1.0, -1.0));
    }

    #[test]
    fn singleton_family() {
        let (c, e, p) = setup();
        let f = Family::from_shapes([("only", cloud(&[(3.0, -1.0)]))]).unwrap();
        for report in [
            family_efficient_sets(&f, OrderKind::Set, &c, Sense::Min, false, &p).unwrap(),
            solve_via_w(&f, &e, &c, Sense::Min, false, &p).unwrap(),
            solve_via_v(&f, &e, &c, Sense::Min, &p).unwrap(),
        ] {
            assert_eq!(report.solutions, vec!["only"]);
            assert!(report.diagnostics.warnings.is_empty());
        }
        assert!(check_total_comparability(&f, &c, true, &p).unwrap().passed);
    }

    #[test]
    fn family_validation() {
        assert!(matches!(Family::new(vec![]), Err(Error::EmptyInput(_))));
        let dup = Family::from_shapes([("a", cloud(&[(0.0, 0.0)])), ("a", cloud(&[(1.0, 0.0)]))]);
        assert!(dup.is_err());
        let mixed = Family::from_shapes([
            ("a", cloud(&[(0.0, 0.0)])),
            ("b", Shape::point(Vector::new(vec![1.0]))),
        ]);
        assert!(matches!(mixed, Err(Error::DimensionMismatch { .. })));
        let f = counterexample();
        assert!(matches!(f.get("9"), Err(Error::UnknownId(_))));
    }

    #[test]
    fn lower_and_upper_relations_separately() {
        let (c, _, p) = setup();
        let a = cloud(&[(0.0, 0.0)]);
        let b = cloud(&[(0.0, 1.0), (-1.0, 5.0)]);
        let lower = Relation::new(OrderKind::Lower, false);
        let upper = Relation::new(OrderKind::Upper, false);
        for method in [CompareMethod::Direct, CompareMethod::Gerstewitz] {
            // (-1,5) ∉ {0} + C
            assert!(!leq_set(&a, &b, lower, &c, &p, method).unwrap());
            assert!(leq_set(&a, &b, upper, &c, &p, method).unwrap());
            assert!(!leq_set(&a, &b, Relation::SET, &c, &p, method).unwrap());
        }
    }
}
