//! Finite fuzzy ordered sets.
//!
//! A [`MembershipMatrix`] stores a grade for every ordered pair of a finite
//! carrier. Everything here works by exhaustive search, so carriers are capped
//! (see [`DEFAULT_CARRIER_CAP`]); the transitivity scan is cubic.
//!
//! Lattice detection only inspects pairs. On a finite carrier that is enough:
//! if every pair has a supremum then `sup {a1, ..., ak}` is obtained by folding
//! `a1 v a2 v ... v ak`. The fold `s = sup {a1, ..., a(k-1)}` followed by
//! `sup {s, ak}` is an upper bound of every `ai` (the threshold relation is
//! transitive under max-min transitivity) and lies below every common upper
//! bound by the same argument, so it satisfies the supremum definition.

mod generate;

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grade::Grade;

pub use generate::{maxmin_closure, random_constant_foset, random_lattice, random_maxmin_foset, random_strict_order};

pub const DEFAULT_CARRIER_CAP: usize = 64;

/// A finite carrier with a grade for every ordered pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipMatrix {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    grades: Vec<Grade>,
}

impl MembershipMatrix {
    /// Builds the default matrix: grade 1 on the diagonal, 0 elsewhere.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::with_cap(labels, DEFAULT_CARRIER_CAP)
    }

    pub fn with_cap<S: Into<String>>(labels: impl IntoIterator<Item = S>, cap: usize) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidCarrier("carrier is empty".into()));
        }
        if labels.len() > cap {
            return Err(Error::InvalidCarrier(format!("carrier has {} elements, cap is {cap}", labels.len())));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidCarrier(format!("duplicate label {l:?}")));
            }
        }
        let n = labels.len();
        let grades = (0..n * n).map(|k| if k / n == k % n { Grade::one() } else { Grade::zero() }).collect();
        Ok(MembershipMatrix { labels, index, grades })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index.get(label).copied().ok_or_else(|| Error::InvalidCarrier(format!("unknown element {label:?}")))
    }

    pub fn indices_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        labels.iter().map(|l| self.index_of(l.as_ref())).collect()
    }

    pub fn grade(&self, x: usize, y: usize) -> &Grade {
        &self.grades[x * self.len() + y]
    }

    pub fn set(&mut self, x: usize, y: usize, g: Grade) {
        let n = self.len();
        self.grades[x * n + y] = g;
    }

    pub fn set_by_label(&mut self, x: &str, y: &str, g: Grade) -> Result<()> {
        let (i, j) = (self.index_of(x)?, self.index_of(y)?);
        self.set(i, j, g);
        Ok(())
    }

    /// `mu(x, y) > 1/2`.
    pub fn precedes(&self, x: usize, y: usize) -> bool {
        self.grade(x, y).above_half()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: FosetFile = serde_json::from_str(text)?;
        file.into_matrix()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&FosetFile::from_matrix(self)).expect("foset serializes")
    }
}

/// On-disk foset format. Omitted pairs take the default grades.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FosetFile {
    pub elements: Vec<String>,
    #[serde(default)]
    pub grades: Vec<(String, String, Grade)>,
}

impl FosetFile {
    pub fn into_matrix(self) -> Result<MembershipMatrix> {
        let mut m = MembershipMatrix::new(self.elements)?;
        for (x, y, g) in self.grades {
            m.set_by_label(&x, &y, g)?;
        }
        Ok(m)
    }

    /// Lists only grades that differ from the defaults, in row-major order.
    pub fn from_matrix(m: &MembershipMatrix) -> Self {
        let n = m.len();
        let mut grades = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let g = m.grade(i, j);
                let default = if i == j { g.is_one() } else { g.is_zero() };
                if !default {
                    grades.push((m.label(i).to_owned(), m.label(j).to_owned(), g.clone()));
                }
            }
        }
        FosetFile { elements: m.labels().to_vec(), grades }
    }
}

/// A fuzzy subset of a carrier: one grade per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzySubset {
    grades: Vec<Grade>,
}

impl FuzzySubset {
    pub fn grade(&self, x: usize) -> &Grade {
        &self.grades[x]
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.grades.len()).filter(|&i| !self.grades[i].is_zero()).collect()
    }

    pub fn contains(&self, x: usize) -> bool {
        !self.grades[x].is_zero()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.iter().all(Grade::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntisymmetryViolation {
    pub x: String,
    pub y: String,
    pub sum: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitivityViolation {
    pub x: String,
    pub y: String,
    pub z: String,
    pub required: Grade,
    pub actual: Grade,
}

/// Violations of the three fuzzy order axioms. Empty iff the matrix is a fuzzy order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub reflexivity_violations: Vec<String>,
    pub antisymmetry_violations: Vec<AntisymmetryViolation>,
    pub transitivity_violations: Vec<TransitivityViolation>,
}

impl AxiomReport {
    pub fn is_empty(&self) -> bool {
        self.reflexivity_violations.is_empty()
            && self.antisymmetry_violations.is_empty()
            && self.transitivity_violations.is_empty()
    }

    pub fn violation_count(&self) -> usize {
        self.reflexivity_violations.len() + self.antisymmetry_violations.len() + self.transitivity_violations.len()
    }
}

pub fn validate_fuzzy_order(m: &MembershipMatrix) -> AxiomReport {
    let n = m.len();
    let mut report = AxiomReport::default();
    for x in 0..n {
        if !m.grade(x, x).is_one() {
            report.reflexivity_violations.push(m.label(x).to_owned());
        }
    }
    for x in 0..n {
        for y in (x + 1)..n {
            let sum = m.grade(x, y).value() + m.grade(y, x).value();
            if sum > num_traits::One::one() {
                report.antisymmetry_violations.push(AntisymmetryViolation {
                    x: m.label(x).to_owned(),
                    y: m.label(y).to_owned(),
                    sum: sum.to_string(),
                });
            }
        }
    }
    // (x, z) is reported once, with the middle element attaining the max-min.
    for x in 0..n {
        for z in 0..n {
            let mut best: Option<(usize, &Grade)> = None;
            for y in 0..n {
                let through = std::cmp::min(m.grade(x, y), m.grade(y, z));
                if best.is_none_or(|(_, b)| through > b) {
                    best = Some((y, through));
                }
            }
            if let Some((y, required)) = best {
                if m.grade(x, z) < required {
                    report.transitivity_violations.push(TransitivityViolation {
                        x: m.label(x).to_owned(),
                        y: m.label(y).to_owned(),
                        z: m.label(z).to_owned(),
                        required: required.clone(),
                        actual: m.grade(x, z).clone(),
                    });
                }
            }
        }
    }
    report
}

fn require_query(m: &MembershipMatrix, a: &[usize]) -> Result<()> {
    if a.is_empty() {
        return Err(Error::EmptyQuery("bound sets need a nonempty subset".into()));
    }
    if let Some(&bad) = a.iter().find(|&&x| x >= m.len()) {
        return Err(Error::InvalidCarrier(format!("element index {bad} out of range")));
    }
    Ok(())
}

fn bound_set(m: &MembershipMatrix, a: &[usize], upper: bool) -> Result<FuzzySubset> {
    require_query(m, a)?;
    let grade = |x: usize, y: usize| if upper { m.grade(x, y) } else { m.grade(y, x) };
    let grades = (0..m.len())
        .map(|y| {
            if a.iter().any(|&x| !grade(x, y).above_half()) {
                Grade::zero()
            } else {
                a.iter().map(|&x| grade(x, y)).min().cloned().unwrap_or_else(Grade::zero)
            }
        })
        .collect();
    Ok(FuzzySubset { grades })
}

/// `U(A)`: zero where some `x` in `A` has `mu(x, y) <= 1/2`, otherwise the
/// minimum of `mu(x, y)` over `A`.
pub fn upper_bound_set(m: &MembershipMatrix, a: &[usize]) -> Result<FuzzySubset> {
    bound_set(m, a, true)
}

/// `L(A)`, the dual of [`upper_bound_set`] built from `mu(y, x)`.
pub fn lower_bound_set(m: &MembershipMatrix, a: &[usize]) -> Result<FuzzySubset> {
    bound_set(m, a, false)
}

/// Every element satisfying the supremum definition for `a`. A valid fuzzy
/// order yields at most one.
pub fn supremum_candidates(m: &MembershipMatrix, a: &[usize]) -> Result<Vec<usize>> {
    let ub = upper_bound_set(m, a)?;
    let support = ub.support();
    Ok(support.iter().copied().filter(|&z| support.iter().all(|&y| m.precedes(z, y))).collect())
}

pub fn infimum_candidates(m: &MembershipMatrix, a: &[usize]) -> Result<Vec<usize>> {
    let lb = lower_bound_set(m, a)?;
    let support = lb.support();
    Ok(support.iter().copied().filter(|&z| support.iter().all(|&y| m.precedes(y, z))).collect())
}

fn unique(m: &MembershipMatrix, candidates: Vec<usize>) -> Result<Option<usize>> {
    match candidates.as_slice() {
        [] => Ok(None),
        [z] => Ok(Some(*z)),
        [a, b, ..] => Err(Error::BrokenOrder { first: m.label(*a).to_owned(), second: m.label(*b).to_owned() }),
    }
}

pub fn supremum(m: &MembershipMatrix, a: &[usize]) -> Result<Option<usize>> {
    unique(m, supremum_candidates(m, a)?)
}

pub fn infimum(m: &MembershipMatrix, a: &[usize]) -> Result<Option<usize>> {
    unique(m, infimum_candidates(m, a)?)
}

pub fn join(m: &MembershipMatrix, x: usize, y: usize) -> Result<Option<usize>> {
    supremum(m, &[x, y])
}

pub fn meet(m: &MembershipMatrix, x: usize, y: usize) -> Result<Option<usize>> {
    infimum(m, &[x, y])
}

pub fn is_lattice(m: &MembershipMatrix) -> Result<bool> {
    let report = validate_fuzzy_order(m);
    if !report.is_empty() {
        return Err(Error::InvalidOrder(format!("{} axiom violation(s)", report.violation_count())));
    }
    for x in 0..m.len() {
        for y in (x + 1)..m.len() {
            if join(m, x, y)?.is_none() || meet(m, x, y)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Right,
    Left,
    Both,
}

/// Directedness of `d`: every pair drawn from `d` has a bound inside `d`.
pub fn is_directed(m: &MembershipMatrix, d: &[usize], direction: Direction) -> Result<bool> {
    if d.is_empty() {
        return Ok(false);
    }
    let check = |upper: bool| -> Result<bool> {
        for (i, &x) in d.iter().enumerate() {
            for &y in &d[i..] {
                let bounds = bound_set(m, &[x, y], upper)?;
                if !d.iter().any(|&z| bounds.contains(z)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    };
    Ok(match direction {
        Direction::Right => check(true)?,
        Direction::Left => check(false)?,
        Direction::Both => check(true)? && check(false)?,
    })
}

/// Grades keyed by label pair; handy for reports.
pub fn grade_table(m: &MembershipMatrix) -> BTreeMap<(String, String), Grade> {
    let mut out = BTreeMap::new();
    for i in 0..m.len() {
        for j in 0..m.len() {
            out.insert((m.label(i).to_owned(), m.label(j).to_owned()), m.grade(i, j).clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn g(p: i64, q: i64) -> Grade {
        Grade::new(ratio(p, q)).unwrap()
    }

    fn chain3() -> MembershipMatrix {
        let mut m = MembershipMatrix::new(["a", "b", "c"]).unwrap();
        for (x, y) in [("a", "b"), ("b", "c"), ("a", "c")] {
            m.set_by_label(x, y, g(2, 3)).unwrap();
        }
        m
    }

    fn antichain2() -> MembershipMatrix {
        MembershipMatrix::new(["a", "b"]).unwrap()
    }

    fn vee() -> MembershipMatrix {
        let mut m = MembershipMatrix::new(["a", "b", "c"]).unwrap();
        m.set_by_label("a", "c", g(2, 3)).unwrap();
        m.set_by_label("b", "c", g(2, 3)).unwrap();
        m
    }

    fn diamond() -> MembershipMatrix {
        let mut m = MembershipMatrix::new(["bot", "l", "r", "top"]).unwrap();
        for (x, y) in [("bot", "l"), ("bot", "r"), ("bot", "top"), ("l", "top"), ("r", "top")] {
            m.set_by_label(x, y, g(2, 3)).unwrap();
        }
        m
    }

    // [DERIVED] Independent check of the chain: all 27 triples by hand-rolled loops.
    #[test]
    fn chain_passes_all_triples() {
        let m = chain3();
        for x in 0..3 {
            assert!(m.grade(x, x).is_one());
            for y in 0..3 {
                if x != y {
                    let s = m.grade(x, y).value() + m.grade(y, x).value();
                    assert!(s <= ratio(1, 1));
                }
                for z in 0..3 {
                    let lhs = m.grade(x, z);
                    let rhs = std::cmp::min(m.grade(x, y), m.grade(y, z));
                    assert!(lhs >= rhs, "triple ({x},{y},{z})");
                }
            }
        }
        assert!(validate_fuzzy_order(&m).is_empty());
    }

    // [TRIVIAL]
    #[test]
    fn reflexivity_violation() {
        let mut m = chain3();
        m.set_by_label("a", "a", g(9, 10)).unwrap();
        let r = validate_fuzzy_order(&m);
        assert_eq!(r.reflexivity_violations, vec!["a".to_string()]);
    }

    // [DERIVED]
    #[test]
    fn antisymmetry_violation() {
        let mut m = antichain2();
        m.set_by_label("a", "b", g(4, 5)).unwrap();
        m.set_by_label("b", "a", g(4, 5)).unwrap();
        let r = validate_fuzzy_order(&m);
        assert_eq!(r.antisymmetry_violations.len(), 1);
        assert_eq!(r.antisymmetry_violations[0].sum, "8/5");
    }

    // [DERIVED]
    #[test]
    fn transitivity_violation() {
        let mut m = MembershipMatrix::new(["a", "b", "c"]).unwrap();
        m.set_by_label("a", "b", g(9, 10)).unwrap();
        m.set_by_label("b", "c", g(9, 10)).unwrap();
        m.set_by_label("a", "c", g(3, 10)).unwrap();
        let r = validate_fuzzy_order(&m);
        assert_eq!(r.transitivity_violations.len(), 1);
        let v = &r.transitivity_violations[0];
        assert_eq!((v.x.as_str(), v.y.as_str(), v.z.as_str()), ("a", "b", "c"));
        assert_eq!(v.required, g(9, 10));
        assert_eq!(v.actual, g(3, 10));
    }

    // [TRIVIAL]
    #[test]
    fn duplicate_labels_rejected() {
        assert!(matches!(MembershipMatrix::new(["a", "a"]), Err(Error::InvalidCarrier(_))));
    }

    // [TRIVIAL]
    #[test]
    fn carrier_cap() {
        let labels: Vec<String> = (0..65).map(|i| format!("e{i}")).collect();
        assert!(MembershipMatrix::new(labels.clone()).is_err());
        assert!(MembershipMatrix::with_cap(labels, 100).is_ok());
    }

    // [DERIVED]
    #[test]
    fn upper_bounds() {
        let m = chain3();
        let (a, b, c) = (0, 1, 2);
        let u = upper_bound_set(&m, &[a, b]).unwrap();
        assert_eq!(*u.grade(c), g(2, 3));
        assert!(u.grade(a).is_zero());
        // b: mu(a,b) = 2/3 and mu(b,b) = 1, min is 2/3
        assert_eq!(*u.grade(b), g(2, 3));

        let single = upper_bound_set(&m, &[b]).unwrap();
        for y in 0..3 {
            let expected = if m.precedes(b, y) { m.grade(b, y).clone() } else { Grade::zero() };
            assert_eq!(*single.grade(y), expected);
        }
        assert!(upper_bound_set(&antichain2(), &[0, 1]).unwrap().is_empty());
        assert!(matches!(upper_bound_set(&m, &[]), Err(Error::EmptyQuery(_))));
    }

    // [DERIVED]
    #[test]
    fn lower_bounds() {
        let m = chain3();
        let l = lower_bound_set(&m, &[1, 2]).unwrap();
        assert_eq!(*l.grade(0), g(2, 3));
        assert!(lower_bound_set(&antichain2(), &[0, 1]).unwrap().is_empty());
        assert!(lower_bound_set(&m, &[]).is_err());
    }

    // [DERIVED]
    #[test]
    fn suprema_and_infima() {
        let m = chain3();
        for x in 0..3 {
            assert_eq!(supremum(&m, &[x]).unwrap(), Some(x));
            assert_eq!(infimum(&m, &[x]).unwrap(), Some(x));
        }
        assert_eq!(supremum(&m, &[0, 1]).unwrap(), Some(1));
        assert_eq!(infimum(&m, &[1, 2]).unwrap(), Some(1));
        assert_eq!(supremum(&antichain2(), &[0, 1]).unwrap(), None);
        assert_eq!(infimum(&antichain2(), &[0, 1]).unwrap(), None);
        assert_eq!(join(&vee(), 0, 1).unwrap(), Some(2));
        assert_eq!(meet(&vee(), 0, 1).unwrap(), None);
    }

    // [DERIVED]
    #[test]
    fn broken_order_surfaces() {
        // a and b both grade 1 above each other: two suprema of {a}.
        let mut m = antichain2();
        m.set(0, 1, Grade::one());
        m.set(1, 0, Grade::one());
        assert!(matches!(supremum(&m, &[0]), Err(Error::BrokenOrder { .. })));
    }

    // [DERIVED]
    #[test]
    fn join_meet_follow_the_threshold() {
        let m = chain3();
        for x in 0..3 {
            assert_eq!(join(&m, x, x).unwrap(), Some(x));
            for y in 0..3 {
                if m.precedes(x, y) {
                    assert_eq!(join(&m, x, y).unwrap(), Some(y));
                    assert_eq!(meet(&m, x, y).unwrap(), Some(x));
                }
            }
        }
    }

    // [DERIVED]
    #[test]
    fn lattices() {
        assert!(is_lattice(&chain3()).unwrap());
        assert!(!is_lattice(&antichain2()).unwrap());
        assert!(is_lattice(&diamond()).unwrap());
        assert!(!is_lattice(&vee()).unwrap());
        let mut broken = chain3();
        broken.set(0, 0, g(1, 2));
        assert!(matches!(is_lattice(&broken), Err(Error::InvalidOrder(_))));
    }

    // [DERIVED]
    #[test]
    fn directedness() {
        let c = chain3();
        assert!(is_directed(&c, &[0, 1, 2], Direction::Both).unwrap());
        assert!(!is_directed(&antichain2(), &[0, 1], Direction::Right).unwrap());
        assert!(!is_directed(&antichain2(), &[0, 1], Direction::Left).unwrap());
        let v = vee();
        assert!(is_directed(&v, &[0, 1, 2], Direction::Right).unwrap());
        assert!(!is_directed(&v, &[0, 1, 2], Direction::Left).unwrap());
        assert!(!is_directed(&v, &[0, 1, 2], Direction::Both).unwrap());
    }

    // [TRIVIAL]
    #[test]
    fn json_round_trip_keeps_defaults_implicit() {
        let m = chain3();
        let text = m.to_json();
        assert!(!text.contains("\"1\""));
        let back = MembershipMatrix::from_json(&text).unwrap();
        assert_eq!(back, m);
        let parsed = MembershipMatrix::from_json(r#"{"elements":["a","b"],"grades":[["a","b","2/3"]]}"#).unwrap();
        assert_eq!(*parsed.grade(0, 1), g(2, 3));
        assert!(parsed.grade(1, 1).is_one());
        assert!(MembershipMatrix::from_json(r#"{"elements":["a"],"grades":[["a","a","3/2"]]}"#).is_err());
    }
}
