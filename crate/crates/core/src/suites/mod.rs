//! Executable theorem suites.
//!
//! Each suite draws seeded random instances, evaluates one family of laws
//! exactly and records, per law, how many cases ran, how many failed and the
//! first failing case with all values printed exactly. A law whose evaluation
//! raises an error counts that case as a failure.

mod bands;
mod convergence;
mod foset;
mod ideals;
mod projections;
mod riesz;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{Handle, LexKind};
use crate::rational::{int, ratio, Rational};
use crate::sample::Sampler;
use crate::space::{RationalVector, SpaceSpec};

pub const DEFAULT_CASES: u64 = 1000;
pub const DEFAULT_SEED: u64 = 0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Foset,
    Riesz,
    Ideals,
    Bands,
    Projections,
    Convergence,
}

impl Suite {
    pub const EACH: [Suite; 6] =
        [Suite::Foset, Suite::Riesz, Suite::Ideals, Suite::Bands, Suite::Projections, Suite::Convergence];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Foset => "foset",
            Suite::Riesz => "riesz",
            Suite::Ideals => "ideals",
            Suite::Bands => "bands",
            Suite::Projections => "projections",
            Suite::Convergence => "convergence",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Spec(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random cases per law; structural laws run over every handle instead.
    pub cases: u64,
    pub horizon: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: DEFAULT_SEED, cases: DEFAULT_CASES, horizon: crate::convergence::DEFAULT_HORIZON }
    }
}

impl SuiteConfig {
    /// Sampler for one suite; suites draw from independent streams so running
    /// one alone reproduces its part of a full run.
    fn sampler(&self, suite: Suite) -> Sampler {
        let offset = Suite::EACH.iter().position(|s| *s == suite).unwrap_or(0) as u64;
        Sampler::new(self.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(offset))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub tag: String,
    pub cases: u64,
    pub failures: u64,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteResult {
    pub fn failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failures).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn failing_tags(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| c.failures > 0).map(|c| c.tag.as_str()).collect()
    }
}

/// Outcome counter for one law.
pub(crate) struct Tally {
    check: Check,
}

impl Tally {
    pub(crate) fn new(tag: &str) -> Self {
        Tally { check: Check { tag: tag.to_string(), cases: 0, failures: 0, counterexample: None } }
    }

    /// Records one case; `describe` is only called for failures.
    pub(crate) fn case(&mut self, outcome: Result<bool>, describe: impl FnOnce() -> String) {
        self.check.cases += 1;
        let message = match outcome {
            Ok(true) => return,
            Ok(false) => describe(),
            Err(e) => format!("{}: error {e}", describe()),
        };
        self.check.failures += 1;
        self.check.counterexample.get_or_insert(message);
    }

    pub(crate) fn finish(self) -> Check {
        self.check
    }
}

/// Collects the tallies of one suite.
pub(crate) struct Report {
    suite: Suite,
    checks: Vec<Check>,
}

impl Report {
    pub(crate) fn new(suite: Suite) -> Self {
        Report { suite, checks: Vec::new() }
    }

    pub(crate) fn push(&mut self, t: Tally) {
        self.checks.push(t.finish());
    }

    /// Runs `body` over `cases` and records the law under `tag`.
    pub(crate) fn law(&mut self, tag: &str, cases: u64, mut body: impl FnMut(&mut Tally)) {
        let mut t = Tally::new(tag);
        for _ in 0..cases {
            body(&mut t);
        }
        self.push(t);
    }

    pub(crate) fn finish(self) -> SuiteResult {
        SuiteResult { suite: self.suite.name().to_string(), checks: self.checks }
    }
}

/// Grades used when a suite picks a random space.
pub(crate) fn random_grade_c(smp: &mut Sampler) -> Rational {
    [ratio(3, 5), ratio(2, 3), ratio(4, 5), ratio(1, 1)][smp.index(4)].clone()
}

pub(crate) fn random_pointwise(smp: &mut Sampler, max_dim: usize) -> SpaceSpec {
    let dim = 1 + smp.index(max_dim);
    SpaceSpec::pointwise(dim, random_grade_c(smp)).expect("valid preset")
}

pub(crate) fn random_lex(smp: &mut Sampler) -> SpaceSpec {
    SpaceSpec::lex(random_grade_c(smp)).expect("valid preset")
}

/// Pointwise spaces of every dimension up to `max_dim`, then the plane.
pub(crate) fn handle_spaces(max_dim: usize) -> Vec<SpaceSpec> {
    let c = ratio(2, 3);
    let mut out: Vec<SpaceSpec> =
        (1..=max_dim).map(|n| SpaceSpec::pointwise(n, c.clone()).expect("valid preset")).collect();
    out.push(SpaceSpec::lex(c).expect("valid preset"));
    out
}

fn nonzero(smp: &mut Sampler) -> Rational {
    let r = smp.positive_rational();
    if smp.chance(0.5) {
        -r
    } else {
        r
    }
}

/// Random element of the handle.
pub(crate) fn member(s: &SpaceSpec, h: &Handle, smp: &mut Sampler) -> RationalVector {
    match h {
        Handle::Pointwise { support } => {
            smp.vector_in_support(s.dimension(), &support.iter().copied().collect::<Vec<_>>())
        }
        Handle::Lex { kind: LexKind::Zero } => s.zero(),
        Handle::Lex { kind: LexKind::Axis } => RationalVector::new(vec![int(0), smp.rational()]),
        Handle::Lex { kind: LexKind::Full } => smp.vector(2),
    }
}

/// A finite set generating the handle as an ideal and as a band.
pub(crate) fn generators(s: &SpaceSpec, h: &Handle, smp: &mut Sampler) -> Vec<RationalVector> {
    let n = s.dimension();
    match h {
        Handle::Pointwise { support } if support.is_empty() => vec![s.zero()],
        Handle::Pointwise { support } => {
            let support: Vec<usize> = support.iter().copied().collect();
            if support.len() > 1 && smp.chance(0.5) {
                let cut = 1 + smp.index(support.len() - 1);
                let part = |idx: &[usize], smp: &mut Sampler| {
                    let mut coords = vec![int(0); n];
                    for &i in idx {
                        coords[i - 1] = nonzero(smp);
                    }
                    RationalVector::new(coords)
                };
                vec![part(&support[..cut], smp), part(&support[cut..], smp)]
            } else {
                let mut coords = vec![int(0); n];
                for &i in &support {
                    coords[i - 1] = nonzero(smp);
                }
                vec![RationalVector::new(coords)]
            }
        }
        Handle::Lex { kind: LexKind::Zero } => vec![s.zero()],
        Handle::Lex { kind: LexKind::Axis } => vec![RationalVector::new(vec![int(0), nonzero(smp)])],
        Handle::Lex { kind: LexKind::Full } => {
            let mut d = vec![RationalVector::new(vec![nonzero(smp), smp.rational()])];
            if smp.chance(0.5) {
                d.push(RationalVector::new(vec![int(0), nonzero(smp)]));
            }
            d
        }
    }
}

/// Test vectors for membership: half inside the handle, half anywhere.
pub(crate) fn probe(s: &SpaceSpec, h: &Handle, smp: &mut Sampler) -> RationalVector {
    if smp.chance(0.5) {
        member(s, h, smp)
    } else {
        smp.vector(s.dimension())
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<SuiteResult> {
    match suite {
        Suite::All => Suite::EACH.iter().flat_map(|s| run_suite(*s, cfg)).collect(),
        Suite::Foset => vec![foset::run(cfg)],
        Suite::Riesz => vec![riesz::run(cfg)],
        Suite::Ideals => vec![ideals::run(cfg)],
        Suite::Bands => vec![bands::run(cfg)],
        Suite::Projections => vec![projections::run(cfg)],
        Suite::Convergence => vec![convergence::run(cfg)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // [TRIVIAL]
    #[test]
    fn suite_names_round_trip() {
        for s in std::iter::once(Suite::All).chain(Suite::EACH) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    // [TRIVIAL]
    #[test]
    fn tally_keeps_first_counterexample() {
        let mut t = Tally::new("demo");
        t.case(Ok(true), || unreachable!());
        t.case(Ok(false), || "first".into());
        t.case(Err(Error::NotDominated), || "second".into());
        let c = t.finish();
        assert_eq!((c.cases, c.failures), (3, 2));
        assert_eq!(c.counterexample.as_deref(), Some("first"));
    }

    fn small() -> SuiteConfig {
        SuiteConfig { seed: 7, cases: 20, horizon: 32 }
    }

    // [DERIVED]
    #[test]
    fn every_suite_passes_on_a_small_run() {
        for r in run_suite(Suite::All, &small()) {
            assert!(r.passed(), "{}: {:?}", r.suite, r.checks.iter().filter(|c| c.failures > 0).collect::<Vec<_>>());
            assert!(r.checks.iter().all(|c| c.cases > 0), "{} has an empty check", r.suite);
        }
    }

    // [TRIVIAL]
    #[test]
    fn runs_are_deterministic() {
        assert_eq!(run_suite(Suite::Riesz, &small()), run_suite(Suite::Riesz, &small()));
    }

    // [DERIVED]
    #[test]
    fn mutant_breaks_several_laws() {
        let results = crate::mutation::with_mutant(crate::mutation::Mutant::LiteralPositivePart, || {
            run_suite(Suite::Riesz, &small())
        });
        let failing: Vec<&str> = results.iter().flat_map(SuiteResult::failing_tags).collect();
        assert!(failing.len() >= 3, "{failing:?}");
        assert!(failing.contains(&"abs-parts-sum/pointwise"), "{failing:?}");
    }
}
