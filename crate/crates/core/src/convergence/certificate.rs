use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{Decay, DominatingFamily, InfZeroStatus, SequenceSpec};
use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::ideals::Handle;
use crate::rational::{half, int, Rational};
use crate::space::{Family, RationalVector, SpaceSpec};

/// A sequence, its claimed limit and the family claimed to dominate it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certified {
    pub sequence: SequenceSpec,
    pub limit: RationalVector,
    pub family: DominatingFamily,
}

impl Certified {
    pub fn new(sequence: SequenceSpec, limit: RationalVector, family: DominatingFamily) -> Self {
        Certified { sequence, limit, family }
    }

    pub fn check(&self, s: &SpaceSpec, horizon: u64) -> Result<CertificateReport> {
        check_convergence_certificate(s, &self.sequence, &self.limit, &self.family, horizon)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub index: u64,
    /// `mu(|x_n - x|, y_n)`, at most 1/2.
    pub grade: Grade,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub verified_horizon: u64,
    pub violations: Vec<Violation>,
    /// `y_n` positive and decreasing on the horizon.
    pub monotone_ok: bool,
    pub inf_zero_status: InfZeroStatus,
    pub accepted: bool,
}

impl CertificateReport {
    pub fn first_violation(&self) -> Option<u64> {
        self.violations.first().map(|v| v.index)
    }

    /// Accepted on the horizon and the family's infimum is known to be zero.
    pub fn establishes_limit(&self) -> bool {
        self.accepted && self.inf_zero_status == InfZeroStatus::Analytic
    }
}

fn check_horizon(horizon: u64) -> Result<()> {
    if horizon == 0 {
        Err(Error::Spec("horizon must be at least 1".into()))
    } else {
        Ok(())
    }
}

pub fn check_convergence_certificate(
    s: &SpaceSpec,
    seq: &SequenceSpec,
    limit: &RationalVector,
    fam: &DominatingFamily,
    horizon: u64,
) -> Result<CertificateReport> {
    check_horizon(horizon)?;
    s.check(limit)?;
    fam.validate(s)?;
    let mut violations = Vec::new();
    let mut monotone_ok = true;
    let mut prev: Option<RationalVector> = None;
    for n in 1..=horizon {
        let y = fam.term(s, n)?;
        let grade = s.mu(&s.abs(&(&seq.eval(s, n)? - limit))?, &y)?;
        if !grade.above_half() {
            violations.push(Violation { index: n, grade });
        }
        monotone_ok &= s.is_positive(&y)?;
        if let Some(p) = &prev {
            monotone_ok &= s.leq(&y, p)?;
        }
        prev = Some(y);
    }
    let accepted = violations.is_empty() && monotone_ok;
    Ok(CertificateReport {
        verified_horizon: horizon,
        violations,
        monotone_ok,
        inf_zero_status: fam.inf_zero_status(s),
        accepted,
    })
}

/// Positive vector used when a sequence sits exactly on its limit: all ones
/// pointwise, `(0, 1)` in the plane so the family keeps an analytic tail.
fn fallback_base(s: &SpaceSpec) -> RationalVector {
    match s.family() {
        Family::Pointwise => RationalVector::constant(s.dimension(), Rational::one()),
        Family::Lex => RationalVector::new(vec![int(0), int(1)]),
    }
}

/// A dominating family read off the shape of the sequence, when one exists.
///
/// A finite prefix followed by the limit is dominated by
/// `2^k * (join of |x_n - x|) * (1/2)^n`, with `k` the prefix length. A closed
/// form centred at the limit is dominated by `|offset|` times a harmonic or
/// geometric factor.
pub fn natural_family(s: &SpaceSpec, seq: &SequenceSpec, limit: &RationalVector) -> Result<Option<DominatingFamily>> {
    Ok(match seq {
        SequenceSpec::ExplicitPrefix { prefix, tail: Some(tail) } if tail == limit => {
            let mut top = s.zero();
            for x in prefix {
                top = s.join(&top, &s.abs(&(x - limit))?)?;
            }
            let base = if top.is_zero() { fallback_base(s) } else { top.scale(&int(1i64 << prefix.len().min(62))) };
            Some(DominatingFamily::geometric(base, half()))
        }
        SequenceSpec::ClosedForm { center, offset, decay } if center == limit => {
            let base = s.abs(offset)?;
            match decay {
                Decay::Harmonic | Decay::AlternatingHarmonic => Some(DominatingFamily::harmonic(base)),
                Decay::Geometric { ratio } if ratio.abs() < Rational::one() => {
                    let r = if ratio.abs() < half() { half() } else { ratio.abs() };
                    Some(DominatingFamily::geometric(base, r))
                }
                Decay::Alternating if offset.is_zero() => Some(DominatingFamily::harmonic(fallback_base(s))),
                _ => None,
            }
        }
        _ => None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonotoneReport {
    pub horizon: u64,
    /// `x_n` below the limit for every `n` on the horizon.
    pub bounded_by_limit: bool,
    /// For sequences ending in a constant tail, whether the tail is the limit.
    pub tail_matches: Option<bool>,
    pub certificate: Option<CertificateReport>,
    /// Increasing, bounded by the limit, and certified with an analytic tail:
    /// the limit is the supremum.
    pub limit_is_supremum: bool,
}

/// An increasing sequence converges to `limit` iff `limit` is its supremum;
/// checks monotonicity, the upper bound, and a certificate from
/// [`natural_family`].
pub fn check_monotone_limit(
    s: &SpaceSpec,
    seq: &SequenceSpec,
    limit: &RationalVector,
    horizon: u64,
) -> Result<MonotoneReport> {
    check_horizon(horizon)?;
    s.check(limit)?;
    let terms = (1..=horizon).map(|n| seq.eval(s, n)).collect::<Result<Vec<_>>>()?;
    for (i, pair) in terms.windows(2).enumerate() {
        if !s.leq(&pair[0], &pair[1])? {
            return Err(Error::NotMonotone { index: i as u64 + 1 });
        }
    }
    let mut bounded_by_limit = true;
    for x in &terms {
        bounded_by_limit &= s.leq(x, limit)?;
    }
    let tail_matches = match seq {
        SequenceSpec::ExplicitPrefix { tail: Some(tail), .. } => Some(tail == limit),
        _ => None,
    };
    let certificate = match natural_family(s, seq, limit)? {
        Some(fam) => Some(check_convergence_certificate(s, seq, limit, &fam, horizon)?),
        None => None,
    };
    let limit_is_supremum = bounded_by_limit
        && tail_matches != Some(false)
        && certificate.as_ref().is_some_and(CertificateReport::establishes_limit);
    Ok(MonotoneReport { horizon, bounded_by_limit, tail_matches, certificate, limit_is_supremum })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedVerdict {
    pub handle: Handle,
    pub limit_in_handle: bool,
    pub members_checked: u64,
}

/// Whether the limit of a certified sequence inside `h` stays in `h`.
///
/// Every preset handle is a band, so a limit outside is reported as
/// [`Error::NotOrderClosed`].
pub fn check_order_closed_under(
    s: &SpaceSpec,
    h: &Handle,
    seq: &SequenceSpec,
    limit: &RationalVector,
    fam: &DominatingFamily,
    horizon: u64,
) -> Result<ClosedVerdict> {
    let report = check_convergence_certificate(s, seq, limit, fam, horizon)?;
    if !report.establishes_limit() {
        return Err(Error::Spec(format!(
            "certificate does not establish the limit (first violation {:?}, monotone {}, tail {:?})",
            report.first_violation(),
            report.monotone_ok,
            report.inf_zero_status
        )));
    }
    for n in 1..=horizon {
        let x = seq.eval(s, n)?;
        if !h.contains(s, &x)? {
            return Err(Error::Spec(format!("term {n} = {x} is not in {h}")));
        }
    }
    let limit_in_handle = h.contains(s, limit)?;
    if !limit_in_handle {
        return Err(Error::NotOrderClosed(format!("{h} contains the sequence but not its limit {limit}")));
    }
    Ok(ClosedVerdict { handle: h.clone(), limit_in_handle, members_checked: horizon })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LimitLawReport {
    /// `a x_n + b y_n -> a x + b y` under `|a| fam1 + |b| fam2`.
    pub linear: CertificateReport,
    /// `x_n+ -> x+`, `x_n- -> x-` and `|x_n| -> |x|`, each under `fam1`.
    pub pos_part: CertificateReport,
    pub neg_part: CertificateReport,
    pub abs: CertificateReport,
    /// `x_n v y_n -> x v y` and `x_n ^ y_n -> x ^ y` under `fam1 + fam2`.
    pub join: CertificateReport,
    pub meet: CertificateReport,
}

impl LimitLawReport {
    pub fn all_accepted(&self) -> bool {
        [&self.linear, &self.pos_part, &self.neg_part, &self.abs, &self.join, &self.meet].iter().all(|r| r.accepted)
    }
}

/// Builds and re-verifies the certificates that the limit laws promise.
///
/// The families come from the lattice inequalities
/// `|x+ - y+|, |x- - y-|, ||x| - |y|| <= |x - y|` and
/// `|x v y - x' v y'|, |x ^ y - x' ^ y'| <= |x - x'| + |y - y'|`.
pub fn check_limit_laws(
    s: &SpaceSpec,
    first: &Certified,
    second: &Certified,
    a: &Rational,
    b: &Rational,
    horizon: u64,
) -> Result<LimitLawReport> {
    for (name, c) in [("first", first), ("second", second)] {
        if !c.check(s, horizon)?.accepted {
            return Err(Error::Spec(format!("the {name} certificate is not accepted")));
        }
    }
    let (x, y) = (&first.limit, &second.limit);
    let boxed = |c: &Certified| Box::new(c.sequence.clone());
    let both = DominatingFamily::sum([(int(1), first.family.clone()), (int(1), second.family.clone())]);
    let run = |seq: SequenceSpec, limit: RationalVector, fam: &DominatingFamily| {
        check_convergence_certificate(s, &seq, &limit, fam, horizon)
    };
    Ok(LimitLawReport {
        linear: run(
            SequenceSpec::linear(a.clone(), first.sequence.clone(), b.clone(), second.sequence.clone()),
            &x.scale(a) + &y.scale(b),
            &DominatingFamily::sum([(a.abs(), first.family.clone()), (b.abs(), second.family.clone())]),
        )?,
        pos_part: run(SequenceSpec::PosPart { of: boxed(first) }, s.pos_part(x)?, &first.family)?,
        neg_part: run(SequenceSpec::NegPart { of: boxed(first) }, s.neg_part(x)?, &first.family)?,
        abs: run(SequenceSpec::Abs { of: boxed(first) }, s.abs(x)?, &first.family)?,
        join: run(SequenceSpec::Join { left: boxed(first), right: boxed(second) }, s.join(x, y)?, &both)?,
        meet: run(SequenceSpec::Meet { left: boxed(first), right: boxed(second) }, s.meet(x, y)?, &both)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::LexKind;
    use crate::rational::ratio;

    fn v(c: &[i64]) -> RationalVector {
        RationalVector::from_ints(c)
    }

    fn pw(n: usize) -> SpaceSpec {
        SpaceSpec::pointwise(n, ratio(2, 3)).unwrap()
    }

    // [DERIVED]
    #[test]
    fn harmonic_sequence_is_certified() {
        let s = pw(2);
        let (x, dv) = (v(&[1, -2]), v(&[3, 1]));
        let seq = SequenceSpec::closed_form(x.clone(), dv.clone(), Decay::Harmonic);
        for horizon in [1, 10, 128] {
            let r =
                check_convergence_certificate(&s, &seq, &x, &DominatingFamily::harmonic(dv.clone()), horizon).unwrap();
            assert!(r.accepted && r.establishes_limit());
        }
    }

    // [TRIVIAL]
    #[test]
    fn constant_sequence_is_certified() {
        let s = pw(3);
        let x = v(&[1, 0, 5]);
        let fam = DominatingFamily::geometric(v(&[1, 1, 1]), half());
        let r = check_convergence_certificate(&s, &SequenceSpec::constant(x.clone()), &x, &fam, 128).unwrap();
        assert!(r.accepted);
    }

    // [DERIVED]
    #[test]
    fn constant_offset_fails_at_two() {
        let s = pw(2);
        let (x, dv) = (v(&[0, 0]), v(&[1, 2]));
        let seq = SequenceSpec::constant(&x + &dv);
        let r = check_convergence_certificate(&s, &seq, &x, &DominatingFamily::harmonic(dv), 128).unwrap();
        assert!(!r.accepted);
        assert_eq!(r.first_violation(), Some(2));
        assert!(r.monotone_ok);
    }

    // [DERIVED]
    #[test]
    fn monotone_limits() {
        let s = pw(2);
        let limit = v(&[2, 3]);
        let seq = SequenceSpec::closed_form(limit.clone(), v(&[-1, -1]), Decay::Harmonic);
        let r = check_monotone_limit(&s, &seq, &limit, 128).unwrap();
        assert!(r.limit_is_supremum);

        let c = SequenceSpec::constant(limit.clone());
        let r = check_monotone_limit(&s, &c, &limit, 64).unwrap();
        assert!(r.limit_is_supremum && r.tail_matches == Some(true));

        let osc = SequenceSpec::closed_form(v(&[0, 0]), v(&[1, 1]), Decay::Alternating);
        assert_eq!(check_monotone_limit(&s, &osc, &v(&[0, 0]), 10), Err(Error::NotMonotone { index: 2 }));

        let steps = SequenceSpec::ExplicitPrefix { prefix: vec![v(&[0, 0]), v(&[1, 2])], tail: Some(limit.clone()) };
        let r = check_monotone_limit(&s, &steps, &limit, 20).unwrap();
        assert!(r.limit_is_supremum);
        let wrong = check_monotone_limit(&s, &steps, &v(&[5, 5]), 20).unwrap();
        assert!(!wrong.limit_is_supremum);
    }

    // [DERIVED]
    #[test]
    fn band_closedness() {
        let s = pw(2);
        let seq = SequenceSpec::closed_form(v(&[1, 0]), v(&[-1, 0]), Decay::Harmonic);
        let fam = DominatingFamily::harmonic(v(&[1, 0]));
        let r = check_order_closed_under(&s, &Handle::pointwise([1]), &seq, &v(&[1, 0]), &fam, 128).unwrap();
        assert!(r.limit_in_handle);
        assert!(matches!(
            check_order_closed_under(&s, &Handle::pointwise([2]), &seq, &v(&[1, 0]), &fam, 8),
            Err(Error::Spec(_))
        ));
        let l = SpaceSpec::lex(ratio(2, 3)).unwrap();
        let seq = SequenceSpec::closed_form(v(&[0, 4]), v(&[0, 1]), Decay::Harmonic);
        let r = check_order_closed_under(
            &l,
            &Handle::lex(LexKind::Axis),
            &seq,
            &v(&[0, 4]),
            &DominatingFamily::harmonic(v(&[0, 1])),
            128,
        )
        .unwrap();
        assert!(r.limit_in_handle);
    }

    // In the plane, (1,0)/n has no infimum, so a certificate built on it is not
    // [DERIVED] evidence of convergence.
    #[test]
    fn lex_off_axis_family_is_not_analytic() {
        let l = SpaceSpec::lex(ratio(2, 3)).unwrap();
        let seq = SequenceSpec::closed_form(v(&[0, 0]), v(&[1, 0]), Decay::Harmonic);
        let r =
            check_convergence_certificate(&l, &seq, &v(&[0, 0]), &DominatingFamily::harmonic(v(&[1, 0])), 64).unwrap();
        assert!(r.accepted && !r.establishes_limit());
    }

    // [DERIVED]
    #[test]
    fn limit_laws() {
        let s = pw(2);
        let first = Certified::new(
            SequenceSpec::closed_form(v(&[1, -1]), v(&[2, 1]), Decay::AlternatingHarmonic),
            v(&[1, -1]),
            DominatingFamily::harmonic(v(&[2, 1])),
        );
        let second = Certified::new(
            SequenceSpec::closed_form(v(&[0, 3]), v(&[1, 1]), Decay::Geometric { ratio: ratio(1, 3) }),
            v(&[0, 3]),
            DominatingFamily::geometric(v(&[1, 1]), ratio(1, 3)),
        );
        let r = check_limit_laws(&s, &first, &second, &int(1), &int(1), 128).unwrap();
        assert!(r.all_accepted());
        let r = check_limit_laws(&s, &first, &second, &int(1), &int(0), 128).unwrap();
        assert_eq!(r.linear.accepted, first.check(&s, 128).unwrap().accepted);
        let r = check_limit_laws(&s, &first, &second, &ratio(-3, 2), &int(2), 64).unwrap();
        assert!(r.all_accepted());
    }
}
