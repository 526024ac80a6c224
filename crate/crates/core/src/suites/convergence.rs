use super::{handle_spaces, member, random_lex, random_pointwise, Report, Suite, SuiteConfig};
use crate::convergence::{
    check_convergence_certificate, check_limit_laws, check_monotone_limit, check_order_closed_under, natural_family,
    Certified, Decay, DominatingFamily, SequenceSpec,
};
use crate::error::{Error, Result};
use crate::ideals::Handle;
use crate::rational::{int, ratio};
use crate::sample::Sampler;
use crate::space::{Family, RationalVector, SpaceSpec};

fn random_space(smp: &mut Sampler) -> SpaceSpec {
    if smp.chance(0.5) {
        random_pointwise(smp, 4)
    } else {
        random_lex(smp)
    }
}

/// Offset whose dominating family keeps an analytic tail: any vector
/// pointwise, a vertical one in the plane.
fn tame_offset(s: &SpaceSpec, smp: &mut Sampler) -> RationalVector {
    match s.family() {
        Family::Pointwise => smp.vector(s.dimension()),
        Family::Lex => RationalVector::new(vec![int(0), smp.rational()]),
    }
}

fn tame_positive(s: &SpaceSpec, smp: &mut Sampler) -> RationalVector {
    s.abs(&tame_offset(s, smp)).expect("dimension matches")
}

fn random_decay(smp: &mut Sampler) -> Decay {
    match smp.index(4) {
        0 => Decay::Harmonic,
        1 => Decay::AlternatingHarmonic,
        2 => Decay::Geometric { ratio: ratio(1, 2) },
        _ => Decay::Geometric { ratio: ratio(-1, 3) },
    }
}

/// A certified sequence `center + c_n offset` with its natural family.
fn certified(s: &SpaceSpec, smp: &mut Sampler) -> Result<Certified> {
    let center = smp.vector(s.dimension());
    let offset = tame_offset(s, smp);
    let seq = SequenceSpec::closed_form(center.clone(), offset, random_decay(smp));
    let family = match natural_family(s, &seq, &center)? {
        Some(f) => f,
        None => return Err(Error::Spec(format!("no natural family for {}", seq.to_json()))),
    };
    // a zero offset has a zero base, which is not a valid family
    let family = match &family {
        DominatingFamily::Harmonic { base } | DominatingFamily::Geometric { base, .. } if base.is_zero() => {
            DominatingFamily::harmonic(tame_positive_nonzero(s))
        }
        _ => family,
    };
    Ok(Certified::new(seq, center, family))
}

fn tame_positive_nonzero(s: &SpaceSpec) -> RationalVector {
    match s.family() {
        Family::Pointwise => RationalVector::constant(s.dimension(), int(1)),
        Family::Lex => RationalVector::from_ints(&[0, 1]),
    }
}

fn increasing(s: &SpaceSpec, smp: &mut Sampler) -> (SequenceSpec, RationalVector) {
    let limit = smp.vector(s.dimension());
    if smp.chance(0.5) {
        let mut u = tame_positive(s, smp);
        if u.is_zero() {
            u = tame_positive_nonzero(s);
        }
        (SequenceSpec::closed_form(limit.clone(), -&u, Decay::Harmonic), limit)
    } else {
        let k = 1 + smp.index(5);
        let steps: Vec<RationalVector> = (0..k).map(|_| tame_positive(s, smp)).collect();
        let mut prefix = Vec::with_capacity(k);
        let mut x = limit.clone();
        for step in steps.iter().rev() {
            x = &x - step;
            prefix.push(x.clone());
        }
        prefix.reverse();
        (SequenceSpec::ExplicitPrefix { prefix, tail: Some(limit.clone()) }, limit)
    }
}

pub(super) fn run(cfg: &SuiteConfig) -> crate::suites::SuiteResult {
    let mut smp = cfg.sampler(Suite::Convergence);
    let mut report = Report::new(Suite::Convergence);
    let h = cfg.horizon;
    let cases = (cfg.cases / 10).max(10);

    report.law("certificate-accepted", cases, |t| {
        let s = random_space(&mut smp);
        let out = certified(&s, &mut smp).and_then(|c| Ok(c.check(&s, h)?.establishes_limit()));
        t.case(out, || format!("{s}"));
    });

    report.law("limit-unique", cases, |t| {
        let s = random_space(&mut smp);
        let c = certified(&s, &mut smp);
        let mut w = smp.vector(s.dimension());
        if w.is_zero() {
            w = tame_positive_nonzero(&s);
        }
        let k = int(smp.int_in(1, 8));
        let out = (|| {
            let c = c.clone()?;
            let other = &c.limit + &w;
            let base = c.family.term(&s, 1)?;
            let fam = DominatingFamily::harmonic(&base + &s.abs(&w)?.scale(&k));
            let report = check_convergence_certificate(&s, &c.sequence, &other, &fam, h)?;
            Ok(!report.establishes_limit())
        })();
        t.case(out, || format!("{s}: sequence {:?}, shifted by {w}", c.as_ref().map(|c| c.sequence.to_json()).ok()));
    });

    report.law("monotone-limit-is-supremum", cases, |t| {
        let s = random_space(&mut smp);
        let (seq, limit) = increasing(&s, &mut smp);
        let bump = {
            let p = tame_positive(&s, &mut smp);
            if p.is_zero() {
                tame_positive_nonzero(&s)
            } else {
                p
            }
        };
        let out = (|| {
            let right = check_monotone_limit(&s, &seq, &limit, h)?.limit_is_supremum;
            let wrong = check_monotone_limit(&s, &seq, &(&limit + &bump), h)?.limit_is_supremum;
            Ok(right && !wrong)
        })();
        t.case(out, || format!("{s}: {} with limit {limit}", seq.to_json()));
    });

    report.law("squeeze", cases, |t| {
        let s = random_space(&mut smp);
        let x = smp.vector(s.dimension());
        let (a, b) = (tame_positive(&s, &mut smp), tame_positive(&s, &mut smp));
        let lower = SequenceSpec::closed_form(x.clone(), -&a, Decay::Harmonic);
        let upper = SequenceSpec::closed_form(x.clone(), b.clone(), Decay::Harmonic);
        let noise = SequenceSpec::closed_form(smp.vector(s.dimension()), smp.vector(s.dimension()), Decay::Alternating);
        let middle = SequenceSpec::Meet {
            left: Box::new(SequenceSpec::Join { left: Box::new(lower.clone()), right: Box::new(noise) }),
            right: Box::new(upper.clone()),
        };
        let fam = DominatingFamily::sum([
            (int(1), DominatingFamily::harmonic(&a + &tame_positive_nonzero(&s))),
            (int(1), DominatingFamily::harmonic(&b + &tame_positive_nonzero(&s))),
        ]);
        let out = (|| {
            for n in 1..=h {
                let (lo, mid, hi) = (lower.eval(&s, n)?, middle.eval(&s, n)?, upper.eval(&s, n)?);
                if !s.leq(&lo, &mid)? || !s.leq(&mid, &hi)? {
                    return Ok(false);
                }
            }
            Ok(check_convergence_certificate(&s, &middle, &x, &fam, h)?.establishes_limit())
        })();
        t.case(out, || format!("{s}: x = {x}, a = {a}, b = {b}"));
    });

    let mut linear = super::Tally::new("limit-linear");
    let mut parts = super::Tally::new("limit-parts-and-abs");
    let mut lattice = super::Tally::new("limit-join-meet");
    for _ in 0..cases {
        let s = random_space(&mut smp);
        let (a, b) = (smp.rational(), smp.rational());
        let out = (|| {
            let (c1, c2) = (certified(&s, &mut smp)?, certified(&s, &mut smp)?);
            let r = check_limit_laws(&s, &c1, &c2, &a, &b, h)?;
            Ok((c1, c2, r))
        })();
        match out {
            Ok((c1, c2, r)) => {
                let msg = || format!("{s}: {} and {}, a = {a}, b = {b}", c1.sequence.to_json(), c2.sequence.to_json());
                linear.case(Ok(r.linear.establishes_limit()), msg);
                parts.case(
                    Ok(r.pos_part.establishes_limit() && r.neg_part.establishes_limit() && r.abs.establishes_limit()),
                    msg,
                );
                lattice.case(Ok(r.join.establishes_limit() && r.meet.establishes_limit()), msg);
            }
            Err(e) => linear.case(Err(e), || format!("{s}")),
        }
    }
    for t in [linear, parts, lattice] {
        report.push(t);
    }

    let mut closed = super::Tally::new("limit-in-band");
    for s in handle_spaces(6) {
        for hd in Handle::all(&s) {
            for _ in 0..3 {
                let limit = s.abs(&member(&s, &hd, &mut smp)).expect("dimension matches");
                let seq = match s.family() {
                    _ if limit.is_zero() => SequenceSpec::constant(limit.clone()),
                    Family::Pointwise => SequenceSpec::closed_form(limit.clone(), -&limit, Decay::Harmonic),
                    Family::Lex => {
                        SequenceSpec::closed_form(limit.clone(), RationalVector::from_ints(&[0, -1]), Decay::Harmonic)
                    }
                };
                let out = (|| {
                    let fam =
                        natural_family(&s, &seq, &limit)?.ok_or_else(|| Error::Spec("no natural family".into()))?;
                    Ok(check_order_closed_under(&s, &hd, &seq, &limit, &fam, h)?.limit_in_handle)
                })();
                closed.case(out, || format!("{s}: {hd}, {} with limit {limit}", seq.to_json()));
            }
        }
    }
    report.push(closed);

    report.law("constant-offset-rejected", cases, |t| {
        let s = random_space(&mut smp);
        let x = smp.vector(s.dimension());
        let mut v = smp.positive_vector(&s);
        if v.is_zero() {
            v = tame_positive_nonzero(&s);
        }
        let seq = SequenceSpec::constant(&x + &v);
        let out = check_convergence_certificate(&s, &seq, &x, &DominatingFamily::harmonic(v.clone()), h)
            .map(|r| r.first_violation() == Some(2) && !r.accepted);
        t.case(out, || format!("{s}: x = {x}, v = {v}"));
    });

    report.law("oscillation-not-monotone", cases, |t| {
        let s = random_space(&mut smp);
        let x = smp.vector(s.dimension());
        let mut v = smp.positive_vector(&s);
        if v.is_zero() {
            v = tame_positive_nonzero(&s);
        }
        let seq = SequenceSpec::closed_form(x.clone(), v.clone(), Decay::Alternating);
        let out = match check_monotone_limit(&s, &seq, &x, h) {
            Err(Error::NotMonotone { index }) => Ok(index == 2),
            Err(e) => Err(e),
            Ok(_) => Ok(false),
        };
        t.case(out, || format!("{s}: x = {x}, v = {v}"));
    });
    report.finish()
}
