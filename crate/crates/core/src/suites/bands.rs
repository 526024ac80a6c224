use super::{generators, handle_spaces, probe, random_lex, random_pointwise, Report, Suite, SuiteConfig, Tally};
use crate::error::Result;
use crate::ideals::oracle::{disjoint_from_all, generated_band_contains, principal_band_contains};
use crate::ideals::{
    band_generated, disjoint_complement, ideal_generated, ideal_intersection, is_direct_sum_decomposition, Handle,
    LexKind,
};
use crate::space::{infimum_of_scaled, is_nx_bounded, space_properties, Family, RationalVector, SpaceSpec};

fn show(xs: &[RationalVector]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Both halves of the dichotomy in one pass: the pointwise spaces are
/// Archimedean with every band equal to its double complement, the plane is
/// not, with the vertical ray as witness and the axis as the failing band.
fn dichotomy(s: &SpaceSpec, horizon: u64) -> Result<Option<String>> {
    let props = space_properties(s);
    match s.family() {
        Family::Pointwise => {
            if !props.archimedean {
                return Ok(Some("pointwise space reported non-Archimedean".into()));
            }
            for h in Handle::all(s) {
                let dd = disjoint_complement(s, &disjoint_complement(s, &h)?)?;
                if dd != h {
                    return Ok(Some(format!("{h} has double complement {dd}")));
                }
            }
        }
        Family::Lex => {
            let axis = Handle::lex(LexKind::Axis);
            let dd = disjoint_complement(s, &disjoint_complement(s, &axis)?)?;
            let expected = (RationalVector::from_ints(&[0, 1]), RationalVector::from_ints(&[1, 0]));
            let Some((x, y)) = props.witness.clone() else {
                return Ok(Some("plane reported without a witness".into()));
            };
            let bounded = is_nx_bounded(s, &x, &y, horizon)?;
            if props.archimedean
                || (x.clone(), y.clone()) != expected
                || !bounded.bounded_by_y
                || !bounded.closed_form_bounded
                || dd != Handle::lex(LexKind::Full)
                || dd == axis
            {
                return Ok(Some(format!(
                    "plane: archimedean {}, witness ({x}, {y}), bounded {}, axis^dd = {dd}",
                    props.archimedean, bounded.bounded_by_y
                )));
            }
        }
    }
    Ok(None)
}

pub(super) fn run(cfg: &SuiteConfig) -> crate::suites::SuiteResult {
    let mut smp = cfg.sampler(Suite::Bands);
    let mut report = Report::new(Suite::Bands);

    let mut oracle = Tally::new("band-membership-oracle");
    let mut generated = Tally::new("band-generated-handle");
    let mut direct = Tally::new("direct-sum-forces-complements");
    let mut dicho = Tally::new("archimedean-dichotomy");
    for s in handle_spaces(6) {
        dicho.case(dichotomy(&s, cfg.horizon).map(|bad| bad.is_none()), || {
            format!("{s}: {}", dichotomy(&s, cfg.horizon).ok().flatten().unwrap_or_default())
        });
        let all = Handle::all(&s);
        for h in &all {
            let d = generators(&s, h, &mut smp);
            generated.case(band_generated(&s, &d).map(|g| g == *h), || format!("{s}: {h} from [{}]", show(&d)));
            for _ in 0..cfg.cases {
                let y = probe(&s, h, &mut smp);
                oracle.case((|| Ok(h.contains(&s, &y)? == generated_band_contains(&s, &d, &y)?))(), || {
                    format!("{s}: {h}, generators [{}], y = {y}", show(&d))
                });
            }
            if s.dimension() > 4 {
                continue;
            }
            for h2 in &all {
                let out = (|| {
                    if !is_direct_sum_decomposition(&s, h, h2)? {
                        return Ok(true);
                    }
                    let c1 = disjoint_complement(&s, h)?;
                    let c2 = disjoint_complement(&s, h2)?;
                    Ok(*h == c2 && *h2 == c1 && disjoint_complement(&s, &c1)? == *h)
                })();
                direct.case(out, || format!("{s}: {h} (+) {h2}"));
            }
        }
    }
    for t in [oracle, generated, direct, dicho] {
        report.push(t);
    }

    report.law("nx-unbounded-pointwise", cfg.cases, |t| {
        let s = random_pointwise(&mut smp, 6);
        let mut x = smp.positive_vector(&s);
        if x.is_zero() {
            x = RationalVector::unit(s.dimension(), 0);
        }
        let y = smp.vector(s.dimension());
        let out = is_nx_bounded(&s, &x, &y, cfg.horizon).map(|r| !r.bounded_by_y && !r.closed_form_bounded);
        t.case(out, || format!("{s}: x = {x}, y = {y}"));
    });

    report.law("scaled-infimum", cfg.cases, |t| {
        let s = if smp.chance(0.5) { random_pointwise(&mut smp, 6) } else { random_lex(&mut smp) };
        let x = smp.positive_vector(&s);
        let expect_zero = s.family() == Family::Pointwise || x[0] == num_traits::Zero::zero();
        let out = infimum_of_scaled(&s, &x).map(|inf| match inf {
            Some(z) => expect_zero && z.is_zero(),
            None => !expect_zero,
        });
        t.case(out, || format!("{s}: x = {x}"));
    });

    report.law("principal-band-stabilization", cfg.cases, |t| {
        let s = if smp.chance(0.5) { random_pointwise(&mut smp, 6) } else { random_lex(&mut smp) };
        let (x, y) = (smp.vector(s.dimension()), smp.vector(s.dimension()));
        let out = (|| {
            let trace = principal_band_contains(&s, &x, &y)?;
            let within = trace.stabilized_at.is_none_or(|n| n <= trace.bound);
            let escape = s.family() == Family::Lex
                && !x.is_zero()
                && x[0] == num_traits::Zero::zero()
                && y[0] != num_traits::Zero::zero();
            Ok(within
                && trace.contains == band_generated(&s, std::slice::from_ref(&x))?.contains(&s, &y)?
                && (trace.stabilized_at.is_none() == escape))
        })();
        t.case(out, || format!("{s}: x = {x}, y = {y}"));
    });

    report.law("generated-set-complement", cfg.cases, |t| {
        let s = if smp.chance(0.5) { random_pointwise(&mut smp, 6) } else { random_lex(&mut smp) };
        let k = 1 + smp.index(3);
        let d: Vec<RationalVector> = (0..k).map(|_| smp.vector(s.dimension())).collect();
        let x = smp.vector(s.dimension());
        let out = (|| {
            let direct = disjoint_from_all(&s, &d, &x)?;
            let via_ideal = disjoint_complement(&s, &ideal_generated(&s, &d)?)?.contains(&s, &x)?;
            let via_band = disjoint_complement(&s, &band_generated(&s, &d)?)?.contains(&s, &x)?;
            Ok(direct == via_ideal && via_ideal == via_band)
        })();
        t.case(out, || format!("{s}: D = [{}], x = {x}", show(&d)));
    });

    report.law("band-intersection", cfg.cases, |t| {
        let s = if smp.chance(0.5) { random_pointwise(&mut smp, 6) } else { random_lex(&mut smp) };
        let all = Handle::all(&s);
        let (b1, b2) = (all[smp.index(all.len())].clone(), all[smp.index(all.len())].clone());
        let y = smp.vector(s.dimension());
        let out = (|| {
            let meet = ideal_intersection(&s, &b1, &b2)?;
            Ok(all.contains(&meet) && meet.contains(&s, &y)? == (b1.contains(&s, &y)? && b2.contains(&s, &y)?))
        })();
        t.case(out, || format!("{s}: {b1} and {b2}, y = {y}"));
    });
    report.finish()
}
