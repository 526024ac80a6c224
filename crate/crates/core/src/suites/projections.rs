use super::{handle_spaces, member, Report, Suite, SuiteConfig, Tally};
use crate::error::{Error, Result};
use crate::ideals::{band_generated, disjoint_complement, ideal_intersection, ideal_sum, Handle, LexKind};
use crate::projections::{
    absolute_bound_check, band_projection_operator, classify_band_projection, compare_projections,
    has_principal_projection_property, interval_sup, is_fuzzy_positive, is_grade_monotone_positive, is_projection_band,
    principal_projection, principal_projection_traced, probe_vectors, projection_band_equivalence,
    projection_by_interval_sup, sampled_positivity_witness, OperatorMatrix,
};
use crate::rational::{int, ratio};
use crate::sample::Sampler;
use crate::space::{Family, SpaceSpec};

const SAMPLES: usize = 4;

fn random_space(smp: &mut Sampler) -> SpaceSpec {
    let spaces = handle_spaces(6);
    spaces[smp.index(spaces.len())].clone()
}

fn projection_bands(s: &SpaceSpec) -> Vec<Handle> {
    Handle::all(s).into_iter().filter(|h| is_projection_band(s, h).unwrap_or(false)).collect()
}

/// Projection calculus over every pair of projection bands.
fn calculus(s: &SpaceSpec, smp: &mut Sampler, t: &mut [Tally; 5]) {
    let bands = projection_bands(s);
    let n = s.dimension();
    let identity = OperatorMatrix::identity(n);
    for b1 in &bands {
        let p1 = band_projection_operator(s, b1);
        t[0].case(
            (|| Ok(band_projection_operator(s, &disjoint_complement(s, b1)?)? == identity.sub(&p1.clone()?)?))(),
            || format!("{s}: complement of {b1}"),
        );
        t[3].case(
            (|| {
                let p = p1.clone()?;
                Ok(is_fuzzy_positive(s, s, &p)?.positive
                    && sampled_positivity_witness(s, s, &p, smp, SAMPLES)?.is_none())
            })(),
            || format!("{s}: projection onto {b1}"),
        );
        for b2 in &bands {
            let out = (|| -> Result<(bool, bool)> {
                let (p1, p2) = (p1.clone()?, band_projection_operator(s, b2)?);
                let p12 = p1.compose(&p2)?;
                let meet = band_projection_operator(s, &ideal_intersection(s, b1, b2)?)?;
                let sum = band_projection_operator(s, &ideal_sum(s, b1, b2)?)?;
                let inter = meet == p12 && p12 == p2.compose(&p1)?;
                let plus = sum == p1.add(&p2)?.sub(&p12)? && sum == p1.add(&p2)?.sub(&meet)?;
                Ok((inter, plus))
            })();
            let msg = || format!("{s}: {b1} and {b2}");
            t[1].case(out.clone().map(|o| o.0), msg);
            t[2].case(out.map(|o| o.1), msg);
            t[4].case(compare_projections(s, b1, b2, smp, SAMPLES).map(|_| true), msg);
        }
    }
}

fn positive_matrix(s: &SpaceSpec, smp: &mut Sampler) -> OperatorMatrix {
    let n = s.dimension();
    let mut rows = vec![vec![int(0); n]; n];
    match s.family() {
        Family::Pointwise => {
            for row in rows.iter_mut() {
                for e in row.iter_mut() {
                    *e = smp.nonneg_rational();
                }
            }
        }
        // columns (p, r) and (0, s) with p > 0 and s >= 0
        Family::Lex => {
            rows[0][0] = smp.positive_rational();
            rows[1][0] = smp.rational();
            rows[1][1] = smp.nonneg_rational();
        }
    }
    OperatorMatrix::new(rows).expect("square")
}

fn random_matrix(rows: usize, cols: usize, smp: &mut Sampler) -> OperatorMatrix {
    let style = smp.index(3);
    let entries = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| match style {
                    0 if i == j => int(smp.int_in(0, 1)),
                    0 => int(0),
                    1 => int(smp.int_in(0, 1)),
                    _ => [int(-1), int(0), int(1), ratio(1, 2), int(2)][smp.index(5)].clone(),
                })
                .collect()
        })
        .collect();
    OperatorMatrix::new(entries).expect("nonempty")
}

fn small_space(smp: &mut Sampler) -> SpaceSpec {
    if smp.chance(0.5) {
        SpaceSpec::lex(ratio(2, 3)).expect("valid preset")
    } else {
        SpaceSpec::pointwise(1 + smp.index(3), ratio(2, 3)).expect("valid preset")
    }
}

pub(super) fn run(cfg: &SuiteConfig) -> crate::suites::SuiteResult {
    let mut smp = cfg.sampler(Suite::Projections);
    let mut report = Report::new(Suite::Projections);

    let mut detection = Tally::new("projection-band-detection");
    let mut equivalence = Tally::new("projection-band-equivalence");
    let mut ppp = Tally::new("principal-projection-property");
    let mut masks = Tally::new("band-projection-classification");
    let mut calc = [
        Tally::new("projection-complement"),
        Tally::new("projection-intersection"),
        Tally::new("projection-sum"),
        Tally::new("projection-positive"),
        Tally::new("projection-comparison"),
    ];
    for s in handle_spaces(6) {
        let expected_ppp = s.family() == Family::Pointwise;
        ppp.case(has_principal_projection_property(&s).map(|p| p == expected_ppp), || format!("{s}"));
        for h in Handle::all(&s) {
            let expected = h != Handle::lex(LexKind::Axis);
            detection.case(is_projection_band(&s, &h).map(|p| p == expected), || format!("{s}: {h}"));
            let mut xs = probe_vectors(&s);
            xs.extend((0..SAMPLES).map(|_| smp.positive_vector(&s)));
            equivalence.case(projection_band_equivalence(&s, &h, &xs).map(|e| e.projection_band == expected), || {
                format!("{s}: {h}")
            });
            if expected {
                masks.case(
                    (|| {
                        let p = band_projection_operator(&s, &h)?;
                        let v = classify_band_projection(&s, &p, &mut smp, SAMPLES)?;
                        Ok(v.is_band_projection && v.mask_of == Some(h.clone()))
                    })(),
                    || format!("{s}: projection onto {h}"),
                );
            }
        }
        calculus(&s, &mut smp, &mut calc);
    }
    for t in [detection, equivalence, ppp] {
        report.push(t);
    }
    for t in calc {
        report.push(t);
    }

    report.law("band-projection-classification-random", cfg.cases, |t| {
        let s = small_space(&mut smp);
        let m = random_matrix(s.dimension(), s.dimension(), &mut smp);
        let out =
            classify_band_projection(&s, &m, &mut smp, SAMPLES).map(|v| v.is_band_projection == v.mask_of.is_some());
        t.case(out, || format!("{s}: T = {m}"));
    });
    report.push(masks);

    report.law("interval-supremum-projection", cfg.cases, |t| {
        let s = random_space(&mut smp);
        let bands = projection_bands(&s);
        let b = bands[smp.index(bands.len())].clone();
        let x = smp.positive_vector(&s);
        let out = (|| {
            let value = projection_by_interval_sup(&s, &b, &x)?;
            let Some(sup) = interval_sup(&s, &b, &x)? else { return Ok(false) };
            let mut ok = sup == value && b.contains(&s, &sup)? && s.leq(&s.zero(), &sup)? && s.leq(&sup, &x)?;
            for _ in 0..SAMPLES {
                let z = s.meet(&x, &s.abs(&member(&s, &b, &mut smp))?)?;
                if b.contains(&s, &z)? {
                    ok &= s.leq(&z, &sup)?;
                }
            }
            Ok(ok && band_projection_operator(&s, &b)?.apply(&x)? == value)
        })();
        t.case(out, || format!("{s}: {b}, x = {x}"));
    });

    for general in [false, true] {
        let tag = if general { "principal-projection-general" } else { "principal-projection-mask" };
        report.law(tag, cfg.cases, |t| {
            let s = random_space(&mut smp);
            let x = smp.vector(s.dimension());
            let y = if general { smp.vector(s.dimension()) } else { smp.positive_vector(&s) };
            let out = (|| {
                let band = band_generated(&s, std::slice::from_ref(&x))?;
                if !is_projection_band(&s, &band)? {
                    return Ok(matches!(principal_projection(&s, &x, &y), Err(Error::NotProjectionBand(_))));
                }
                let mask = band_projection_operator(&s, &band)?.apply(&y)?;
                if general {
                    return Ok(principal_projection(&s, &x, &y)? == mask);
                }
                let traced = principal_projection_traced(&s, &x, &y)?;
                Ok(traced.value == mask && traced.stabilized_at <= traced.bound)
            })();
            t.case(out, || format!("{s}: x = {x}, y = {y}"));
        });
    }

    report.law("projection-vector-identities", cfg.cases, |t| {
        let s = random_space(&mut smp);
        let (x, y) = (smp.positive_vector(&s), smp.positive_vector(&s));
        let out = (|| {
            let (bx, by) =
                (band_generated(&s, std::slice::from_ref(&x))?, band_generated(&s, std::slice::from_ref(&y))?);
            if !is_projection_band(&s, &bx)? || !is_projection_band(&s, &by)? {
                return Ok(true);
            }
            let (px, py) = (band_projection_operator(&s, &bx)?, band_projection_operator(&s, &by)?);
            let pxy = px.compose(&py)?;
            let p_meet = band_projection_operator(&s, &band_generated(&s, &[s.meet(&x, &y)?])?)?;
            let p_sum = band_projection_operator(&s, &band_generated(&s, &[&x + &y])?)?;
            let comp = band_projection_operator(&s, &disjoint_complement(&s, &bx)?)?;
            Ok(comp == OperatorMatrix::identity(s.dimension()).sub(&px)?
                && p_meet == pxy
                && pxy == py.compose(&px)?
                && p_sum == px.add(&py)?.sub(&pxy)?)
        })();
        t.case(out, || format!("{s}: x = {x}, y = {y}"));
    });

    report.law("absolute-bound", cfg.cases, |t| {
        let s = random_space(&mut smp);
        let m = positive_matrix(&s, &mut smp);
        let x = smp.vector(s.dimension());
        t.case(absolute_bound_check(&s, &m, &x).map(|b| b.holds), || format!("{s}: T = {m}, x = {x}"));
    });

    report.law("positivity-closed-form", cfg.cases, |t| {
        let (s_in, s_out) = (small_space(&mut smp), small_space(&mut smp));
        let m = random_matrix(s_out.dimension(), s_in.dimension(), &mut smp);
        let out = (|| {
            let closed = is_fuzzy_positive(&s_in, &s_out, &m)?;
            let sampled = sampled_positivity_witness(&s_in, &s_out, &m, &mut smp, 16)?;
            Ok(!(closed.positive && sampled.is_some()) && closed.positive == closed.witness.is_none())
        })();
        t.case(out, || format!("{s_in} -> {s_out}: T = {m}"));
    });

    let mut contrast = Tally::new("positive-not-grade-monotone");
    for n in 1..=3 {
        let out = (|| {
            let from = SpaceSpec::pointwise(n, ratio(4, 5))?;
            let to = SpaceSpec::pointwise(n, ratio(2, 3))?;
            let id = OperatorMatrix::identity(n);
            let check = is_grade_monotone_positive(&from, &to, &id, &mut smp, SAMPLES)?;
            let grades = check.witness.as_ref().map(|w| (w.2.value().clone(), w.3.value().clone()));
            Ok(is_fuzzy_positive(&from, &to, &id)?.positive
                && !check.holds
                && grades == Some((ratio(4, 5), ratio(2, 3))))
        })();
        contrast.case(out, || format!("identity on R^{n} from grade 4/5 to grade 2/3"));
    }
    report.push(contrast);
    report.finish()
}
