use super::{generators, handle_spaces, member, probe, Report, Suite, SuiteConfig, Tally};
use crate::error::Result;
use crate::ideals::oracle::{disjoint_from_all, generated_ideal_contains};
use crate::ideals::{
    disjoint_complement, ideal_generated, ideal_intersection, ideal_sum, is_order_dense, split_sum, Handle,
};
use crate::rational::int;
use crate::sample::Sampler;
use crate::space::{RationalVector, SpaceSpec};

/// Searches for a nonzero `y` in `h` with `|y|` below `|x|` among coordinate
/// masks of `|x|`, `|x|` itself and the unit vectors.
pub(super) fn dominated_member(s: &SpaceSpec, h: &Handle, x: &RationalVector) -> Result<Option<RationalVector>> {
    let n = s.dimension();
    let ax = s.abs(x)?;
    let mut candidates = vec![ax.clone()];
    for i in 0..n {
        let mut coords = vec![int(0); n];
        coords[i] = ax[i].clone();
        candidates.push(RationalVector::new(coords));
        candidates.push(RationalVector::unit(n, i));
    }
    for y in candidates {
        if !y.is_zero() && h.contains(s, &y)? && s.leq(&s.abs(&y)?, &ax)? {
            return Ok(Some(y));
        }
    }
    Ok(None)
}

/// Order density by its definition, on unit vectors, all ones and samples.
fn dense_by_definition(s: &SpaceSpec, h: &Handle, smp: &mut Sampler, samples: usize) -> Result<Option<RationalVector>> {
    let n = s.dimension();
    let mut xs: Vec<RationalVector> = (0..n).map(|i| RationalVector::unit(n, i)).collect();
    xs.push(RationalVector::constant(n, int(1)));
    xs.extend((0..samples).map(|_| smp.positive_vector(s)));
    for x in xs {
        if !x.is_zero() && s.is_positive(&x)? && dominated_member(s, h, &x)?.is_none() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

fn ideal_closure(s: &SpaceSpec, h: &Handle, smp: &mut Sampler) -> (Result<bool>, String) {
    let (x, y) = (member(s, h, smp), member(s, h, smp));
    let l = smp.rational();
    // z with |z| below |x|: scale x into (-1, 1) coordinatewise in the chain sense
    let z = x.scale(&crate::rational::ratio(smp.int_in(-3, 3), 4));
    let out = (|| Ok(h.contains(s, &(&x + &y))? && h.contains(s, &x.scale(&l))? && h.contains(s, &z)?))();
    (out, format!("x = {x}, y = {y}, lambda = {l}, z = {z}"))
}

pub(super) fn run(cfg: &SuiteConfig) -> crate::suites::SuiteResult {
    let mut smp = cfg.sampler(Suite::Ideals);
    let mut report = Report::new(Suite::Ideals);
    let samples = (cfg.cases / 50).max(4) as usize;

    let mut oracle = Tally::new("ideal-membership-oracle");
    let mut generated = Tally::new("ideal-generated-handle");
    let mut complement_oracle = Tally::new("complement-membership-oracle");
    let mut inside_dd = Tally::new("inside-double-complement");
    let mut triple = Tally::new("triple-complement");
    let mut meet_zero = Tally::new("complement-meets-double-complement-in-zero");
    let mut trivial = Tally::new("trivial-complement-gives-everything");
    let mut complement_ideal = Tally::new("complement-is-ideal");
    let mut domination = Tally::new("double-complement-domination");
    let mut dense = Tally::new("order-dense-iff-trivial-complement");
    let mut direct_dense = Tally::new("sum-with-complement-order-dense");
    let mut dense_in_dd = Tally::new("order-dense-in-double-complement");

    for s in handle_spaces(6) {
        for h in Handle::all(&s) {
            let d = generators(&s, &h, &mut smp);
            generated.case(ideal_generated(&s, &d).map(|g| g == h), || format!("{s}: {h} from [{}]", show(&d)));
            let comp = disjoint_complement(&s, &h);
            for _ in 0..cfg.cases {
                let x = probe(&s, &h, &mut smp);
                oracle.case((|| Ok(h.contains(&s, &x)? == generated_ideal_contains(&s, &d, &x)?))(), || {
                    format!("{s}: {h}, generators [{}], x = {x}", show(&d))
                });
                complement_oracle
                    .case((|| Ok(comp.clone()?.contains(&s, &x)? == disjoint_from_all(&s, &d, &x)?))(), || {
                        format!("{s}: complement of {h}, x = {x}")
                    });
            }

            let structure = (|| -> Result<_> {
                let c = disjoint_complement(&s, &h)?;
                let cc = disjoint_complement(&s, &c)?;
                let ccc = disjoint_complement(&s, &cc)?;
                Ok((c, cc, ccc))
            })();
            let (c, cc, ccc) = match structure {
                Ok(v) => v,
                Err(e) => {
                    inside_dd.case(Err(e), || format!("{s}: {h}"));
                    continue;
                }
            };
            let tag = || format!("{s}: A = {h}, A^d = {c}, A^dd = {cc}");
            inside_dd.case(Ok(h.is_subset_of(&cc)), tag);
            triple.case(Ok(c == ccc), tag);
            meet_zero.case(ideal_intersection(&s, &c, &cc).map(|m| m.is_zero()), tag);
            trivial.case(Ok(!c.is_zero() || cc.is_full(&s)), tag);
            for _ in 0..samples {
                let (out, msg) = ideal_closure(&s, &c, &mut smp);
                complement_ideal.case(out, || format!("{s}: {c}: {msg}"));
                let x = member(&s, &cc, &mut smp);
                if !x.is_zero() {
                    domination.case(dominated_member(&s, &h, &x).map(|y| y.is_some()), || {
                        format!("{s}: no nonzero member of {h} below |{x}|")
                    });
                }
                let p = s.abs(&x).unwrap_or_else(|_| x.clone());
                if !p.is_zero() {
                    dense_in_dd.case(dominated_member(&s, &h, &p).map(|y| y.is_some()), || {
                        format!("{s}: no nonzero member of {h} below {p}")
                    });
                }
            }
            let by_def = dense_by_definition(&s, &h, &mut smp, samples);
            dense.case(
                (|| Ok(by_def.clone()?.is_none() == is_order_dense(&s, &h)? && is_order_dense(&s, &h)? == c.is_zero()))(
                ),
                || format!("{s}: {h}, witness {by_def:?}"),
            );
            let sum = ideal_sum(&s, &h, &c);
            direct_dense.case(
                (|| {
                    let sum = sum.clone()?;
                    Ok(ideal_intersection(&s, &h, &c)?.is_zero()
                        && is_order_dense(&s, &sum)?
                        && dense_by_definition(&s, &sum, &mut smp, samples)?.is_none())
                })(),
                || format!("{s}: {h} (+) {c}"),
            );
        }
    }
    for t in [
        oracle,
        generated,
        complement_oracle,
        inside_dd,
        triple,
        meet_zero,
        trivial,
        complement_ideal,
        domination,
        dense,
        direct_dense,
        dense_in_dd,
    ] {
        report.push(t);
    }

    sums(cfg, &mut smp, &mut report);
    report.finish()
}

fn random_handle(s: &SpaceSpec, smp: &mut Sampler) -> Handle {
    let all = Handle::all(s);
    all[smp.index(all.len())].clone()
}

fn random_space(smp: &mut Sampler) -> SpaceSpec {
    let spaces = handle_spaces(6);
    spaces[smp.index(spaces.len())].clone()
}

/// Sums and intersections of ideal pairs.
fn sums(cfg: &SuiteConfig, smp: &mut Sampler, report: &mut Report) {
    report.law("sum-positive-cone", cfg.cases, |t| {
        let s = random_space(smp);
        let (h1, h2) = (random_handle(&s, smp), random_handle(&s, smp));
        let p1 = s.abs(&member(&s, &h1, smp)).expect("dimension matches");
        let p2 = s.abs(&member(&s, &h2, smp)).expect("dimension matches");
        let out = (|| {
            let sum = ideal_sum(&s, &h1, &h2)?;
            let x = &p1 + &p2;
            let forward = sum.contains(&s, &x)? && s.is_positive(&x)?;
            let back = match split_sum(&s, &h1, &h2, &x)? {
                Some((a, b)) => s.is_positive(&a)? && s.is_positive(&b)? && &a + &b == x,
                None => false,
            };
            Ok(forward && back)
        })();
        t.case(out, || format!("{s}: {h1} + {h2}, x1 = {p1}, x2 = {p2}"));
    });

    report.law("sum-order-splits", cfg.cases, |t| {
        let s = random_space(smp);
        let h1 = random_handle(&s, smp);
        // a second handle meeting h1 only in zero
        let options: Vec<Handle> = Handle::all(&s)
            .into_iter()
            .filter(|h| ideal_intersection(&s, &h1, h).map(|m| m.is_zero()).unwrap_or(false))
            .collect();
        let h2 = options[smp.index(options.len())].clone();
        let (x1, x2) = (member(&s, &h1, smp), member(&s, &h2, smp));
        let (q1, q2) = (
            s.abs(&member(&s, &h1, smp)).expect("dimension matches"),
            s.abs(&member(&s, &h2, smp)).expect("dimension matches"),
        );
        let x = &x1 + &x2;
        let y = &(&x + &q1) + &q2;
        let out = (|| {
            let (Some((a1, a2)), Some((b1, b2))) = (split_sum(&s, &h1, &h2, &x)?, split_sum(&s, &h1, &h2, &y)?) else {
                return Ok(false);
            };
            Ok(s.leq(&x, &y)? && s.leq(&a1, &b1)? && s.leq(&a2, &b2)?)
        })();
        t.case(out, || format!("{s}: {h1} (+) {h2}, x = {x}, y = {y}"));
    });

    report.law("sum-and-intersection-membership", cfg.cases, |t| {
        let s = random_space(smp);
        let (h1, h2) = (random_handle(&s, smp), random_handle(&s, smp));
        let x = smp.vector(s.dimension());
        let out = (|| {
            let in_sum = ideal_sum(&s, &h1, &h2)?.contains(&s, &x)?;
            let in_meet = ideal_intersection(&s, &h1, &h2)?.contains(&s, &x)?;
            Ok(in_sum == split_sum(&s, &h1, &h2, &x)?.is_some()
                && in_meet == (h1.contains(&s, &x)? && h2.contains(&s, &x)?))
        })();
        t.case(out, || format!("{s}: {h1}, {h2}, x = {x}"));
    });
}

fn show(xs: &[RationalVector]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}
