use num_traits::Signed;

use super::{random_lex, random_pointwise, Report, Suite, SuiteConfig};
use crate::error::Result;
use crate::rational::int;
use crate::sample::Sampler;
use crate::space::{riesz_decompose, Family, RationalVector, SpaceSpec};

type Law = fn(&SpaceSpec, &mut Sampler) -> (Result<bool>, String);

fn fold_join(s: &SpaceSpec, xs: &[RationalVector]) -> Result<RationalVector> {
    let mut acc = xs[0].clone();
    for x in &xs[1..] {
        acc = s.join(&acc, x)?;
    }
    Ok(acc)
}

fn fold_meet(s: &SpaceSpec, xs: &[RationalVector]) -> Result<RationalVector> {
    let mut acc = xs[0].clone();
    for x in &xs[1..] {
        acc = s.meet(&acc, x)?;
    }
    Ok(acc)
}

fn family(smp: &mut Sampler, s: &SpaceSpec) -> Vec<RationalVector> {
    let k = 2 + smp.index(3);
    (0..k).map(|_| smp.vector(s.dimension())).collect()
}

fn show(xs: &[RationalVector]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn compat_translation(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let x = smp.vector(s.dimension());
    let y = &x + &smp.positive_vector(s);
    let z = smp.vector(s.dimension());
    let out = (|| Ok(s.mu(&x, &y)? <= s.mu(&(&x + &z), &(&y + &z))?))();
    (out, format!("x = {x}, y = {y}, z = {z}"))
}

fn compat_scaling(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let x = smp.vector(s.dimension());
    let y = &x + &smp.positive_vector(s);
    let l = smp.nonneg_rational();
    let out = (|| Ok(s.mu(&x, &y)? <= s.mu(&x.scale(&l), &y.scale(&l))?))();
    (out, format!("x = {x}, y = {y}, lambda = {l}"))
}

fn cone_sum(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let (x, y) = (smp.positive_vector(s), smp.positive_vector(s));
    (s.is_positive(&(&x + &y)), format!("x = {x}, y = {y}"))
}

fn cone_pointed(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let x = if smp.chance(0.5) { smp.positive_vector(s) } else { smp.vector(s.dimension()) };
    let out = (|| Ok(!(s.is_positive(&x)? && s.is_positive(&-&x)?) || x.is_zero()))();
    (out, format!("x = {x}"))
}

fn cone_scaling(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let x = smp.positive_vector(s);
    let a = smp.nonneg_rational();
    (s.is_positive(&x.scale(&a)), format!("x = {x}, alpha = {a}"))
}

fn negative_scaling(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let x1 = smp.vector(s.dimension());
    let x2 = &x1 + &smp.positive_vector(s);
    let a = -smp.nonneg_rational();
    (s.leq(&x2.scale(&a), &x1.scale(&a)), format!("x1 = {x1}, x2 = {x2}, alpha = {a}"))
}

fn scalar_monotone(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let x = smp.positive_vector(s);
    let a = smp.rational();
    let b = &a + smp.nonneg_rational();
    (s.leq(&x.scale(&a), &x.scale(&b)), format!("x = {x}, alpha = {a}, beta = {b}"))
}

fn scaled_join(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let xs = family(smp, s);
    let l = smp.nonneg_rational();
    let out = (|| {
        let scaled: Vec<_> = xs.iter().map(|x| x.scale(&l)).collect();
        Ok(fold_join(s, &scaled)? == fold_join(s, &xs)?.scale(&l))
    })();
    (out, format!("family {}, lambda = {l}", show(&xs)))
}

fn scaled_join_negative(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let xs = family(smp, s);
    let l = -smp.positive_rational();
    let out = (|| {
        let scaled: Vec<_> = xs.iter().map(|x| x.scale(&l)).collect();
        Ok(fold_meet(s, &scaled)? == fold_join(s, &xs)?.scale(&l))
    })();
    (out, format!("family {}, lambda = {l}", show(&xs)))
}

fn sum_of_joins(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let (xs, ys) = (family(smp, s), family(smp, s));
    let out = (|| {
        let sums: Vec<_> = xs.iter().flat_map(|x| ys.iter().map(move |y| x + y)).collect();
        Ok(fold_join(s, &sums)? == &fold_join(s, &xs)? + &fold_join(s, &ys)?)
    })();
    (out, format!("x family {}, y family {}", show(&xs), show(&ys)))
}

fn two(s: &SpaceSpec, smp: &mut Sampler) -> (RationalVector, RationalVector) {
    (smp.vector(s.dimension()), smp.vector(s.dimension()))
}

fn abs_triangle(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let (x, y) = two(s, smp);
    let out = (|| s.leq(&s.abs(&(&x + &y))?, &(&s.abs(&x)? + &s.abs(&y)?)))();
    (out, format!("x = {x}, y = {y}"))
}

fn abs_homogeneous(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let x = smp.vector(s.dimension());
    let l = smp.rational();
    let out = (|| Ok(s.abs(&x.scale(&l))? == s.abs(&x)?.scale(&l.abs())))();
    (out, format!("x = {x}, lambda = {l}"))
}

fn abs_reverse_triangle(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let (x, y) = two(s, smp);
    let out = (|| s.leq(&(&s.abs(&x)? - &s.abs(&y)?), &s.abs(&(&x - &y))?))();
    (out, format!("x = {x}, y = {y}"))
}

fn abs_join_meet(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let (x, y) = two(s, smp);
    let out = (|| Ok(s.abs(&(&x - &y))? == &s.join(&x, &y)? - &s.meet(&x, &y)?))();
    (out, format!("x = {x}, y = {y}"))
}

fn abs_parts_sum(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let x = smp.vector(s.dimension());
    let out = (|| Ok(s.abs(&x)? == &s.pos_part(&x)? + &s.neg_part(&x)?))();
    (out, format!("x = {x}"))
}

fn parts_difference(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let x = smp.vector(s.dimension());
    let out = (|| Ok(x == &s.pos_part(&x)? - &s.neg_part(&x)?))();
    (out, format!("x = {x}"))
}

fn parts_positive_disjoint(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let x = smp.vector(s.dimension());
    let out = (|| {
        let (p, n) = (s.pos_part(&x)?, s.neg_part(&x)?);
        Ok(s.is_positive(&p)? && s.is_positive(&n)? && s.is_disjoint(&p, &n)?)
    })();
    (out, format!("x = {x}"))
}

fn pos_part_subadditive(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let (x, y) = two(s, smp);
    let out = (|| s.leq(&s.pos_part(&(&x + &y))?, &(&s.pos_part(&x)? + &s.pos_part(&y)?)))();
    (out, format!("x = {x}, y = {y}"))
}

fn neg_part_subadditive(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let (x, y) = two(s, smp);
    let out = (|| s.leq(&s.neg_part(&(&x + &y))?, &(&s.neg_part(&x)? + &s.neg_part(&y)?)))();
    (out, format!("x = {x}, y = {y}"))
}

fn pos_part_homogeneous(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let x = smp.vector(s.dimension());
    let l = smp.positive_rational();
    let out = (|| Ok(s.pos_part(&x.scale(&l))? == s.pos_part(&x)?.scale(&l)))();
    (out, format!("x = {x}, lambda = {l}"))
}

fn neg_part_homogeneous(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let x = smp.vector(s.dimension());
    let l = smp.positive_rational();
    let out = (|| Ok(s.neg_part(&x.scale(&l))? == s.neg_part(&x)?.scale(&l)))();
    (out, format!("x = {x}, lambda = {l}"))
}

fn join_plus_meet(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let (x, y) = two(s, smp);
    let out = (|| Ok(&x + &y == &s.join(&x, &y)? + &s.meet(&x, &y)?))();
    (out, format!("x1 = {x}, x2 = {y}"))
}

/// `join(x, y)` is above both and below the upper bound `|x| + |y| + p`.
fn join_least_upper_bound(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let (x, y) = two(s, smp);
    let p = smp.positive_vector(s);
    let out = (|| {
        let j = s.join(&x, &y)?;
        let u = &(&s.abs(&x)? + &s.abs(&y)?) + &p;
        let m = s.meet(&x, &y)?;
        let l = &(&-&s.abs(&x)? - &s.abs(&y)?) - &p;
        let chain = s.leq(&x, &j)? && s.leq(&y, &j)? && s.leq(&j, &u)? && s.leq(&x, &u)? && s.leq(&y, &u)?;
        let dual = s.leq(&m, &x)? && s.leq(&m, &y)? && s.leq(&l, &m)?;
        // on a chain the join must be one of the two arguments
        let picks = s.family() == Family::Pointwise || j == x || j == y;
        Ok(chain && dual && picks)
    })();
    (out, format!("x = {x}, y = {y}, p = {p}"))
}

/// Builds `x` and `x1, x2` with `x` disjoint from both.
fn disjoint_setup(s: &SpaceSpec, smp: &mut Sampler) -> (RationalVector, RationalVector, RationalVector) {
    let n = s.dimension();
    match s.family() {
        Family::Pointwise => {
            let inside: Vec<usize> = (1..=n).filter(|_| smp.chance(0.5)).collect();
            let outside: Vec<usize> = (1..=n).filter(|i| !inside.contains(i)).collect();
            (smp.vector_in_support(n, &inside), smp.vector_in_support(n, &outside), smp.vector_in_support(n, &outside))
        }
        Family::Lex => {
            if smp.chance(0.5) {
                (s.zero(), smp.vector(n), smp.vector(n))
            } else {
                (smp.vector(n), s.zero(), s.zero())
            }
        }
    }
}

fn disjoint_combination(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let (x, x1, x2) = disjoint_setup(s, smp);
    let (a, b) = (smp.rational(), smp.rational());
    let out = (|| {
        let pre = s.is_disjoint(&x, &x1)? && s.is_disjoint(&x, &x2)?;
        Ok(pre && s.is_disjoint(&x, &(&x1.scale(&a) + &x2.scale(&b)))?)
    })();
    (out, format!("x = {x}, x1 = {x1}, x2 = {x2}, a = {a}, b = {b}"))
}

fn disjoint_supremum(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    let (y, x1, x2) = disjoint_setup(s, smp);
    let xs = [x1, x2];
    let out = (|| s.is_disjoint(&y, &fold_join(s, &xs)?))();
    (out, format!("y = {y}, family {}", show(&xs)))
}

/// Dominated instance `|x| <= |y_1 + ... + y_n|` built by clamping a random
/// vector into `[-|total|, |total|]`, or into `[0, |total|]` for `positive`.
fn dominated(s: &SpaceSpec, smp: &mut Sampler, positive: bool) -> Result<(RationalVector, Vec<RationalVector>)> {
    let k = 1 + smp.index(4);
    let ys: Vec<RationalVector> = (0..k).map(|_| smp.vector(s.dimension())).collect();
    let bound = s.abs(&s.sum(&ys)?)?;
    let lo = if positive { s.zero() } else { -&bound };
    let z = smp.vector(s.dimension()).scale(&int(smp.int_in(1, 3)));
    Ok((s.meet(&s.join(&z, &lo)?, &bound)?, ys))
}

fn decomposition(s: &SpaceSpec, smp: &mut Sampler, positive: bool) -> (Result<bool>, String) {
    let (x, ys) = match dominated(s, smp, positive) {
        Ok(v) => v,
        Err(e) => return (Err(e), "building instance".into()),
    };
    let out = (|| {
        let parts = riesz_decompose(s, &x, &ys)?.parts;
        let mut ok = s.sum(&parts)? == x && parts.len() == ys.len();
        for (p, y) in parts.iter().zip(&ys) {
            ok &= s.leq(&s.abs(p)?, &s.abs(y)?)?;
            if positive {
                ok &= s.is_positive(p)?;
            }
        }
        Ok(ok)
    })();
    (out, format!("x = {x}, y = [{}]", show(&ys)))
}

fn decomposition_any(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    decomposition(s, smp, false)
}

fn decomposition_positive(s: &SpaceSpec, smp: &mut Sampler) -> (Result<bool>, String) {
    decomposition(s, smp, true)
}

const LAWS: &[(&str, Law)] = &[
    ("compatibility-translation", compat_translation),
    ("compatibility-scaling", compat_scaling),
    ("cone-sum", cone_sum),
    ("cone-pointed", cone_pointed),
    ("cone-scaling", cone_scaling),
    ("negative-scaling-reverses", negative_scaling),
    ("scalar-monotone", scalar_monotone),
    ("scaled-join", scaled_join),
    ("scaled-join-negative", scaled_join_negative),
    ("sum-of-joins", sum_of_joins),
    ("abs-triangle", abs_triangle),
    ("abs-homogeneous", abs_homogeneous),
    ("abs-reverse-triangle", abs_reverse_triangle),
    ("abs-join-minus-meet", abs_join_meet),
    ("abs-parts-sum", abs_parts_sum),
    ("parts-difference", parts_difference),
    ("parts-positive-disjoint", parts_positive_disjoint),
    ("pos-part-subadditive", pos_part_subadditive),
    ("neg-part-subadditive", neg_part_subadditive),
    ("pos-part-homogeneous", pos_part_homogeneous),
    ("neg-part-homogeneous", neg_part_homogeneous),
    ("join-plus-meet", join_plus_meet),
    ("join-least-upper-bound", join_least_upper_bound),
    ("disjoint-combination", disjoint_combination),
    ("disjoint-supremum", disjoint_supremum),
    ("decomposition", decomposition_any),
    ("decomposition-positive", decomposition_positive),
];

pub(super) fn run(cfg: &SuiteConfig) -> crate::suites::SuiteResult {
    let mut smp = cfg.sampler(Suite::Riesz);
    let mut report = Report::new(Suite::Riesz);
    for (tag, law) in LAWS {
        for lex in [false, true] {
            let name = format!("{tag}/{}", if lex { "lex" } else { "pointwise" });
            report.law(&name, cfg.cases, |t| {
                let s = if lex { random_lex(&mut smp) } else { random_pointwise(&mut smp, 4) };
                let (out, msg) = law(&s, &mut smp);
                t.case(out, || format!("{s}: {msg}"));
            });
        }
    }
    report.finish()
}
