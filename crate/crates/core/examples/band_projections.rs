//! Band projections as matrices and as suprema of order intervals, and the
//! principal projection by stabilizing meets.

use fuzzy_riesz::ideals::Handle;
use fuzzy_riesz::projections::{
    band_projection_operator, classify_band_projection, compare_projections, interval_sup, principal_projection_traced,
    OperatorMatrix,
};
use fuzzy_riesz::rational::ratio;
use fuzzy_riesz::sample::Sampler;
use fuzzy_riesz::{RationalVector, Result, SpaceSpec};

fn main() -> Result<()> {
    let s = SpaceSpec::pointwise(3, ratio(2, 3))?;
    let b = Handle::pointwise([1, 3]);
    let p = band_projection_operator(&s, &b)?;
    let x = RationalVector::from_ints(&[5, 7, 2]);
    println!("P_B = {p}");
    println!("P_B {x} = {}", p.apply(&x)?);
    println!("sup (B+ ^ [0, x]) = {}", interval_sup(&s, &b, &x)?.expect("projection band"));

    let mut smp = Sampler::new(11);
    let c = compare_projections(&s, &Handle::pointwise([1]), &b, &mut smp, 8)?;
    println!("{{1}} vs {{1,3}}: included {}, absorbs {}, precedes {}", c.included, c.absorbs, c.precedes);

    let t = OperatorMatrix::from_ints(&[&[1, 1, 0], &[0, 0, 0], &[0, 0, 1]]);
    let v = classify_band_projection(&s, &t, &mut smp, 8)?;
    println!("is {t} a band projection? {} (idempotent {})", v.is_band_projection, v.idempotent);

    let (x, y) = (RationalVector::parse("(1/3, 0, -4)")?, RationalVector::parse("(9, 5, -7)")?);
    let pp = principal_projection_traced(&s, &x, &y)?;
    println!("P_x y = {} settled at n = {} within bound {}", pp.value, pp.stabilized_at, pp.bound);
    Ok(())
}
