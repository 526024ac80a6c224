//! Fuzzy positive operators: the identity between two grades, which is
//! positive but lowers grades, and the bound |T x| below T |x|.

use fuzzy_riesz::projections::{
    absolute_bound_check, is_fuzzy_positive, is_grade_monotone_positive, operator_precedes, OperatorMatrix,
};
use fuzzy_riesz::rational::ratio;
use fuzzy_riesz::sample::Sampler;
use fuzzy_riesz::{RationalVector, Result, SpaceSpec};

fn main() -> Result<()> {
    let from = SpaceSpec::pointwise(1, ratio(4, 5))?;
    let to = SpaceSpec::pointwise(1, ratio(2, 3))?;
    let id = OperatorMatrix::identity(1);
    println!("identity {from} -> {to}");
    println!("  positive: {}", is_fuzzy_positive(&from, &to, &id)?.positive);
    let g = is_grade_monotone_positive(&from, &to, &id, &mut Sampler::new(0), 4)?;
    if let Some((x, y, before, after)) = &g.witness {
        println!("  grade monotone: {}; mu({x}, {y}) = {before} becomes {after}", g.holds);
    }

    let plane = SpaceSpec::lex(ratio(2, 3))?;
    let shear = OperatorMatrix::from_ints(&[&[1, 0], &[-5, 1]]);
    let swap = OperatorMatrix::from_ints(&[&[0, 1], &[1, 0]]);
    for t in [&shear, &swap] {
        let c = is_fuzzy_positive(&plane, &plane, t)?;
        match &c.witness {
            Some((x, y)) => {
                println!("{t} on the plane: positive {}; {x} is positive, its image {y} is not", c.positive)
            }
            None => println!("{t} on the plane: positive {}", c.positive),
        }
    }
    let x = RationalVector::from_ints(&[-1, 3]);
    let b = absolute_bound_check(&plane, &shear, &x)?;
    println!("|T x| = {}, T |x| = {}, bound holds {}", b.abs_of_image, b.image_of_abs, b.holds);
    println!("0 below the shear: {}", operator_precedes(&plane, &OperatorMatrix::zero(2), &shear)?);
    Ok(())
}
