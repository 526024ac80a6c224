//! The lexicographic plane: bounded rays, an infimum that does not exist, and
//! a band that is not a projection band.

use fuzzy_riesz::ideals::{disjoint_complement, Handle, LexKind};
use fuzzy_riesz::projections::{band_projection_operator, is_projection_band};
use fuzzy_riesz::rational::ratio;
use fuzzy_riesz::space::{infimum_of_scaled, is_nx_bounded, space_properties};
use fuzzy_riesz::{RationalVector, Result, SpaceSpec};

fn main() -> Result<()> {
    let s = SpaceSpec::lex(ratio(2, 3))?;
    let props = space_properties(&s);
    if let Some((x, y)) = &props.witness {
        println!("archimedean: {}, witness n {x} below {y}", props.archimedean);
    }
    println!("{}", props.dedekind_note);

    let (x, y) = (RationalVector::from_ints(&[0, 1]), RationalVector::from_ints(&[1, 0]));
    let r = is_nx_bounded(&s, &x, &y, 1000)?;
    println!("n {x} below {y} for n = 1..1000: {}", r.bounded_by_y);
    println!("inf (1/n) (1, 0): {:?}", infimum_of_scaled(&s, &y)?);

    let axis = Handle::lex(LexKind::Axis);
    let d = disjoint_complement(&s, &axis)?;
    println!("axis^d = {d}, axis^dd = {}", disjoint_complement(&s, &d)?);
    println!("axis is a projection band: {}", is_projection_band(&s, &axis)?);
    if let Err(e) = band_projection_operator(&s, &axis) {
        println!("{e}");
    }

    let pointwise = SpaceSpec::pointwise(2, ratio(2, 3))?;
    let r = is_nx_bounded(&pointwise, &RationalVector::from_ints(&[0, 1]), &y, 1000)?;
    println!("pointwise: n (0, 1) below (1, 0) fails first at n = {:?}", r.first_failure);
    Ok(())
}
