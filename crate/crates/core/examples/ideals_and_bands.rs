//! Generated ideals and bands, disjoint complements, order density, and the
//! oracles behind handle membership.

use fuzzy_riesz::ideals::oracle::{generated_ideal_contains, lambda_witness};
use fuzzy_riesz::ideals::{
    band_generated, disjoint_complement, ideal_generated, ideal_sum, is_order_dense, principal_band_contains, Handle,
};
use fuzzy_riesz::rational::ratio;
use fuzzy_riesz::{RationalVector, Result, SpaceSpec};

fn main() -> Result<()> {
    let s = SpaceSpec::pointwise(3, ratio(2, 3))?;
    let d = [RationalVector::from_ints(&[1, 0, 0]), RationalVector::from_ints(&[0, 0, 2])];
    let band = band_generated(&s, &d)?;
    println!("band generated by (1,0,0), (0,0,2): {band}");
    let x = RationalVector::from_ints(&[-7, 0, 5]);
    println!(
        "{x} in I_D: handle {}, oracle {}, lambda {:?}",
        ideal_generated(&s, &d)?.contains(&s, &x)?,
        generated_ideal_contains(&s, &d, &x)?,
        lambda_witness(&s, &d, &x)?.map(|l| l.to_string()),
    );
    let comp = disjoint_complement(&s, &band)?;
    println!("complement: {comp}, double complement: {}", disjoint_complement(&s, &comp)?);
    println!("band + complement is order dense: {}", is_order_dense(&s, &ideal_sum(&s, &band, &comp)?)?);

    let t = principal_band_contains(&s, &d[1], &x)?;
    let terms: Vec<String> = t.terms.iter().map(ToString::to_string).collect();
    println!("is {x} in the band of (0,0,2)? {}; meets {}", t.contains, terms.join(", "));

    println!("ideals of {s}:");
    for h in Handle::all(&s) {
        println!("  {h}  dense: {}", is_order_dense(&s, &h)?);
    }
    Ok(())
}
