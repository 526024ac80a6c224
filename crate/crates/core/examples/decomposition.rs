//! Splitting a vector along dominating parts.

use fuzzy_riesz::rational::ratio;
use fuzzy_riesz::space::riesz_decompose;
use fuzzy_riesz::{Error, RationalVector, Result, SpaceSpec};

fn main() -> Result<()> {
    let s = SpaceSpec::pointwise(2, ratio(2, 3))?;
    let x = RationalVector::from_ints(&[3, 0]);
    let ys = [RationalVector::from_ints(&[2, 1]), RationalVector::from_ints(&[2, -1])];
    let d = riesz_decompose(&s, &x, &ys)?;
    let parts: Vec<String> = d.parts.iter().map(ToString::to_string).collect();
    println!("{x} = {}", parts.join(" + "));
    for (p, y) in d.parts.iter().zip(&ys) {
        println!("  mu(|{p}|, |{y}|) = {}", s.mu(&s.abs(p)?, &s.abs(y)?)?);
    }

    let plane = SpaceSpec::lex(ratio(4, 5))?;
    let x = RationalVector::parse("(1, 100)")?;
    let ys = [RationalVector::parse("(1/2, -3)")?, RationalVector::parse("(1, 0)")?];
    let d = riesz_decompose(&plane, &x, &ys)?;
    println!("in the plane: {x} = {} + {}", d.parts[0], d.parts[1]);

    match riesz_decompose(&s, &RationalVector::from_ints(&[5, 0]), &ys[..1]) {
        Err(Error::NotDominated) => println!("(5, 0) is not dominated by |(1/2, -3)|"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
