//! Lattice operations and the parts of a vector in both preset families.

use fuzzy_riesz::rational::ratio;
use fuzzy_riesz::{RationalVector, Result, SpaceSpec};

fn main() -> Result<()> {
    let c = ratio(2, 3);
    let spaces = [SpaceSpec::pointwise(3, c.clone())?, SpaceSpec::lex(c)?];
    for s in &spaces {
        let n = s.dimension();
        let x = RationalVector::parse(if n == 3 { "(3, -1/2, 0)" } else { "(-1, 7)" })?;
        let y = RationalVector::parse(if n == 3 { "(1, 2, -4)" } else { "(-1, 2)" })?;
        println!("{s}");
        println!("  x = {x}, y = {y}");
        println!("  mu(x, y) = {}, mu(y, x) = {}", s.mu(&x, &y)?, s.mu(&y, &x)?);
        println!("  x v y = {}, x ^ y = {}", s.join(&x, &y)?, s.meet(&x, &y)?);
        let (p, m, a) = (s.pos_part(&x)?, s.neg_part(&x)?, s.abs(&x)?);
        println!("  x+ = {p}, x- = {m}, |x| = {a}");
        println!("  x+ - x- = x: {}", &p - &m == x);
        println!("  x+ + x- = |x|: {}", &p + &m == a);
        println!("  x+ disjoint from x-: {}", s.is_disjoint(&p, &m)?);
        let lhs = &s.join(&x, &y)? + &s.meet(&x, &y)?;
        println!("  (x v y) + (x ^ y) = x + y: {}", lhs == &x + &y);
        let tri = s.leq(&s.abs(&(&x + &y))?, &(&s.abs(&x)? + &s.abs(&y)?))?;
        println!("  |x + y| below |x| + |y|: {tri}");
    }
    Ok(())
}
