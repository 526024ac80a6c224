//! Random fuzzy orders.
//!
//! Two grading schemes are offered on top of a random crisp strict order
//! (random DAG, then transitive closure):
//!
//! * constant: every strictly related pair gets the same grade `c` in
//!   `(1/2, 1]`. Antisymmetry holds because reversed pairs stay at 0, and
//!   max-min transitivity holds because every chain through related pairs has
//!   grade `c` and the closure relates its endpoints with grade `c`.
//! * max-min closure: random grades in `(1/2, 1]` on every related pair, closed
//!   under max-min composition.

use rand::seq::SliceRandom;
use rand::Rng;

use super::MembershipMatrix;
use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::rational::{ratio, Rational};

/// Random strict partial order on `n` points as an adjacency matrix:
/// `rel[i][j]` means `i < j`. Each forward edge of a random permutation is
/// drawn with probability `edge_prob`, then closed transitively.
pub fn random_strict_order<R: Rng + ?Sized>(rng: &mut R, n: usize, edge_prob: f64) -> Vec<Vec<bool>> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut rel = vec![vec![false; n]; n];
    for a in 0..n {
        for b in (a + 1)..n {
            if rng.gen_bool(edge_prob) {
                rel[perm[a]][perm[b]] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if rel[i][k] {
                for j in 0..n {
                    if rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
    }
    rel
}

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

fn check_strict_grade(c: &Rational) -> Result<Grade> {
    let g = Grade::new(c.clone())?;
    if !g.above_half() {
        return Err(Error::InvalidGrade(format!("strict-pair grade {g} must exceed 1/2")));
    }
    Ok(g)
}

/// Foset from a crisp strict order with a constant strict-pair grade.
pub fn from_strict_order(rel: &[Vec<bool>], c: &Rational) -> Result<MembershipMatrix> {
    let g = check_strict_grade(c)?;
    let n = rel.len();
    let mut m = MembershipMatrix::new(labels(n))?;
    for (i, row) in rel.iter().enumerate() {
        for (j, &related) in row.iter().enumerate() {
            if related {
                m.set(i, j, g.clone());
            }
        }
    }
    Ok(m)
}

fn random_strict_grade<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    // (1/2, 1] on a grid of twelfths
    ratio(rng.gen_range(7..=12), 12)
}

pub fn random_constant_foset<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<MembershipMatrix> {
    let p = rng.gen_range(0.2..0.7);
    let rel = random_strict_order(rng, n, p);
    from_strict_order(&rel, &random_strict_grade(rng))
}

/// Max-min transitive closure: repeatedly raises `mu(x, z)` to
/// `max_y min(mu(x, y), mu(y, z))` until nothing changes.
pub fn maxmin_closure(m: &MembershipMatrix) -> MembershipMatrix {
    let mut out = m.clone();
    let n = m.len();
    loop {
        let mut changed = false;
        for x in 0..n {
            for z in 0..n {
                for y in 0..n {
                    let through = std::cmp::min(out.grade(x, y), out.grade(y, z)).clone();
                    if through > *out.grade(x, z) {
                        out.set(x, z, through);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return out;
        }
    }
}

/// Random edge grades in `(1/2, 1]` on a random strict order, then max-min
/// closure. Grades vary from pair to pair.
pub fn random_maxmin_foset<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<MembershipMatrix> {
    let p = rng.gen_range(0.2..0.7);
    let rel = random_strict_order(rng, n, p);
    let mut m = MembershipMatrix::new(labels(n))?;
    for (i, row) in rel.iter().enumerate() {
        for (j, &related) in row.iter().enumerate() {
            if related {
                m.set(i, j, Grade::new(random_strict_grade(rng))?);
            }
        }
    }
    Ok(maxmin_closure(&m))
}

/// Random fuzzy lattice with `n >= 2` elements: a bottom, a top and a random
/// strict order on the `n - 2` middle elements. Up to three middle elements
/// always give a lattice; larger sizes are resampled until they do.
pub fn random_lattice<R: Rng + ?Sized>(rng: &mut R, n: usize, c: &Rational) -> Result<MembershipMatrix> {
    if n < 2 {
        return Err(Error::InvalidCarrier("a bounded lattice needs at least 2 elements".into()));
    }
    loop {
        let middle = n - 2;
        let p = rng.gen_range(0.0..0.8);
        let inner = random_strict_order(rng, middle, p);
        let mut rel = vec![vec![false; n]; n];
        // 0 is bottom, n - 1 is top
        for i in 1..n {
            rel[0][i] = true;
        }
        for row in rel.iter_mut().take(n - 1) {
            row[n - 1] = true;
        }
        for i in 0..middle {
            for j in 0..middle {
                rel[i + 1][j + 1] = inner[i][j];
            }
        }
        let m = from_strict_order(&rel, c)?;
        if super::is_lattice(&m)? {
            return Ok(m);
        }
    }
}
