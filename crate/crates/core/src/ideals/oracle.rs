//! Definitional membership oracles, independent of the closed-form handles.
//!
//! * ideal generated by `D`: `x` belongs iff `mu(|x|, lambda * sum |d_i|) > 1/2`
//!   for some `lambda >= 0`; scaling is monotone so doubling `lambda` up to a
//!   computed ceiling decides it.
//! * band generated by `D`: with `u = sum |d_i|`, `y` belongs iff the
//!   increasing sequence `m_n = (n u) ^ |y|` reaches `|y|`. The sequence is
//!   eventually constant by a precomputed index, so the scan always ends.
//! * disjoint complement of `D`: `x` belongs iff it is disjoint from every `d`.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{ceil_to_usize, int, Rational};
use crate::space::{Family, RationalVector, SpaceSpec};

/// Terms `m_1, ..., m_bound` of `(n |x|) ^ |y|` and where they settle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationTrace {
    pub contains: bool,
    pub bound: usize,
    /// First `n` with `m_n` equal to the final value; `None` when the sequence
    /// keeps increasing (lexicographic axis below an off-axis `y`).
    pub stabilized_at: Option<usize>,
    pub limit: Option<RationalVector>,
    pub terms: Vec<RationalVector>,
}

/// Index by which `(n |x|) ^ |y|` has reached its final value.
///
/// Pointwise: `1 + max ceil(|y_i| / |x_i|)` over `x_i != 0`. Lexicographic:
/// the same ratio on the first nonzero coordinate of `|x|`, or `1` for `x = 0`.
pub fn stabilization_bound(s: &SpaceSpec, x: &RationalVector, y: &RationalVector) -> Result<usize> {
    let (ax, ay) = (s.abs(x)?, s.abs(y)?);
    let ratio_at = |i: usize| ceil_to_usize(&(&ay[i] / &ax[i]));
    Ok(match s.family() {
        Family::Pointwise => 1 + (0..ax.dim()).filter(|&i| !ax[i].is_zero()).map(ratio_at).max().unwrap_or(0),
        Family::Lex => match (0..2).find(|&i| !ax[i].is_zero()) {
            Some(i) => 1 + ratio_at(i),
            None => 1,
        },
    })
}

/// `y` lies in the band generated by `x` iff `sup_n (n |x|) ^ |y| = |y|`.
pub fn principal_band_contains(s: &SpaceSpec, x: &RationalVector, y: &RationalVector) -> Result<StabilizationTrace> {
    let bound = stabilization_bound(s, x, y)?;
    let (ax, ay) = (s.abs(x)?, s.abs(y)?);
    let term = |n: usize| s.meet(&ax.scale(&int(n as i64)), &ay);
    let terms = (1..=bound).map(term).collect::<Result<Vec<_>>>()?;
    let last = terms.last().expect("bound is at least 1").clone();

    let escapes = s.family() == Family::Lex && ax[0].is_zero() && !ax.is_zero() && !ay[0].is_zero();
    if escapes {
        return Ok(StabilizationTrace { contains: false, bound, stabilized_at: None, limit: None, terms });
    }
    if term(bound + 1)? != last {
        return Err(Error::StabilizationOverflow { bound });
    }
    let stabilized_at = terms.iter().position(|t| *t == last).map(|i| i + 1);
    Ok(StabilizationTrace { contains: last == ay, bound, stabilized_at, limit: Some(last), terms })
}

fn total_abs(s: &SpaceSpec, d: &[RationalVector]) -> Result<RationalVector> {
    if d.is_empty() {
        return Err(Error::EmptyQuery("generating set is empty".into()));
    }
    let parts = d.iter().map(|x| s.abs(x)).collect::<Result<Vec<_>>>()?;
    s.sum(&parts)
}

/// Ideal membership by searching `lambda in {0, 1, 2, 4, ...}` up to a ceiling
/// past which larger multiples cannot help.
pub fn generated_ideal_contains(s: &SpaceSpec, d: &[RationalVector], x: &RationalVector) -> Result<bool> {
    let u = total_abs(s, d)?;
    let ax = s.abs(x)?;
    if ax.is_zero() {
        return Ok(true);
    }
    let Some(smallest) = u.coords().iter().filter(|c| c.is_positive()).min() else {
        return Ok(false);
    };
    let ceiling = int(1) + (ax.sup_norm() / smallest).ceil();
    let mut lambda = int(1);
    loop {
        let capped = if lambda > ceiling { ceiling.clone() } else { lambda.clone() };
        if s.leq(&ax, &u.scale(&capped))? {
            return Ok(true);
        }
        if capped == ceiling {
            return Ok(false);
        }
        lambda *= int(2);
    }
}

pub fn generated_band_contains(s: &SpaceSpec, d: &[RationalVector], y: &RationalVector) -> Result<bool> {
    let u = total_abs(s, d)?;
    Ok(principal_band_contains(s, &u, y)?.contains)
}

pub fn disjoint_from_all(s: &SpaceSpec, d: &[RationalVector], x: &RationalVector) -> Result<bool> {
    for e in d {
        if !s.is_disjoint(x, e)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest `lambda` in the doubling sequence that works, for display.
pub fn lambda_witness(s: &SpaceSpec, d: &[RationalVector], x: &RationalVector) -> Result<Option<Rational>> {
    if !generated_ideal_contains(s, d, x)? {
        return Ok(None);
    }
    let u = total_abs(s, d)?;
    let ax = s.abs(x)?;
    let mut lambda = int(0);
    while !s.leq(&ax, &u.scale(&lambda))? {
        lambda = if lambda.is_zero() { int(1) } else { lambda * int(2) };
    }
    Ok(Some(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{band_generated, disjoint_complement_of_set, ideal_generated, Handle, LexKind};
    use crate::rational::ratio;
    use crate::sample::Sampler;

    fn v(c: &[i64]) -> RationalVector {
        RationalVector::from_ints(c)
    }

    fn pw(n: usize) -> SpaceSpec {
        SpaceSpec::pointwise(n, ratio(2, 3)).unwrap()
    }

    fn lex() -> SpaceSpec {
        SpaceSpec::lex(ratio(2, 3)).unwrap()
    }

    // [DERIVED]
    #[test]
    fn pointwise_stabilization() {
        let s = pw(2);
        let t = principal_band_contains(&s, &v(&[2, 1]), &v(&[3, 5])).unwrap();
        assert!(t.contains);
        assert_eq!(t.stabilized_at, Some(5));
        assert_eq!(t.bound, 6);
        let t = principal_band_contains(&s, &v(&[1, 0]), &v(&[3, 5])).unwrap();
        assert!(!t.contains);
        assert_eq!(t.stabilized_at, Some(3));
        assert_eq!(t.limit, Some(v(&[3, 0])));
    }

    // [DERIVED]
    #[test]
    fn lex_stabilization() {
        let s = lex();
        let t = principal_band_contains(&s, &v(&[1, 0]), &v(&[3, 5])).unwrap();
        assert!(t.contains);
        assert_eq!(t.stabilized_at, Some(4));
        let t = principal_band_contains(&s, &v(&[0, 1]), &v(&[1, 0])).unwrap();
        assert!(!t.contains);
        assert_eq!(t.stabilized_at, None);
        let t = principal_band_contains(&s, &v(&[0, 2]), &v(&[0, -7])).unwrap();
        assert!(t.contains);
        assert_eq!(t.stabilized_at, Some(4));
        let t = principal_band_contains(&s, &v(&[0, 0]), &v(&[0, 0])).unwrap();
        assert!(t.contains);
    }

    // [DERIVED]
    #[test]
    fn lambda_search() {
        let s = pw(3);
        let d = [v(&[1, 0, 0]), v(&[0, 0, 2])];
        assert!(generated_ideal_contains(&s, &d, &v(&[3, 0, -1])).unwrap());
        assert_eq!(lambda_witness(&s, &d, &v(&[3, 0, -1])).unwrap(), Some(int(4)));
        assert!(!generated_ideal_contains(&s, &d, &v(&[0, 1, 0])).unwrap());
        assert!(generated_ideal_contains(&lex(), &[v(&[1, -50])], &v(&[7, 3])).unwrap());
        assert!(!generated_ideal_contains(&lex(), &[v(&[0, 1])], &v(&[1, 0])).unwrap());
        assert!(generated_ideal_contains(&lex(), &[v(&[0, 0])], &v(&[0, 0])).unwrap());
    }

    // [DERIVED] The closed-form handles agree with all three oracles on random inputs.
    #[test]
    fn handles_agree_with_oracles() {
        let mut smp = Sampler::with_range(7, 4);
        for s in [pw(3), lex()] {
            for _ in 0..300 {
                let k = 1 + smp.index(3);
                let d: Vec<_> = (0..k).map(|_| smp.vector(s.dimension())).collect();
                let x = smp.vector(s.dimension());
                let ideal = ideal_generated(&s, &d).unwrap();
                let band = band_generated(&s, &d).unwrap();
                let comp = disjoint_complement_of_set(&s, &d).unwrap();
                assert_eq!(ideal.contains(&s, &x).unwrap(), generated_ideal_contains(&s, &d, &x).unwrap());
                assert_eq!(band.contains(&s, &x).unwrap(), generated_band_contains(&s, &d, &x).unwrap());
                assert_eq!(comp.contains(&s, &x).unwrap(), disjoint_from_all(&s, &d, &x).unwrap());
            }
        }
    }

    // [DERIVED]
    #[test]
    fn axis_band_complement() {
        let s = lex();
        let axis = [v(&[0, 1])];
        assert_eq!(disjoint_complement_of_set(&s, &axis).unwrap(), Handle::lex(LexKind::Zero));
        assert!(!disjoint_from_all(&s, &axis, &v(&[0, 3])).unwrap());
        assert!(disjoint_from_all(&s, &axis, &v(&[0, 0])).unwrap());
    }
}
