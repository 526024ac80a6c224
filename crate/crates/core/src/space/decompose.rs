use serde::Serialize;

use super::{RationalVector, SpaceSpec};
use crate::error::{Error, Result};

/// Parts `x_1, ..., x_n` with `x = x_1 + ... + x_n` and `|x_i|` below `|y_i|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionResult {
    pub parts: Vec<RationalVector>,
}

/// Riesz decomposition by iterated clamping.
///
/// Each part is the remainder clamped into `[-|y_i|, |y_i|]`, i.e.
/// `x_i = ((-|y_i|) v r) ^ |y_i|` with `r` what is left of `x`. A positive `x`
/// yields positive parts. Requires `mu(|x|, |y_1 + ... + y_n|) > 1/2`.
pub fn riesz_decompose(s: &SpaceSpec, x: &RationalVector, ys: &[RationalVector]) -> Result<DecompositionResult> {
    if ys.is_empty() {
        return Err(Error::EmptyQuery("decomposition needs at least one y".into()));
    }
    s.check(x)?;
    let total = s.sum(ys)?;
    if !s.leq(&s.abs(x)?, &s.abs(&total)?)? {
        return Err(Error::NotDominated);
    }
    let mut rest = x.clone();
    let mut parts = Vec::with_capacity(ys.len());
    for y in ys {
        let bound = s.abs(y)?;
        let part = s.meet(&s.join(&-&bound, &rest)?, &bound)?;
        rest = &rest - &part;
        parts.push(part);
    }
    if !rest.is_zero() {
        return Err(Error::Inconsistent(format!("clamping left a nonzero remainder {rest} for a dominated input")));
    }
    Ok(DecompositionResult { parts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn v(c: &[i64]) -> RationalVector {
        RationalVector::from_ints(c)
    }

    fn check_post(s: &SpaceSpec, x: &RationalVector, ys: &[RationalVector], r: &DecompositionResult) {
        assert_eq!(&s.sum(&r.parts).unwrap(), x);
        for (p, y) in r.parts.iter().zip(ys) {
            assert!(s.leq(&s.abs(p).unwrap(), &s.abs(y).unwrap()).unwrap());
        }
    }

    // [DERIVED]
    #[test]
    fn two_parts() {
        let s = SpaceSpec::pointwise(2, ratio(2, 3)).unwrap();
        let (x, ys) = (v(&[3, 0]), vec![v(&[2, 1]), v(&[2, -1])]);
        let r = riesz_decompose(&s, &x, &ys).unwrap();
        assert_eq!(r.parts, vec![v(&[2, 0]), v(&[1, 0])]);
        check_post(&s, &x, &ys, &r);

        let (x, ys) = (v(&[1, 1]), vec![v(&[1, 0]), v(&[0, 1])]);
        let r = riesz_decompose(&s, &x, &ys).unwrap();
        assert_eq!(r.parts, vec![v(&[1, 0]), v(&[0, 1])]);
        check_post(&s, &x, &ys, &r);
    }

    // [TRIVIAL]
    #[test]
    fn single_dominating_y_is_identity() {
        let s = SpaceSpec::pointwise(3, ratio(2, 3)).unwrap();
        let x = v(&[-1, 2, 0]);
        let r = riesz_decompose(&s, &x, &[v(&[5, -5, 1])]).unwrap();
        assert_eq!(r.parts, vec![x]);
    }

    // [DERIVED]
    #[test]
    fn lex_clamping() {
        let s = SpaceSpec::lex(ratio(2, 3)).unwrap();
        let (x, ys) = (v(&[2, 7]), vec![v(&[1, 100]), v(&[1, 0])]);
        let r = riesz_decompose(&s, &x, &ys).unwrap();
        check_post(&s, &x, &ys, &r);
        assert_eq!(r.parts, vec![v(&[1, 100]), v(&[1, -93])]);
    }

    // [TRIVIAL]
    #[test]
    fn rejects_undominated() {
        let s = SpaceSpec::pointwise(2, ratio(2, 3)).unwrap();
        assert_eq!(riesz_decompose(&s, &v(&[3, 1]), &[v(&[2, 0])]), Err(Error::NotDominated));
        assert!(matches!(riesz_decompose(&s, &v(&[0, 0]), &[]), Err(Error::EmptyQuery(_))));
    }
}
