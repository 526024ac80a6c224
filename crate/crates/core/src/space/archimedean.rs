use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{Family, RationalVector, SpaceSpec};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Evidence on whether `{n x}` is bounded above.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NxBoundReport {
    pub horizon: u64,
    /// `mu(n x, y) > 1/2` for every `n` up to the horizon.
    pub bounded_by_y: bool,
    pub first_failure: Option<u64>,
    /// Whether the family admits any upper bound for the whole sequence.
    pub closed_form_bounded: bool,
}

fn nx_bounded_closed_form(s: &SpaceSpec, x: &RationalVector) -> bool {
    match s.family() {
        // n x stays bounded only when no coordinate is positive
        Family::Pointwise => x.coords().iter().all(|c| !c.is_positive()),
        // (0, t) stays below (1, 0) for every n
        Family::Lex => !x[0].is_positive(),
    }
}

pub fn is_nx_bounded(s: &SpaceSpec, x: &RationalVector, y: &RationalVector, horizon: u64) -> Result<NxBoundReport> {
    s.check(x)?;
    s.check(y)?;
    let mut first_failure = None;
    for n in 1..=horizon {
        let nx = x.scale(&Rational::from_integer(n.into()));
        if !s.leq(&nx, y)? {
            first_failure = Some(n);
            break;
        }
    }
    Ok(NxBoundReport {
        horizon,
        bounded_by_y: first_failure.is_none(),
        first_failure,
        closed_form_bounded: nx_bounded_closed_form(s, x),
    })
}

/// `inf {x / n}` for a positive `x`, when it exists.
///
/// Pointwise spaces always give `0`, corroborated on the first few terms. In
/// the lexicographic plane the infimum is `0` on the vertical axis and does not
/// exist otherwise: every `(0, t)` is a lower bound and none is greatest.
pub fn infimum_of_scaled(s: &SpaceSpec, x: &RationalVector) -> Result<Option<RationalVector>> {
    if !s.is_positive(x)? {
        return Err(Error::NotPositive(format!("{x} is not positive")));
    }
    let zero = s.zero();
    match s.family() {
        Family::Pointwise => {
            for n in 1..=16 {
                let term = x.scale(&Rational::new(1.into(), n.into()));
                if !s.leq(&zero, &term)? {
                    return Err(Error::Inconsistent(format!("{term} does not dominate 0")));
                }
            }
            Ok(Some(zero))
        }
        Family::Lex => Ok(if x[0].is_zero() { Some(zero) } else { None }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceProperties {
    pub archimedean: bool,
    pub dedekind_note: String,
    /// `(x, bound)` with `mu(n x, bound) > 1/2` for every `n`.
    pub witness: Option<(RationalVector, RationalVector)>,
}

pub fn space_properties(s: &SpaceSpec) -> SpaceProperties {
    match s.family() {
        Family::Pointwise => SpaceProperties {
            archimedean: true,
            dedekind_note: "the real model space with the coordinatewise order is Dedekind complete; \
                            the exact-rational carrier is not (a rational set may have an irrational \
                            supremum), so completeness is reported, not computed"
                .into(),
            witness: None,
        },
        Family::Lex => SpaceProperties {
            archimedean: false,
            dedekind_note: "the lexicographic plane is not Dedekind sigma-complete: (0, n) increases, \
                            is bounded above by (1, 0) and has no supremum"
                .into(),
            witness: Some((RationalVector::new(vec![int(0), int(1)]), RationalVector::new(vec![int(1), int(0)]))),
        },
    }
}
