use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::int;
use crate::sample::Sampler;
use crate::space::{Family, RationalVector, SpaceSpec};

/// `x` lies in the solid hull of `a` iff `mu(|x|, |y|) > 1/2` for some `y` in `a`.
pub fn solid_hull_contains(s: &SpaceSpec, a: &[RationalVector], x: &RationalVector) -> Result<bool> {
    if a.is_empty() {
        return Err(Error::EmptyQuery("solid hull of an empty set".into()));
    }
    let ax = s.abs(x)?;
    for y in a {
        if s.leq(&ax, &s.abs(y)?)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Every integer vector with coordinates in `-bound..=bound`, each coordinate
/// running `1, ..., bound, 0, -1, ..., -bound` so small positive vectors come first.
pub fn default_grid(dim: usize, bound: i64) -> Vec<RationalVector> {
    let order: Vec<i64> = (1..=bound).chain([0]).chain((1..=bound).map(|c| -c)).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                order.iter().map(move |&c| {
                    let mut next = prefix.clone();
                    next.push(int(c));
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(RationalVector::new).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolidCheck {
    pub solid: bool,
    /// `(x, y)`: `y` in the set, `|x|` below `|y|`, `x` missing.
    pub witness: Option<(RationalVector, RationalVector)>,
}

/// Solidity of a finite set, tested against the vectors of `grid`.
pub fn is_solid(s: &SpaceSpec, a: &[RationalVector], grid: &[RationalVector]) -> Result<SolidCheck> {
    for y in a {
        let ay = s.abs(y)?;
        for x in grid {
            if s.leq(&s.abs(x)?, &ay)? && !a.contains(x) {
                return Ok(SolidCheck { solid: false, witness: Some((x.clone(), y.clone())) });
            }
        }
    }
    Ok(SolidCheck { solid: true, witness: None })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubspaceMethod {
    ClosedForm,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubspaceCheck {
    pub holds: bool,
    pub method: SubspaceMethod,
    /// `(x, y, x v y)` with both in the span and the join outside it.
    pub witness: Option<(RationalVector, RationalVector, RationalVector)>,
}

/// Whether `span(basis)` is closed under joins.
///
/// Decided in closed form for the lexicographic plane (every subspace of a
/// chain is a sublattice), for coordinate subspaces and for the constants;
/// otherwise the basis, its negatives and `samples` random combinations are
/// joined pairwise.
pub fn is_riesz_subspace(
    s: &SpaceSpec,
    basis: &[RationalVector],
    sampler: &mut Sampler,
    samples: usize,
) -> Result<SubspaceCheck> {
    for b in basis {
        s.check(b)?;
    }
    if !linalg::is_independent(basis) {
        return Err(Error::DegenerateBasis);
    }
    let closed = |holds| Ok(SubspaceCheck { holds, method: SubspaceMethod::ClosedForm, witness: None });
    if s.family() == Family::Lex || basis.is_empty() {
        return closed(true);
    }
    let mut support: Vec<usize> = basis.iter().flat_map(RationalVector::support).collect();
    support.sort_unstable();
    support.dedup();
    if support.len() == basis.len() {
        return closed(true);
    }
    if basis.len() == 1 && support.len() == s.dimension() && basis[0].coords().iter().all(|c| *c == basis[0][0]) {
        return closed(true);
    }

    let mut members: Vec<RationalVector> = basis.iter().flat_map(|b| [b.clone(), -b]).collect();
    for _ in 0..samples {
        let mut acc = s.zero();
        for b in basis {
            acc = &acc + &b.scale(&int(sampler.int_in(-3, 3)));
        }
        members.push(acc);
    }
    for (i, x) in members.iter().enumerate() {
        for y in &members[i + 1..] {
            let j = s.join(x, y)?;
            if !linalg::in_span(basis, &j) {
                return Ok(SubspaceCheck {
                    holds: false,
                    method: SubspaceMethod::Sampled,
                    witness: Some((x.clone(), y.clone(), j)),
                });
            }
        }
    }
    Ok(SubspaceCheck { holds: true, method: SubspaceMethod::Sampled, witness: None })
}
