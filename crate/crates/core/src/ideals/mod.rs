//! Fuzzy ideals and bands of the preset spaces, as closed-form handles.
//!
//! The carriers are infinite, so ideals are predicates rather than sets. For
//! the two preset families every ideal has a finite description:
//!
//! * pointwise on `Q^n`: an ideal is solid, so with `x` it contains every
//!   vector whose coordinates are dominated by `|x|`, in particular every
//!   vector supported inside `supp(x)`. Being a subspace it is then exactly
//!   the set of vectors supported in some coordinate set `S`. Every such set is
//!   also order closed (a coordinatewise limit keeps its zeros), so ideals and
//!   bands coincide and there are `2^n` of them.
//! * lexicographic plane: if an ideal contains some `x` with nonzero first
//!   coordinate, then `|x|` dominates `(0, t)` for all `t` and `(a, b)` for
//!   `|a|` below `|x_1|`; scaling reaches everything. Otherwise it lies in the
//!   vertical axis, which it fills as soon as it contains a nonzero element.
//!   So the ideals are `{0}`, the axis and the whole plane, all of them bands.
//!
//! Each handle's membership is cross-checked against definitional oracles in
//! [`oracle`].

pub mod oracle;
mod solid;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::space::{Family, RationalVector, SpaceSpec};

pub use oracle::{principal_band_contains, stabilization_bound, StabilizationTrace};
pub use solid::{default_grid, is_riesz_subspace, is_solid, solid_hull_contains, SolidCheck, SubspaceCheck};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LexKind {
    Zero,
    /// The vertical axis `{(0, t)}`.
    Axis,
    Full,
}

/// An ideal (equivalently, for the presets, a band) of a preset space.
///
/// Pointwise supports use 1-based coordinate indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Handle {
    Pointwise { support: BTreeSet<usize> },
    Lex { kind: LexKind },
}

pub type IdealHandle = Handle;
pub type BandHandle = Handle;

impl Handle {
    pub fn pointwise(support: impl IntoIterator<Item = usize>) -> Self {
        Handle::Pointwise { support: support.into_iter().collect() }
    }

    pub fn lex(kind: LexKind) -> Self {
        Handle::Lex { kind }
    }

    pub fn zero(s: &SpaceSpec) -> Self {
        match s.family() {
            Family::Pointwise => Handle::pointwise([]),
            Family::Lex => Handle::lex(LexKind::Zero),
        }
    }

    pub fn full(s: &SpaceSpec) -> Self {
        match s.family() {
            Family::Pointwise => Handle::pointwise(1..=s.dimension()),
            Family::Lex => Handle::lex(LexKind::Full),
        }
    }

    /// Every ideal of `s`: all `2^n` supports, or the three lexicographic kinds.
    pub fn all(s: &SpaceSpec) -> Vec<Handle> {
        match s.family() {
            Family::Pointwise => {
                let n = s.dimension();
                (0u64..(1 << n))
                    .map(|mask| Handle::pointwise((0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1)))
                    .collect()
            }
            Family::Lex => [LexKind::Zero, LexKind::Axis, LexKind::Full].map(Handle::lex).to_vec(),
        }
    }

    pub fn validate(&self, s: &SpaceSpec) -> Result<()> {
        match (self, s.family()) {
            (Handle::Pointwise { support }, Family::Pointwise) => {
                match support.iter().find(|&&i| i == 0 || i > s.dimension()) {
                    Some(bad) => Err(Error::InvalidSpace(format!("coordinate {bad} outside 1..={}", s.dimension()))),
                    None => Ok(()),
                }
            }
            (Handle::Lex { .. }, Family::Lex) => Ok(()),
            _ => Err(Error::InvalidSpace(format!("handle {self} does not belong to a {:?} space", s.family()))),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Handle::Pointwise { support } => support.is_empty(),
            Handle::Lex { kind } => *kind == LexKind::Zero,
        }
    }

    pub fn is_full(&self, s: &SpaceSpec) -> bool {
        *self == Handle::full(s)
    }

    /// Inclusion of the denoted ideals. Handles of different families are never
    /// included in one another.
    pub fn is_subset_of(&self, other: &Handle) -> bool {
        match (self, other) {
            (Handle::Pointwise { support: a }, Handle::Pointwise { support: b }) => a.is_subset(b),
            (Handle::Lex { kind: a }, Handle::Lex { kind: b }) => a <= b,
            _ => false,
        }
    }

    pub fn contains(&self, s: &SpaceSpec, x: &RationalVector) -> Result<bool> {
        self.validate(s)?;
        s.check(x)?;
        Ok(match self {
            Handle::Pointwise { support } => x.support().iter().all(|i| support.contains(i)),
            Handle::Lex { kind } => match kind {
                LexKind::Zero => x.is_zero(),
                LexKind::Axis => num_traits::Zero::is_zero(&x[0]),
                LexKind::Full => true,
            },
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("handle serializes")
    }
}

impl fmt::Display for Handle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Handle::Pointwise { support } => {
                let items: Vec<String> = support.iter().map(ToString::to_string).collect();
                write!(f, "pointwise support {{{}}}", items.join(","))
            }
            Handle::Lex { kind } => {
                let name = match kind {
                    LexKind::Zero => "zero",
                    LexKind::Axis => "axis",
                    LexKind::Full => "full",
                };
                write!(f, "lex {name}")
            }
        }
    }
}

fn nonempty(d: &[RationalVector]) -> Result<()> {
    if d.is_empty() {
        Err(Error::EmptyQuery("generating set is empty".into()))
    } else {
        Ok(())
    }
}

/// Handle of the ideal `I_D` generated by a finite set.
pub fn ideal_generated(s: &SpaceSpec, d: &[RationalVector]) -> Result<IdealHandle> {
    nonempty(d)?;
    for x in d {
        s.check(x)?;
    }
    Ok(match s.family() {
        Family::Pointwise => Handle::pointwise(d.iter().flat_map(RationalVector::support)),
        Family::Lex => {
            if d.iter().all(RationalVector::is_zero) {
                Handle::lex(LexKind::Zero)
            } else if d.iter().all(|x| num_traits::Zero::is_zero(&x[0])) {
                Handle::lex(LexKind::Axis)
            } else {
                Handle::lex(LexKind::Full)
            }
        }
    })
}

pub fn ideal_contains(s: &SpaceSpec, h: &IdealHandle, x: &RationalVector) -> Result<bool> {
    h.contains(s, x)
}

/// Handle of the band `B_D`. For the presets it coincides with `I_D`; the
/// difference is visible only in the membership oracles.
pub fn band_generated(s: &SpaceSpec, d: &[RationalVector]) -> Result<BandHandle> {
    ideal_generated(s, d)
}

/// `A^d` for an ideal or band handle.
pub fn disjoint_complement(s: &SpaceSpec, h: &Handle) -> Result<BandHandle> {
    h.validate(s)?;
    Ok(match h {
        Handle::Pointwise { support } => Handle::pointwise((1..=s.dimension()).filter(|i| !support.contains(i))),
        Handle::Lex { kind } => Handle::lex(match kind {
            LexKind::Zero => LexKind::Full,
            LexKind::Axis | LexKind::Full => LexKind::Zero,
        }),
    })
}

/// `D^d` for a finite set, through the band it generates.
pub fn disjoint_complement_of_set(s: &SpaceSpec, d: &[RationalVector]) -> Result<BandHandle> {
    disjoint_complement(s, &band_generated(s, d)?)
}

/// An ideal is order dense iff its disjoint complement is `{0}`.
pub fn is_order_dense(s: &SpaceSpec, h: &IdealHandle) -> Result<bool> {
    Ok(disjoint_complement(s, h)?.is_zero())
}

fn same_family(s: &SpaceSpec, h1: &Handle, h2: &Handle) -> Result<()> {
    h1.validate(s)?;
    h2.validate(s)
}

pub fn ideal_sum(s: &SpaceSpec, h1: &IdealHandle, h2: &IdealHandle) -> Result<IdealHandle> {
    same_family(s, h1, h2)?;
    Ok(match (h1, h2) {
        (Handle::Pointwise { support: a }, Handle::Pointwise { support: b }) => Handle::Pointwise { support: a | b },
        (Handle::Lex { kind: a }, Handle::Lex { kind: b }) => Handle::lex(*a.max(b)),
        _ => unreachable!("validated above"),
    })
}

pub fn ideal_intersection(s: &SpaceSpec, h1: &IdealHandle, h2: &IdealHandle) -> Result<IdealHandle> {
    same_family(s, h1, h2)?;
    Ok(match (h1, h2) {
        (Handle::Pointwise { support: a }, Handle::Pointwise { support: b }) => Handle::Pointwise { support: a & b },
        (Handle::Lex { kind: a }, Handle::Lex { kind: b }) => Handle::lex(*a.min(b)),
        _ => unreachable!("validated above"),
    })
}

/// Splits `x` into `x1 + x2` with `x1` in `h1` and `x2` in `h2`, or `None` if
/// `x` is not in the sum. Pointwise splits mask `x` to the support of `h1`.
pub fn split_sum(
    s: &SpaceSpec,
    h1: &IdealHandle,
    h2: &IdealHandle,
    x: &RationalVector,
) -> Result<Option<(RationalVector, RationalVector)>> {
    same_family(s, h1, h2)?;
    let split = match h1 {
        Handle::Pointwise { support } => {
            let first = RationalVector::new(
                x.coords()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| if support.contains(&(i + 1)) { c.clone() } else { num_traits::Zero::zero() })
                    .collect(),
            );
            let second = x - &first;
            Some((first, second))
        }
        Handle::Lex { .. } => {
            if h1.contains(s, x)? {
                Some((x.clone(), s.zero()))
            } else {
                Some((s.zero(), x.clone()))
            }
        }
    };
    Ok(match split {
        Some((a, b)) if h1.contains(s, &a)? && h2.contains(s, &b)? => Some((a, b)),
        _ => None,
    })
}

/// `X = h1 (+) h2`: the intersection is `{0}` and the sum is everything. When
/// it holds, each summand must be the other's disjoint complement; a mismatch
/// is reported as [`Error::Inconsistent`].
pub fn is_direct_sum_decomposition(s: &SpaceSpec, h1: &IdealHandle, h2: &IdealHandle) -> Result<bool> {
    let direct = ideal_intersection(s, h1, h2)?.is_zero() && ideal_sum(s, h1, h2)?.is_full(s);
    if direct && (disjoint_complement(s, h2)? != *h1 || disjoint_complement(s, h1)? != *h2) {
        return Err(Error::Inconsistent(format!(
            "{h1} (+) {h2} is the whole space but the summands are not each other's complements"
        )));
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn v(c: &[i64]) -> RationalVector {
        RationalVector::from_ints(c)
    }

    fn pw(n: usize) -> SpaceSpec {
        SpaceSpec::pointwise(n, ratio(2, 3)).unwrap()
    }

    fn lex() -> SpaceSpec {
        SpaceSpec::lex(ratio(2, 3)).unwrap()
    }

    fn lx(k: LexKind) -> Handle {
        Handle::lex(k)
    }

    // [TRIVIAL]
    #[test]
    fn handle_json() {
        let h = Handle::from_json(r#"{"family":"pointwise","support":[1,3]}"#).unwrap();
        assert_eq!(h, Handle::pointwise([1, 3]));
        assert_eq!(Handle::from_json(&h.to_json()).unwrap(), h);
        assert_eq!(Handle::from_json(r#"{"family":"lex","kind":"axis"}"#).unwrap(), lx(LexKind::Axis));
        assert!(Handle::pointwise([4]).validate(&pw(3)).is_err());
        assert!(lx(LexKind::Axis).validate(&pw(2)).is_err());
    }

    // [DERIVED]
    #[test]
    fn generated_ideals() {
        let s = pw(3);
        assert_eq!(ideal_generated(&s, &[v(&[1, 0, 0]), v(&[0, 0, 2])]).unwrap(), Handle::pointwise([1, 3]));
        assert!(ideal_generated(&s, &[v(&[0, 0, 0])]).unwrap().is_zero());
        assert_eq!(ideal_generated(&lex(), &[v(&[0, 5])]).unwrap(), lx(LexKind::Axis));
        assert_eq!(ideal_generated(&lex(), &[v(&[0, 0])]).unwrap(), lx(LexKind::Zero));
        assert!(matches!(ideal_generated(&s, &[]), Err(Error::EmptyQuery(_))));
    }

    // [DERIVED]
    #[test]
    fn generated_bands() {
        assert_eq!(band_generated(&pw(2), &[v(&[1, 0])]).unwrap(), Handle::pointwise([1]));
        assert_eq!(band_generated(&lex(), &[v(&[1, 0])]).unwrap(), lx(LexKind::Full));
        assert!(band_generated(&lex(), &[v(&[0, 0])]).unwrap().is_zero());
    }

    // [DERIVED]
    #[test]
    fn membership() {
        let s = pw(3);
        let h = Handle::pointwise([1, 3]);
        assert!(ideal_contains(&s, &h, &v(&[3, 0, -1])).unwrap());
        assert!(!ideal_contains(&s, &h, &v(&[0, 1, 0])).unwrap());
        for h in Handle::all(&s) {
            assert!(h.contains(&s, &s.zero()).unwrap());
        }
        for h in Handle::all(&lex()) {
            assert!(h.contains(&lex(), &v(&[0, 0])).unwrap());
        }
    }

    // [DERIVED]
    #[test]
    fn complements() {
        let s = pw(3);
        assert_eq!(disjoint_complement(&s, &Handle::pointwise([1, 3])).unwrap(), Handle::pointwise([2]));
        assert_eq!(disjoint_complement(&s, &Handle::zero(&s)).unwrap(), Handle::full(&s));
        assert_eq!(disjoint_complement(&lex(), &lx(LexKind::Zero)).unwrap(), lx(LexKind::Full));
        assert_eq!(disjoint_complement(&lex(), &lx(LexKind::Axis)).unwrap(), lx(LexKind::Zero));
        assert_eq!(disjoint_complement(&lex(), &lx(LexKind::Full)).unwrap(), lx(LexKind::Zero));
        assert_eq!(disjoint_complement_of_set(&s, &[v(&[1, 0, 0]), v(&[0, 0, -4])]).unwrap(), Handle::pointwise([2]));
    }

    // Sampled definitional check: members of the complement handle are disjoint
    // [DERIVED] from members of the handle, and non-members meet some member.
    #[test]
    fn complement_matches_disjointness() {
        let s = pw(3);
        let h = Handle::pointwise([1, 3]);
        let c = disjoint_complement(&s, &h).unwrap();
        let grid: Vec<RationalVector> = default_grid(3, 2);
        let members: Vec<&RationalVector> = grid.iter().filter(|x| h.contains(&s, x).unwrap()).collect();
        for x in &grid {
            let disjoint_from_all = members.iter().all(|m| s.is_disjoint(x, m).unwrap());
            assert_eq!(c.contains(&s, x).unwrap(), disjoint_from_all, "{x}");
        }
    }

    // [DERIVED]
    #[test]
    fn order_density() {
        let s = pw(2);
        assert!(is_order_dense(&s, &Handle::full(&s)).unwrap());
        assert!(!is_order_dense(&s, &Handle::pointwise([1])).unwrap());
        assert!(is_order_dense(&lex(), &lx(LexKind::Axis)).unwrap());
        assert!(!is_order_dense(&lex(), &lx(LexKind::Zero)).unwrap());
    }

    // [DERIVED]
    #[test]
    fn sums_and_intersections() {
        let s = pw(3);
        let (a, b) = (Handle::pointwise([1]), Handle::pointwise([2]));
        assert_eq!(ideal_sum(&s, &a, &b).unwrap(), Handle::pointwise([1, 2]));
        assert_eq!(ideal_sum(&s, &a, &Handle::zero(&s)).unwrap(), a);
        assert_eq!(
            ideal_intersection(&s, &Handle::pointwise([1, 2]), &Handle::pointwise([2, 3])).unwrap(),
            Handle::pointwise([2])
        );
        assert_eq!(ideal_sum(&lex(), &lx(LexKind::Axis), &lx(LexKind::Zero)).unwrap(), lx(LexKind::Axis));
        assert_eq!(ideal_intersection(&lex(), &lx(LexKind::Axis), &lx(LexKind::Full)).unwrap(), lx(LexKind::Axis));
        assert!(ideal_sum(&s, &a, &lx(LexKind::Zero)).is_err());
    }

    // [DERIVED]
    #[test]
    fn splitting() {
        let s = pw(3);
        let (a, b) = (Handle::pointwise([1]), Handle::pointwise([2]));
        assert_eq!(split_sum(&s, &a, &b, &v(&[3, -1, 0])).unwrap(), Some((v(&[3, 0, 0]), v(&[0, -1, 0]))));
        assert_eq!(split_sum(&s, &a, &b, &v(&[3, -1, 1])).unwrap(), None);
        let l = lex();
        assert_eq!(
            split_sum(&l, &lx(LexKind::Axis), &lx(LexKind::Full), &v(&[2, 1])).unwrap(),
            Some((v(&[0, 0]), v(&[2, 1])))
        );
        assert_eq!(split_sum(&l, &lx(LexKind::Axis), &lx(LexKind::Zero), &v(&[2, 1])).unwrap(), None);
    }

    // [DERIVED]
    #[test]
    fn direct_sums() {
        let s = pw(3);
        assert!(is_direct_sum_decomposition(&s, &Handle::pointwise([1, 3]), &Handle::pointwise([2])).unwrap());
        assert!(!is_direct_sum_decomposition(&s, &Handle::pointwise([1]), &Handle::zero(&s)).unwrap());
        assert!(is_direct_sum_decomposition(&s, &Handle::full(&s), &Handle::zero(&s)).unwrap());
        assert!(!is_direct_sum_decomposition(&lex(), &lx(LexKind::Axis), &lx(LexKind::Zero)).unwrap());
        assert!(is_direct_sum_decomposition(&lex(), &lx(LexKind::Full), &lx(LexKind::Zero)).unwrap());
    }

    // [TRIVIAL]
    #[test]
    fn enumerates_all_handles() {
        assert_eq!(Handle::all(&pw(4)).len(), 16);
        assert_eq!(Handle::all(&lex()).len(), 3);
        let s = pw(2);
        assert!(Handle::pointwise([1]).is_subset_of(&Handle::full(&s)));
        assert!(!Handle::pointwise([1]).is_subset_of(&Handle::pointwise([2])));
    }
}
