//! Band projections as explicit matrices.
//!
//! A band `B` is a projection band when `X = B (+) B^d`. Every pointwise
//! handle qualifies and its projection is the diagonal mask of its support. In
//! the lexicographic plane only `{0}` and the whole plane qualify: the axis has
//! complement `{0}`, so `(1, 0)` has no component in it.

mod operator;
mod positivity;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{
    band_generated, disjoint_complement, ideal_intersection, ideal_sum, is_direct_sum_decomposition,
    stabilization_bound, BandHandle, Handle, LexKind,
};
use crate::rational::int;
use crate::sample::Sampler;
use crate::space::{RationalVector, SpaceSpec};

pub use operator::OperatorMatrix;
pub use positivity::{
    absolute_bound_check, is_fuzzy_positive, is_grade_monotone_positive, operator_precedes, sampled_positivity_witness,
    AbsoluteBound, GradeMonotoneCheck, PositivityCheck,
};

/// `[lo, hi]` with `lo` below `hi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderInterval {
    pub lo: RationalVector,
    pub hi: RationalVector,
}

impl OrderInterval {
    pub fn new(s: &SpaceSpec, lo: RationalVector, hi: RationalVector) -> Result<Self> {
        if !s.leq(&lo, &hi)? {
            return Err(Error::InvalidOrder(format!("{lo} is not below {hi}")));
        }
        Ok(OrderInterval { lo, hi })
    }

    pub fn contains(&self, s: &SpaceSpec, z: &RationalVector) -> Result<bool> {
        Ok(s.leq(&self.lo, z)? && s.leq(z, &self.hi)?)
    }
}

pub fn is_projection_band(s: &SpaceSpec, b: &BandHandle) -> Result<bool> {
    is_direct_sum_decomposition(s, b, &disjoint_complement(s, b)?)
}

fn require_projection_band(s: &SpaceSpec, b: &BandHandle) -> Result<()> {
    if is_projection_band(s, b)? {
        Ok(())
    } else {
        Err(Error::NotProjectionBand(format!(
            "{b} is not a projection band: it and its disjoint complement {} do not span the space",
            disjoint_complement(s, b)?
        )))
    }
}

/// `P_B`, sending `x` to its component in `B` along `B^d`.
pub fn band_projection_operator(s: &SpaceSpec, b: &BandHandle) -> Result<OperatorMatrix> {
    require_projection_band(s, b)?;
    let n = s.dimension();
    Ok(match b {
        Handle::Pointwise { support } => OperatorMatrix::mask(n, support.iter().copied()),
        Handle::Lex { kind: LexKind::Full } => OperatorMatrix::identity(n),
        Handle::Lex { .. } => OperatorMatrix::zero(n),
    })
}

/// `sup (B+ ^ [0, x])` for positive `x`, when it exists.
///
/// Pointwise it is `x` masked to the support. For the lexicographic axis and
/// an `x` off the axis the set is the whole positive half of the axis, which
/// has no supremum.
pub fn interval_sup(s: &SpaceSpec, b: &BandHandle, x: &RationalVector) -> Result<Option<RationalVector>> {
    b.validate(s)?;
    if !s.is_positive(x)? {
        return Err(Error::NotPositive(format!("{x} is not positive")));
    }
    Ok(match b {
        Handle::Pointwise { support } => Some(OperatorMatrix::mask(s.dimension(), support.iter().copied()).apply(x)?),
        Handle::Lex { kind } => match kind {
            LexKind::Zero => Some(s.zero()),
            LexKind::Full => Some(x.clone()),
            LexKind::Axis => num_traits::Zero::is_zero(&x[0]).then(|| x.clone()),
        },
    })
}

/// `P_B(x)` computed as `sup (B ^ [0, x])` and checked against the matrix.
pub fn projection_by_interval_sup(s: &SpaceSpec, b: &BandHandle, x: &RationalVector) -> Result<RationalVector> {
    require_projection_band(s, b)?;
    let sup = interval_sup(s, b, x)?
        .ok_or_else(|| Error::Inconsistent(format!("projection band {b} has no interval supremum at {x}")))?;
    let by_matrix = band_projection_operator(s, b)?.apply(x)?;
    if sup != by_matrix {
        return Err(Error::Inconsistent(format!("interval supremum {sup} differs from P_B x = {by_matrix}")));
    }
    Ok(sup)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipalProjection {
    pub value: RationalVector,
    /// Largest index at which a meet sequence reached its final value.
    pub stabilized_at: usize,
    /// Largest precomputed bound among the sequences run.
    pub bound: usize,
}

fn principal_positive(
    s: &SpaceSpec,
    ax: &RationalVector,
    y: &RationalVector,
) -> Result<(RationalVector, usize, usize)> {
    let bound = stabilization_bound(s, ax, y)?;
    let term = |n: usize| s.meet(y, &ax.scale(&int(n as i64)));
    let terms = (1..=bound).map(term).collect::<Result<Vec<_>>>()?;
    let last = terms.last().expect("bound is at least 1").clone();
    if term(bound + 1)? != last {
        return Err(Error::StabilizationOverflow { bound });
    }
    let at = terms.iter().position(|t| *t == last).expect("last term present") + 1;
    Ok((last, at, bound))
}

/// `P_x(y) = sup_n (y ^ n|x|)` for positive `y`, extended to every `y` by
/// `P_x(y+) - P_x(y-)`.
pub fn principal_projection_traced(
    s: &SpaceSpec,
    x: &RationalVector,
    y: &RationalVector,
) -> Result<PrincipalProjection> {
    require_projection_band(s, &band_generated(s, std::slice::from_ref(x))?)?;
    let ax = s.abs(x)?;
    let (pos, at_pos, bound_pos) = principal_positive(s, &ax, &s.pos_part(y)?)?;
    let (neg, at_neg, bound_neg) = principal_positive(s, &ax, &s.neg_part(y)?)?;
    Ok(PrincipalProjection { value: &pos - &neg, stabilized_at: at_pos.max(at_neg), bound: bound_pos.max(bound_neg) })
}

pub fn principal_projection(s: &SpaceSpec, x: &RationalVector, y: &RationalVector) -> Result<RationalVector> {
    Ok(principal_projection_traced(s, x, y)?.value)
}

/// Conditions characterizing band projections among matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BandProjectionVerdict {
    /// (a) the projection band whose matrix equals `T`, if any.
    pub mask_of: Option<Handle>,
    /// (b) `T^2 = T`, `T` fuzzy positive and `T` below the identity.
    pub idempotent: bool,
    pub positive: bool,
    pub below_identity: bool,
    /// (c) `T x` disjoint from `(I - T) y` on every tested pair.
    pub disjoint_ranges: bool,
    pub range_witness: Option<(RationalVector, RationalVector)>,
    pub is_band_projection: bool,
}

/// Evaluates the three characterizations of a band projection and requires
/// them to agree.
///
/// The range test runs over all pairs of unit vectors, which already decides
/// it for the presets (the ranges are spanned by the images of units), then
/// over `samples` random pairs.
pub fn classify_band_projection(
    s: &SpaceSpec,
    t: &OperatorMatrix,
    sampler: &mut Sampler,
    samples: usize,
) -> Result<BandProjectionVerdict> {
    let n = s.dimension();
    if t.rows() != n || t.cols() != n {
        return Err(Error::Dimension { expected: n, found: if t.rows() != n { t.rows() } else { t.cols() } });
    }
    let mut mask_of = None;
    for h in Handle::all(s) {
        if is_projection_band(s, &h)? && band_projection_operator(s, &h)? == *t {
            mask_of = Some(h);
            break;
        }
    }

    let identity = OperatorMatrix::identity(n);
    let idempotent = t.is_idempotent();
    let positive = is_fuzzy_positive(s, s, t)?.positive;
    let below_identity = operator_precedes(s, t, &identity)?;
    if positive && sampled_positivity_witness(s, s, t, sampler, samples)?.is_some() {
        return Err(Error::Inconsistent(format!("sampling refutes the positivity of {t}")));
    }

    let complement = identity.sub(t)?;
    let units: Vec<RationalVector> = (0..n).map(|i| RationalVector::unit(n, i)).collect();
    let mut pairs: Vec<(RationalVector, RationalVector)> =
        units.iter().flat_map(|x| units.iter().map(move |y| (x.clone(), y.clone()))).collect();
    pairs.extend((0..samples).map(|_| (sampler.vector(n), sampler.vector(n))));
    let mut range_witness = None;
    for (x, y) in pairs {
        if !s.is_disjoint(&t.apply(&x)?, &complement.apply(&y)?)? {
            range_witness = Some((x, y));
            break;
        }
    }

    let a = mask_of.is_some();
    let b = idempotent && positive && below_identity;
    let c = range_witness.is_none();
    if a != b || b != c {
        return Err(Error::Inconsistent(format!(
            "band projection tests disagree on {t}: mask {a}, algebraic {b}, disjoint ranges {c}"
        )));
    }
    Ok(BandProjectionVerdict {
        mask_of,
        idempotent,
        positive,
        below_identity,
        disjoint_ranges: c,
        range_witness,
        is_band_projection: a,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectionComparison {
    pub included: bool,
    /// `P1 P2 = P2 P1 = P1`.
    pub absorbs: bool,
    /// `P1` below `P2`, by the closed form and on sampled positive vectors.
    pub precedes: bool,
}

/// The three equivalent ways of saying `B1` is inside `B2`, required to agree.
pub fn compare_projections(
    s: &SpaceSpec,
    b1: &BandHandle,
    b2: &BandHandle,
    sampler: &mut Sampler,
    samples: usize,
) -> Result<ProjectionComparison> {
    let p1 = band_projection_operator(s, b1)?;
    let p2 = band_projection_operator(s, b2)?;
    let included = b1.is_subset_of(b2);
    let absorbs = p1.compose(&p2)? == p1 && p2.compose(&p1)? == p1;
    let precedes = operator_precedes(s, &p1, &p2)?;
    let sampled = sampled_positivity_witness(s, s, &p2.sub(&p1)?, sampler, samples)?.is_none();
    if included != absorbs || absorbs != precedes || (precedes && !sampled) {
        return Err(Error::Inconsistent(format!(
            "{b1} vs {b2}: inclusion {included}, absorption {absorbs}, order {precedes}, sampled order {sampled}"
        )));
    }
    Ok(ProjectionComparison { included, absorbs, precedes })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectionEquivalence {
    pub projection_band: bool,
    /// Every tested positive `x` has `sup (B+ ^ [0, x])` in `B`.
    pub interval_sups_exist: bool,
    pub ideal_complement: Option<Handle>,
}

/// Projection band, existence of interval suprema on `xs`, and existence of
/// an ideal complement, required to agree.
pub fn projection_band_equivalence(
    s: &SpaceSpec,
    b: &BandHandle,
    xs: &[RationalVector],
) -> Result<ProjectionEquivalence> {
    let projection_band = is_projection_band(s, b)?;
    let mut interval_sups_exist = true;
    for x in xs {
        match interval_sup(s, b, x)? {
            Some(sup) if b.contains(s, &sup)? => {}
            _ => {
                interval_sups_exist = false;
                break;
            }
        }
    }
    let mut ideal_complement = None;
    for h in Handle::all(s) {
        if ideal_intersection(s, b, &h)?.is_zero() && ideal_sum(s, b, &h)?.is_full(s) {
            ideal_complement = Some(h);
            break;
        }
    }
    if projection_band != interval_sups_exist || projection_band != ideal_complement.is_some() {
        return Err(Error::Inconsistent(format!(
            "{b}: projection band {projection_band}, interval suprema {interval_sups_exist}, \
             ideal complement {}",
            ideal_complement.is_some()
        )));
    }
    Ok(ProjectionEquivalence { projection_band, interval_sups_exist, ideal_complement })
}

/// Whether every principal band is a projection band. Each handle is the
/// band generated by the 0/1 indicator of its support (pointwise) or by
/// `(0, 1)` and `(1, 0)` (plane), so it suffices to test all handles.
pub fn has_principal_projection_property(s: &SpaceSpec) -> Result<bool> {
    for h in Handle::all(s) {
        if !is_projection_band(s, &h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vectors that exercise every handle: units, all ones, and for the plane the
/// off-axis `(1, 0)`.
pub fn probe_vectors(s: &SpaceSpec) -> Vec<RationalVector> {
    let n = s.dimension();
    let mut out: Vec<RationalVector> = (0..n).map(|i| RationalVector::unit(n, i)).collect();
    out.push(RationalVector::constant(n, int(1)));
    out.retain(|x| s.is_positive(x).unwrap_or(false) && !x.is_zero());
    out
}
