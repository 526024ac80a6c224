//! Concrete fuzzy Riesz spaces over exact-rational vectors.
//!
//! Two closed-world membership families are supported; both grade a pair as
//! `1` on equality, `grade_c` on strict precedence and `0` otherwise:
//!
//! * [`Family::Pointwise`]: precedence is coordinatewise `<=`. Joins and meets
//!   are coordinatewise max and min.
//! * [`Family::Lex`]: precedence is the lexicographic order on the plane. The
//!   order is total, so joins and meets are max and min. This space is not
//!   Archimedean: every `n (0, 1)` stays below `(1, 0)`.
//!
//! Both grades are translation invariant and invariant under positive scaling,
//! and a constant strict grade above 1/2 is max-min transitive because the
//! underlying crisp relations are transitive. That is why user-supplied grade
//! functions are not accepted: those properties could not be checked on an
//! infinite carrier.
//!
//! The positive part is `x v 0`, so `x = x+ - x-` and `|x| = x+ + x-` hold.

mod archimedean;
mod decompose;
mod vector;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::mutation;
use crate::rational::{self, format_rational, half, Rational};

pub use archimedean::{infimum_of_scaled, is_nx_bounded, space_properties, NxBoundReport, SpaceProperties};
pub use decompose::{riesz_decompose, DecompositionResult};
pub use vector::RationalVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Pointwise,
    Lex,
}

/// A preset fuzzy Riesz space: family, dimension and strict-precedence grade.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpaceFile", into = "SpaceFile")]
pub struct SpaceSpec {
    family: Family,
    dimension: usize,
    grade_c: Rational,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct SpaceFile {
    family: Family,
    dimension: usize,
    #[serde(with = "rational::as_string")]
    grade_c: Rational,
}

impl TryFrom<SpaceFile> for SpaceSpec {
    type Error = Error;
    fn try_from(f: SpaceFile) -> Result<Self> {
        SpaceSpec::new(f.family, f.dimension, f.grade_c)
    }
}

impl From<SpaceSpec> for SpaceFile {
    fn from(s: SpaceSpec) -> Self {
        SpaceFile { family: s.family, dimension: s.dimension, grade_c: s.grade_c }
    }
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let family = match self.family {
            Family::Pointwise => "pointwise",
            Family::Lex => "lex",
        };
        write!(f, "{family} R^{} c = {}", self.dimension, format_rational(&self.grade_c))
    }
}

impl SpaceSpec {
    pub fn new(family: Family, dimension: usize, grade_c: Rational) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidSpace("dimension must be positive".into()));
        }
        if family == Family::Lex && dimension != 2 {
            return Err(Error::InvalidSpace(format!(
                "the lexicographic family lives on the plane, got dimension {dimension}"
            )));
        }
        if grade_c <= half() || grade_c > rational::int(1) {
            return Err(Error::InvalidSpace(format!(
                "grade_c must lie in (1/2, 1], got {}",
                format_rational(&grade_c)
            )));
        }
        Ok(SpaceSpec { family, dimension, grade_c })
    }

    pub fn pointwise(dimension: usize, grade_c: Rational) -> Result<Self> {
        Self::new(Family::Pointwise, dimension, grade_c)
    }

    pub fn lex(grade_c: Rational) -> Result<Self> {
        Self::new(Family::Lex, 2, grade_c)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("space serializes")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn grade_c(&self) -> &Rational {
        &self.grade_c
    }

    pub fn zero(&self) -> RationalVector {
        RationalVector::zero(self.dimension)
    }

    pub fn check(&self, x: &RationalVector) -> Result<()> {
        x.check_dim(self.dimension)
    }

    /// Crisp comparison underlying the grades. `None` means incomparable.
    fn compare(&self, x: &RationalVector, y: &RationalVector) -> Option<Ordering> {
        match self.family {
            Family::Lex => Some(x.coords().cmp(y.coords())),
            Family::Pointwise => {
                let (mut le, mut ge) = (true, true);
                for (a, b) in x.coords().iter().zip(y.coords()) {
                    le &= a <= b;
                    ge &= a >= b;
                }
                match (le, ge) {
                    (true, true) => Some(Ordering::Equal),
                    (true, false) => Some(Ordering::Less),
                    (false, true) => Some(Ordering::Greater),
                    (false, false) => None,
                }
            }
        }
    }

    pub fn mu(&self, x: &RationalVector, y: &RationalVector) -> Result<Grade> {
        self.check(x)?;
        self.check(y)?;
        Ok(match self.compare(x, y) {
            Some(Ordering::Equal) => Grade::one(),
            Some(Ordering::Less) => Grade::new(self.grade_c.clone())?,
            _ => Grade::zero(),
        })
    }

    /// `mu(x, y) > 1/2`.
    pub fn leq(&self, x: &RationalVector, y: &RationalVector) -> Result<bool> {
        Ok(self.mu(x, y)?.above_half())
    }

    /// `mu(0, x) > 1/2`; zero counts as positive.
    pub fn is_positive(&self, x: &RationalVector) -> Result<bool> {
        self.leq(&self.zero(), x)
    }

    pub fn is_negative(&self, x: &RationalVector) -> Result<bool> {
        self.leq(x, &self.zero())
    }

    pub fn join(&self, x: &RationalVector, y: &RationalVector) -> Result<RationalVector> {
        self.check(x)?;
        self.check(y)?;
        Ok(match self.family {
            Family::Pointwise => x.zip_with(y, |a, b| rational::max_rational(a, b).clone()),
            Family::Lex => std::cmp::max(x, y).clone(),
        })
    }

    pub fn meet(&self, x: &RationalVector, y: &RationalVector) -> Result<RationalVector> {
        self.check(x)?;
        self.check(y)?;
        Ok(match self.family {
            Family::Pointwise => x.zip_with(y, |a, b| rational::min_rational(a, b).clone()),
            Family::Lex => std::cmp::min(x, y).clone(),
        })
    }

    /// `x+ = x v 0`.
    pub fn pos_part(&self, x: &RationalVector) -> Result<RationalVector> {
        if mutation::literal_positive_part() {
            return self.meet(x, &self.zero());
        }
        self.join(x, &self.zero())
    }

    /// `x- = (-x) v 0`.
    pub fn neg_part(&self, x: &RationalVector) -> Result<RationalVector> {
        self.join(&-x, &self.zero())
    }

    /// `|x| = x v (-x)`.
    pub fn abs(&self, x: &RationalVector) -> Result<RationalVector> {
        self.join(x, &-x)
    }

    /// `x` and `y` are disjoint iff `|x| ^ |y| = 0`.
    pub fn is_disjoint(&self, x: &RationalVector, y: &RationalVector) -> Result<bool> {
        Ok(self.meet(&self.abs(x)?, &self.abs(y)?)?.is_zero())
    }

    pub fn sum<'a>(&self, xs: impl IntoIterator<Item = &'a RationalVector>) -> Result<RationalVector> {
        let mut acc = self.zero();
        for x in xs {
            self.check(x)?;
            acc = &acc + x;
        }
        Ok(acc)
    }
}
