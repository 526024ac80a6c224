use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, half, is_unit_interval, parse_rational, Rational};

/// A membership grade: an exact rational in `[0, 1]`.
///
/// The order-theoretic predicate "x precedes y" is `grade > 1/2`; that
/// comparison is exact.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade(Rational);

impl Grade {
    pub fn new(value: Rational) -> Result<Self> {
        if is_unit_interval(&value) {
            Ok(Grade(value))
        } else {
            Err(Error::InvalidGrade(format!("{} is outside [0, 1]", format_rational(&value))))
        }
    }

    pub fn zero() -> Self {
        Grade(Rational::zero())
    }

    pub fn one() -> Self {
        Grade(Rational::one())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// `true` iff the grade is strictly above the 1/2 threshold.
    pub fn above_half(&self) -> bool {
        self.0 > half()
    }

    pub fn parse(text: &str) -> Result<Self> {
        Grade::new(parse_rational(text)?)
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl Serialize for Grade {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Grade {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Grade::parse(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    // [TRIVIAL]
    #[test]
    fn rejects_out_of_range() {
        assert!(Grade::new(ratio(3, 2)).is_err());
        assert!(Grade::new(ratio(-1, 5)).is_err());
        assert!(Grade::new(ratio(1, 1)).is_ok());
    }

    // [TRIVIAL]
    #[test]
    fn half_is_not_above_half() {
        assert!(!Grade::new(ratio(1, 2)).unwrap().above_half());
        assert!(Grade::new(ratio(501, 1000)).unwrap().above_half());
    }
}
