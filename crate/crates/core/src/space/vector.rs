use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, parse_rational, Rational};

/// A vector of exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector(Vec<Rational>);

impl RationalVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalVector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RationalVector(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        RationalVector(vec![Rational::zero(); dim])
    }

    /// The `i`-th unit vector, 0-based.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = int(1);
        v
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        RationalVector(vec![c; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        RationalVector(self.0.iter().map(|c| c * k).collect())
    }

    /// Coordinatewise absolute value; this is `|x|` only in the pointwise family.
    pub fn coord_abs(&self) -> Self {
        RationalVector(self.0.iter().map(Signed::abs).collect())
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| f(a, b)).collect())
    }

    /// 1-based indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.0[i].is_zero()).map(|i| i + 1).collect()
    }

    /// Largest absolute coordinate.
    pub fn sup_norm(&self) -> Rational {
        self.0.iter().map(Signed::abs).max().unwrap_or_else(Rational::zero)
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() == dim {
            Ok(())
        } else {
            Err(Error::Dimension { expected: dim, found: self.dim() })
        }
    }

    /// Parses `"1,-2,3/4"`, `"(1, -2, 3/4)"` or `"[1, -2]"`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .or_else(|| t.strip_prefix('[').and_then(|s| s.strip_suffix(']')))
            .unwrap_or(t);
        if t.trim().is_empty() {
            return Err(Error::Parse(format!("empty vector {text:?}")));
        }
        t.split(',').map(|c| parse_rational(c.trim().trim_matches('"'))).collect::<Result<Vec<_>>>().map(RationalVector)
    }
}

impl Index<usize> for RationalVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add for &RationalVector {
    type Output = RationalVector;
    fn add(self, rhs: &RationalVector) -> RationalVector {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;
    fn sub(self, rhs: &RationalVector) -> RationalVector {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        RationalVector(self.0.iter().map(|c| -c).collect())
    }
}

impl Add for RationalVector {
    type Output = RationalVector;
    fn add(self, rhs: RationalVector) -> RationalVector {
        &self + &rhs
    }
}

impl Sub for RationalVector {
    type Output = RationalVector;
    fn sub(self, rhs: RationalVector) -> RationalVector {
        &self - &rhs
    }
}

impl Neg for RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        -&self
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&format_rational(c))?;
        }
        f.write_str(")")
    }
}

impl Serialize for RationalVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::rational::as_string_vec::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for RationalVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        crate::rational::as_string_vec::deserialize(d).map(RationalVector)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    // [TRIVIAL]
    #[test]
    fn parse_forms() {
        let v = RationalVector::parse("(1, -2, 3/4)").unwrap();
        assert_eq!(v, RationalVector::new(vec![int(1), int(-2), ratio(3, 4)]));
        assert_eq!(RationalVector::parse("1,-2,3/4").unwrap(), v);
        assert_eq!(RationalVector::parse(r#"["1","-2","3/4"]"#).unwrap(), v);
        assert!(RationalVector::parse("()").is_err());
        assert!(RationalVector::parse("1,x").is_err());
    }

    // [TRIVIAL]
    #[test]
    fn display_and_json() {
        let v = RationalVector::new(vec![int(1), ratio(-1, 2)]);
        assert_eq!(v.to_string(), "(1, -1/2)");
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"["1","-1/2"]"#);
        let back: RationalVector = serde_json::from_str(r#"["1","-1/2"]"#).unwrap();
        assert_eq!(back, v);
    }

    // [TRIVIAL]
    #[test]
    fn arithmetic() {
        let a = RationalVector::from_ints(&[1, -2]);
        let b = RationalVector::from_ints(&[0, 5]);
        assert_eq!(&a + &b, RationalVector::from_ints(&[1, 3]));
        assert_eq!(&a - &b, RationalVector::from_ints(&[1, -7]));
        assert_eq!(-&a, RationalVector::from_ints(&[-1, 2]));
        assert_eq!(a.scale(&int(3)), RationalVector::from_ints(&[3, -6]));
        assert_eq!(a.support(), vec![1, 2]);
        assert_eq!(RationalVector::from_ints(&[0, 4, 0]).support(), vec![2]);
        assert_eq!(a.sup_norm(), int(2));
    }
}
