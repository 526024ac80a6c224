use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, parse_rational, Rational};
use crate::space::RationalVector;

/// A linear map `Q^cols -> Q^rows`, stored row-major.
///
/// Serialized as an array of rows, each an array of rational strings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperatorMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl OperatorMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return Err(Error::Spec("operator matrix must be nonempty".into()));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::Spec(format!("row {} has {} entries, expected {cols}", bad + 1, rows[bad].len())));
        }
        Ok(OperatorMatrix { rows: rows.len(), cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::new(rows.iter().map(|r| r.iter().map(|&c| int(c)).collect()).collect()).expect("literal matrix")
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let entries = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).map(|(i, j)| f(i, j)).collect();
        OperatorMatrix { rows, cols, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, n, |_, _| Rational::zero())
    }

    /// Diagonal 0/1 matrix keeping the coordinates in `support` (1-based).
    pub fn mask(n: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let keep: Vec<usize> = support.into_iter().collect();
        Self::from_fn(n, n, |i, j| if i == j && keep.contains(&(i + 1)) { Rational::one() } else { Rational::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    /// Column `j` as a vector, i.e. the image of the `j`-th unit vector.
    pub fn column(&self, j: usize) -> RationalVector {
        RationalVector::new((0..self.rows).map(|i| self.entry(i, j).clone()).collect())
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.cols).map(<[Rational]>::to_vec).collect()
    }

    pub fn apply(&self, x: &RationalVector) -> Result<RationalVector> {
        x.check_dim(self.cols)?;
        Ok(RationalVector::new(
            (0..self.rows)
                .map(|i| (0..self.cols).fold(Rational::zero(), |acc, j| acc + self.entry(i, j) * &x[j]))
                .collect(),
        ))
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &OperatorMatrix) -> Result<OperatorMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension { expected: self.cols, found: other.rows });
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Rational::zero(), |acc, k| acc + self.entry(i, k) * other.entry(k, j))
        }))
    }

    fn same_shape(&self, other: &OperatorMatrix) -> Result<()> {
        if self.rows != other.rows {
            return Err(Error::Dimension { expected: self.rows, found: other.rows });
        }
        if self.cols != other.cols {
            return Err(Error::Dimension { expected: self.cols, found: other.cols });
        }
        Ok(())
    }

    pub fn add(&self, other: &OperatorMatrix) -> Result<OperatorMatrix> {
        self.same_shape(other)?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| self.entry(i, j) + other.entry(i, j)))
    }

    pub fn sub(&self, other: &OperatorMatrix) -> Result<OperatorMatrix> {
        self.same_shape(other)?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| self.entry(i, j) - other.entry(i, j)))
    }

    pub fn scale(&self, k: &Rational) -> OperatorMatrix {
        Self::from_fn(self.rows, self.cols, |i, j| self.entry(i, j) * k)
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && self.compose(self).is_ok_and(|sq| sq == *self)
    }

    /// Support of the diagonal when the matrix is a 0/1 diagonal mask.
    pub fn mask_support(&self) -> Option<Vec<usize>> {
        if !self.is_square() {
            return None;
        }
        let mut support = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.entry(i, j);
                if i != j && !e.is_zero() {
                    return None;
                }
                if i == j {
                    if e.is_one() {
                        support.push(i + 1);
                    } else if !e.is_zero() {
                        return None;
                    }
                }
            }
        }
        Some(support)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serializes")
    }
}

impl Serialize for OperatorMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            self.entries.chunks(self.cols).map(|r| r.iter().map(format_rational).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for OperatorMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        OperatorMatrix::new(parsed).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for OperatorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .chunks(self.cols)
            .map(|r| format!("[{}]", r.iter().map(format_rational).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn v(c: &[i64]) -> RationalVector {
        RationalVector::from_ints(c)
    }

    // [DERIVED]
    #[test]
    fn application_and_composition() {
        let t = OperatorMatrix::from_ints(&[&[1, 1], &[0, 1]]);
        assert_eq!(t.apply(&v(&[1, -1])).unwrap(), v(&[0, -1]));
        let sq = t.compose(&t).unwrap();
        assert_eq!(sq, OperatorMatrix::from_ints(&[&[1, 2], &[0, 1]]));
        assert!(!t.is_idempotent());
        assert!(OperatorMatrix::mask(3, [1, 3]).is_idempotent());
        assert!(OperatorMatrix::from_ints(&[&[1, 1], &[0, 0]]).is_idempotent());
        assert!(!OperatorMatrix::identity(2).scale(&ratio(1, 2)).is_idempotent());
        assert!(t.apply(&v(&[1, 2, 3])).is_err());
    }

    // [TRIVIAL]
    #[test]
    fn masks() {
        let m = OperatorMatrix::mask(3, [1, 3]);
        assert_eq!(m.apply(&v(&[5, 7, 2])).unwrap(), v(&[5, 0, 2]));
        assert_eq!(m.mask_support(), Some(vec![1, 3]));
        assert_eq!(OperatorMatrix::from_ints(&[&[1, 1], &[0, 0]]).mask_support(), None);
        let i = OperatorMatrix::identity(3);
        assert_eq!(i.sub(&m).unwrap(), OperatorMatrix::mask(3, [2]));
    }

    // [TRIVIAL]
    #[test]
    fn json() {
        let t = OperatorMatrix::from_json(r#"[["1","1/2"],["0","-3"]]"#).unwrap();
        assert_eq!(t.entry(0, 1), &ratio(1, 2));
        assert_eq!(OperatorMatrix::from_json(&t.to_json()).unwrap(), t);
        assert!(OperatorMatrix::from_json(r#"[["1"],["0","1"]]"#).is_err());
        assert!(OperatorMatrix::from_json("[]").is_err());
        assert_eq!(t.to_string(), "[[1, 1/2], [0, -3]]");
    }
}
