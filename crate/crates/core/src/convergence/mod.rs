//! Order convergence of sequences, witnessed by dominating families.
//!
//! `x_n` converges to `x` when some `y_n` decreasing to `0` has
//! `mu(|x_n - x|, y_n) > 1/2`. Only two kinds of `y_n` are accepted, geometric
//! and harmonic multiples of a positive base, plus nonnegative combinations of
//! those. For them "decreasing and positive" is checked term by term while
//! "infimum zero" is known in closed form: it holds in the pointwise family and
//! on the vertical axis of the plane, and fails for any base off the axis
//! (`(1, 0) / n` has no infimum there).

mod certificate;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};
use crate::space::{Family, RationalVector, SpaceSpec};

pub use certificate::{
    check_convergence_certificate, check_limit_laws, check_monotone_limit, check_order_closed_under, natural_family,
    CertificateReport, Certified, ClosedVerdict, LimitLawReport, MonotoneReport,
};

pub const DEFAULT_HORIZON: u64 = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InfZeroStatus {
    /// `inf y_n = 0` holds by the closed form of the family.
    Analytic,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedFamily {
    #[serde(with = "rational::as_string")]
    pub weight: Rational,
    pub family: DominatingFamily,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DominatingFamily {
    /// `y_n = base * ratio^n`.
    Geometric {
        base: RationalVector,
        #[serde(with = "rational::as_string")]
        ratio: Rational,
    },
    /// `y_n = base / n`.
    Harmonic { base: RationalVector },
    /// `y_n = sum w_i y_n^(i)` with `w_i >= 0`.
    Sum { terms: Vec<WeightedFamily> },
}

impl DominatingFamily {
    pub fn geometric(base: RationalVector, ratio: Rational) -> Self {
        DominatingFamily::Geometric { base, ratio }
    }

    pub fn harmonic(base: RationalVector) -> Self {
        DominatingFamily::Harmonic { base }
    }

    pub fn sum(terms: impl IntoIterator<Item = (Rational, DominatingFamily)>) -> Self {
        DominatingFamily::Sum {
            terms: terms.into_iter().map(|(weight, family)| WeightedFamily { weight, family }).collect(),
        }
    }

    pub fn validate(&self, s: &SpaceSpec) -> Result<()> {
        match self {
            DominatingFamily::Geometric { base, ratio } => {
                positive_base(s, base)?;
                if !ratio.is_positive() || *ratio >= Rational::one() {
                    return Err(Error::Spec(format!("geometric ratio {ratio} is not in (0, 1)")));
                }
                Ok(())
            }
            DominatingFamily::Harmonic { base } => positive_base(s, base),
            DominatingFamily::Sum { terms } => {
                if terms.is_empty() {
                    return Err(Error::Spec("empty sum of dominating families".into()));
                }
                for t in terms {
                    if t.weight.is_negative() {
                        return Err(Error::Spec(format!("negative family weight {}", t.weight)));
                    }
                    t.family.validate(s)?;
                }
                Ok(())
            }
        }
    }

    /// `y_n` for `n >= 1`.
    pub fn term(&self, s: &SpaceSpec, n: u64) -> Result<RationalVector> {
        check_index(n)?;
        Ok(match self {
            DominatingFamily::Geometric { base, ratio } => base.scale(&pow(ratio, n)),
            DominatingFamily::Harmonic { base } => base.scale(&Rational::new(1.into(), n.into())),
            DominatingFamily::Sum { terms } => {
                let mut acc = s.zero();
                for t in terms {
                    acc = &acc + &t.family.term(s, n)?.scale(&t.weight);
                }
                acc
            }
        })
    }

    pub fn inf_zero_status(&self, s: &SpaceSpec) -> InfZeroStatus {
        let on_axis = |base: &RationalVector| s.family() == Family::Pointwise || base[0].is_zero();
        let analytic = match self {
            DominatingFamily::Geometric { base, .. } | DominatingFamily::Harmonic { base } => on_axis(base),
            DominatingFamily::Sum { terms } => {
                terms.iter().all(|t| t.weight.is_zero() || t.family.inf_zero_status(s) == InfZeroStatus::Analytic)
            }
        };
        if analytic {
            InfZeroStatus::Analytic
        } else {
            InfZeroStatus::NotApplicable
        }
    }
}

fn positive_base(s: &SpaceSpec, base: &RationalVector) -> Result<()> {
    if s.is_positive(base)? {
        Ok(())
    } else {
        Err(Error::NotPositive(format!("dominating base {base} is not positive")))
    }
}

fn check_index(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::Spec("sequences are indexed from 1".into()))
    } else {
        Ok(())
    }
}

fn pow(r: &Rational, n: u64) -> Rational {
    num_traits::pow(r.clone(), n as usize)
}

/// Scalar factor `c_n` in `x_n = center + c_n * offset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Decay {
    /// `ratio^n`
    Geometric {
        #[serde(with = "rational::as_string")]
        ratio: Rational,
    },
    /// `1/n`
    Harmonic,
    /// `(-1)^n / n`
    AlternatingHarmonic,
    /// `(-1)^n`, which does not decay.
    Alternating,
}

impl Decay {
    pub fn coefficient(&self, n: u64) -> Rational {
        let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
        let harmonic = Rational::new(1.into(), n.into());
        match self {
            Decay::Geometric { ratio } => pow(ratio, n),
            Decay::Harmonic => harmonic,
            Decay::AlternatingHarmonic => sign * harmonic,
            Decay::Alternating => sign,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SequenceSpec {
    /// Listed terms `x_1, ..., x_k`, then `tail` forever if given.
    ExplicitPrefix {
        prefix: Vec<RationalVector>,
        #[serde(default)]
        tail: Option<RationalVector>,
    },
    ClosedForm {
        center: RationalVector,
        offset: RationalVector,
        decay: Decay,
    },
    /// `a x_n + b y_n`
    Linear {
        #[serde(with = "rational::as_string")]
        a: Rational,
        first: Box<SequenceSpec>,
        #[serde(with = "rational::as_string")]
        b: Rational,
        second: Box<SequenceSpec>,
    },
    PosPart {
        of: Box<SequenceSpec>,
    },
    NegPart {
        of: Box<SequenceSpec>,
    },
    Abs {
        of: Box<SequenceSpec>,
    },
    Join {
        left: Box<SequenceSpec>,
        right: Box<SequenceSpec>,
    },
    Meet {
        left: Box<SequenceSpec>,
        right: Box<SequenceSpec>,
    },
}

impl SequenceSpec {
    pub fn constant(x: RationalVector) -> Self {
        SequenceSpec::ExplicitPrefix { prefix: Vec::new(), tail: Some(x) }
    }

    pub fn closed_form(center: RationalVector, offset: RationalVector, decay: Decay) -> Self {
        SequenceSpec::ClosedForm { center, offset, decay }
    }

    pub fn linear(a: Rational, first: SequenceSpec, b: Rational, second: SequenceSpec) -> Self {
        SequenceSpec::Linear { a, first: Box::new(first), b, second: Box::new(second) }
    }

    /// `x_n` for `n >= 1`.
    pub fn eval(&self, s: &SpaceSpec, n: u64) -> Result<RationalVector> {
        check_index(n)?;
        let x = match self {
            SequenceSpec::ExplicitPrefix { prefix, tail } => match prefix.get(n as usize - 1) {
                Some(x) => x.clone(),
                None => tail.clone().ok_or_else(|| {
                    Error::Spec(format!("index {n} is past the {} listed terms and no tail is given", prefix.len()))
                })?,
            },
            SequenceSpec::ClosedForm { center, offset, decay } => center + &offset.scale(&decay.coefficient(n)),
            SequenceSpec::Linear { a, first, b, second } => &first.eval(s, n)?.scale(a) + &second.eval(s, n)?.scale(b),
            SequenceSpec::PosPart { of } => s.pos_part(&of.eval(s, n)?)?,
            SequenceSpec::NegPart { of } => s.neg_part(&of.eval(s, n)?)?,
            SequenceSpec::Abs { of } => s.abs(&of.eval(s, n)?)?,
            SequenceSpec::Join { left, right } => s.join(&left.eval(s, n)?, &right.eval(s, n)?)?,
            SequenceSpec::Meet { left, right } => s.meet(&left.eval(s, n)?, &right.eval(s, n)?)?,
        };
        s.check(&x)?;
        Ok(x)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("sequence serializes")
    }
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

    // [DERIVED]
    #[test]
    fn family_terms() {
        let s = pw(2);
        let g = DominatingFamily::geometric(v(&[4, 8]), ratio(1, 2));
        assert_eq!(g.term(&s, 2).unwrap(), v(&[1, 2]));
        let h = DominatingFamily::harmonic(v(&[3, 0]));
        assert_eq!(h.term(&s, 3).unwrap(), v(&[1, 0]));
        let sum = DominatingFamily::sum([(int(2), h.clone()), (int(0), g.clone())]);
        assert_eq!(sum.term(&s, 3).unwrap(), v(&[2, 0]));
        assert!(g.term(&s, 0).is_err());
        assert!(DominatingFamily::geometric(v(&[1, 1]), int(1)).validate(&s).is_err());
        assert!(matches!(DominatingFamily::harmonic(v(&[1, -1])).validate(&s), Err(Error::NotPositive(_))));
    }

    // [DERIVED]
    #[test]
    fn analytic_tails() {
        let l = SpaceSpec::lex(ratio(2, 3)).unwrap();
        assert_eq!(DominatingFamily::harmonic(v(&[1, 0])).inf_zero_status(&pw(2)), InfZeroStatus::Analytic);
        assert_eq!(DominatingFamily::harmonic(v(&[0, 1])).inf_zero_status(&l), InfZeroStatus::Analytic);
        assert_eq!(DominatingFamily::harmonic(v(&[1, 0])).inf_zero_status(&l), InfZeroStatus::NotApplicable);
    }

    // [DERIVED]
    #[test]
    fn sequence_evaluation() {
        let s = pw(2);
        let seq = SequenceSpec::closed_form(v(&[1, 1]), v(&[2, 0]), Decay::Harmonic);
        assert_eq!(seq.eval(&s, 2).unwrap(), v(&[2, 1]));
        let alt = SequenceSpec::closed_form(v(&[0, 0]), v(&[1, 1]), Decay::Alternating);
        assert_eq!(alt.eval(&s, 1).unwrap(), v(&[-1, -1]));
        assert_eq!(alt.eval(&s, 2).unwrap(), v(&[1, 1]));
        let pre = SequenceSpec::ExplicitPrefix { prefix: vec![v(&[5, 5])], tail: None };
        assert_eq!(pre.eval(&s, 1).unwrap(), v(&[5, 5]));
        assert!(matches!(pre.eval(&s, 2), Err(Error::Spec(_))));
        let lin = SequenceSpec::linear(int(2), SequenceSpec::constant(v(&[1, 0])), int(-1), seq);
        assert_eq!(lin.eval(&s, 2).unwrap(), v(&[0, -1]));
        let abs = SequenceSpec::Abs { of: Box::new(alt) };
        assert_eq!(abs.eval(&s, 1).unwrap(), v(&[1, 1]));
    }

    // [TRIVIAL]
    #[test]
    fn json_round_trip() {
        let seq = SequenceSpec::Join {
            left: Box::new(SequenceSpec::closed_form(v(&[1, 0]), v(&[-1, 0]), Decay::Geometric { ratio: ratio(1, 3) })),
            right: Box::new(SequenceSpec::constant(v(&[0, 2]))),
        };
        assert_eq!(SequenceSpec::from_json(&seq.to_json()).unwrap(), seq);
        let parsed = SequenceSpec::from_json(
            r#"{"kind":"closed-form","center":["1","0"],"offset":["-1","0"],"decay":{"kind":"harmonic"}}"#,
        )
        .unwrap();
        assert_eq!(parsed.eval(&pw(2), 4).unwrap(), RationalVector::new(vec![ratio(3, 4), int(0)]));
        let fam: DominatingFamily =
            serde_json::from_str(r#"{"kind":"geometric","base":["1","1"],"ratio":"1/2"}"#).unwrap();
        assert_eq!(fam, DominatingFamily::geometric(v(&[1, 1]), ratio(1, 2)));
    }
}
