pub mod cli;
pub mod convergence;
pub mod error;
pub mod foset;
pub mod grade;
pub mod ideals;
pub mod linalg;
pub mod mutation;
pub mod projections;
pub mod rational;
pub mod sample;
pub mod space;
pub mod suites;

pub use error::{Error, Result};
pub use grade::Grade;
pub use rational::Rational;
pub use space::{Family, RationalVector, SpaceSpec};
