use alloc::string::String;

/// Errors raised by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("grading mismatch: {left} vs {right}")]
    GradingMismatch { left: String, right: String },

    #[error("non-terminating expansion of 1/(1 - {monomial}): grade {grade} is not positive")]
    NonTerminating { monomial: String, grade: i64 },

    #[error("monomial {monomial} has negative grade {grade} where a nonnegative grade is required")]
    NegativeGrade { monomial: String, grade: i64 },

    #[error("coefficient of {monomial} (grade {grade}) is beyond the truncation bound {bound}")]
    BeyondBound { monomial: String, grade: i64, bound: u64 },

    #[error("result is not a power series under the grading: term {monomial} has grade {grade}")]
    NotPowerSeries { monomial: String, grade: i64 },

    #[error("series truncated at {have} cannot supply a product truncated at {need}")]
    InsufficientBound { have: u64, need: u64 },

    #[error("cannot invert monomial {0}: coefficient must be 1 or -1")]
    NonUnitCoefficient(String),

    #[error("parts {parts} of a q-multinomial do not sum to {n}")]
    MultinomialSum { n: usize, parts: String },

    #[error("sequence {sequence} is not in {family}: inequality {index} is violated")]
    NotInFamily { sequence: String, family: String, index: usize },

    #[error("statistic {statistic} is not defined for family {family}")]
    UndefinedStatistic { statistic: &'static str, family: String },

    #[error("enumeration for {family} under the requested grading is unbounded")]
    UnboundedEnumeration { family: String },

    #[error("parameter domain violation: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
