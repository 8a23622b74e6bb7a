use std::fmt;

use crate::size_formulas::Method;

/// Errors raised by the sequence, graph and formula routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A parameter lies outside the range where the operation is defined.
    #[error("{name} = {value} is out of range: requires {requirement}")]
    Domain {
        name: &'static str,
        value: usize,
        requirement: String,
    },

    /// Explicit enumeration would scan more candidate strings than allowed.
    #[error("enumerating 2^{n} candidate strings exceeds the budget of {budget}")]
    BudgetExceeded { n: usize, budget: u64 },

    /// Input that violates a structural precondition (ordering, lengths, family rule).
    #[error("inconsistent input: {0}")]
    Consistency(String),

    /// An exact division that must succeed did not. Always an implementation bug.
    #[error("{context}: numerator {numerator} is not divisible by {denominator}")]
    Divisibility {
        context: String,
        numerator: String,
        denominator: String,
    },

    /// A failure while evaluating one method at one index of a sweep.
    #[error("{method} at n = {n}: {source}")]
    AtPoint {
        method: Method,
        n: usize,
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(name: &'static str, value: usize, requirement: impl fmt::Display) -> Self {
        Error::Domain {
            name,
            value,
            requirement: requirement.to_string(),
        }
    }

    pub(crate) fn at(self, method: Method, n: usize) -> Self {
        Error::AtPoint {
            method,
            n,
            source: Box::new(self),
        }
    }

    /// The innermost error, looking through [`Error::AtPoint`] wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtPoint { source, .. } => source.root(),
            other => other,
        }
    }
}

pub(crate) fn require_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::domain("k", k, "k >= 2"));
    }
    Ok(())
}

pub(crate) fn require_p(p: usize) -> Result<()> {
    if p < 1 {
        return Err(Error::domain("p", p, "p >= 1"));
    }
    Ok(())
}
