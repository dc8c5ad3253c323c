use thiserror::Error;

use crate::report::Report;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("check failed: {}", .0.headline())]
    Check(Box<Report>),
    #[error("spanning sets do not form a direct-sum basis of the ambient space")]
    NotDirectSum,
    #[error("span is not closed under multiplication (witness {0:?})")]
    NotSubalgebra(Vec<usize>),
    #[error("span is not a two-sided ideal (witness {0:?})")]
    NotIdeal(Vec<usize>),
    #[error("span is not a subcoalgebra (witness {0:?})")]
    NotSubcoalgebra(Vec<usize>),
    #[error("span is not a coideal (witness {0:?})")]
    NotCoideal(Vec<usize>),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn check(report: Report) -> Self {
        Error::Check(Box::new(report))
    }

    /// Witness indices carried by the error, if any.
    pub fn witness(&self) -> Option<Vec<usize>> {
        match self {
            Error::Check(r) => r.first_failure().and_then(|c| c.witness.clone()),
            Error::NotSubalgebra(w)
            | Error::NotIdeal(w)
            | Error::NotSubcoalgebra(w)
            | Error::NotCoideal(w) => Some(w.clone()),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
