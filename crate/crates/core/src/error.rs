use thiserror::Error;

/// Errors raised by ideal computations and the document front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring context mismatch: {0}")]
    ContextMismatch(String),

    #[error("exponent overflow while computing {0}")]
    Overflow(String),

    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    #[error("variable index {index} out of range for a ring with {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("budget exceeded: {what} needs {needed}, limit is {limit}")]
    Budget {
        what: String,
        needed: u64,
        limit: u64,
    },

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

/// Resource limits for the searches whose cost grows with the input.
///
/// `max_cells` bounds witness/corner box enumeration, `max_generators` bounds
/// the minimal generating set of any computed power, and `max_nodes` bounds
/// the branch-and-bound search behind the independence number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_cells: u64,
    pub max_generators: u64,
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_cells: 4_000_000,
            max_generators: 50_000,
            max_nodes: 5_000_000,
        }
    }
}

impl Budget {
    pub fn with_cells(cells: u64) -> Self {
        Budget {
            max_cells: cells,
            ..Budget::default()
        }
    }

    pub(crate) fn check_cells(&self, what: impl Into<String>, needed: u64) -> Result<()> {
        if needed > self.max_cells {
            return Err(Error::Budget {
                what: what.into(),
                needed,
                limit: self.max_cells,
            });
        }
        Ok(())
    }

    pub(crate) fn check_generators(&self, what: impl Into<String>, needed: usize) -> Result<()> {
        if needed as u64 > self.max_generators {
            return Err(Error::Budget {
                what: what.into(),
                needed: needed as u64,
                limit: self.max_generators,
            });
        }
        Ok(())
    }
}
