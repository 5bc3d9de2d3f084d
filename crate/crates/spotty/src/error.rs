use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in the library.
///
/// The variants line up with the CLI exit codes: `Param`, `Layout`, `Syntax`
/// and `Parse` are input problems, `Budget` is a resource refusal and
/// `Integrity` means an exact identity that must hold did not.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter error: {0}")]
    Param(String),

    #[error("layout error: {0}")]
    Layout(String),

    /// A malformed ring element or polynomial token, without position information.
    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("budget exceeded: {what} needs {required} steps but the budget is {budget}")]
    Budget {
        what: &'static str,
        required: BigUint,
        budget: u64,
    },

    #[error("integrity error: {0}")]
    Integrity(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Param(msg.into())
    }

    pub(crate) fn layout(msg: impl Into<String>) -> Self {
        Error::Layout(msg.into())
    }

    pub(crate) fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }
}

/// Fails with [`Error::Budget`] unless `required <= budget`.
pub(crate) fn check_budget(what: &'static str, required: &BigUint, budget: u64) -> Result<()> {
    if *required > BigUint::from(budget) {
        return Err(Error::Budget {
            what,
            required: required.clone(),
            budget,
        });
    }
    Ok(())
}
