use thiserror::Error;

use crate::algebra::UnitRational;

/// Which coefficient block a scalar came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    APlus,
    AMinus,
    B,
}

impl std::fmt::Display for Block {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Block::APlus => "a_plus",
            Block::AMinus => "a_minus",
            Block::B => "b",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// Row and column are 1-based; `column` is `None` for entries of `b`.
    #[error("{block}[{}] = {value} lies outside [0, 1]", position(*.row, *.column))]
    OutOfRange {
        block: Block,
        row: usize,
        column: Option<usize>,
        value: String,
    },

    #[error("cannot parse scalar {text:?}: {reason}")]
    Scalar { text: String, reason: String },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("instance too large for exhaustive enumeration: {what} = {size} exceeds cap {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
}

fn position(row: usize, column: Option<usize>) -> String {
    match column {
        Some(c) => format!("{row}][{c}"),
        None => row.to_string(),
    }
}

impl Error {
    pub(crate) fn out_of_range(
        block: Block,
        row: usize,
        column: Option<usize>,
        value: impl ToString,
    ) -> Self {
        Error::OutOfRange {
            block,
            row: row + 1,
            column: column.map(|c| c + 1),
            value: value.to_string(),
        }
    }

    pub(crate) fn not_a_solution(x: &[UnitRational]) -> Self {
        let parts: Vec<String> = x.iter().map(|v| v.to_string()).collect();
        Error::Contract(format!("({}) does not solve the system", parts.join(", ")))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
