use std::fmt;

use num_rational::BigRational;

/// Why an instance has no solution. Indices are 0-based; `Display` prints
/// them 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// The corresponding FRE has no solution: its residual candidate misses `row`.
    FreUnsolvable { row: usize },
    /// `x̄_j + ȳ_j < 1` for `column`.
    SumBelowOne { column: usize, sum: BigRational },
    /// `plus_row` can only be attained through `x̄_column` and `minus_row`
    /// only through `ȳ_column`, but `x̄_column + ȳ_column != 1`.
    ForcedConflict {
        column: usize,
        plus_row: usize,
        minus_row: usize,
        sum: BigRational,
    },
    /// No pair of index sets covers every row.
    NoFeasiblePair,
}

fn subscript(n: usize) -> String {
    n.to_string()
        .chars()
        .map(|c| char::from_u32('₀' as u32 + c.to_digit(10).unwrap()).unwrap())
        .collect()
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::FreUnsolvable { row } => {
                write!(f, "corresponding FRE unsolvable: row {} cannot be attained", row + 1)
            }
            Witness::SumBelowOne { column, sum } => {
                let k = subscript(column + 1);
                write!(f, "x̄{k}+ȳ{k} = {sum} < 1 at column {}", column + 1)
            }
            Witness::ForcedConflict {
                column,
                plus_row,
                minus_row,
                sum,
            } => {
                let k = subscript(column + 1);
                write!(
                    f,
                    "row-forced conflict at column {}: x̄{k}+ȳ{k} = {sum} ≠ 1 (row {} forces J⁺, row {} forces J⁻)",
                    column + 1,
                    plus_row + 1,
                    minus_row + 1
                )
            }
            Witness::NoFeasiblePair => f.write_str("no feasible pair exists"),
        }
    }
}

/// Outcome of a solvability test, carrying a certificate either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<C> {
    Solvable(C),
    Unsolvable(Witness),
}

impl<C> Verdict<C> {
    pub fn is_solvable(&self) -> bool {
        matches!(self, Verdict::Solvable(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Solvable(_) => None,
            Verdict::Unsolvable(w) => Some(w),
        }
    }

    pub fn certificate(&self) -> Option<&C> {
        match self {
            Verdict::Solvable(c) => Some(c),
            Verdict::Unsolvable(_) => None,
        }
    }
}
