//! Problem instances: validation, candidate solutions and null-column removal.

use std::fmt;

use num_rational::BigRational;

use crate::algebra::{eval_bipolar_row, in_unit_interval, UnitRational};
use crate::error::{Block, Error, Result};

/// `n` bipolar max-product equations in `m` unknowns:
///
/// ```text
/// max_j (a⁺_ij * x_j) ∨ (a⁻_ij * (1 - x_j)) = b_i,   i = 1..n
/// ```
///
/// A single equation is the `n = 1` case. Matrices are stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipolarSystem {
    a_plus: Vec<Vec<UnitRational>>,
    a_minus: Vec<Vec<UnitRational>>,
    b: Vec<UnitRational>,
    columns: usize,
}

/// Coefficients as parsed, before range checking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawSystem {
    pub a_plus: Vec<Vec<BigRational>>,
    pub a_minus: Vec<Vec<BigRational>>,
    pub b: Vec<BigRational>,
}

fn check_shape(a_plus_rows: &[usize], a_minus_rows: &[usize], b_len: usize) -> Result<usize> {
    let n = b_len;
    if n == 0 {
        return Err(Error::Dimension("system has no equations (n = 0)".into()));
    }
    if a_plus_rows.len() != n || a_minus_rows.len() != n {
        return Err(Error::Dimension(format!(
            "b has {n} entries but a_plus has {} rows and a_minus has {} rows",
            a_plus_rows.len(),
            a_minus_rows.len()
        )));
    }
    let m = a_plus_rows[0];
    for (i, (&p, &q)) in a_plus_rows.iter().zip(a_minus_rows).enumerate() {
        if p != m || q != m {
            return Err(Error::Dimension(format!(
                "row {} has {p} a_plus and {q} a_minus entries, expected {m}",
                i + 1
            )));
        }
    }
    Ok(m)
}

/// Checks dimensions and ranges of a raw instance and converts it.
///
/// Requires `n >= 1` and `m >= 1`; errors name the offending block and
/// 1-based position.
pub fn validate(raw: RawSystem) -> Result<BipolarSystem> {
    let plus_rows: Vec<usize> = raw.a_plus.iter().map(Vec::len).collect();
    let minus_rows: Vec<usize> = raw.a_minus.iter().map(Vec::len).collect();
    let m = check_shape(&plus_rows, &minus_rows, raw.b.len())?;
    if m == 0 {
        return Err(Error::Dimension("system has no unknowns (m = 0)".into()));
    }
    let convert_matrix = |block: Block, rows: Vec<Vec<BigRational>>| -> Result<Vec<Vec<UnitRational>>> {
        rows.into_iter()
            .enumerate()
            .map(|(i, row)| {
                row.into_iter()
                    .enumerate()
                    .map(|(j, value)| {
                        if in_unit_interval(&value) {
                            Ok(UnitRational::try_from(value).expect("range checked"))
                        } else {
                            Err(Error::out_of_range(block, i, Some(j), value))
                        }
                    })
                    .collect()
            })
            .collect()
    };
    let a_plus = convert_matrix(Block::APlus, raw.a_plus)?;
    let a_minus = convert_matrix(Block::AMinus, raw.a_minus)?;
    let b = raw
        .b
        .into_iter()
        .enumerate()
        .map(|(i, value)| {
            if in_unit_interval(&value) {
                Ok(UnitRational::try_from(value).expect("range checked"))
            } else {
                Err(Error::out_of_range(Block::B, i, None, value))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BipolarSystem {
        a_plus,
        a_minus,
        b,
        columns: m,
    })
}

impl BipolarSystem {
    /// Builds a system from already range-checked scalars.
    pub fn new(
        a_plus: Vec<Vec<UnitRational>>,
        a_minus: Vec<Vec<UnitRational>>,
        b: Vec<UnitRational>,
    ) -> Result<Self> {
        let plus_rows: Vec<usize> = a_plus.iter().map(Vec::len).collect();
        let minus_rows: Vec<usize> = a_minus.iter().map(Vec::len).collect();
        let m = check_shape(&plus_rows, &minus_rows, b.len())?;
        if m == 0 {
            return Err(Error::Dimension("system has no unknowns (m = 0)".into()));
        }
        Ok(BipolarSystem {
            a_plus,
            a_minus,
            b,
            columns: m,
        })
    }

    /// A single equation (`n = 1`).
    pub fn single(a_plus: Vec<UnitRational>, a_minus: Vec<UnitRational>, b: UnitRational) -> Result<Self> {
        Self::new(vec![a_plus], vec![a_minus], vec![b])
    }

    /// Parses every scalar with [`str::parse`]; convenient for literals and tests.
    pub fn parse(a_plus: &[&[&str]], a_minus: &[&[&str]], b: &[&str]) -> Result<Self> {
        let matrix = |rows: &[&[&str]]| -> Result<Vec<Vec<BigRational>>> {
            rows.iter()
                .map(|row| row.iter().map(|s| crate::algebra::parse_rational(s)).collect())
                .collect()
        };
        validate(RawSystem {
            a_plus: matrix(a_plus)?,
            a_minus: matrix(a_minus)?,
            b: b.iter().map(|s| crate::algebra::parse_rational(s)).collect::<Result<_>>()?,
        })
    }

    /// Number of unknowns `m`.
    pub fn columns(&self) -> usize {
        self.columns
    }

    /// Number of equations `n`.
    pub fn rows(&self) -> usize {
        self.b.len()
    }

    pub fn a_plus(&self) -> &[Vec<UnitRational>] {
        &self.a_plus
    }

    pub fn a_minus(&self) -> &[Vec<UnitRational>] {
        &self.a_minus
    }

    pub fn b(&self) -> &[UnitRational] {
        &self.b
    }

    pub fn a_plus_at(&self, row: usize, column: usize) -> &UnitRational {
        &self.a_plus[row][column]
    }

    pub fn a_minus_at(&self, row: usize, column: usize) -> &UnitRational {
        &self.a_minus[row][column]
    }

    fn is_null_column(&self, column: usize) -> bool {
        (0..self.rows()).all(|i| self.a_plus[i][column].is_zero() && self.a_minus[i][column].is_zero())
    }

    /// Left-hand side of every equation at `x`.
    pub fn evaluate(&self, x: &[UnitRational]) -> Result<Vec<UnitRational>> {
        if x.len() != self.columns {
            return Err(Error::Dimension(format!(
                "candidate has {} components, system has {} unknowns",
                x.len(),
                self.columns
            )));
        }
        (0..self.rows())
            .map(|i| eval_bipolar_row(&self.a_plus[i], &self.a_minus[i], x))
            .collect()
    }

    /// `true` iff `x` satisfies every equation exactly.
    pub fn is_solution(&self, x: &[UnitRational]) -> Result<bool> {
        Ok(self.evaluate(x)?.iter().zip(&self.b).all(|(lhs, rhs)| lhs == rhs))
    }
}

/// A tuple `(x_1, ..., x_m)` proposed as a solution.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CandidateSolution(pub Vec<UnitRational>);

impl CandidateSolution {
    pub fn values(&self) -> &[UnitRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Component-wise `self <= other`.
    pub fn is_below(&self, other: &CandidateSolution) -> bool {
        crate::algebra::dominated_by(&self.0, &other.0)
    }

    pub fn parse(items: &[&str]) -> Result<Self> {
        items.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>().map(CandidateSolution)
    }
}

impl fmt::Display for CandidateSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for CandidateSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Vec<UnitRational>> for CandidateSolution {
    fn from(v: Vec<UnitRational>) -> Self {
        CandidateSolution(v)
    }
}

/// Columns removed by [`preprocess`]. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PreprocessReport {
    pub original_columns: usize,
    pub dropped_columns: Vec<usize>,
    /// `column_map[k]` is the original index of retained column `k`.
    pub column_map: Vec<usize>,
}

/// One slot of a solution expanded back to the original arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Slot {
    Value(UnitRational),
    /// Column had only zero coefficients; any value in `[0, 1]` works.
    Free,
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Value(v) => write!(f, "{v}"),
            Slot::Free => f.write_str("free"),
        }
    }
}

impl PreprocessReport {
    /// Re-inserts dropped columns as [`Slot::Free`].
    pub fn expand(&self, reduced: &CandidateSolution) -> Vec<Slot> {
        let mut slots = vec![Slot::Free; self.original_columns];
        for (k, &orig) in self.column_map.iter().enumerate() {
            slots[orig] = Slot::Value(reduced.0[k].clone());
        }
        slots
    }

    /// Restricts an original-arity tuple to the retained columns.
    pub fn restrict(&self, original: &[UnitRational]) -> CandidateSolution {
        CandidateSolution(self.column_map.iter().map(|&j| original[j].clone()).collect())
    }
}

/// Drops every column whose `a⁺` and `a⁻` coefficients are all zero.
///
/// Such unknowns never influence any equation. The result may have zero
/// columns; every row then evaluates to 0.
pub fn preprocess(system: &BipolarSystem) -> (BipolarSystem, PreprocessReport) {
    let (kept, dropped): (Vec<usize>, Vec<usize>) =
        (0..system.columns()).partition(|&j| !system.is_null_column(j));
    let pick = |rows: &[Vec<UnitRational>]| -> Vec<Vec<UnitRational>> {
        rows.iter()
            .map(|row| kept.iter().map(|&j| row[j].clone()).collect())
            .collect()
    };
    let reduced = BipolarSystem {
        a_plus: pick(&system.a_plus),
        a_minus: pick(&system.a_minus),
        b: system.b.clone(),
        columns: kept.len(),
    };
    let report = PreprocessReport {
        original_columns: system.columns(),
        dropped_columns: dropped,
        column_map: kept,
    };
    (reduced, report)
}
