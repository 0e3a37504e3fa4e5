//! The on-disk problem format: one JSON document per instance, every scalar
//! a string in decimal (`"0.25"`) or fraction (`"1/4"`) form so nothing is
//! routed through floating point.

use bipolar_fre::algebra::parse_rational;
use bipolar_fre::{validate, BipolarSystem, RawSystem};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub schema_version: String,
    pub a_plus: Vec<Vec<String>>,
    pub a_minus: Vec<Vec<String>>,
    pub b: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub row_labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub column_labels: Option<Vec<String>>,
}

impl ProblemDocument {
    /// Document for `system` with every scalar in lowest-terms fraction form.
    pub fn from_system(system: &BipolarSystem) -> Self {
        let matrix = |rows: &[Vec<bipolar_fre::UnitRational>]| -> Vec<Vec<String>> {
            rows.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect()
        };
        ProblemDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            a_plus: matrix(system.a_plus()),
            a_minus: matrix(system.a_minus()),
            b: system.b().iter().map(ToString::to_string).collect(),
            row_labels: None,
            column_labels: None,
        }
    }

    /// Exact system described by the document. Range and shape problems are
    /// reported by [`validate`].
    pub fn to_system(&self) -> Result<BipolarSystem, CliError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CliError::Input(format!(
                "unsupported schema_version {:?} (expected {SCHEMA_VERSION:?})",
                self.schema_version
            )));
        }
        let scalar = |block: &str, at: String, text: &str| -> Result<BigRational, CliError> {
            parse_rational(text).map_err(|e| CliError::Input(format!("{block}{at}: {e}")))
        };
        let matrix = |block: &str, rows: &[Vec<String>]| -> Result<Vec<Vec<BigRational>>, CliError> {
            rows.iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, s)| scalar(block, format!("[{}][{}]", i + 1, j + 1), s))
                        .collect()
                })
                .collect()
        };
        let raw = RawSystem {
            a_plus: matrix("a_plus", &self.a_plus)?,
            a_minus: matrix("a_minus", &self.a_minus)?,
            b: self
                .b
                .iter()
                .enumerate()
                .map(|(i, s)| scalar("b", format!("[{}]", i + 1), s))
                .collect::<Result<_, _>>()?,
        };
        let system = validate(raw)?;
        if let Some(labels) = &self.row_labels {
            if labels.len() != system.rows() {
                return Err(CliError::Input(format!(
                    "{} row labels for {} equations",
                    labels.len(),
                    system.rows()
                )));
            }
        }
        if let Some(labels) = &self.column_labels {
            if labels.len() != system.columns() {
                return Err(CliError::Input(format!(
                    "{} column labels for {} unknowns",
                    labels.len(),
                    system.columns()
                )));
            }
        }
        Ok(system)
    }
}

/// Reads the document structure only; syntax errors carry line and column.
pub fn parse_document(text: &str) -> Result<ProblemDocument, CliError> {
    Ok(serde_json::from_str(text)?)
}

/// Document plus the exact system it describes.
pub fn parse_problem(text: &str) -> Result<(ProblemDocument, BipolarSystem), CliError> {
    let doc = parse_document(text)?;
    let system = doc.to_system()?;
    Ok((doc, system))
}

pub fn render_problem(doc: &ProblemDocument) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("documents always serialize");
    out.push('\n');
    out
}
