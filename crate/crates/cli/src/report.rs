//! Serializable reports. Every number is an exact fraction string; decimals
//! appear only in the optional `decimal` annotation. Index sets are 1-based.

use std::fmt::Write as _;

use bipolar_fre::{IndexSet, UnitRational};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictLabel {
    Solvable,
    Unsolvable,
}

impl VerdictLabel {
    pub fn from_bool(solvable: bool) -> Self {
        if solvable {
            VerdictLabel::Solvable
        } else {
            VerdictLabel::Unsolvable
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            VerdictLabel::Solvable => "solvable",
            VerdictLabel::Unsolvable => "unsolvable",
        }
    }
}

pub type Tuple = Vec<String>;

pub fn tuple(values: &[UnitRational]) -> Tuple {
    values.iter().map(ToString::to_string).collect()
}

pub fn decimal_tuple(values: &[UnitRational], places: usize) -> Tuple {
    values.iter().map(|v| v.to_decimal(places)).collect()
}

pub fn one_based(set: IndexSet) -> Vec<usize> {
    set.indices().map(|j| j + 1).collect()
}

fn paren(t: &[String]) -> String {
    format!("({})", t.join(", "))
}

fn braces(s: &[usize]) -> String {
    let items: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreDoc {
    pub x_bar: Tuple,
    pub y_bar: Tuple,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairDoc {
    pub j_plus: Vec<usize>,
    pub j_minus: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SolutionsDoc {
    pub greatest: Option<Tuple>,
    pub least: Option<Tuple>,
    pub maximal: Vec<Tuple>,
    pub minimal: Vec<Tuple>,
}

impl SolutionsDoc {
    pub fn build(
        greatest: Option<&[UnitRational]>,
        least: Option<&[UnitRational]>,
        maximal: &[Vec<UnitRational>],
        minimal: &[Vec<UnitRational>],
        render: impl Fn(&[UnitRational]) -> Tuple,
    ) -> Self {
        SolutionsDoc {
            greatest: greatest.map(&render),
            least: least.map(&render),
            maximal: maximal.iter().map(|x| render(x)).collect(),
            minimal: minimal.iter().map(|x| render(x)).collect(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FamiliesDoc {
    pub s_plus_maximal: Vec<Vec<usize>>,
    pub s_minus_maximal: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub rows: usize,
    pub columns: usize,
    pub verdict: VerdictLabel,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub fre_greatest: FreDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<PairDoc>,
    pub families: FamiliesDoc,
    pub solutions: SolutionsDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decimal: Option<SolutionsDoc>,
    pub free_columns: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

fn write_solutions(out: &mut String, s: &SolutionsDoc, decimal: Option<&SolutionsDoc>) {
    let note = |d: Option<&Tuple>| d.map(|t| format!("  ≈ {}", paren(t))).unwrap_or_default();
    let opt = |t: &Option<Tuple>| t.as_ref().map(|t| paren(t)).unwrap_or_else(|| "none".into());
    let _ = writeln!(out, "greatest: {}{}", opt(&s.greatest), note(decimal.and_then(|d| d.greatest.as_ref())));
    let _ = writeln!(out, "least: {}{}", opt(&s.least), note(decimal.and_then(|d| d.least.as_ref())));
    let _ = writeln!(out, "maximal solutions ({}):", s.maximal.len());
    for (k, t) in s.maximal.iter().enumerate() {
        let _ = writeln!(out, "  {}{}", paren(t), note(decimal.map(|d| &d.maximal[k])));
    }
    let _ = writeln!(out, "minimal solutions ({}):", s.minimal.len());
    for (k, t) in s.minimal.iter().enumerate() {
        let _ = writeln!(out, "  {}{}", paren(t), note(decimal.map(|d| &d.minimal[k])));
    }
}

impl SolveReport {
    pub fn to_text(&self, column_labels: Option<&[String]>) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "system: {} equation(s), {} unknown(s)", self.rows, self.columns);
        if let Some(labels) = column_labels {
            let _ = writeln!(out, "unknowns: {}", labels.join(", "));
        }
        let _ = writeln!(out, "verdict: {}", self.verdict.as_str());
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "witness: {w}");
        }
        let _ = writeln!(out, "x̄ = {}", paren(&self.fre_greatest.x_bar));
        let _ = writeln!(out, "ȳ = {}", paren(&self.fre_greatest.y_bar));
        if let Some(pair) = &self.certificate {
            let _ = writeln!(out, "feasible pair: ({}, {})", braces(&pair.j_plus), braces(&pair.j_minus));
        }
        if self.verdict == VerdictLabel::Solvable {
            let sets = |v: &[Vec<usize>]| v.iter().map(|s| braces(s)).collect::<Vec<_>>().join(" ");
            let _ = writeln!(out, "S⁺ maximal: {}", sets(&self.families.s_plus_maximal));
            let _ = writeln!(out, "S⁻ maximal: {}", sets(&self.families.s_minus_maximal));
            write_solutions(&mut out, &self.solutions, self.decimal.as_ref());
        }
        if !self.free_columns.is_empty() {
            let _ = writeln!(out, "free columns (any value in [0, 1]): {}", braces(&self.free_columns));
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(out, "time: {ms:.3} ms");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowDoc {
    pub row: usize,
    pub value: String,
    pub target: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub candidate: Tuple,
    pub rows: Vec<RowDoc>,
    pub verdict: bool,
}

impl CheckReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "candidate: {}", paren(&self.candidate));
        for r in &self.rows {
            let rel = if r.holds { "=" } else { "≠" };
            let _ = writeln!(out, "row {}: {} {rel} {}", r.row, r.value, r.target);
        }
        let _ = writeln!(out, "verdict: {}", if self.verdict { "solution" } else { "not a solution" });
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairsReport {
    pub verdict: VerdictLabel,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub tight_columns: Vec<usize>,
    pub s_plus: Vec<Vec<usize>>,
    pub s_minus: Vec<Vec<usize>>,
    pub s_plus_maximal: Vec<Vec<usize>>,
    pub s_minus_maximal: Vec<Vec<usize>>,
}

impl PairsReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "verdict: {}", self.verdict.as_str());
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "witness: {w}");
            return out;
        }
        let sets = |v: &[Vec<usize>]| v.iter().map(|s| braces(s)).collect::<Vec<_>>().join(" ");
        let _ = writeln!(out, "tight columns: {}", braces(&self.tight_columns));
        let _ = writeln!(out, "S⁺ ({}): {}", self.s_plus.len(), sets(&self.s_plus));
        let _ = writeln!(out, "S⁻ ({}): {}", self.s_minus.len(), sets(&self.s_minus));
        let _ = writeln!(out, "S⁺ maximal: {}", sets(&self.s_plus_maximal));
        let _ = writeln!(out, "S⁻ maximal: {}", sets(&self.s_minus_maximal));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleDoc {
    pub verdict: VerdictLabel,
    pub extreme_solutions: Vec<Tuple>,
    pub maximal: Vec<Tuple>,
    pub minimal: Vec<Tuple>,
}

impl OracleDoc {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "verdict: {}", self.verdict.as_str());
        let _ = writeln!(out, "solving extreme tuples: {}", self.extreme_solutions.len());
        let _ = writeln!(out, "maximal solutions ({}):", self.maximal.len());
        for t in &self.maximal {
            let _ = writeln!(out, "  {}", paren(t));
        }
        let _ = writeln!(out, "minimal solutions ({}):", self.minimal.len());
        for t in &self.minimal {
            let _ = writeln!(out, "  {}", paren(t));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenReport {
    pub path: String,
    pub seed: u64,
    pub rows: usize,
    pub columns: usize,
    pub grid: u32,
}

impl GenReport {
    pub fn to_text(&self) -> String {
        format!(
            "wrote {} ({} equation(s), {} unknown(s), grid 1/{}, seed {})\n",
            self.path, self.rows, self.columns, self.grid, self.seed
        )
    }
}
