//! Closed-form analysis of one bipolar equation
//! `max_j (a⁺_j * x_j) ∨ (a⁻_j * (1 - x_j)) = b`.
//!
//! With `(x̄, ȳ)` the greatest solution of the corresponding FRE, the
//! equation is solvable iff that FRE is solvable and `x̄_j + ȳ_j >= 1` for
//! every `j`. For `b > 0` the extremal solutions are read off the index sets
//!
//! ```text
//! K⁺ = { k | a⁺_k * x̄_k = b }      K⁻ = { k | a⁻_k * ȳ_k = b }
//! ```
//!
//! * `K⁺ ≠ ∅`: `x̄` is the greatest solution.
//! * `K⁺ = ∅`: the maximal solutions are `x̄` with slot `k` lowered to `1 - ȳ_k`, one per `k ∈ K⁻`.
//! * `K⁻ ≠ ∅`: `1 - ȳ` is the least solution.
//! * `K⁻ = ∅`: the minimal solutions are `1 - ȳ` with slot `k` raised to `x̄_k`, one per `k ∈ K⁺`.
//!
//! For `b = 0` the equation is solvable iff no column has both coefficients
//! nonzero, and then the solution is unique.

use num_rational::BigRational;
use num_traits::One;

use crate::algebra::{negate, UnitRational};
use crate::error::{Error, Result};
use crate::fre::{attains_minus, attains_plus, greatest_fre_candidate, FreGreatestSolution};
use crate::problem::{BipolarSystem, CandidateSolution};
use crate::witness::{Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingleAnalysis {
    pub solvable: bool,
    pub fre: FreGreatestSolution,
    /// `K⁺`, 0-based, ascending.
    pub k_plus: Vec<usize>,
    /// `K⁻`, 0-based, ascending.
    pub k_minus: Vec<usize>,
    pub greatest: Option<CandidateSolution>,
    pub least: Option<CandidateSolution>,
    /// Lexicographically sorted antichain.
    pub maximal: Vec<CandidateSolution>,
    /// Lexicographically sorted antichain.
    pub minimal: Vec<CandidateSolution>,
    pub witness: Option<Witness>,
}

fn require_single(eq: &BipolarSystem) -> Result<()> {
    if eq.rows() != 1 {
        return Err(Error::Dimension(format!(
            "single-equation analysis needs n = 1, got n = {}",
            eq.rows()
        )));
    }
    Ok(())
}

fn sum_witness(fre: &FreGreatestSolution) -> Option<Witness> {
    (0..fre.x_bar.len()).find_map(|j| {
        let sum = fre.sum(j);
        (sum < BigRational::one()).then_some(Witness::SumBelowOne { column: j, sum })
    })
}

fn verdict_from(eq: &BipolarSystem, fre: &FreGreatestSolution) -> Verdict<()> {
    if let Some(row) = fre.first_unreached_row(eq) {
        return Verdict::Unsolvable(Witness::FreUnsolvable { row });
    }
    match sum_witness(fre) {
        Some(w) => Verdict::Unsolvable(w),
        None => Verdict::Solvable(()),
    }
}

/// Solvability of a single equation: the corresponding FRE must be solvable
/// and `1 <= x̄_j + ȳ_j` must hold for every column.
pub fn solvable_single(eq: &BipolarSystem) -> Result<Verdict<()>> {
    require_single(eq)?;
    Ok(verdict_from(eq, &greatest_fre_candidate(eq)))
}

/// Coefficient criterion for `b = 0`: every column has `a⁺_j = 0` or `a⁻_j = 0`.
pub fn zero_rhs_solvable(eq: &BipolarSystem) -> Result<bool> {
    require_single(eq)?;
    Ok((0..eq.columns()).all(|j| eq.a_plus_at(0, j).is_zero() || eq.a_minus_at(0, j).is_zero()))
}

/// The solution of a solvable equation with `b = 0`: `x̂_j = 1` where
/// `a⁺_j = 0`, `x̂_j = 0` where `a⁻_j = 0`. Unique once all-zero columns are
/// dropped; on such a column any value works and `1` is returned.
pub fn zero_rhs_solution(eq: &BipolarSystem) -> Result<CandidateSolution> {
    require_single(eq)?;
    if !eq.b()[0].is_zero() {
        return Err(Error::Contract(format!("right-hand side is {}, not 0", eq.b()[0])));
    }
    if !zero_rhs_solvable(eq)? {
        return Err(Error::Contract("equation with b = 0 has a column with both coefficients nonzero".into()));
    }
    Ok(CandidateSolution(
        (0..eq.columns())
            .map(|j| {
                if eq.a_plus_at(0, j).is_zero() {
                    UnitRational::one()
                } else {
                    UnitRational::zero()
                }
            })
            .collect(),
    ))
}

fn with_slot(base: &[UnitRational], k: usize, value: &UnitRational) -> CandidateSolution {
    let mut v = base.to_vec();
    v[k] = value.clone();
    CandidateSolution(v)
}

fn sorted(mut v: Vec<CandidateSolution>) -> Vec<CandidateSolution> {
    v.sort();
    v.dedup();
    v
}

fn singleton(v: &[CandidateSolution]) -> Option<CandidateSolution> {
    match v {
        [only] => Some(only.clone()),
        _ => None,
    }
}

/// Greatest/least and maximal/minimal solutions of a solvable equation.
///
/// With `b = 0` every column attains, so greatest and least coincide with
/// [`zero_rhs_solution`] except on all-zero columns, which stay free.
pub fn extremal_single(eq: &BipolarSystem) -> Result<SingleAnalysis> {
    let analysis = analyze_single(eq)?;
    if !analysis.solvable {
        return Err(Error::Contract(format!(
            "equation is unsolvable ({})",
            analysis.witness.as_ref().expect("unsolvable analysis carries a witness")
        )));
    }
    Ok(analysis)
}

/// Total version of [`extremal_single`]: unsolvable equations come back with
/// `solvable = false`, empty solution lists and a witness.
pub fn analyze_single(eq: &BipolarSystem) -> Result<SingleAnalysis> {
    require_single(eq)?;
    let fre = greatest_fre_candidate(eq);
    let m = eq.columns();
    let k_plus: Vec<usize> = (0..m).filter(|&k| attains_plus(eq, &fre, 0, k)).collect();
    let k_minus: Vec<usize> = (0..m).filter(|&k| attains_minus(eq, &fre, 0, k)).collect();
    let mut analysis = SingleAnalysis {
        solvable: false,
        fre,
        k_plus,
        k_minus,
        greatest: None,
        least: None,
        maximal: Vec::new(),
        minimal: Vec::new(),
        witness: None,
    };

    if let Verdict::Unsolvable(w) = verdict_from(eq, &analysis.fre) {
        analysis.witness = Some(w);
        return Ok(analysis);
    }
    analysis.solvable = true;

    let x_bar = &analysis.fre.x_bar;
    let low: Vec<UnitRational> = analysis.fre.y_bar.iter().map(negate).collect();

    analysis.maximal = if analysis.k_plus.is_empty() {
        sorted(analysis.k_minus.iter().map(|&k| with_slot(x_bar, k, &low[k])).collect())
    } else {
        vec![CandidateSolution(x_bar.clone())]
    };
    analysis.minimal = if analysis.k_minus.is_empty() {
        sorted(analysis.k_plus.iter().map(|&k| with_slot(&low, k, &x_bar[k])).collect())
    } else {
        vec![CandidateSolution(low)]
    };
    analysis.greatest = singleton(&analysis.maximal);
    analysis.least = singleton(&analysis.minimal);
    Ok(analysis)
}
