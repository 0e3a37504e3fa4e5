//! Brute-force ground truth.
//!
//! Any solution can be pushed, slot by slot, to one whose components are all
//! `x̄_j` or `1 - ȳ_j` without leaving the solution set, in either direction.
//! So the `2^m` such "extreme" tuples decide solvability and contain every
//! maximal and minimal solution. This module enumerates them and checks each
//! one by direct evaluation. It only borrows `(x̄, ȳ)` from the FRE module;
//! feasible pairs, index families and the closed forms are not used.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{eval_bipolar_row, eval_fre_row, negate, UnitRational};
use crate::error::{Error, Result};
use crate::fre::greatest_fre_candidate;
use crate::problem::{BipolarSystem, CandidateSolution};

pub const DEFAULT_ORACLE_CAP: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub solvable: bool,
    /// Distinct solving extreme tuples, sorted.
    pub extreme_solutions: Vec<CandidateSolution>,
    pub maximal: Vec<CandidateSolution>,
    pub minimal: Vec<CandidateSolution>,
}

fn check_cap(m: usize, cap: usize) -> Result<()> {
    if m > cap || m >= 63 {
        return Err(Error::TooLarge {
            what: "m",
            size: m,
            cap,
        });
    }
    Ok(())
}

fn solves(system: &BipolarSystem, x: &[UnitRational]) -> bool {
    (0..system.rows()).all(|i| {
        eval_bipolar_row(&system.a_plus()[i], &system.a_minus()[i], x).expect("arity checked") == system.b()[i]
    })
}

/// Elements of `items` with nothing strictly above them (`upward`) or below.
fn extremal_elements(items: &[CandidateSolution], upward: bool) -> Vec<CandidateSolution> {
    items
        .iter()
        .filter(|x| {
            !items.iter().any(|y| {
                y != *x && if upward { x.is_below(y) } else { y.is_below(x) }
            })
        })
        .cloned()
        .collect()
}

/// Exhaustive search over the `2^m` extreme tuples.
pub fn oracle_solve(system: &BipolarSystem, cap: usize) -> Result<OracleReport> {
    let m = system.columns();
    check_cap(m, cap)?;
    let fre = greatest_fre_candidate(system);
    let fre_ok = (0..system.rows()).all(|i| {
        eval_fre_row(&system.a_plus()[i], &system.a_minus()[i], &fre.x_bar, &fre.y_bar).expect("arity checked")
            == system.b()[i]
    });
    if !fre_ok {
        return Ok(OracleReport {
            solvable: false,
            extreme_solutions: Vec::new(),
            maximal: Vec::new(),
            minimal: Vec::new(),
        });
    }
    let low: Vec<UnitRational> = fre.y_bar.iter().map(negate).collect();
    let mut found = BTreeSet::new();
    for mask in 0u64..(1u64 << m) {
        let x: Vec<UnitRational> = (0..m)
            .map(|j| if mask >> j & 1 == 1 { fre.x_bar[j].clone() } else { low[j].clone() })
            .collect();
        if solves(system, &x) {
            found.insert(CandidateSolution(x));
        }
    }
    let extreme_solutions: Vec<CandidateSolution> = found.into_iter().collect();
    Ok(OracleReport {
        solvable: !extreme_solutions.is_empty(),
        maximal: extremal_elements(&extreme_solutions, true),
        minimal: extremal_elements(&extreme_solutions, false),
        extreme_solutions,
    })
}

/// Exact value of one row at a candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCheck {
    pub value: UnitRational,
    pub target: UnitRational,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowReport {
    pub rows: Vec<RowCheck>,
    pub verdict: bool,
}

/// Evaluates every row at `x` and compares with `b` exactly.
pub fn verify_solution(system: &BipolarSystem, x: &CandidateSolution) -> Result<RowReport> {
    let rows: Vec<RowCheck> = system
        .evaluate(x.values())?
        .into_iter()
        .zip(system.b())
        .map(|(value, target)| RowCheck {
            holds: value == *target,
            value,
            target: target.clone(),
        })
        .collect();
    Ok(RowReport {
        verdict: rows.iter().all(|r| r.holds),
        rows,
    })
}

fn grid_value(rng: &mut ChaCha8Rng, d: u32) -> UnitRational {
    UnitRational::frac(rng.gen_range(0..=d) as i64, d as i64)
}

/// Deterministic instance with every scalar drawn uniformly from
/// `{0, 1/d, .., d/d}`.
pub fn random_instance(seed: u64, m: usize, n: usize, grid_denominator: u32) -> BipolarSystem {
    assert!(m >= 1 && n >= 1 && grid_denominator >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = grid_denominator;
    let matrix = |rng: &mut ChaCha8Rng| -> Vec<Vec<UnitRational>> {
        (0..n).map(|_| (0..m).map(|_| grid_value(rng, d)).collect()).collect()
    };
    let a_plus = matrix(&mut rng);
    let a_minus = matrix(&mut rng);
    let b = (0..n).map(|_| grid_value(&mut rng, d)).collect();
    BipolarSystem::new(a_plus, a_minus, b).expect("generated dimensions are consistent")
}

/// Like [`random_instance`] but `b` is the left-hand side at a random grid
/// point, so the instance is always solvable.
pub fn planted_instance(seed: u64, m: usize, n: usize, grid_denominator: u32) -> (BipolarSystem, CandidateSolution) {
    let base = random_instance(seed, m, n, grid_denominator);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let x: Vec<UnitRational> = (0..m).map(|_| grid_value(&mut rng, grid_denominator)).collect();
    let b = base.evaluate(&x).expect("arity matches");
    let system =
        BipolarSystem::new(base.a_plus().to_vec(), base.a_minus().to_vec(), b).expect("dimensions unchanged");
    (system, CandidateSolution(x))
}

/// Every point of the grid `{0, 1/steps, .., 1}^m` that solves the system.
/// A coarse sanity check for off-extreme solutions.
pub fn grid_solutions(system: &BipolarSystem, steps: u32, cap: usize) -> Result<Vec<CandidateSolution>> {
    let m = system.columns();
    let points: Vec<UnitRational> = (0..=steps).map(|k| UnitRational::frac(k as i64, steps as i64)).collect();
    let total = (points.len() as u128).checked_pow(m as u32).filter(|&t| t <= cap as u128).ok_or(
        Error::TooLarge {
            what: "grid points",
            size: usize::MAX,
            cap,
        },
    )?;
    let mut out = Vec::new();
    for mut code in 0..total as usize {
        let mut x = Vec::with_capacity(m);
        for _ in 0..m {
            x.push(points[code % points.len()].clone());
            code /= points.len();
        }
        if solves(system, &x) {
            out.push(CandidateSolution(x));
        }
    }
    out.sort();
    Ok(out)
}
