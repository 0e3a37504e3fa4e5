//! Greatest solution of the corresponding (non-bipolar) max-product FRE.
//!
//! Replacing every `1 - x_j` by an independent unknown `y_j` gives
//!
//! ```text
//! max_j (a⁺_ij * x_j) ∨ (a⁻_ij * y_j) = b_i
//! ```
//!
//! whose greatest solution, when one exists, is the component-wise minimum
//! of Goguen residua over the rows. Every solvability test for the bipolar
//! problem is phrased in terms of this tuple `(x̄, ȳ)`.

use crate::algebra::{eval_fre_row, residuum, tnorm, UnitRational};
use crate::error::{Error, Result};
use crate::problem::BipolarSystem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreGreatestSolution {
    pub x_bar: Vec<UnitRational>,
    pub y_bar: Vec<UnitRational>,
    /// `(x̄, ȳ)` satisfies every row exactly.
    pub fre_solvable: bool,
}

impl FreGreatestSolution {
    /// `x̄_j + ȳ_j` as an exact rational (may exceed 1).
    pub fn sum(&self, column: usize) -> num_rational::BigRational {
        self.x_bar[column].as_rational() + self.y_bar[column].as_rational()
    }

    /// `(x̄_1, ȳ_1, ..., x̄_m, ȳ_m)`.
    pub fn interleaved(&self) -> Vec<UnitRational> {
        self.x_bar
            .iter()
            .zip(&self.y_bar)
            .flat_map(|(x, y)| [x.clone(), y.clone()])
            .collect()
    }

    /// First row that `(x̄, ȳ)` fails to reach, if any.
    pub fn first_unreached_row(&self, system: &BipolarSystem) -> Option<usize> {
        (0..system.rows()).find(|&i| {
            let lhs = eval_fre_row(&system.a_plus()[i], &system.a_minus()[i], &self.x_bar, &self.y_bar)
                .expect("greatest candidate has system arity");
            lhs != system.b()[i]
        })
    }
}

/// Row-wise residual minima `x̄_j = min_i (a⁺_ij → b_i)`, `ȳ_j = min_i (a⁻_ij → b_i)`,
/// plus a direct-substitution check of whether they solve the FRE.
pub fn greatest_fre_candidate(system: &BipolarSystem) -> FreGreatestSolution {
    let m = system.columns();
    let mut x_bar = vec![UnitRational::one(); m];
    let mut y_bar = vec![UnitRational::one(); m];
    for (i, b) in system.b().iter().enumerate() {
        for j in 0..m {
            let rx = residuum(system.a_plus_at(i, j), b);
            if rx < x_bar[j] {
                x_bar[j] = rx;
            }
            let ry = residuum(system.a_minus_at(i, j), b);
            if ry < y_bar[j] {
                y_bar[j] = ry;
            }
        }
    }
    let mut candidate = FreGreatestSolution {
        x_bar,
        y_bar,
        fre_solvable: false,
    };
    candidate.fre_solvable = candidate.first_unreached_row(system).is_none();
    candidate
}

/// `true` iff `(x, y)` satisfies every row of the corresponding FRE exactly.
pub fn is_fre_solution(system: &BipolarSystem, x: &[UnitRational], y: &[UnitRational]) -> Result<bool> {
    let m = system.columns();
    if x.len() != m || y.len() != m {
        return Err(Error::Dimension(format!(
            "expected {m} x and {m} y components, got {} and {}",
            x.len(),
            y.len()
        )));
    }
    for (i, b) in system.b().iter().enumerate() {
        if eval_fre_row(&system.a_plus()[i], &system.a_minus()[i], x, y)? != *b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `a⁺_ij * x̄_j == b_i`: column `j` attains row `i` through its positive literal.
pub(crate) fn attains_plus(system: &BipolarSystem, fre: &FreGreatestSolution, row: usize, column: usize) -> bool {
    tnorm(system.a_plus_at(row, column), &fre.x_bar[column]) == system.b()[row]
}

/// `a⁻_ij * ȳ_j == b_i`: column `j` attains row `i` through its negated literal.
pub(crate) fn attains_minus(system: &BipolarSystem, fre: &FreGreatestSolution, row: usize, column: usize) -> bool {
    tnorm(system.a_minus_at(row, column), &fre.y_bar[column]) == system.b()[row]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::dominated_by;
    use proptest::prelude::*;

    fn q(s: &str) -> UnitRational {
        s.parse().unwrap()
    }

    fn v(items: &[&str]) -> Vec<UnitRational> {
        items.iter().map(|s| q(s)).collect()
    }

    fn three_by_three() -> BipolarSystem {
        BipolarSystem::parse(
            &[&["0.1", "0.25", "0.4"], &["0.1", "0.3", "0.3"], &["0.3", "0.4", "0.8"]],
            &[&["0.3", "0.3", "0.4"], &["0.8", "0.6", "0.5"], &["0.8", "0.5", "0.8"]],
            &["0.2", "0.4", "0.4"],
        )
        .unwrap()
    }

    #[test]
    fn two_column_greatest() {
        let s = BipolarSystem::parse(&[&["0.8", "0.5"]], &[&["0.1", "0.4"]], &["0.4"]).unwrap();
        let g = greatest_fre_candidate(&s);
        assert_eq!(g.x_bar, v(&["0.5", "0.8"]));
        assert_eq!(g.y_bar, v(&["1", "1"]));
        assert!(g.fre_solvable);
        assert_eq!(g.interleaved(), v(&["0.5", "1", "0.8", "1"]));
    }

    #[test]
    fn three_by_three_greatest() {
        let g = greatest_fre_candidate(&three_by_three());
        assert_eq!(g.x_bar, v(&["1", "0.8", "0.5"]));
        assert_eq!(g.y_bar, v(&["0.5", "2/3", "0.5"]));
        assert!(g.fre_solvable);
        assert_eq!(g.interleaved(), v(&["1", "0.5", "0.8", "2/3", "0.5", "0.5"]));
    }

    #[test]
    fn conflicting_greatest() {
        let s = BipolarSystem::parse(&[&["0.5"], &["0.1"]], &[&["0.2"], &["0.8"]], &["0.5", "0.4"]).unwrap();
        let g = greatest_fre_candidate(&s);
        assert_eq!(g.x_bar, v(&["1"]));
        assert_eq!(g.y_bar, v(&["0.5"]));
        assert!(g.fre_solvable);
    }

    #[test]
    fn zero_row_with_positive_rhs_is_unsolvable() {
        let s = BipolarSystem::parse(&[&["0.5", "0.2"], &["0", "0"]], &[&["0.1", "0"], &["0", "0"]], &["0.5", "0.1"])
            .unwrap();
        let g = greatest_fre_candidate(&s);
        assert!(!g.fre_solvable);
        assert_eq!(g.first_unreached_row(&s), Some(1));
    }

    #[test]
    fn fre_solution_membership() {
        let s = three_by_three();
        let g = greatest_fre_candidate(&s);
        assert!(is_fre_solution(&s, &g.x_bar, &g.y_bar).unwrap());
        let mut bumped = g.x_bar.clone();
        bumped[1] = UnitRational::one();
        // Row 1 then contains 0.25 * 1 = 0.25 > 0.2.
        assert!(!is_fre_solution(&s, &bumped, &g.y_bar).unwrap());

        let zero_rhs = BipolarSystem::parse(&[&["0.3", "0.7"]], &[&["0.2", "0.9"]], &["0"]).unwrap();
        let zeros = v(&["0", "0"]);
        assert!(is_fre_solution(&zero_rhs, &zeros, &zeros).unwrap());
        assert!(matches!(is_fre_solution(&zero_rhs, &zeros, &v(&["0"])), Err(Error::Dimension(_))));
    }

    fn grid_system(m: usize, n: usize) -> impl Strategy<Value = BipolarSystem> {
        let cell = (0i64..=4).prop_map(|k| UnitRational::frac(k, 4));
        (
            proptest::collection::vec(proptest::collection::vec(cell.clone(), m), n),
            proptest::collection::vec(proptest::collection::vec(cell.clone(), m), n),
            proptest::collection::vec(cell, n),
        )
            .prop_map(|(p, q, b)| BipolarSystem::new(p, q, b).unwrap())
    }

    // Every solution on the quarter grid (the grid contains the coefficients,
    // so residua of grid values land on a finer grid; we only check domination
    // and safety, which must hold for every FRE solution).
    fn grid_fre_solutions(s: &BipolarSystem) -> Vec<(Vec<UnitRational>, Vec<UnitRational>)> {
        let m = s.columns();
        let points: Vec<UnitRational> = (0..=4).map(|k| UnitRational::frac(k, 4)).collect();
        let total = points.len().pow(2 * m as u32);
        let mut out = Vec::new();
        for mut code in 0..total {
            let mut xy = Vec::with_capacity(2 * m);
            for _ in 0..2 * m {
                xy.push(points[code % points.len()].clone());
                code /= points.len();
            }
            let (x, y) = xy.split_at(m);
            if is_fre_solution(s, x, y).unwrap() {
                out.push((x.to_vec(), y.to_vec()));
            }
        }
        out
    }

    proptest! {
        #[test]
        fn solvable_flag_matches_substitution(s in grid_system(3, 2)) {
            let g = greatest_fre_candidate(&s);
            prop_assert_eq!(g.fre_solvable, is_fre_solution(&s, &g.x_bar, &g.y_bar).unwrap());
        }

        #[test]
        fn residual_minima_are_safe(s in grid_system(3, 3)) {
            let g = greatest_fre_candidate(&s);
            for i in 0..s.rows() {
                for j in 0..s.columns() {
                    prop_assert!(tnorm(s.a_plus_at(i, j), &g.x_bar[j]) <= s.b()[i]);
                    prop_assert!(tnorm(s.a_minus_at(i, j), &g.y_bar[j]) <= s.b()[i]);
                }
            }
        }

        #[test]
        fn greatest_dominates_grid_solutions(s in grid_system(2, 2)) {
            let g = greatest_fre_candidate(&s);
            let found = grid_fre_solutions(&s);
            if !found.is_empty() {
                prop_assert!(g.fre_solvable);
            }
            for (x, y) in found {
                prop_assert!(dominated_by(&x, &g.x_bar));
                prop_assert!(dominated_by(&y, &g.y_bar));
            }
        }
    }
}
