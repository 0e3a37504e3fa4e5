//! Exact solver for bipolar max-product fuzzy relation equations with the
//! standard negation:
//!
//! ```text
//! max_j (a⁺_ij * x_j) ∨ (a⁻_ij * (1 - x_j)) = b_i,   i = 1..n,  x_j ∈ [0, 1]
//! ```
//!
//! All arithmetic is over exact rationals. The crate decides solvability and
//! returns greatest/least and maximal/minimal solutions in closed form, with
//! a brute-force [`oracle`] for cross-checking.
//!
//! ```
//! use bipolar_fre::{extremal_system, BipolarSystem, CandidateSolution, Limits};
//!
//! let system = BipolarSystem::parse(&[&["0.8", "0.5"]], &[&["0.1", "0.4"]], &["0.4"]).unwrap();
//! let report = extremal_system(&system, &Limits::default()).unwrap();
//! assert_eq!(report.greatest, Some(CandidateSolution::parse(&["1/2", "4/5"]).unwrap()));
//! assert_eq!(report.least, Some(CandidateSolution::parse(&["0", "0"]).unwrap()));
//! ```

pub mod algebra;
pub mod error;
pub mod fre;
pub mod oracle;
pub mod problem;
pub mod single;
pub mod system;
pub mod witness;

pub use algebra::{eval_bipolar_row, eval_fre_row, negate, residuum, tnorm, UnitRational};
pub use error::{Error, Result};
pub use fre::{greatest_fre_candidate, is_fre_solution, FreGreatestSolution};
pub use oracle::{oracle_solve, random_instance, verify_solution, OracleReport, RowReport};
pub use problem::{preprocess, validate, BipolarSystem, CandidateSolution, PreprocessReport, RawSystem, Slot};
pub use single::{analyze_single, extremal_single, solvable_single, zero_rhs_solution, SingleAnalysis};
pub use system::{
    enumerate_families, extremal_system, is_feasible_pair, pair_to_solution, push_down, push_up, system_solvable,
    ExtremalReport, FeasibleFamilies, FeasiblePair, IndexSet, Limits,
};
pub use witness::{Verdict, Witness};
