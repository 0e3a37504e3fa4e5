//! Systems of bipolar equations (`n >= 1`).
//!
//! Everything here is driven by the greatest solution `(x̄, ȳ)` of the
//! corresponding FRE. A pair of index sets `(J⁺, J⁻)` is *feasible* when
//!
//! * `x̄_j + ȳ_j = 1` for every `j ∈ J⁺ ∩ J⁻`, and
//! * every row `i` is attained either by some `j ∈ J⁺` with `a⁺_ij * x̄_j = b_i`
//!   or by some `j ∈ J⁻` with `a⁻_ij * ȳ_j = b_i`.
//!
//! The system is solvable iff the FRE is solvable, `x̄_j + ȳ_j >= 1` for all
//! `j`, and a feasible pair exists. The maximal elements of
//! `S⁺ = { J⁺ | (J⁺, J⁻) feasible }` are in bijection with the maximal
//! solutions (`J⁺` slots take `x̄_j`, the rest `1 - ȳ_j`), and dually the
//! maximal elements of `S⁻` index the minimal solutions.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::algebra::negate;
use crate::error::{Error, Result};
use crate::fre::{attains_minus, attains_plus, greatest_fre_candidate, FreGreatestSolution};
use crate::problem::{BipolarSystem, CandidateSolution};
use crate::witness::{Verdict, Witness};

/// Widest system the bitset representation can hold.
pub const MAX_COLUMNS: usize = 64;

/// A subset of `{0, .., m-1}`. Displayed 1-based, e.g. `{1,3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u64);

impl IndexSet {
    pub fn empty() -> Self {
        IndexSet(0)
    }

    /// `{0, .., m-1}`.
    pub fn full(m: usize) -> Self {
        assert!(m <= MAX_COLUMNS);
        if m == MAX_COLUMNS {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << m) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// From 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        IndexSet(indices.into_iter().fold(0, |acc, j| {
            assert!(j < MAX_COLUMNS, "index {j} too large");
            acc | 1 << j
        }))
    }

    /// From 1-based indices, as written in problem statements.
    pub fn from_one_based<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Self::from_indices(indices.into_iter().map(|j| j - 1))
    }

    pub fn contains(self, j: usize) -> bool {
        j < MAX_COLUMNS && self.0 >> j & 1 == 1
    }

    pub fn insert(self, j: usize) -> Self {
        IndexSet(self.0 | 1 << j)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        IndexSet(self.0 & other.0)
    }

    /// Complement within `{0, .., m-1}`.
    pub fn complement(self, m: usize) -> Self {
        IndexSet(!self.0 & Self::full(m).0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Ascending 0-based indices.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..MAX_COLUMNS).filter(move |&j| self.contains(j))
    }

    /// Highest index plus one.
    fn span(self) -> usize {
        MAX_COLUMNS - self.0.leading_zeros() as usize
    }

    /// Order used for reporting: cardinality first, then the sorted index lists.
    pub fn report_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, j) in self.indices().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", j + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FeasiblePair {
    pub j_plus: IndexSet,
    pub j_minus: IndexSet,
}

impl FeasiblePair {
    pub fn new(j_plus: IndexSet, j_minus: IndexSet) -> Self {
        FeasiblePair { j_plus, j_minus }
    }
}

impl fmt::Display for FeasiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.j_plus, self.j_minus)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FeasibleFamilies {
    pub s_plus: Vec<IndexSet>,
    pub s_minus: Vec<IndexSet>,
    pub s_plus_maximal: Vec<IndexSet>,
    pub s_minus_maximal: Vec<IndexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub solvable: bool,
    pub fre: FreGreatestSolution,
    /// A feasible pair certifying solvability.
    pub certificate: Option<FeasiblePair>,
    pub greatest: Option<CandidateSolution>,
    pub least: Option<CandidateSolution>,
    /// Lexicographically sorted antichain.
    pub maximal: Vec<CandidateSolution>,
    /// Lexicographically sorted antichain.
    pub minimal: Vec<CandidateSolution>,
    pub families: FeasibleFamilies,
    pub witness: Option<Witness>,
}

/// Caps on exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `m` for which all `2^m` subsets are swept when building `S⁺`/`S⁻`.
    pub max_enum: usize,
    /// Largest number of undecided columns searched when looking for one feasible pair.
    pub max_membership: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enum: 16,
            max_membership: 20,
        }
    }
}

/// Per-row attainment masks, precomputed once per system.
struct Coverage {
    m: usize,
    fre: FreGreatestSolution,
    /// `plus[i]` = columns `j` with `a⁺_ij * x̄_j = b_i`.
    plus: Vec<IndexSet>,
    /// `minus[i]` = columns `j` with `a⁻_ij * ȳ_j = b_i`.
    minus: Vec<IndexSet>,
    /// Columns with `x̄_j + ȳ_j = 1`.
    tight: IndexSet,
}

impl Coverage {
    fn new(system: &BipolarSystem, fre: FreGreatestSolution) -> Result<Self> {
        let m = system.columns();
        if m > MAX_COLUMNS {
            return Err(Error::TooLarge {
                what: "m",
                size: m,
                cap: MAX_COLUMNS,
            });
        }
        let row_mask = |i: usize, pred: &dyn Fn(usize, usize) -> bool| {
            IndexSet::from_indices((0..m).filter(|&j| pred(i, j)))
        };
        let plus = (0..system.rows())
            .map(|i| row_mask(i, &|i, j| attains_plus(system, &fre, i, j)))
            .collect();
        let minus = (0..system.rows())
            .map(|i| row_mask(i, &|i, j| attains_minus(system, &fre, i, j)))
            .collect();
        let tight = IndexSet::from_indices((0..m).filter(|&j| fre.sum(j).is_one()));
        Ok(Coverage {
            m,
            fre,
            plus,
            minus,
            tight,
        })
    }

    fn covers(&self, j_plus: IndexSet, j_minus: IndexSet) -> bool {
        self.plus
            .iter()
            .zip(&self.minus)
            .all(|(p, q)| p.intersects(j_plus) || q.intersects(j_minus))
    }

    fn is_feasible(&self, pair: FeasiblePair) -> bool {
        pair.j_plus.intersection(pair.j_minus).is_subset(self.tight) && self.covers(pair.j_plus, pair.j_minus)
    }

    /// Largest `J⁻` compatible with `j_plus`: everything outside it plus the tight columns.
    fn best_minus_partner(&self, j_plus: IndexSet) -> IndexSet {
        j_plus.complement(self.m).union(self.tight)
    }

    fn best_plus_partner(&self, j_minus: IndexSet) -> IndexSet {
        j_minus.complement(self.m).union(self.tight)
    }

    fn in_s_plus(&self, j_plus: IndexSet) -> bool {
        self.covers(j_plus, self.best_minus_partner(j_plus))
    }

    fn in_s_minus(&self, j_minus: IndexSet) -> bool {
        self.covers(self.best_plus_partner(j_minus), j_minus)
    }

    /// `J⁺` slots take `x̄_j`, the others `1 - ȳ_j`.
    fn upper_tuple(&self, j_plus: IndexSet) -> CandidateSolution {
        CandidateSolution(
            (0..self.m)
                .map(|j| {
                    if j_plus.contains(j) {
                        self.fre.x_bar[j].clone()
                    } else {
                        negate(&self.fre.y_bar[j])
                    }
                })
                .collect(),
        )
    }

    /// `J⁻` slots take `1 - ȳ_j`, the others `x̄_j`.
    fn lower_tuple(&self, j_minus: IndexSet) -> CandidateSolution {
        CandidateSolution(
            (0..self.m)
                .map(|j| {
                    if j_minus.contains(j) {
                        negate(&self.fre.y_bar[j])
                    } else {
                        self.fre.x_bar[j].clone()
                    }
                })
                .collect(),
        )
    }

    /// Searches for one feasible pair. Tight columns go on both sides; a
    /// non-tight column whose attained rows on one side contain those on the
    /// other takes the dominant side; only the remaining columns are
    /// branched on.
    fn find_pair(&self, cap: usize) -> Result<Option<FeasiblePair>> {
        let mut fixed_plus = self.tight;
        let mut fixed_minus = self.tight;
        let mut undecided = Vec::new();
        for j in (0..self.m).filter(|&j| !self.tight.contains(j)) {
            let mut plus_only = false;
            let mut minus_only = false;
            for (p, q) in self.plus.iter().zip(&self.minus) {
                match (p.contains(j), q.contains(j)) {
                    (true, false) => plus_only = true,
                    (false, true) => minus_only = true,
                    _ => {}
                }
            }
            match (plus_only, minus_only) {
                (true, true) => undecided.push(j),
                (false, true) => fixed_minus = fixed_minus.insert(j),
                _ => fixed_plus = fixed_plus.insert(j),
            }
        }
        if undecided.len() > cap.min(MAX_COLUMNS - 1) {
            return Err(Error::TooLarge {
                what: "undecided columns",
                size: undecided.len(),
                cap,
            });
        }
        for choice in 0u64..(1u64 << undecided.len()) {
            let mut j_plus = fixed_plus;
            let mut j_minus = fixed_minus;
            for (bit, &j) in undecided.iter().enumerate() {
                if choice >> bit & 1 == 1 {
                    j_plus = j_plus.insert(j);
                } else {
                    j_minus = j_minus.insert(j);
                }
            }
            if self.covers(j_plus, j_minus) {
                return Ok(Some(FeasiblePair::new(j_plus, j_minus)));
            }
        }
        Ok(None)
    }

    /// Looks for a column that one row can only reach through `x̄_j` and
    /// another only through `ȳ_j`, while `x̄_j + ȳ_j != 1`.
    fn forced_conflict(&self) -> Option<Witness> {
        let single_option = |p: IndexSet, q: IndexSet| -> Option<(usize, bool)> {
            match (p.len(), q.len()) {
                (1, 0) => p.indices().next().map(|j| (j, true)),
                (0, 1) => q.indices().next().map(|j| (j, false)),
                _ => None,
            }
        };
        let forced: Vec<(usize, usize, bool)> = self
            .plus
            .iter()
            .zip(&self.minus)
            .enumerate()
            .filter_map(|(i, (&p, &q))| single_option(p, q).map(|(j, side)| (i, j, side)))
            .collect();
        for &(plus_row, column, side) in &forced {
            if !side || self.tight.contains(column) {
                continue;
            }
            if let Some(&(minus_row, _, _)) = forced.iter().find(|&&(_, j, s)| j == column && !s) {
                return Some(Witness::ForcedConflict {
                    column,
                    plus_row,
                    minus_row,
                    sum: self.fre.sum(column),
                });
            }
        }
        None
    }
}

fn sum_witness(fre: &FreGreatestSolution) -> Option<Witness> {
    (0..fre.x_bar.len()).find_map(|j| {
        let sum = fre.sum(j);
        (sum < BigRational::one()).then_some(Witness::SumBelowOne { column: j, sum })
    })
}

/// Coverage for a system whose FRE is solvable; contract error otherwise.
fn certified_coverage(system: &BipolarSystem) -> Result<Coverage> {
    let fre = greatest_fre_candidate(system);
    if let Some(row) = fre.first_unreached_row(system) {
        return Err(Error::Contract(format!(
            "corresponding FRE is unsolvable (row {} cannot be attained)",
            row + 1
        )));
    }
    Coverage::new(system, fre)
}

fn check_pair_range(system: &BipolarSystem, pair: &FeasiblePair) -> Result<()> {
    let m = system.columns();
    let span = pair.j_plus.span().max(pair.j_minus.span());
    if span > m {
        return Err(Error::Dimension(format!("index {span} out of range for m = {m}")));
    }
    Ok(())
}

/// Tests both conditions of feasibility against `(x̄, ȳ)`.
pub fn is_feasible_pair(system: &BipolarSystem, pair: &FeasiblePair) -> Result<bool> {
    check_pair_range(system, pair)?;
    Ok(certified_coverage(system)?.is_feasible(*pair))
}

fn verdict_with(system: &BipolarSystem, limits: &Limits) -> Result<(Verdict<FeasiblePair>, Option<Coverage>)> {
    let fre = greatest_fre_candidate(system);
    if let Some(row) = fre.first_unreached_row(system) {
        return Ok((Verdict::Unsolvable(Witness::FreUnsolvable { row }), None));
    }
    if let Some(w) = sum_witness(&fre) {
        return Ok((Verdict::Unsolvable(w), None));
    }
    let coverage = Coverage::new(system, fre)?;
    let verdict = match coverage.find_pair(limits.max_membership)? {
        Some(pair) => Verdict::Solvable(pair),
        None => Verdict::Unsolvable(coverage.forced_conflict().unwrap_or(Witness::NoFeasiblePair)),
    };
    Ok((verdict, Some(coverage)))
}

/// Decides solvability. On success the verdict carries a feasible pair; on
/// failure it names the first condition that breaks.
pub fn system_solvable(system: &BipolarSystem, limits: &Limits) -> Result<Verdict<FeasiblePair>> {
    verdict_with(system, limits).map(|(v, _)| v)
}

/// `x̂_j = x̄_j` for `j ∈ J⁺`, `1 - ȳ_j` otherwise.
pub fn pair_to_solution(system: &BipolarSystem, pair: &FeasiblePair) -> Result<CandidateSolution> {
    check_pair_range(system, pair)?;
    let coverage = certified_coverage(system)?;
    if let Some(w) = sum_witness(&coverage.fre) {
        return Err(Error::Contract(w.to_string()));
    }
    if !coverage.is_feasible(*pair) {
        return Err(Error::Contract(format!("{pair} is not a feasible pair")));
    }
    Ok(coverage.upper_tuple(pair.j_plus))
}

fn maximal_sets(family: &[IndexSet]) -> Vec<IndexSet> {
    let mut by_size: Vec<IndexSet> = family.to_vec();
    by_size.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut maximal: Vec<IndexSet> = Vec::new();
    for s in by_size {
        if !maximal.iter().any(|&big| s.is_subset(big)) {
            maximal.push(s);
        }
    }
    maximal.sort_by(IndexSet::report_cmp);
    maximal
}

fn families_of(coverage: &Coverage, limits: &Limits) -> Result<FeasibleFamilies> {
    let m = coverage.m;
    if m > limits.max_enum.min(MAX_COLUMNS - 1) {
        return Err(Error::TooLarge {
            what: "m",
            size: m,
            cap: limits.max_enum,
        });
    }
    let subsets = || (0u64..(1u64 << m)).map(IndexSet::from_bits);
    let mut s_plus: Vec<IndexSet> = subsets().filter(|&s| coverage.in_s_plus(s)).collect();
    let mut s_minus: Vec<IndexSet> = subsets().filter(|&s| coverage.in_s_minus(s)).collect();
    s_plus.sort_by(IndexSet::report_cmp);
    s_minus.sort_by(IndexSet::report_cmp);
    Ok(FeasibleFamilies {
        s_plus_maximal: maximal_sets(&s_plus),
        s_minus_maximal: maximal_sets(&s_minus),
        s_plus,
        s_minus,
    })
}

/// Sweeps all `2^m` subsets. `J ∈ S⁺` iff `(J, J̄ ∪ T)` is feasible, where
/// `T` is the set of tight columns: attainment is monotone in `J⁻`, and `T`
/// is the most `J⁻` may share with `J`.
pub fn enumerate_families(system: &BipolarSystem, limits: &Limits) -> Result<FeasibleFamilies> {
    match verdict_with(system, limits)? {
        (Verdict::Solvable(_), Some(coverage)) => families_of(&coverage, limits),
        (verdict, _) => Err(Error::Contract(format!(
            "system is unsolvable ({})",
            verdict.witness().map(ToString::to_string).unwrap_or_default()
        ))),
    }
}

fn sorted(mut v: Vec<CandidateSolution>) -> Vec<CandidateSolution> {
    v.sort();
    v.dedup();
    v
}

/// Full extremal analysis of a (preprocessed) system.
pub fn extremal_system(system: &BipolarSystem, limits: &Limits) -> Result<ExtremalReport> {
    let (verdict, coverage) = verdict_with(system, limits)?;
    let coverage = match (verdict, coverage) {
        (Verdict::Solvable(pair), Some(coverage)) => (pair, coverage),
        (Verdict::Unsolvable(w), _) => {
            return Ok(ExtremalReport {
                solvable: false,
                fre: greatest_fre_candidate(system),
                certificate: None,
                greatest: None,
                least: None,
                maximal: Vec::new(),
                minimal: Vec::new(),
                families: FeasibleFamilies::default(),
                witness: Some(w),
            })
        }
        (Verdict::Solvable(_), None) => unreachable!("solvable verdicts carry coverage"),
    };
    let (certificate, coverage) = coverage;
    let families = families_of(&coverage, limits)?;
    let maximal = sorted(families.s_plus_maximal.iter().map(|&s| coverage.upper_tuple(s)).collect());
    let minimal = sorted(families.s_minus_maximal.iter().map(|&s| coverage.lower_tuple(s)).collect());
    let greatest = match families.s_plus_maximal.as_slice() {
        [top] => Some(coverage.upper_tuple(*top)),
        _ => None,
    };
    let least = match families.s_minus_maximal.as_slice() {
        [top] => Some(coverage.lower_tuple(*top)),
        _ => None,
    };
    Ok(ExtremalReport {
        solvable: true,
        fre: coverage.fre,
        certificate: Some(certificate),
        greatest,
        least,
        maximal,
        minimal,
        families,
        witness: None,
    })
}

fn require_solution(system: &BipolarSystem, x: &CandidateSolution) -> Result<FreGreatestSolution> {
    if !system.is_solution(x.values())? {
        return Err(Error::not_a_solution(x.values()));
    }
    Ok(greatest_fre_candidate(system))
}

/// Raises every slot not already at `1 - ȳ_j` to `x̄_j`. The result solves
/// the system and dominates `x`.
pub fn push_up(system: &BipolarSystem, x: &CandidateSolution) -> Result<CandidateSolution> {
    let fre = require_solution(system, x)?;
    Ok(CandidateSolution(
        x.values()
            .iter()
            .enumerate()
            .map(|(j, v)| {
                let low = negate(&fre.y_bar[j]);
                if *v == low {
                    low
                } else {
                    fre.x_bar[j].clone()
                }
            })
            .collect(),
    ))
}

/// Lowers every slot not already at `x̄_j` to `1 - ȳ_j`. The result solves
/// the system and is dominated by `x`.
pub fn push_down(system: &BipolarSystem, x: &CandidateSolution) -> Result<CandidateSolution> {
    let fre = require_solution(system, x)?;
    Ok(CandidateSolution(
        x.values()
            .iter()
            .enumerate()
            .map(|(j, v)| {
                if *v == fre.x_bar[j] {
                    v.clone()
                } else {
                    negate(&fre.y_bar[j])
                }
            })
            .collect(),
    ))
}

/// `true` iff every component of `x` is `x̄_j` or `1 - ȳ_j`.
pub fn is_extreme_form(system: &BipolarSystem, x: &CandidateSolution) -> bool {
    let fre = greatest_fre_candidate(system);
    x.len() == system.columns()
        && x
            .values()
            .iter()
            .enumerate()
            .all(|(j, v)| *v == fre.x_bar[j] || *v == negate(&fre.y_bar[j]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::UnitRational;

    fn sol(items: &[&str]) -> CandidateSolution {
        CandidateSolution::parse(items).unwrap()
    }

    fn set(one_based: &[usize]) -> IndexSet {
        IndexSet::from_one_based(one_based.iter().copied())
    }

    fn three_by_three() -> BipolarSystem {
        BipolarSystem::parse(
            &[&["0.1", "0.25", "0.4"], &["0.1", "0.3", "0.3"], &["0.3", "0.4", "0.8"]],
            &[&["0.3", "0.3", "0.4"], &["0.8", "0.6", "0.5"], &["0.8", "0.5", "0.8"]],
            &["0.2", "0.4", "0.4"],
        )
        .unwrap()
    }

    fn conflicting() -> BipolarSystem {
        BipolarSystem::parse(&[&["0.5"], &["0.1"]], &[&["0.2"], &["0.8"]], &["0.5", "0.4"]).unwrap()
    }

    #[test]
    fn index_set_basics() {
        let s = set(&[1, 3]);
        assert_eq!(s.to_string(), "{1,3}");
        assert_eq!(s.len(), 2);
        assert_eq!(s.complement(3), set(&[2]));
        assert!(set(&[3]).is_subset(s));
        assert_eq!(IndexSet::empty().to_string(), "{}");
        assert_eq!(IndexSet::full(64).len(), 64);
        let mut v = vec![set(&[2, 3]), set(&[1]), IndexSet::empty(), set(&[1, 3]), set(&[2])];
        v.sort_by(IndexSet::report_cmp);
        assert_eq!(v, vec![IndexSet::empty(), set(&[1]), set(&[2]), set(&[1, 3]), set(&[2, 3])]);
    }

    #[test]
    fn three_by_three_pair_is_feasible() {
        let pair = FeasiblePair::new(set(&[2]), set(&[1, 3]));
        assert!(is_feasible_pair(&three_by_three(), &pair).unwrap());
    }

    #[test]
    fn three_by_three_pairs_containing_one_and_two_in_plus_fail() {
        let s = three_by_three();
        for extra in 0u64..8 {
            let j_plus = set(&[1, 2]).union(IndexSet::from_bits(extra));
            for minus in 0u64..8 {
                let pair = FeasiblePair::new(j_plus, IndexSet::from_bits(minus));
                assert!(!is_feasible_pair(&s, &pair).unwrap(), "{pair}");
            }
        }
    }

    #[test]
    fn empty_pair_fails_with_nonzero_rhs() {
        let pair = FeasiblePair::new(IndexSet::empty(), IndexSet::empty());
        assert!(!is_feasible_pair(&three_by_three(), &pair).unwrap());
    }

    #[test]
    fn pair_index_out_of_range() {
        let pair = FeasiblePair::new(set(&[4]), IndexSet::empty());
        assert!(matches!(is_feasible_pair(&three_by_three(), &pair), Err(Error::Dimension(_))));
    }

    #[test]
    fn feasibility_needs_solvable_fre() {
        let s = BipolarSystem::parse(&[&["0.3"]], &[&["0.2"]], &["0.5"]).unwrap();
        let pair = FeasiblePair::new(set(&[1]), IndexSet::empty());
        assert!(matches!(is_feasible_pair(&s, &pair), Err(Error::Contract(_))));
    }

    #[test]
    fn three_by_three_is_solvable() {
        let verdict = system_solvable(&three_by_three(), &Limits::default()).unwrap();
        let pair = verdict.certificate().expect("solvable");
        assert!(is_feasible_pair(&three_by_three(), pair).unwrap());
    }

    #[test]
    fn conflicting_is_unsolvable_with_forced_conflict() {
        let verdict = system_solvable(&conflicting(), &Limits::default()).unwrap();
        match verdict.witness() {
            Some(Witness::ForcedConflict {
                column,
                plus_row,
                minus_row,
                sum,
            }) => {
                assert_eq!((*column, *plus_row, *minus_row), (0, 0, 1));
                assert_eq!(*sum, BigRational::new(3.into(), 2.into()));
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn pair_to_solution_examples() {
        let s = three_by_three();
        let a = pair_to_solution(&s, &FeasiblePair::new(set(&[2]), set(&[1, 3]))).unwrap();
        assert_eq!(a, sol(&["0.5", "0.8", "0.5"]));
        let b = pair_to_solution(&s, &FeasiblePair::new(set(&[1, 3]), set(&[2]))).unwrap();
        assert_eq!(b, sol(&["1", "1/3", "0.5"]));
        assert!(s.is_solution(a.values()).unwrap());
        assert!(s.is_solution(b.values()).unwrap());
    }

    #[test]
    fn pair_to_solution_full_plus_is_x_bar() {
        let s = BipolarSystem::parse(&[&["0.8", "0.5"]], &[&["0.1", "0.4"]], &["0.4"]).unwrap();
        let x = pair_to_solution(&s, &FeasiblePair::new(IndexSet::full(2), IndexSet::empty())).unwrap();
        assert_eq!(x, sol(&["0.5", "0.8"]));
    }

    #[test]
    fn pair_to_solution_rejects_infeasible() {
        let pair = FeasiblePair::new(set(&[1, 2]), IndexSet::empty());
        assert!(matches!(pair_to_solution(&three_by_three(), &pair), Err(Error::Contract(_))));
    }

    #[test]
    fn three_by_three_families() {
        let f = enumerate_families(&three_by_three(), &Limits::default()).unwrap();
        assert_eq!(
            f.s_plus,
            vec![IndexSet::empty(), set(&[1]), set(&[2]), set(&[3]), set(&[1, 3]), set(&[2, 3])]
        );
        assert_eq!(
            f.s_minus,
            vec![set(&[1]), set(&[2]), set(&[1, 2]), set(&[1, 3]), set(&[2, 3]), set(&[1, 2, 3])]
        );
        assert_eq!(f.s_plus_maximal, vec![set(&[1, 3]), set(&[2, 3])]);
        assert_eq!(f.s_minus_maximal, vec![set(&[1, 2, 3])]);
    }

    #[test]
    fn single_column_families() {
        // x̄ = 1/2, ȳ = 1, a⁻ȳ = 0.1 ≠ 0.4: K⁺ = {1}, K⁻ = ∅.
        let s = BipolarSystem::parse(&[&["0.8"]], &[&["0.1"]], &["0.4"]).unwrap();
        let f = enumerate_families(&s, &Limits::default()).unwrap();
        assert_eq!(f.s_plus, vec![set(&[1])]);
        assert_eq!(f.s_minus, vec![IndexSet::empty()]);
        // Brute force over all four pairs.
        let feasible: Vec<FeasiblePair> = [0u64, 1]
            .iter()
            .flat_map(|&p| [0u64, 1].map(move |q| FeasiblePair::new(IndexSet::from_bits(p), IndexSet::from_bits(q))))
            .filter(|pair| is_feasible_pair(&s, pair).unwrap())
            .collect();
        assert_eq!(feasible, vec![FeasiblePair::new(set(&[1]), IndexSet::empty())]);
    }

    #[test]
    fn enumerate_families_on_unsolvable_is_contract_error() {
        assert!(matches!(
            enumerate_families(&conflicting(), &Limits::default()),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn enumeration_cap() {
        let limits = Limits {
            max_enum: 2,
            max_membership: 20,
        };
        assert!(matches!(
            enumerate_families(&three_by_three(), &limits),
            Err(Error::TooLarge { cap: 2, .. })
        ));
    }

    #[test]
    fn three_by_three_extremal() {
        let r = extremal_system(&three_by_three(), &Limits::default()).unwrap();
        assert!(r.solvable);
        assert_eq!(r.maximal, vec![sol(&["0.5", "0.8", "0.5"]), sol(&["1", "1/3", "0.5"])]);
        assert_eq!(r.greatest, None);
        assert_eq!(r.least, Some(sol(&["0.5", "1/3", "0.5"])));
        assert_eq!(r.minimal, vec![sol(&["0.5", "1/3", "0.5"])]);
        assert_eq!(r.maximal.len(), r.families.s_plus_maximal.len());
        assert_eq!(r.minimal.len(), r.families.s_minus_maximal.len());
    }

    #[test]
    fn two_column_as_system() {
        let s = BipolarSystem::parse(&[&["0.8", "0.5"]], &[&["0.1", "0.4"]], &["0.4"]).unwrap();
        let r = extremal_system(&s, &Limits::default()).unwrap();
        assert_eq!(r.greatest, Some(sol(&["0.5", "0.8"])));
        assert_eq!(r.least, Some(sol(&["0", "0"])));
        let single = crate::single::extremal_single(&s).unwrap();
        assert_eq!(r.maximal, single.maximal);
        assert_eq!(r.minimal, single.minimal);
    }

    #[test]
    fn conflicting_report() {
        let r = extremal_system(&conflicting(), &Limits::default()).unwrap();
        assert!(!r.solvable);
        assert!(r.maximal.is_empty() && r.minimal.is_empty());
        assert!(matches!(r.witness, Some(Witness::ForcedConflict { .. })));
        assert_eq!(r.fre.x_bar, vec![UnitRational::one()]);
        assert_eq!(r.fre.y_bar, vec![UnitRational::frac(1, 2)]);
    }

    #[test]
    fn push_up_and_down_on_three_by_three() {
        let s = three_by_three();
        let x = sol(&["0.5", "0.8", "0.5"]);
        assert_eq!(push_up(&s, &x).unwrap(), x);
        let down = push_down(&s, &x).unwrap();
        assert!(s.is_solution(down.values()).unwrap());
        assert!(down.is_below(&x));
        assert!(is_extreme_form(&s, &down));

        let least = sol(&["0.5", "1/3", "0.5"]);
        let up = push_up(&s, &least).unwrap();
        assert!(s.is_solution(up.values()).unwrap());
        assert!(least.is_below(&up));
        assert_eq!(push_down(&s, &least).unwrap(), least);
    }

    #[test]
    fn push_down_two_column() {
        let s = BipolarSystem::parse(&[&["0.8", "0.5"]], &[&["0.1", "0.4"]], &["0.4"]).unwrap();
        let down = push_down(&s, &sol(&["0.5", "0.8"])).unwrap();
        assert!(s.is_solution(down.values()).unwrap());
        assert!(down.is_below(&sol(&["0.5", "0.8"])));
    }

    #[test]
    fn push_rejects_non_solutions() {
        let s = BipolarSystem::parse(&[&["0.8", "0.5"]], &[&["0.1", "0.4"]], &["0.4"]).unwrap();
        let x = sol(&["0.4", "0.5"]);
        assert!(matches!(push_up(&s, &x), Err(Error::Contract(_))));
        assert!(matches!(push_down(&s, &x), Err(Error::Contract(_))));
    }

    #[test]
    fn maximal_solutions_are_fixed_by_push_up() {
        let s = three_by_three();
        let r = extremal_system(&s, &Limits::default()).unwrap();
        for x in &r.maximal {
            assert_eq!(&push_up(&s, x).unwrap(), x);
        }
        for x in &r.minimal {
            assert_eq!(&push_down(&s, x).unwrap(), x);
        }
    }
}
