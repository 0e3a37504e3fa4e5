mod common;

use bipolar_fre::oracle::{grid_solutions, DEFAULT_ORACLE_CAP};
use bipolar_fre::system::is_extreme_form;
use bipolar_fre::{
    analyze_single, extremal_system, is_feasible_pair, oracle_solve, preprocess, push_down, push_up, random_instance,
    system_solvable, BipolarSystem, FeasiblePair, IndexSet, Limits,
};
use common::{mixed_instance, shape};
use proptest::prelude::*;

fn tight_columns(system: &BipolarSystem) -> Vec<usize> {
    let fre = bipolar_fre::greatest_fre_candidate(system);
    (0..system.columns()).filter(|&j| fre.sum(j) == *bipolar_fre::UnitRational::one().as_rational()).collect()
}

#[test]
fn solver_matches_oracle_on_mixed_instances() {
    let limits = Limits::default();
    for seed in 0..1500 {
        let s = mixed_instance(seed);
        let oracle = oracle_solve(&s, DEFAULT_ORACLE_CAP).unwrap();
        let verdict = system_solvable(&s, &limits).unwrap();
        assert_eq!(verdict.is_solvable(), oracle.solvable, "seed {seed}");
        let report = extremal_system(&s, &limits).unwrap();
        assert_eq!(report.maximal, oracle.maximal, "seed {seed}");
        assert_eq!(report.minimal, oracle.minimal, "seed {seed}");
        if let Some(pair) = verdict.certificate() {
            assert!(is_feasible_pair(&s, pair).unwrap(), "seed {seed}");
        }
    }
}

#[test]
fn greatest_and_least_exist_exactly_for_singleton_antichains() {
    let limits = Limits::default();
    for seed in 0..600 {
        let s = mixed_instance(seed);
        let r = extremal_system(&s, &limits).unwrap();
        assert_eq!(r.greatest.is_some(), r.maximal.len() == 1, "seed {seed}");
        assert_eq!(r.least.is_some(), r.minimal.len() == 1, "seed {seed}");
        if let Some(g) = &r.greatest {
            let oracle = oracle_solve(&s, DEFAULT_ORACLE_CAP).unwrap();
            assert!(oracle.extreme_solutions.iter().all(|x| x.is_below(g)), "seed {seed}");
        }
    }
}

#[test]
fn tight_columns_extend_feasible_pairs() {
    let limits = Limits::default();
    for seed in 0..800 {
        let s = mixed_instance(seed);
        let Some(pair) = system_solvable(&s, &limits).unwrap().certificate().copied() else {
            continue;
        };
        for k in tight_columns(&s) {
            let wider_plus = FeasiblePair::new(pair.j_plus.insert(k), pair.j_minus);
            let wider_minus = FeasiblePair::new(pair.j_plus, pair.j_minus.insert(k));
            assert!(is_feasible_pair(&s, &wider_plus).unwrap(), "seed {seed} k {k}");
            assert!(is_feasible_pair(&s, &wider_minus).unwrap(), "seed {seed} k {k}");
        }
    }
}

#[test]
fn antichain_sizes_match_family_maxima() {
    let limits = Limits::default();
    for seed in 0..800 {
        let s = mixed_instance(seed);
        let r = extremal_system(&s, &limits).unwrap();
        if !r.solvable {
            continue;
        }
        assert_eq!(r.maximal.len(), r.families.s_plus_maximal.len(), "seed {seed}");
        assert_eq!(r.minimal.len(), r.families.s_minus_maximal.len(), "seed {seed}");
    }
}

#[test]
fn single_equation_analyzer_agrees_with_system_analyzer() {
    let limits = Limits::default();
    for seed in 0..800 {
        let (m, _, d) = shape(seed);
        let s = if seed % 2 == 0 {
            random_instance(seed, m, 1, d)
        } else {
            bipolar_fre::oracle::planted_instance(seed, m, 1, d).0
        };
        let single = analyze_single(&s).unwrap();
        let system = extremal_system(&s, &limits).unwrap();
        assert_eq!(single.solvable, system.solvable, "seed {seed}");
        assert_eq!(single.maximal, system.maximal, "seed {seed}");
        assert_eq!(single.minimal, system.minimal, "seed {seed}");
        assert_eq!(single.greatest, system.greatest, "seed {seed}");
        assert_eq!(single.least, system.least, "seed {seed}");
    }
}

#[test]
fn grid_solutions_are_sandwiched() {
    let limits = Limits::default();
    for seed in 0..300 {
        let (m, n, _) = shape(seed);
        let m = m.min(3);
        let (s, _) = bipolar_fre::oracle::planted_instance(seed, m, n, 4);
        let r = extremal_system(&s, &limits).unwrap();
        assert!(r.solvable);
        for x in grid_solutions(&s, 4, 1000).unwrap() {
            assert!(r.maximal.iter().any(|top| x.is_below(top)), "seed {seed}: {x}");
            assert!(r.minimal.iter().any(|bottom| bottom.is_below(&x)), "seed {seed}: {x}");
        }
    }
}

#[test]
fn pushes_reach_extreme_form_and_are_idempotent() {
    for seed in 0..500 {
        let (m, n, d) = shape(seed);
        let (s, x) = bipolar_fre::oracle::planted_instance(seed, m, n, d);
        let up = push_up(&s, &x).unwrap();
        let down = push_down(&s, &x).unwrap();
        assert!(s.is_solution(up.values()).unwrap() && s.is_solution(down.values()).unwrap());
        assert!(is_extreme_form(&s, &up) && is_extreme_form(&s, &down));
        assert!(x.is_below(&up) && down.is_below(&x), "seed {seed}");
        assert_eq!(push_up(&s, &up).unwrap(), up);
        assert_eq!(push_down(&s, &down).unwrap(), down);
    }
}

#[test]
fn preprocessing_keeps_solvability_and_solutions() {
    let limits = Limits::default();
    for seed in 0..600 {
        let s = mixed_instance(seed);
        let (reduced, report) = preprocess(&s);
        let full = extremal_system(&s, &limits).unwrap();
        if reduced.columns() == 0 {
            let all_zero = s.b().iter().all(|b| b.is_zero());
            assert_eq!(full.solvable, all_zero, "seed {seed}");
            continue;
        }
        let small = extremal_system(&reduced, &limits).unwrap();
        assert_eq!(full.solvable, small.solvable, "seed {seed}");
        let restricted: Vec<_> = full.maximal.iter().map(|x| report.restrict(x.values())).collect();
        let mut restricted = restricted;
        restricted.sort();
        restricted.dedup();
        assert_eq!(restricted, small.maximal, "seed {seed}");
    }
}

proptest! {
    #[test]
    fn random_instances_agree_with_oracle(seed in any::<u64>(), m in 1usize..=5, n in 1usize..=4, d in 1u32..=6) {
        let s = random_instance(seed, m, n, d);
        let oracle = oracle_solve(&s, DEFAULT_ORACLE_CAP).unwrap();
        let r = extremal_system(&s, &Limits::default()).unwrap();
        prop_assert_eq!(r.solvable, oracle.solvable);
        prop_assert_eq!(r.maximal, oracle.maximal);
        prop_assert_eq!(r.minimal, oracle.minimal);
    }

    #[test]
    fn family_members_yield_solutions(seed in any::<u64>(), m in 1usize..=5, n in 1usize..=3, d in 1u32..=6) {
        let (s, _) = bipolar_fre::oracle::planted_instance(seed, m, n, d);
        let r = extremal_system(&s, &Limits::default()).unwrap();
        let tight = IndexSet::from_indices(tight_columns(&s));
        for &plus in &r.families.s_plus {
            let pair = FeasiblePair::new(plus, plus.complement(m).union(tight));
            prop_assert!(is_feasible_pair(&s, &pair).unwrap());
        }
    }
}
