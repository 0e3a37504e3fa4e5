#![allow(dead_code)]

use bipolar_fre::oracle::planted_instance;
use bipolar_fre::{random_instance, BipolarSystem, CandidateSolution};

/// Shape of the `seed`-th instance in the mixed suites: `m <= 5`, `n <= 4`,
/// grid denominator `<= 6`.
pub fn shape(seed: u64) -> (usize, usize, u32) {
    let m = 1 + (seed % 5) as usize;
    let n = 1 + (seed / 5 % 4) as usize;
    let d = 1 + (seed / 20 % 6) as u32;
    (m, n, d)
}

/// Uniform instances are mostly unsolvable, so every other seed plants a
/// solution.
pub fn mixed_instance(seed: u64) -> BipolarSystem {
    let (m, n, d) = shape(seed);
    if seed.is_multiple_of(2) {
        random_instance(seed, m, n, d)
    } else {
        planted_instance(seed, m, n, d).0
    }
}

pub fn sol(items: &[&str]) -> CandidateSolution {
    CandidateSolution::parse(items).unwrap()
}

pub fn two_column() -> BipolarSystem {
    BipolarSystem::parse(&[&["0.8", "0.5"]], &[&["0.1", "0.4"]], &["0.4"]).unwrap()
}

pub fn two_column_variant() -> BipolarSystem {
    BipolarSystem::parse(&[&["0.8", "0.5"]], &[&["0.1", "0.3"]], &["0.4"]).unwrap()
}

pub fn three_by_three() -> BipolarSystem {
    BipolarSystem::parse(
        &[&["0.1", "0.25", "0.4"], &["0.1", "0.3", "0.3"], &["0.3", "0.4", "0.8"]],
        &[&["0.3", "0.3", "0.4"], &["0.8", "0.6", "0.5"], &["0.8", "0.5", "0.8"]],
        &["0.2", "0.4", "0.4"],
    )
    .unwrap()
}

pub fn conflicting() -> BipolarSystem {
    BipolarSystem::parse(&[&["0.5"], &["0.1"]], &[&["0.2"], &["0.8"]], &["0.5", "0.4"]).unwrap()
}
