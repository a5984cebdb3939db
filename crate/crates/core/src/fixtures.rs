//! Worked-example sets used by the verification suite.

use crate::finset::FinSet;

/// Elements of the 18-element set whose length set is `{2,3,4}`.
pub const INTERVAL_SEED: [u64; 18] = [
    0, 1, 4, 5, 10, 11, 12, 14, 15, 16, 19, 20, 21, 22, 25, 26, 29, 30,
];

/// Shift used to lift [`INTERVAL_SEED`] to a set with length set `{3,4,5}`.
pub const INTERVAL_SHIFT: u64 = 61;

pub fn interval_seed() -> FinSet {
    FinSet::new(INTERVAL_SEED.to_vec()).expect("contains 0")
}

/// `interval_seed() + {0, 61}`.
pub fn interval_seed_shifted() -> FinSet {
    interval_seed()
        .sumset(&FinSet::pair(INTERVAL_SHIFT))
        .expect("small")
}

fn set(v: &[u64]) -> FinSet {
    FinSet::new(v.to_vec()).expect("contains 0")
}

/// The seven atoms dividing [`interval_seed`].
pub fn interval_seed_atoms() -> Vec<FinSet> {
    [
        &[0, 1][..],
        &[0, 4],
        &[0, 10],
        &[0, 10, 11],
        &[0, 11, 15],
        &[0, 4, 10, 11, 15, 19],
        &[0, 1, 4, 5, 10, 11, 15, 19],
    ]
    .iter()
    .map(|v| set(v))
    .collect()
}

/// The three factorizations of [`interval_seed`], as lists of atoms.
pub fn interval_seed_words() -> Vec<Vec<FinSet>> {
    let a = interval_seed_atoms();
    vec![
        vec![a[0].clone(), a[1].clone(), a[2].clone(), a[4].clone()],
        vec![a[0].clone(), a[2].clone(), a[5].clone()],
        vec![a[3].clone(), a[6].clone()],
    ]
}

/// Divisors `U` of [`interval_seed`] with `U + C = U + D` for some relatively
/// prime `C`, `D`.
pub fn interval_seed_shift_divisors() -> Vec<FinSet> {
    vec![set(&[0, 1, 10, 11]), interval_seed()]
}

/// The five sets showing the hypotheses of the separated-sum theorem are
/// needed: `A = {0,1,2,3}`, `B = {0,7}`, `C = {0,1}`, `D = {0,3,6,9}`,
/// `E = {0,2}`.
pub struct Boundary {
    pub a: FinSet,
    pub b: FinSet,
    pub c: FinSet,
    pub d: FinSet,
    pub e: FinSet,
}

pub fn boundary_sets() -> Boundary {
    let s = set;
    Boundary {
        a: s(&[0, 1, 2, 3]),
        b: s(&[0, 7]),
        c: s(&[0, 1]),
        d: s(&[0, 3, 6, 9]),
        e: s(&[0, 2]),
    }
}
