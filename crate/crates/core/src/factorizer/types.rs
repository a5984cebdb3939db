use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::finset::FinSet;
use crate::rational::Rational;

/// A word in the free abelian monoid on the atoms: a multiset of atoms kept
/// in canonical order (by maximum, then lexicographically).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Factorization {
    #[serde(rename = "word")]
    atoms: Vec<FinSet>,
}

impl Factorization {
    /// Sorts `atoms` into canonical order. Atomicity is not checked here.
    pub fn new(mut atoms: Vec<FinSet>) -> Self {
        atoms.sort();
        Factorization { atoms }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn atoms(&self) -> &[FinSet] {
        &self.atoms
    }

    /// Word length `|z|`.
    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// The word with one more copy of `atom`.
    pub fn with(&self, atom: FinSet) -> Self {
        let mut atoms = self.atoms.clone();
        let pos = atoms.partition_point(|a| *a <= atom);
        atoms.insert(pos, atom);
        Factorization { atoms }
    }

    /// Product in the factorization monoid (multiset union).
    pub fn product(&self, other: &Factorization) -> Self {
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().cloned());
        Self::new(atoms)
    }

    /// The set this word factors: the sumset of its atoms.
    pub fn value(&self) -> Result<FinSet> {
        FinSet::sum_all(&self.atoms)
    }
}

/// Greatest common divisor in the factorization monoid: the multiset
/// intersection of `u` and `v`.
pub fn fact_gcd(u: &Factorization, v: &Factorization) -> Factorization {
    let (mut i, mut j) = (0, 0);
    let mut common = Vec::new();
    while i < u.atoms.len() && j < v.atoms.len() {
        match u.atoms[i].cmp(&v.atoms[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common.push(u.atoms[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    Factorization { atoms: common }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite set of factorization lengths.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct LengthSet {
    lengths: BTreeSet<usize>,
}

impl LengthSet {
    pub fn lengths(&self) -> Vec<usize> {
        self.lengths.iter().copied().collect()
    }

    pub fn min(&self) -> Option<usize> {
        self.lengths.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.lengths.last().copied()
    }

    pub fn contains(&self, n: usize) -> bool {
        self.lengths.contains(&n)
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    /// `L + L' = { l + l' }`.
    pub fn sumset(&self, other: &LengthSet) -> LengthSet {
        self.lengths
            .iter()
            .flat_map(|a| other.lengths.iter().map(move |b| a + b))
            .collect()
    }

    /// `k + L`.
    pub fn shift(&self, k: usize) -> LengthSet {
        self.lengths.iter().map(|l| l + k).collect()
    }

    pub fn union(&self, other: &LengthSet) -> LengthSet {
        self.lengths.union(&other.lengths).copied().collect()
    }

    /// `max / min`, with `1` for the empty set and for `{0}`.
    pub fn elasticity(&self) -> Rational {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) if lo > 0 => {
                Rational::new(hi as u64, lo as u64).expect("positive denominator")
            }
            _ => Rational::ONE,
        }
    }
}

impl FromIterator<usize> for LengthSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        LengthSet {
            lengths: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for LengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.lengths.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for LengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
