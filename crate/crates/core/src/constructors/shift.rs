//! Factorizations of `x + {0, n}` for `n > 2 max(x)`.
//!
//! Every factorization is `(C ∪ (n + D)) · z` with `z ∈ Z(A)`, where
//! `A + C = A + D = x` and `C`, `D` are relatively prime.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cancellativity::are_relatively_prime;
use crate::error::{Error, Precondition, Result};
use crate::factorizer::{Factorization, Factorizer, LengthSet};
use crate::finset::FinSet;
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftStructure {
    pub x: FinSet,
    pub n: u64,
    /// All `(A, C, D)` with `A + C = A + D = x` and `C`, `D` relatively
    /// prime. Both `(A, C, D)` and `(A, D, C)` are kept.
    pub m_triples: BTreeSet<(FinSet, FinSet, FinSet)>,
    /// First coordinates of `m_triples`.
    pub n_set: BTreeSet<FinSet>,
}

impl ShiftStructure {
    /// The shifted set `x + {0, n}`.
    pub fn target(&self) -> Result<FinSet> {
        self.x.sumset(&FinSet::pair(self.n))
    }
}

fn check_shift(x: &FinSet, n: u64) -> Result<()> {
    let bound = x.max_element().checked_mul(2).ok_or(Error::Overflow)?;
    if n <= bound {
        return Err(Error::PreconditionFailed(Precondition::ShiftBound {
            n,
            bound,
        }));
    }
    Ok(())
}

pub fn shift_structure(f: &Factorizer, x: &FinSet, n: u64) -> Result<ShiftStructure> {
    check_shift(x, n)?;
    let mut m_triples = BTreeSet::new();
    for a in f.divisors(x)? {
        let cofs: Vec<FinSet> = f.cofactors(x, &a)?.into_iter().collect();
        for c in &cofs {
            for d in &cofs {
                if are_relatively_prime(f, c, d)? {
                    m_triples.insert((a.clone(), c.clone(), d.clone()));
                }
            }
        }
    }
    let n_set = m_triples.iter().map(|(a, _, _)| a.clone()).collect();
    Ok(ShiftStructure {
        x: x.clone(),
        n,
        m_triples,
        n_set,
    })
}

/// `⋃ (C ∪ (n + D)) · Z(A)` over the triples.
pub fn predicted_factorizations(
    f: &Factorizer,
    st: &ShiftStructure,
) -> Result<BTreeSet<Factorization>> {
    let mut out = BTreeSet::new();
    for (a, c, d) in &st.m_triples {
        let atom = c.union_shifted(d, st.n)?;
        for z in f.factorizations(a)?.iter() {
            out.insert(z.with(atom.clone()));
        }
    }
    Ok(out)
}

/// `1 + ⋃ L(A)` over the first coordinates.
pub fn predicted_length_set(f: &Factorizer, st: &ShiftStructure) -> Result<LengthSet> {
    let mut out = LengthSet::default();
    for a in &st.n_set {
        out = out.union(&f.length_set(a)?);
    }
    Ok(out.shift(1))
}

/// Compares `Z(x + {0,n})` and `L(x + {0,n})` from the factorizer against the
/// values predicted by the triple structure.
pub fn verify_shift(f: &Factorizer, x: &FinSet, n: u64) -> Result<Report> {
    let st = shift_structure(f, x, n)?;
    let target = st.target()?;
    let mut report = Report::new(format!("{x} + {{0,{n}}}"));

    let direct = f.factorizations(&target)?;
    let predicted = predicted_factorizations(f, &st)?;
    report.check(
        "Z from triples",
        direct == predicted,
        format!(
            "{} word(s) direct, {} predicted",
            direct.len(),
            predicted.len()
        ),
    );

    let l_direct = f.length_set(&target)?;
    let l_predicted = predicted_length_set(f, &st)?;
    report.check(
        "L = 1 + ⋃ L(A)",
        l_direct == l_predicted,
        format!("{l_direct} vs {l_predicted}"),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{interval_seed, INTERVAL_SHIFT};

    fn s(t: &str) -> FinSet {
        t.parse().unwrap()
    }

    #[test]
    fn small_structure() {
        let f = Factorizer::new();
        let st = shift_structure(&f, &s("{0,1,2}"), 5).unwrap();
        assert_eq!(st.n_set, BTreeSet::from([s("{0,1,2}")]));
        assert!(verify_shift(&f, &s("{0,1,2}"), 5).unwrap().passed());
        assert_eq!(
            f.length_set(&s("{0,1,2,5,6,7}")).unwrap(),
            LengthSet::from_iter([3])
        );
    }

    #[test]
    fn zero_base() {
        let f = Factorizer::new();
        let st = shift_structure(&f, &FinSet::zero(), 1).unwrap();
        assert_eq!(
            st.m_triples,
            BTreeSet::from([(FinSet::zero(), FinSet::zero(), FinSet::zero())])
        );
        let r = verify_shift(&f, &FinSet::zero(), 1).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(
            predicted_length_set(&f, &st).unwrap(),
            LengthSet::from_iter([1])
        );
    }

    #[test]
    fn shift_bound() {
        let f = Factorizer::new();
        assert_eq!(
            shift_structure(&f, &s("{0,1}"), 2),
            Err(Error::PreconditionFailed(Precondition::ShiftBound {
                n: 2,
                bound: 2
            }))
        );
    }

    #[test]
    fn interval_seed_structure() {
        let f = Factorizer::new();
        let x = interval_seed();
        let st = shift_structure(&f, &x, INTERVAL_SHIFT).unwrap();
        assert_eq!(st.n_set, BTreeSet::from([s("{0,1,10,11}"), x.clone()]));
        assert_eq!(
            predicted_length_set(&f, &st).unwrap(),
            LengthSet::from_iter([3, 4, 5])
        );
    }

    #[test]
    fn triples_satisfy_invariants() {
        let f = Factorizer::new();
        let x = s("{0,1,2,3}");
        let st = shift_structure(&f, &x, 7).unwrap();
        for (a, c, d) in &st.m_triples {
            assert_eq!(a.sumset(c).unwrap(), x);
            assert_eq!(a.sumset(d).unwrap(), x);
            assert!(are_relatively_prime(&f, c, d).unwrap());
        }
    }
}
