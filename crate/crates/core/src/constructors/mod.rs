//! Explicit constructions: the two-word family, separated sums, sets with a
//! prescribed length set or elasticity, and the structure of `x + {0, n}`.

mod family;
mod shift;

use serde::Serialize;

use crate::cancellativity::is_relatively_cancellative;
use crate::error::{Error, Precondition, Result};
use crate::factorizer::{Factorizer, LengthSet};
use crate::finset::FinSet;
use crate::fixtures::{interval_seed, interval_seed_shifted};
use crate::rational::Rational;
use crate::report::Report;

pub use family::{build_family, check_identities, verify_family, TwoWordFamily};
pub use shift::{
    predicted_factorizations, predicted_length_set, shift_structure, verify_shift, ShiftStructure,
};

/// Largest family index whose factorizations are computed outright when
/// certifying an elasticity.
pub const BRUTE_FORCE_INDEX: usize = 3;

/// `x + d y` with `d = 2 max(x) + 1`, no hypotheses checked.
fn separated(x: &FinSet, y: &FinSet) -> Result<FinSet> {
    if y.is_zero() {
        return Ok(x.clone());
    }
    let d = x
        .max_element()
        .checked_mul(2)
        .and_then(|v| v.checked_add(1))
        .ok_or(Error::Overflow)?;
    x.sumset(&y.dilate(d)?)
}

/// `x + d y` with `d = 2 max(x) + 1`. For relatively cancellative `x` and `y`
/// the result is relatively cancellative with length set `L(x) + L(y)`.
pub fn compose_sum(f: &Factorizer, x: &FinSet, y: &FinSet) -> Result<FinSet> {
    if !is_relatively_cancellative(f, x)? {
        return Err(Error::PreconditionFailed(
            Precondition::XRelativelyCancellative,
        ));
    }
    if !is_relatively_cancellative(f, y)? {
        return Err(Error::PreconditionFailed(
            Precondition::YRelativelyCancellative,
        ));
    }
    separated(x, y)
}

/// The family set `S_{n-2}` with length set `{2, n}`.
fn generator_set(n: u64) -> Result<FinSet> {
    if n < 3 {
        return Err(Error::PreconditionFailed(Precondition::GeneratorTooSmall(
            n,
        )));
    }
    let i = usize::try_from(n - 2).map_err(|_| Error::Overflow)?;
    Ok(build_family(i, None)?.top().clone())
}

/// A relatively cancellative set with length set `{c} + {2,n_1} + ... + {2,n_k}`:
/// `c` copies of `{0,1}` followed by one family set per generator, joined by
/// separated sums.
pub fn from_generators(c: usize, ns: &[u64]) -> Result<FinSet> {
    let mut pieces = Vec::with_capacity(ns.len());
    for &n in ns {
        pieces.push(generator_set(n)?);
    }
    let mut w = FinSet::zero();
    for _ in 0..c {
        w = separated(&w, &FinSet::pair(1))?;
    }
    for p in &pieces {
        w = separated(&w, p)?;
    }
    Ok(w)
}

/// The length set `from_generators(c, ns)` is built to have.
pub fn generator_length_set(c: usize, ns: &[u64]) -> LengthSet {
    ns.iter().fold(LengthSet::from_iter([c]), |acc, &n| {
        acc.sumset(&LengthSet::from_iter([2, n as usize]))
    })
}

/// A set with length set `{k, k+1, k+2}`.
pub fn interval_three(k: usize) -> Result<FinSet> {
    match k {
        0 | 1 => Err(Error::PreconditionFailed(Precondition::IntervalStart(
            k as u64,
        ))),
        2 => Ok(interval_seed()),
        3 => Ok(interval_seed_shifted()),
        _ => from_generators(k - 4, &[3, 3]),
    }
}

/// `(m, n)` with `n / m = q` and `m >= 2`, or `None` for `q = 1`.
pub fn elasticity_lengths(q: Rational) -> Result<Option<(u64, u64)>> {
    if q < Rational::ONE {
        return Err(Error::PreconditionFailed(Precondition::ElasticityBelowOne));
    }
    if q == Rational::ONE {
        return Ok(None);
    }
    let (p, r) = (q.numerator(), q.denominator());
    if r >= 2 {
        Ok(Some((r, p)))
    } else {
        Ok(Some((2, p.checked_mul(2).ok_or(Error::Overflow)?)))
    }
}

/// A set with elasticity exactly `q`: `{0,1}` for `q = 1`, otherwise a set
/// with length set `{m, n}` where `n / m = q`.
pub fn for_elasticity(q: Rational) -> Result<FinSet> {
    match elasticity_lengths(q)? {
        None => Ok(FinSet::pair(1)),
        Some((m, n)) => {
            let c = usize::try_from(m - 2).map_err(|_| Error::Overflow)?;
            from_generators(c, &[n - m + 2])
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Certification {
    /// All factorizations were enumerated.
    Verified,
    /// The family component's identities were checked and the length set
    /// follows from the separated-sum rule.
    Structural,
}

impl std::fmt::Display for Certification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Certification::Verified => "verified",
            Certification::Structural => "structural",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElasticityCertificate {
    pub q: Rational,
    pub set: FinSet,
    pub length_set: LengthSet,
    pub rho: Rational,
    pub method: Certification,
    pub report: Report,
}

impl ElasticityCertificate {
    pub fn passed(&self) -> bool {
        self.rho == self.q && self.report.passed()
    }
}

/// Builds `for_elasticity(q)` and confirms its elasticity. Family indices up
/// to [`BRUTE_FORCE_INDEX`] are factorized outright; larger ones are certified
/// from the family identities and the separated-sum rule.
pub fn certify_elasticity(f: &Factorizer, q: Rational) -> Result<ElasticityCertificate> {
    let set = for_elasticity(q)?;
    let mut report = Report::new(format!("elasticity {q}"));
    let (predicted, index) = match elasticity_lengths(q)? {
        None => (LengthSet::from_iter([1]), 0),
        Some((m, n)) => (
            LengthSet::from_iter([m as usize, n as usize]),
            (n - m) as usize,
        ),
    };
    if index <= BRUTE_FORCE_INDEX {
        let l = f.length_set(&set)?;
        report.check("length set", l == predicted, format!("{l}"));
        let rho = l.elasticity();
        return Ok(ElasticityCertificate {
            q,
            set,
            rho,
            length_set: l,
            method: Certification::Verified,
            report,
        });
    }
    let fam = build_family(index, None)?;
    check_identities(&fam, &mut report)?;
    Ok(ElasticityCertificate {
        q,
        set,
        rho: predicted.elasticity(),
        length_set: predicted,
        method: Certification::Structural,
        report,
    })
}
