//! Relative cancellativity, relative primality and the sufficient word-gcd
//! criterion, plus a verifier for the sumset theorem on relatively
//! cancellative sets with separated scales.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Precondition, Result};
use crate::factorizer::{fact_gcd, Factorization, Factorizer};
use crate::finset::FinSet;

/// `b + c = b + d` with `c != d`: proof that a set is not relatively
/// cancellative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelCancWitness {
    pub b: FinSet,
    pub c: FinSet,
    pub d: FinSet,
}

/// `None` when `a` is relatively cancellative; otherwise the least witness,
/// comparing `b`, then `c`, then `d` by cardinality and then elementwise.
pub fn relcanc_witness(f: &Factorizer, a: &FinSet) -> Result<Option<RelCancWitness>> {
    let mut divs: Vec<FinSet> = f.divisors(a)?.into_iter().collect();
    divs.sort_by(FinSet::shortlex_cmp);
    for b in divs {
        let cofs = f.cofactors(a, &b)?;
        if cofs.len() < 2 {
            continue;
        }
        let mut cofs: Vec<FinSet> = cofs.into_iter().collect();
        cofs.sort_by(FinSet::shortlex_cmp);
        let mut it = cofs.into_iter();
        let c = it.next().expect("two cofactors");
        let d = it.next().expect("two cofactors");
        return Ok(Some(RelCancWitness { b, c, d }));
    }
    Ok(None)
}

/// True iff `a = b + c = b + d` forces `c = d`.
pub fn is_relatively_cancellative(f: &Factorizer, a: &FinSet) -> Result<bool> {
    Ok(relcanc_witness(f, a)?.is_none())
}

/// True iff `{0}` is the only common divisor of `b` and `c`.
pub fn are_relatively_prime(f: &Factorizer, b: &FinSet, c: &FinSet) -> Result<bool> {
    if b.is_zero() || c.is_zero() {
        return Ok(true);
    }
    let db = f.divisors(b)?;
    let dc = f.divisors(c)?;
    Ok(db.intersection(&dc).all(FinSet::is_zero))
}

/// Any two factorizations of `a` that share an atom are equal. Sufficient
/// (not necessary) for relative cancellativity.
pub fn gcd_criterion(f: &Factorizer, a: &FinSet) -> Result<bool> {
    let z: Vec<Factorization> = f.factorizations(a)?.into_iter().collect();
    for (i, u) in z.iter().enumerate() {
        for v in &z[i + 1..] {
            if !fact_gcd(u, v).is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatedSumPreconditions {
    pub x_relcanc: bool,
    pub y_relcanc: bool,
    pub gcd_y: u64,
    pub two_max_x: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatedSumConclusions {
    /// `x + y` is relatively cancellative.
    pub relcanc: bool,
    /// `Z(x + y) = Z(x) Z(y)`.
    pub z_product: bool,
    /// `L(x + y) = L(x) + L(y)`.
    pub l_additivity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatedSumReport {
    pub preconditions: SeparatedSumPreconditions,
    pub conclusions: SeparatedSumConclusions,
    pub witness: Option<RelCancWitness>,
}

impl SeparatedSumReport {
    pub fn passed(&self) -> bool {
        let c = &self.conclusions;
        c.relcanc && c.z_product && c.l_additivity
    }
}

/// For relatively cancellative `x`, `y` with `gcd(y) > 2 max(x)`, checks that
/// `x + y` is relatively cancellative, that its factorizations are exactly the
/// products of factorizations of `x` and `y`, and that its length set is
/// `L(x) + L(y)`.
pub fn verify_separated_sum(f: &Factorizer, x: &FinSet, y: &FinSet) -> Result<SeparatedSumReport> {
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
    let bound = x.max_element().checked_mul(2).ok_or(Error::Overflow)?;
    let gcd = y.gcd();
    if gcd <= bound {
        return Err(Error::PreconditionFailed(Precondition::GcdBound {
            gcd,
            bound,
        }));
    }
    let sum = x.sumset(y)?;
    let witness = relcanc_witness(f, &sum)?;

    let zx = f.factorizations(x)?;
    let zy = f.factorizations(y)?;
    let product: BTreeSet<Factorization> = zx
        .iter()
        .flat_map(|u| zy.iter().map(move |v| u.product(v)))
        .collect();
    let zsum = f.factorizations(&sum)?;

    let lsum = f.length_set(&sum)?;
    let ladd = f.length_set(x)?.sumset(&f.length_set(y)?);

    Ok(SeparatedSumReport {
        preconditions: SeparatedSumPreconditions {
            x_relcanc: true,
            y_relcanc: true,
            gcd_y: gcd,
            two_max_x: bound,
        },
        conclusions: SeparatedSumConclusions {
            relcanc: witness.is_none(),
            z_product: zsum == product,
            l_additivity: lsum == ladd,
        },
        witness,
    })
}
