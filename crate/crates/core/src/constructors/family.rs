//! The two-factorization family `S_i` with length set `{2, i + 2}`.
//!
//! Starting from `A_0 = D_0 = S_0 = {0,1}`, `B_0 = C_0 = {0}`, each step picks
//! `n_{j+1} >= 3 max(D_j)` and sets
//!
//! ```text
//! A_{j+1} = A_j ∪ {1 + n_{j+1}}        B_{j+1} = B_j ∪ (n_{j+1} + D_j)
//! C_{j+1} = C_j ∪ {n_{j+1}}            D_{j+1} = D_j + {0, 1 + n_{j+1}}
//! S_{j+1} = C_{j+1} + D_{j+1}
//! ```
//!
//! Then `Z(S_i) = { A_i B_i, C_i ∏_{j<=i} {0, 1 + n_j} }`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cancellativity::gcd_criterion;
use crate::error::{Error, Result};
use crate::factorizer::{Factorization, Factorizer, LengthSet};
use crate::finset::FinSet;
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoWordFamily {
    pub i: usize,
    /// `n_1, ..., n_i` (`n_0 = 0` is implicit).
    pub n: Vec<u64>,
    #[serde(rename = "A")]
    pub a: Vec<FinSet>,
    #[serde(rename = "B")]
    pub b: Vec<FinSet>,
    #[serde(rename = "C")]
    pub c: Vec<FinSet>,
    #[serde(rename = "D")]
    pub d: Vec<FinSet>,
    #[serde(rename = "S")]
    pub s: Vec<FinSet>,
}

impl TwoWordFamily {
    /// `S_i` for the top index.
    pub fn top(&self) -> &FinSet {
        &self.s[self.i]
    }

    /// `{0, 1 + n_j}` for `j = 0..=i`.
    pub fn d_atoms(&self) -> Vec<FinSet> {
        std::iter::once(0)
            .chain(self.n.iter().copied())
            .map(|n| FinSet::pair(n + 1))
            .collect()
    }

    /// The two words `A_i B_i` and `C_i ∏ {0, 1 + n_j}`.
    pub fn expected_factorizations(&self) -> BTreeSet<Factorization> {
        let i = self.i;
        let mut long = self.d_atoms();
        long.push(self.c[i].clone());
        BTreeSet::from([
            Factorization::new(vec![self.a[i].clone(), self.b[i].clone()]),
            Factorization::new(long),
        ])
    }
}

/// Builds the family up to index `i`. Without `n_seq` the minimal choice
/// `n_{j+1} = 3 max(D_j)` is used.
pub fn build_family(i: usize, n_seq: Option<&[u64]>) -> Result<TwoWordFamily> {
    let mut fam = TwoWordFamily {
        i,
        n: Vec::with_capacity(i),
        a: vec![FinSet::pair(1)],
        b: vec![FinSet::zero()],
        c: vec![FinSet::zero()],
        d: vec![FinSet::pair(1)],
        s: vec![FinSet::pair(1)],
    };
    for j in 0..i {
        let min = fam.d[j]
            .max_element()
            .checked_mul(3)
            .ok_or(Error::Overflow)?;
        let n = match n_seq {
            None => min,
            Some(seq) => {
                let n = seq.get(j).copied().unwrap_or(0);
                if n < min {
                    return Err(Error::InvalidSequence {
                        index: j + 1,
                        value: n,
                        min,
                    });
                }
                n
            }
        };
        let m = n.checked_add(1).ok_or(Error::Overflow)?;
        let a = fam.a[j].with_element(m);
        let b = fam.b[j].union_shifted(&fam.d[j], n)?;
        let c = fam.c[j].with_element(n);
        let d = fam.d[j].sumset(&FinSet::pair(m))?;
        let s = c.sumset(&d)?;
        fam.n.push(n);
        fam.a.push(a);
        fam.b.push(b);
        fam.c.push(c);
        fam.d.push(d);
        fam.s.push(s);
    }
    Ok(fam)
}

/// Checks the structural identities of the top index without factorizing
/// `S_i`: the recursion, `A_i + B_i = C_i + D_i`, `A_i = {0} ∪ (1 + C_i)` and
/// `max(A_i ∪ B_i ∪ C_i) < max(D_i)`.
pub fn check_identities(fam: &TwoWordFamily, report: &mut Report) -> Result<()> {
    let rebuilt = build_family(fam.i, Some(&fam.n));
    report.check(
        "recursion",
        rebuilt.as_ref().map(|r| r == fam).unwrap_or(false),
        format!("n = {:?}", fam.n),
    );
    if fam.i == 0 {
        return Ok(());
    }
    let i = fam.i;
    let (a, b, c, d) = (&fam.a[i], &fam.b[i], &fam.c[i], &fam.d[i]);
    let ab = a.sumset(b)?;
    let cd = c.sumset(d)?;
    report.check(
        "A+B = C+D",
        ab == cd && cd == fam.s[i],
        format!("S_{i} = {}", fam.s[i]),
    );
    let shifted: Vec<u64> = std::iter::once(0)
        .chain(c.elements().iter().map(|x| x + 1))
        .collect();
    report.check("A = {0} ∪ (1+C)", a.elements() == shifted.as_slice(), "");
    let top = a.max_element().max(b.max_element()).max(c.max_element());
    report.check(
        "max(A ∪ B ∪ C) < max(D)",
        top < d.max_element(),
        format!("{top} < {}", d.max_element()),
    );
    Ok(())
}

/// Verifies the family's factorization claims at the top index by exact
/// computation.
pub fn verify_family(f: &Factorizer, fam: &TwoWordFamily) -> Result<Report> {
    let i = fam.i;
    let mut report = Report::new(format!("family i = {i}"));
    if i == 0 {
        let base = fam.a[0] == FinSet::pair(1)
            && fam.b[0].is_zero()
            && fam.c[0].is_zero()
            && fam.d[0] == FinSet::pair(1)
            && fam.s[0] == FinSet::pair(1);
        report.check(
            "base sets",
            base,
            "A_0 = D_0 = S_0 = {0,1}, B_0 = C_0 = {0}",
        );
        report.check(
            "scope",
            true,
            "factorization claims are stated for i >= 1; only base facts checked",
        );
        return Ok(report);
    }
    check_identities(fam, &mut report)?;

    for (name, set) in [("A", &fam.a[i]), ("B", &fam.b[i]), ("C", &fam.c[i])] {
        report.check(
            format!("{name}_{i} is an atom"),
            f.is_atom(set)?,
            set.to_string(),
        );
    }

    let zd = f.factorizations(&fam.d[i])?;
    let expected_zd = BTreeSet::from([Factorization::new(fam.d_atoms())]);
    report.check(
        format!("Z(D_{i})"),
        zd == expected_zd,
        format!("{} word(s)", zd.len()),
    );
    let ld = f.length_set(&fam.d[i])?;
    report.check(
        format!("L(D_{i}) = {{{}}}", i + 1),
        ld == LengthSet::from_iter([i + 1]),
        ld.to_string(),
    );

    let zs = f.factorizations(fam.top())?;
    report.check(
        format!("Z(S_{i}) = {{A B, C ∏{{0,1+n_j}}}}"),
        zs == fam.expected_factorizations(),
        format!("|Z(S_{i})| = {}", zs.len()),
    );
    let ls = f.length_set(fam.top())?;
    report.check(
        format!("L(S_{i}) = {{2,{}}}", i + 2),
        ls == LengthSet::from_iter([2, i + 2]),
        ls.to_string(),
    );
    report.check(
        "words sharing an atom coincide",
        gcd_criterion(f, fam.top())?,
        "",
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> FinSet {
        t.parse().unwrap()
    }

    #[test]
    fn base_family() {
        let fam = build_family(0, None).unwrap();
        assert_eq!(fam.a[0], s("{0,1}"));
        assert_eq!(fam.b[0], s("{0}"));
        assert_eq!(fam.c[0], s("{0}"));
        assert_eq!(fam.d[0], s("{0,1}"));
        assert_eq!(fam.s[0], s("{0,1}"));
        let r = verify_family(&Factorizer::new(), &fam).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn first_steps() {
        let fam = build_family(2, None).unwrap();
        assert_eq!(fam.n, vec![3, 15]);
        assert_eq!(fam.a[1], s("{0,1,4}"));
        assert_eq!(fam.b[1], s("{0,3,4}"));
        assert_eq!(fam.c[1], s("{0,3}"));
        assert_eq!(fam.d[1], s("{0,1,4,5}"));
        assert_eq!(fam.s[1], s("{0,1,3,4,5,7,8}"));
        assert_eq!(fam.c[2], s("{0,3,15}"));
        assert_eq!(fam.d[2], s("{0,1,4,5,16,17,20,21}"));
    }

    #[test]
    fn explicit_sequence_is_checked() {
        let fam = build_family(2, Some(&[4, 20])).unwrap();
        assert_eq!(fam.c[2], s("{0,4,20}"));
        assert_eq!(
            build_family(2, Some(&[3, 14])),
            Err(Error::InvalidSequence {
                index: 2,
                value: 14,
                min: 15
            })
        );
        assert!(matches!(
            build_family(2, Some(&[3])),
            Err(Error::InvalidSequence { index: 2, .. })
        ));
    }

    #[test]
    fn verify_small_indices() {
        let f = Factorizer::new();
        for i in 1..=2 {
            let fam = build_family(i, None).unwrap();
            let r = verify_family(&f, &fam).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn verify_non_minimal_sequence() {
        let fam = build_family(2, Some(&[5, 40])).unwrap();
        let r = verify_family(&Factorizer::new(), &fam).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn tampered_family_is_reported() {
        let mut fam = build_family(1, None).unwrap();
        fam.s[1] = s("{0,1,3,4,5,7}");
        let r = verify_family(&Factorizer::new(), &fam).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn json_shape() {
        let fam = build_family(1, None).unwrap();
        let v = serde_json::to_value(&fam).unwrap();
        assert_eq!(v["i"], 1);
        assert_eq!(v["n"], serde_json::json!([3]));
        assert_eq!(
            v["S"][1]["elements"],
            serde_json::json!([0, 1, 3, 4, 5, 7, 8])
        );
    }
}
