//! Brute-force reference answers for small sets. Sets are bitmasks and every
//! sumset is recomputed by shifting; nothing here calls into the factorizer.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use powmon::{Error, Factorization, FinSet, Result};

pub const PAIR_CAP: u64 = 12;
pub const FACTOR_CAP: u64 = 10;

fn cap(a: &FinSet, cap: u64) -> Result<u64> {
    if a.max_element() > cap {
        return Err(Error::OracleCap {
            max: a.max_element(),
            cap,
        });
    }
    Ok(a.elements().iter().fold(0u64, |m, &x| m | 1 << x))
}

fn to_set(mask: u64) -> FinSet {
    FinSet::new((0..64).filter(|i| mask >> i & 1 == 1).collect()).expect("mask has bit 0")
}

fn top(mask: u64) -> u32 {
    63 - mask.leading_zeros()
}

fn sum(b: u64, c: u64) -> u64 {
    let mut out = 0;
    for i in 0..64 {
        if b >> i & 1 == 1 {
            out |= c << i;
        }
    }
    out
}

/// Submasks of `mask` that contain bit 0.
fn subsets(mask: u64) -> Vec<u64> {
    let rest = mask & !1;
    let mut out = Vec::new();
    let mut s = rest;
    loop {
        out.push(s | 1);
        if s == 0 {
            break;
        }
        s = (s - 1) & rest;
    }
    out
}

/// Every ordered `(b, c)` of subsets of `a` with `b + c = a`. Only the obvious
/// `max(b) + max(c) = max(a)` filter is applied before summing.
fn pairs(a: u64) -> Vec<(u64, u64)> {
    let m = top(a);
    let subs = subsets(a);
    let mut out = Vec::new();
    for &b in &subs {
        for &c in &subs {
            if top(b) + top(c) == m && sum(b, c) == a {
                out.push((b, c));
            }
        }
    }
    out
}

pub fn naive_divisor_pairs(a: &FinSet) -> Result<BTreeSet<(FinSet, FinSet)>> {
    let mask = cap(a, PAIR_CAP)?;
    Ok(pairs(mask)
        .into_iter()
        .map(|(b, c)| (to_set(b), to_set(c)))
        .collect())
}

fn mask_is_atom(a: u64) -> bool {
    a != 1 && pairs(a).iter().all(|&(b, c)| b == 1 || c == 1)
}

pub fn naive_is_atom(a: &FinSet) -> Result<bool> {
    Ok(mask_is_atom(cap(a, PAIR_CAP)?))
}

fn words(a: u64) -> BTreeSet<Vec<u64>> {
    let mut out = BTreeSet::new();
    if a == 1 {
        out.insert(Vec::new());
        return out;
    }
    let mut split = false;
    for (b, c) in pairs(a) {
        if b == 1 || c == 1 {
            continue;
        }
        split = true;
        for u in words(b) {
            for v in words(c) {
                let mut w: Vec<u64> = u.iter().chain(v.iter()).copied().collect();
                w.sort_unstable();
                out.insert(w);
            }
        }
    }
    if !split {
        out.insert(vec![a]);
    }
    out
}

pub fn naive_factorizations(a: &FinSet) -> Result<BTreeSet<Factorization>> {
    let mask = cap(a, FACTOR_CAP)?;
    Ok(words(mask)
        .into_iter()
        .map(|w| Factorization::new(w.into_iter().map(to_set).collect()))
        .collect())
}

pub fn naive_relcanc(a: &FinSet) -> Result<bool> {
    let mask = cap(a, FACTOR_CAP)?;
    let mut groups: BTreeMap<u64, usize> = BTreeMap::new();
    for (b, _) in pairs(mask) {
        *groups.entry(b).or_default() += 1;
    }
    Ok(groups.values().all(|&n| n == 1))
}

/// All sets `A ⊆ [0, m]` with `0 ∈ A`.
pub fn all_sets(m: u64) -> impl Iterator<Item = FinSet> {
    (0u64..1 << m).map(|bits| to_set(bits << 1 | 1))
}
