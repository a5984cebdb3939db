//! Exhaustive divisor and cofactor searches on dense bit blocks.
//!
//! For a target `A` and a candidate divisor `B`, the quotient
//! `C* = {x : B + {x} ⊆ A}` contains every cofactor of `B`, so `B` divides `A`
//! iff `B + C* = A`. Cofactors are the subsets of `C*` that still cover `A`.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::finset::FinSet;

/// Largest maximum element the searches accept.
pub const SEARCH_LIMIT: u64 = 1 << 20;

pub(crate) type Tick<'a> = &'a dyn Fn(u64) -> Result<()>;

pub(crate) struct Target {
    pub bits: Bits,
    pub elems: Vec<usize>,
    pub max: usize,
}

impl Target {
    pub fn new(a: &FinSet) -> Result<Self> {
        if a.max_element() > SEARCH_LIMIT {
            return Err(Error::TooLarge {
                max: a.max_element(),
            });
        }
        Ok(Target {
            bits: a.to_bits(),
            elems: a.elements().iter().map(|&e| e as usize).collect(),
            max: a.max_element() as usize,
        })
    }

    fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    /// `lhs + rhs` over the target's universe.
    fn sum<'e>(&self, lhs: impl IntoIterator<Item = &'e usize>, rhs: &Bits) -> Bits {
        let mut out = Bits::new(self.max + 1);
        for &e in lhs {
            out.or_shifted_up(rhs, e);
        }
        out
    }
}

/// `C*` for `b`, restricted to `[0, max(a) - max(b)]`; `None` when `b` cannot
/// divide `a` for size reasons.
pub(crate) fn quotient(a: &Target, b: &[usize]) -> Option<Bits> {
    let bmax = *b.last()?;
    if bmax > a.max {
        return None;
    }
    let gamma = a.max - bmax;
    let mut q = a.bits.clone();
    for &e in b {
        q.and_shifted_down(&a.bits, e);
    }
    q.truncate_above(gamma + 1);
    (q.contains(0) && q.contains(gamma)).then_some(q)
}

/// Every `C` with `b + C = a`.
pub(crate) fn cofactors(a: &Target, b: &[usize], tick: Tick<'_>) -> Result<Vec<Bits>> {
    let Some(q) = quotient(a, b) else {
        return Ok(Vec::new());
    };
    if a.sum(b, &q) != a.bits {
        return Ok(Vec::new());
    }
    let gamma = a.max - b.last().copied().unwrap_or(0);
    let mut included = Bits::new(gamma + 1);
    included.insert(0);
    included.insert(gamma);
    let covered = a.sum(b, &included);
    let mut search = CoverSearch {
        a,
        b,
        tick,
        out: Vec::new(),
    };
    search.run(included, q, covered)?;
    Ok(search.out)
}

struct CoverSearch<'a> {
    a: &'a Target,
    b: &'a [usize],
    tick: Tick<'a>,
    out: Vec<Bits>,
}

impl CoverSearch<'_> {
    // Branches on the smallest uncovered element `t`: the first (ascending)
    // candidate cover of `t` that is taken identifies the branch, so every
    // cover is produced exactly once.
    fn run(&mut self, included: Bits, mut allowed: Bits, covered: Bits) -> Result<()> {
        (self.tick)(1)?;
        let Some(t) = self.a.bits.first_not_in(&covered) else {
            return self.emit(&included, &allowed);
        };
        for &e in self.b.iter().rev() {
            if e > t {
                continue;
            }
            let x = t - e;
            if !allowed.contains(x) {
                continue;
            }
            let mut inc = included.clone();
            inc.insert(x);
            let mut cov = covered.clone();
            for &f in self.b {
                if x + f <= self.a.max {
                    cov.insert(x + f);
                }
            }
            self.run(inc, allowed.clone(), cov)?;
            allowed.remove(x);
            if !self.a.bits.is_subset(&self.a.sum(self.b, &allowed)) {
                break;
            }
        }
        Ok(())
    }

    fn emit(&mut self, included: &Bits, allowed: &Bits) -> Result<()> {
        let mut free = allowed.clone();
        free.and_not_assign(included);
        let free: Vec<usize> = free.iter().collect();
        let n = 1u64.checked_shl(free.len() as u32).unwrap_or(u64::MAX);
        (self.tick)(n)?;
        for mask in 0..n {
            let mut c = included.clone();
            for (i, &x) in free.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    c.insert(x);
                }
            }
            self.out.push(c);
        }
        Ok(())
    }
}

/// Nontrivial divisors `B` of `a` with `max(B) <= max(a) / 2`.
///
/// Every factorization `a = B + C` with both sides nontrivial has one side in
/// this family, so it determines all divisors via [`cofactors`].
/// With `first_only`, stops after the first hit (atom test).
pub(crate) fn small_divisors(a: &Target, first_only: bool, tick: Tick<'_>) -> Result<Vec<Bits>> {
    let mut out = Vec::new();
    // |B + C| >= 3 for nontrivial B, C
    if a.elems.len() < 3 {
        return Ok(out);
    }
    // max(a) = max(B) + max(C) with both maxima below max(a)
    if a.max > 2 * a.elems[a.elems.len() - 2] {
        return Ok(out);
    }
    for &beta in &a.elems[1..] {
        if 2 * beta > a.max {
            break;
        }
        let gamma = a.max - beta;
        if !a.contains(gamma) {
            continue;
        }
        let mut cstar = a.bits.clone();
        cstar.and_shifted_down(&a.bits, beta);
        cstar.truncate_above(gamma + 1);
        let cands: Vec<usize> = a
            .elems
            .iter()
            .copied()
            .take_while(|&u| u < beta)
            .filter(|&u| u > 0 && a.contains(u + gamma))
            .collect();
        let mut dfs = SmallDivisorDfs {
            a,
            gamma,
            cands: &cands,
            tick,
            first_only,
            out: &mut out,
        };
        let mut chosen = vec![0, beta];
        if dfs.run(0, &mut chosen, cstar)? {
            break;
        }
    }
    Ok(out)
}

struct SmallDivisorDfs<'a> {
    a: &'a Target,
    gamma: usize,
    cands: &'a [usize],
    tick: Tick<'a>,
    first_only: bool,
    out: &'a mut Vec<Bits>,
}

impl SmallDivisorDfs<'_> {
    /// Returns `true` when the search should stop.
    fn run(&mut self, idx: usize, chosen: &mut Vec<usize>, cstar: Bits) -> Result<bool> {
        (self.tick)(1)?;
        // every cofactor lies in cstar and B lies in chosen ∪ undecided
        let reach = self.a.sum(chosen.iter().chain(&self.cands[idx..]), &cstar);
        if !self.a.bits.is_subset(&reach) {
            return Ok(false);
        }
        if idx == self.cands.len() {
            let beta = chosen.iter().copied().max().unwrap_or(0);
            self.out
                .push(Bits::from_elems(beta + 1, chosen.iter().copied()));
            return Ok(self.first_only);
        }
        let x = self.cands[idx];
        let mut narrowed = cstar.clone();
        narrowed.and_shifted_down(&self.a.bits, x);
        if narrowed.contains(self.gamma) {
            chosen.push(x);
            if self.run(idx + 1, chosen, narrowed)? {
                return Ok(true);
            }
            chosen.pop();
        }
        self.run(idx + 1, chosen, cstar)
    }
}
