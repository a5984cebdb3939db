//! Divisors, atoms, factorizations and length sets.
//!
//! A [`Factorizer`] is a computation context: it carries the search budget
//! and a memo table keyed by the canonical set. Every public method is a
//! top-level call with its own budget; nested work shares the memo.

mod search;
mod types;

use std::cell::{Cell, RefCell};
use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

pub use search::SEARCH_LIMIT;
pub use types::{fact_gcd, Factorization, LengthSet};

use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::rational::Rational;
use search::Target;

/// Default node budget for a single top-level call.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Default)]
struct Tables {
    atoms: HashMap<FinSet, bool>,
    divisors: HashMap<FinSet, Arc<BTreeSet<FinSet>>>,
    cofactors: HashMap<(FinSet, FinSet), Arc<BTreeSet<FinSet>>>,
    factorizations: HashMap<FinSet, Arc<BTreeSet<Factorization>>>,
}

/// A memo table that several [`Factorizer`]s (possibly on different threads)
/// can read and extend.
#[derive(Clone, Default)]
pub struct SharedMemo(Arc<RwLock<Tables>>);

impl SharedMemo {
    pub fn new() -> Self {
        Self::default()
    }
}

enum Memo {
    Local(RefCell<Tables>),
    Shared(SharedMemo),
}

pub struct Factorizer {
    budget: u64,
    nodes: Cell<u64>,
    depth: Cell<u32>,
    memo: Memo,
}

impl Default for Factorizer {
    fn default() -> Self {
        Self::new()
    }
}

impl Factorizer {
    pub fn new() -> Self {
        Self::with_budget(DEFAULT_BUDGET)
    }

    pub fn with_budget(budget: u64) -> Self {
        Factorizer {
            budget,
            nodes: Cell::new(0),
            depth: Cell::new(0),
            memo: Memo::Local(RefCell::new(Tables::default())),
        }
    }

    /// A context backed by `memo` instead of a private table.
    pub fn with_shared_memo(budget: u64, memo: SharedMemo) -> Self {
        Factorizer {
            budget,
            nodes: Cell::new(0),
            depth: Cell::new(0),
            memo: Memo::Shared(memo),
        }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// Nodes visited by the most recent top-level call.
    pub fn nodes_visited(&self) -> u64 {
        self.nodes.get()
    }

    fn tick(&self, n: u64) -> Result<()> {
        let total = self.nodes.get().saturating_add(n);
        self.nodes.set(total);
        if total > self.budget {
            Err(Error::BudgetExceeded { limit: self.budget })
        } else {
            Ok(())
        }
    }

    fn top_level<T>(&self, f: impl FnOnce() -> Result<T>) -> Result<T> {
        if self.depth.get() == 0 {
            self.nodes.set(0);
        }
        self.depth.set(self.depth.get() + 1);
        let r = f();
        self.depth.set(self.depth.get() - 1);
        r
    }

    fn lookup<T>(&self, f: impl FnOnce(&Tables) -> Option<T>) -> Option<T> {
        match &self.memo {
            Memo::Local(t) => f(&t.borrow()),
            Memo::Shared(m) => f(&m.0.read().expect("memo lock poisoned")),
        }
    }

    fn store(&self, f: impl FnOnce(&mut Tables)) {
        match &self.memo {
            Memo::Local(t) => f(&mut t.borrow_mut()),
            Memo::Shared(m) => f(&mut m.0.write().expect("memo lock poisoned")),
        }
    }

    /// All `C` with `b + C = a`; empty when `b` does not divide `a`.
    pub fn cofactors(&self, a: &FinSet, b: &FinSet) -> Result<BTreeSet<FinSet>> {
        self.top_level(|| self.cofactors_inner(a, b).map(|c| (*c).clone()))
    }

    fn cofactors_inner(&self, a: &FinSet, b: &FinSet) -> Result<Arc<BTreeSet<FinSet>>> {
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.lookup(|t| t.cofactors.get(&key).cloned()) {
            return Ok(hit);
        }
        let result = if b.is_zero() {
            BTreeSet::from([a.clone()])
        } else if !b.is_subset(a) {
            BTreeSet::new()
        } else {
            let target = Target::new(a)?;
            let belems: Vec<usize> = b.elements().iter().map(|&e| e as usize).collect();
            let tick = |n| self.tick(n);
            search::cofactors(&target, &belems, &tick)?
                .iter()
                .map(FinSet::from_bits)
                .collect()
        };
        let result = Arc::new(result);
        self.store(|t| {
            t.cofactors.entry(key).or_insert_with(|| result.clone());
        });
        Ok(result)
    }

    /// Every `B` that divides `a`, including `{0}` and `a` itself.
    pub fn divisors(&self, a: &FinSet) -> Result<BTreeSet<FinSet>> {
        self.top_level(|| self.divisors_inner(a).map(|d| (*d).clone()))
    }

    fn divisors_inner(&self, a: &FinSet) -> Result<Arc<BTreeSet<FinSet>>> {
        if let Some(hit) = self.lookup(|t| t.divisors.get(a).cloned()) {
            return Ok(hit);
        }
        let mut divs = BTreeSet::from([FinSet::zero(), a.clone()]);
        if !a.is_zero() {
            let target = Target::new(a)?;
            let tick = |n| self.tick(n);
            let small = search::small_divisors(&target, false, &tick)?;
            for b in small {
                let b = FinSet::from_bits(&b);
                for c in self.cofactors_inner(a, &b)?.iter() {
                    divs.insert(c.clone());
                }
                divs.insert(b);
            }
        }
        let divs = Arc::new(divs);
        self.store(|t| {
            t.divisors.entry(a.clone()).or_insert_with(|| divs.clone());
        });
        Ok(divs)
    }

    /// True iff `a != {0}` and `a = B + C` forces `B = {0}` or `C = {0}`.
    pub fn is_atom(&self, a: &FinSet) -> Result<bool> {
        self.top_level(|| self.is_atom_inner(a))
    }

    fn is_atom_inner(&self, a: &FinSet) -> Result<bool> {
        if a.is_zero() {
            return Ok(false);
        }
        if let Some(hit) = self.lookup(|t| t.atoms.get(a).copied()) {
            return Ok(hit);
        }
        let target = Target::new(a)?;
        let tick = |n| self.tick(n);
        let atom = search::small_divisors(&target, true, &tick)?.is_empty();
        self.store(|t| {
            t.atoms.insert(a.clone(), atom);
        });
        Ok(atom)
    }

    /// Atoms dividing `a`.
    pub fn atom_divisors(&self, a: &FinSet) -> Result<BTreeSet<FinSet>> {
        self.top_level(|| {
            let mut out = BTreeSet::new();
            for d in self.divisors_inner(a)?.iter() {
                if self.is_atom_inner(d)? {
                    out.insert(d.clone());
                }
            }
            Ok(out)
        })
    }

    /// The complete set of factorizations `Z(a)`; `Z({0})` is the empty word.
    pub fn factorizations(&self, a: &FinSet) -> Result<BTreeSet<Factorization>> {
        self.top_level(|| self.factorizations_inner(a).map(|z| (*z).clone()))
    }

    // Some atom of every factorization contains the smallest nonzero element
    // `s` of `a` (all other atoms contribute 0 to it), so branching on the
    // atom divisors that contain `s` reaches every word.
    fn factorizations_inner(&self, a: &FinSet) -> Result<Arc<BTreeSet<Factorization>>> {
        if let Some(hit) = self.lookup(|t| t.factorizations.get(a).cloned()) {
            return Ok(hit);
        }
        let mut words = BTreeSet::new();
        if a.is_zero() {
            words.insert(Factorization::empty());
        } else {
            let s = a.elements()[1];
            let divs = self.divisors_inner(a)?;
            for u in divs.iter().filter(|u| u.contains(s)) {
                if !self.is_atom_inner(u)? {
                    continue;
                }
                for c in self.cofactors_inner(a, u)?.iter() {
                    for z in self.factorizations_inner(c)?.iter() {
                        words.insert(z.with(u.clone()));
                    }
                }
            }
        }
        let words = Arc::new(words);
        self.store(|t| {
            t.factorizations
                .entry(a.clone())
                .or_insert_with(|| words.clone());
        });
        Ok(words)
    }

    /// `L(a) = { |z| : z in Z(a) }`.
    pub fn length_set(&self, a: &FinSet) -> Result<LengthSet> {
        self.top_level(|| {
            let z = self.factorizations_inner(a)?;
            Ok(z.iter().map(Factorization::len).collect())
        })
    }

    /// `max L(a) / min L(a)`, with `1` for `{0}`.
    pub fn elasticity_of_set(&self, a: &FinSet) -> Result<Rational> {
        Ok(self.length_set(a)?.elasticity())
    }
}

/// [`Factorizer::factorizations`] in a fresh default context.
pub fn factorizations(a: &FinSet) -> Result<BTreeSet<Factorization>> {
    Factorizer::new().factorizations(a)
}

/// [`Factorizer::length_set`] in a fresh default context.
pub fn length_set(a: &FinSet) -> Result<LengthSet> {
    Factorizer::new().length_set(a)
}

/// [`Factorizer::is_atom`] in a fresh default context.
pub fn is_atom(a: &FinSet) -> Result<bool> {
    Factorizer::new().is_atom(a)
}
