//! Finite subsets of the nonnegative integers that contain `0`.
//!
//! [`FinSet`] is the element type of the reduced finitary power monoid: the
//! operation is the sumset `A + B = {a + b : a in A, b in B}` and `{0}` is the
//! identity. Values are immutable once built.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::Bits;
use crate::error::{Error, Result};

/// Default bound below which a set also carries a dense bit-block copy.
pub const DEFAULT_BITSET_LIMIT: u64 = 4096;

static BITSET_LIMIT: AtomicU64 = AtomicU64::new(DEFAULT_BITSET_LIMIT);

/// Sets whose maximum is below `limit` carry a bit-block copy and add by
/// shifted OR; larger sets use a merge-based sumset. Affects only sets built
/// after the call.
pub fn set_bitset_limit(limit: u64) {
    BITSET_LIMIT.store(limit, AtomicOrdering::Relaxed);
}

pub fn bitset_limit() -> u64 {
    BITSET_LIMIT.load(AtomicOrdering::Relaxed)
}

/// A finite set of nonnegative integers containing `0`, stored as a strictly
/// increasing sequence (and as a bit block when small).
#[derive(Clone)]
pub struct FinSet {
    elems: Vec<u64>,
    bits: Option<Bits>,
}

impl FinSet {
    /// Normalizes `elems` (sort + dedup). Fails when `0` is absent.
    pub fn new(mut elems: Vec<u64>) -> Result<Self> {
        if elems.is_empty() {
            return Err(Error::EmptySet);
        }
        elems.sort_unstable();
        elems.dedup();
        if elems[0] != 0 {
            return Err(Error::MissingZero);
        }
        Ok(Self::from_sorted(elems))
    }

    /// The identity `{0}`.
    pub fn zero() -> Self {
        Self::from_sorted(vec![0])
    }

    /// `{0, n}`.
    pub fn pair(n: u64) -> Self {
        if n == 0 {
            Self::zero()
        } else {
            Self::from_sorted(vec![0, n])
        }
    }

    /// Caller guarantees `elems` is strictly increasing and starts at 0.
    pub(crate) fn from_sorted(elems: Vec<u64>) -> Self {
        debug_assert!(elems.first() == Some(&0));
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        let max = *elems.last().expect("nonempty");
        let bits = (max < bitset_limit())
            .then(|| Bits::from_elems(max as usize + 1, elems.iter().map(|&e| e as usize)));
        FinSet { elems, bits }
    }

    pub(crate) fn from_bits(bits: &Bits) -> Self {
        Self::from_sorted(bits.iter().map(|e| e as u64).collect())
    }

    pub fn elements(&self) -> &[u64] {
        &self.elems
    }

    pub fn max_element(&self) -> u64 {
        *self.elems.last().expect("nonempty")
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    /// Always false: a `FinSet` contains at least `0`.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// True for the identity `{0}`.
    pub fn is_zero(&self) -> bool {
        self.elems.len() == 1
    }

    pub fn contains(&self, x: u64) -> bool {
        match &self.bits {
            Some(b) => x <= self.max_element() && b.contains(x as usize),
            None => self.elems.binary_search(&x).is_ok(),
        }
    }

    pub fn is_subset(&self, other: &FinSet) -> bool {
        self.max_element() <= other.max_element() && self.elems.iter().all(|&x| other.contains(x))
    }

    /// Dense copy over `[0, max]`. Searches always work on this form.
    pub(crate) fn to_bits(&self) -> Bits {
        match &self.bits {
            Some(b) => b.clone(),
            None => Bits::from_elems(
                self.max_element() as usize + 1,
                self.elems.iter().map(|&e| e as usize),
            ),
        }
    }

    /// The sumset `self + other`.
    pub fn sumset(&self, other: &FinSet) -> Result<FinSet> {
        let max = self
            .max_element()
            .checked_add(other.max_element())
            .ok_or(Error::Overflow)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if let (Some(ab), Some(_)) = (&self.bits, &other.bits) {
            // shifted OR over the sparser operand
            let (dense, sparse) = if self.len() >= other.len() {
                (ab, other)
            } else {
                (other.bits.as_ref().expect("checked"), self)
            };
            let mut out = Bits::new(max as usize + 1);
            for &e in &sparse.elems {
                out.or_shifted_up(dense, e as usize);
            }
            return Ok(FinSet::from_bits(&out));
        }
        let mut sums = Vec::with_capacity(self.len() * other.len());
        for &x in &self.elems {
            for &y in &other.elems {
                sums.push(x + y);
            }
        }
        sums.sort_unstable();
        sums.dedup();
        Ok(FinSet::from_sorted(sums))
    }

    /// Sumset of an arbitrary number of sets; the empty sum is `{0}`.
    pub fn sum_all<'a, I: IntoIterator<Item = &'a FinSet>>(sets: I) -> Result<FinSet> {
        sets.into_iter()
            .try_fold(FinSet::zero(), |acc, s| acc.sumset(s))
    }

    /// `{d * x : x in self}`.
    pub fn dilate(&self, d: u64) -> Result<FinSet> {
        if d == 0 {
            return Err(Error::ZeroDilation);
        }
        let elems = self
            .elems
            .iter()
            .map(|&x| x.checked_mul(d).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(FinSet::from_sorted(elems))
    }

    /// Greatest common divisor of all elements; `0` exactly for `{0}`.
    pub fn gcd(&self) -> u64 {
        self.elems.iter().fold(0, |g, &x| gcd(g, x))
    }

    /// `self ∪ (shift + other)`.
    pub fn union_shifted(&self, other: &FinSet, shift: u64) -> Result<FinSet> {
        let mut elems = self.elems.clone();
        for &x in &other.elems {
            elems.push(x.checked_add(shift).ok_or(Error::Overflow)?);
        }
        elems.sort_unstable();
        elems.dedup();
        Ok(FinSet::from_sorted(elems))
    }

    /// `self ∪ {x}`.
    pub fn with_element(&self, x: u64) -> FinSet {
        let mut elems = self.elems.clone();
        if let Err(pos) = elems.binary_search(&x) {
            elems.insert(pos, x);
        }
        FinSet::from_sorted(elems)
    }

    /// Parses the canonical text form `{0,1,4}`; order and duplicates are
    /// normalized away.
    pub fn parse(text: &str) -> Result<FinSet> {
        let t = text.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| Error::Syntax(t.to_string()))?;
        if inner.trim().is_empty() {
            return Err(Error::EmptySet);
        }
        let mut elems = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::InvalidElement(tok.to_string()));
            }
            elems.push(tok.parse::<u64>().map_err(|_| Error::Overflow)?);
        }
        FinSet::new(elems)
    }

    /// Canonical text form: ascending, comma-separated, no whitespace.
    pub fn render(&self) -> String {
        self.to_string()
    }

    /// Orders by cardinality first, then lexicographically on elements.
    pub fn shortlex_cmp(&self, other: &FinSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.elems.cmp(&other.elems))
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl PartialEq for FinSet {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
    }
}

impl Eq for FinSet {}

impl Hash for FinSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elems.hash(state);
    }
}

/// Canonical factor order: by maximum, then lexicographically on elements.
impl Ord for FinSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.max_element()
            .cmp(&other.max_element())
            .then_with(|| self.elems.cmp(&other.elems))
    }
}

impl PartialOrd for FinSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FinSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FinSet::parse(s)
    }
}

#[derive(Serialize, Deserialize)]
struct FinSetJson {
    elements: Vec<u64>,
}

impl Serialize for FinSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FinSetJson {
            elements: self.elems.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = FinSetJson::deserialize(d)?;
        FinSet::new(raw.elements).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> FinSet {
        t.parse().unwrap()
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(s("{0,1}").elements(), &[0, 1]);
        assert_eq!(s("{1,0,1}").elements(), &[0, 1]);
        assert_eq!(s(" { 3 , 0 } ").elements(), &[0, 3]);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(FinSet::parse("{1,2}"), Err(Error::MissingZero));
        assert_eq!(FinSet::parse("{}"), Err(Error::EmptySet));
        assert!(matches!(
            FinSet::parse("{0,-1}"),
            Err(Error::InvalidElement(_))
        ));
        assert!(matches!(
            FinSet::parse("{0,1.5}"),
            Err(Error::InvalidElement(_))
        ));
        assert!(matches!(FinSet::parse("0,1"), Err(Error::Syntax(_))));
        assert_eq!(
            FinSet::parse("{0,18446744073709551616}"),
            Err(Error::Overflow)
        );
        assert!(FinSet::parse("{0,18446744073709551615}").is_ok());
    }

    #[test]
    fn sumset_examples() {
        assert_eq!(
            s("{0,1,4,5}").sumset(&s("{0,3}")).unwrap(),
            s("{0,1,3,4,5,7,8}")
        );
        assert_eq!(
            s("{0,1,2,3}").sumset(&s("{0,7}")).unwrap(),
            s("{0,1,2,3,7,8,9,10}")
        );
        let a = s("{0,2,9}");
        assert_eq!(a.sumset(&FinSet::zero()).unwrap(), a);
    }

    #[test]
    fn sumset_large_path_matches_small_path() {
        let a = s("{0,1,5000,7000}");
        let b = s("{0,2,3}");
        let c = a.sumset(&b).unwrap();
        assert_eq!(
            c.elements(),
            &[0, 1, 2, 3, 4, 5000, 5002, 5003, 7000, 7002, 7003]
        );
    }

    #[test]
    fn sumset_overflow() {
        let big = FinSet::pair(u64::MAX);
        assert_eq!(big.sumset(&FinSet::pair(1)), Err(Error::Overflow));
    }

    #[test]
    fn dilate_examples() {
        assert_eq!(s("{0,1,2}").dilate(3).unwrap(), s("{0,3,6}"));
        assert_eq!(s("{0,7}").dilate(9).unwrap(), s("{0,63}"));
        assert_eq!(s("{0,4,9}").dilate(1).unwrap(), s("{0,4,9}"));
        assert_eq!(s("{0,1}").dilate(0), Err(Error::ZeroDilation));
        assert_eq!(
            FinSet::pair(u64::MAX / 2 + 1).dilate(2),
            Err(Error::Overflow)
        );
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(FinSet::zero().gcd(), 0);
        assert_eq!(s("{0,3,6,9}").gcd(), 3);
        assert_eq!(s("{0,4,10}").gcd(), 2);
    }

    #[test]
    fn render_examples() {
        assert_eq!(s("{0,1}").render(), "{0,1}");
        assert_eq!(FinSet::new(vec![6, 0, 3]).unwrap().render(), "{0,3,6}");
    }

    #[test]
    fn json_shape() {
        let a = s("{0,2,5}");
        let j = serde_json::to_string(&a).unwrap();
        assert_eq!(j, r#"{"elements":[0,2,5]}"#);
        let back: FinSet = serde_json::from_str(&j).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<FinSet>(r#"{"elements":[1,2]}"#).is_err());
    }

    #[test]
    fn ordering_is_max_then_lex() {
        let mut v = vec![s("{0,3}"), s("{0,1,3}"), s("{0,2}"), s("{0,1}")];
        v.sort();
        assert_eq!(v, vec![s("{0,1}"), s("{0,2}"), s("{0,1,3}"), s("{0,3}")]);
        assert_eq!(s("{0,2}").shortlex_cmp(&s("{0,1,2}")), Ordering::Less);
    }

    #[test]
    fn union_shifted_and_with_element() {
        assert_eq!(
            s("{0,1}").union_shifted(&s("{0,1}"), 3).unwrap(),
            s("{0,1,3,4}")
        );
        assert_eq!(s("{0,1}").with_element(4), s("{0,1,4}"));
    }
}
