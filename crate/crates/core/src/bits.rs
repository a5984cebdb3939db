//! Fixed-width bit blocks over a universe `[0, len)`.
//!
//! Used as the dense representation of small sets and as the working storage
//! of the divisor and cofactor searches.

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(len: usize, elems: I) -> Self {
        let mut bits = Bits::new(len);
        for e in elems {
            bits.insert(e);
        }
        bits
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] &= !(1 << (i & 63));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i >> 6] & (1 << (i & 63)) != 0
    }

    pub fn and_not_assign(&mut self, other: &Bits) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
    }

    /// `self |= src << shift`, truncated to the block length.
    pub fn or_shifted_up(&mut self, src: &Bits, shift: usize) {
        let word_shift = shift >> 6;
        let bit_shift = shift & 63;
        if word_shift >= self.words.len() {
            return;
        }
        let n = self.words.len();
        for (i, &s) in src.words.iter().enumerate() {
            if s == 0 {
                continue;
            }
            let j = i + word_shift;
            if j >= n {
                break;
            }
            self.words[j] |= s << bit_shift;
            if bit_shift != 0 && j + 1 < n {
                self.words[j + 1] |= s >> (64 - bit_shift);
            }
        }
        self.mask_tail();
    }

    /// `self &= src >> shift`: keeps bit `i` only if `src` has bit `i + shift`.
    pub fn and_shifted_down(&mut self, src: &Bits, shift: usize) {
        let word_shift = shift >> 6;
        let bit_shift = shift & 63;
        let m = src.words.len();
        for i in 0..self.words.len() {
            let j = i + word_shift;
            let lo = if j < m { src.words[j] } else { 0 };
            let v = if bit_shift == 0 {
                lo
            } else {
                let hi = if j + 1 < m { src.words[j + 1] } else { 0 };
                (lo >> bit_shift) | (hi << (64 - bit_shift))
            };
            self.words[i] &= v;
        }
    }

    /// Clears every bit at position `>= bound`.
    pub fn truncate_above(&mut self, bound: usize) {
        if bound >= self.len {
            return;
        }
        let w = bound >> 6;
        let b = bound & 63;
        self.words[w] &= (1u64 << b) - 1;
        for x in &mut self.words[w + 1..] {
            *x = 0;
        }
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    /// Smallest element of `self` missing from `other`.
    pub fn first_not_in(&self, other: &Bits) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            let d = w & !other.words.get(i).copied().unwrap_or(0);
            if d != 0 {
                return Some((i << 6) + d.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    fn mask_tail(&mut self) {
        let r = self.len & 63;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some((self.idx << 6) + t);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}
