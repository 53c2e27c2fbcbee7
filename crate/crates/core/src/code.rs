//! Codes, codewords and Boolean intervals.
//!
//! Neurons are numbered `1..=n`; neuron `i` lives in bit `i - 1` of a
//! [`Codeword`] mask. Every set-valued result is returned in ascending mask
//! order (intervals by `(lo, hi)`), so output is reproducible.

use std::fmt;
use std::ops::{BitAnd, BitOr};

use serde::{Serialize, Serializer};

use crate::complex::{SimplicialComplex, Universe, VertexSet};
use crate::error::{Error, Result};

/// Largest supported neuron count. Polar vertex sets over `2n` vertices
/// still fit in a `u32`.
pub const MAX_NEURONS: usize = 16;

/// A subset of `[n]`, stored as a bit mask.
///
/// Besides codewords this also carries the index sets of pseudomonomials,
/// primes and prime-sets.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword(u16);

impl Codeword {
    pub const EMPTY: Codeword = Codeword(0);

    pub const fn from_mask(mask: u16) -> Self {
        Codeword(mask)
    }

    /// Builds a codeword from 1-based neuron indices.
    pub fn from_neurons<I: IntoIterator<Item = usize>>(neurons: I) -> Result<Self> {
        let mut mask = 0u16;
        for i in neurons {
            if i == 0 || i > MAX_NEURONS {
                return Err(Error::NeuronOutOfRange { neuron: i, n: MAX_NEURONS });
            }
            mask |= 1 << (i - 1);
        }
        Ok(Codeword(mask))
    }

    /// The whole of `[n]`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_NEURONS);
        Codeword(((1u32 << n) - 1) as u16)
    }

    pub const fn mask(self) -> u16 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, neuron: usize) -> bool {
        (1..=MAX_NEURONS).contains(&neuron) && self.0 & (1 << (neuron - 1)) != 0
    }

    pub fn with(self, neuron: usize) -> Self {
        Codeword(self.0 | (1 << (neuron - 1)))
    }

    pub fn without(self, neuron: usize) -> Self {
        Codeword(self.0 & !(1 << (neuron - 1)))
    }

    pub fn is_subset(self, other: Codeword) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Codeword) -> bool {
        self.0 & other.0 == 0
    }

    pub fn difference(self, other: Codeword) -> Self {
        Codeword(self.0 & !other.0)
    }

    /// `[n] \ self`.
    pub fn complement(self, n: usize) -> Self {
        Codeword::full(n).difference(self)
    }

    pub fn fits(self, n: usize) -> bool {
        self.is_subset(Codeword::full(n))
    }

    /// Neuron indices in ascending order.
    pub fn neurons(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..MAX_NEURONS).filter(move |b| mask & (1 << b) != 0).map(|b| b + 1)
    }

    /// Every subset of `self`, in ascending mask order.
    pub fn subsets(self) -> Subsets {
        Subsets { set: self.0, next: Some(0) }
    }

    /// Every codeword on `n` neurons, ascending.
    pub fn all(n: usize) -> impl Iterator<Item = Codeword> {
        (0..(1u32 << n)).map(|m| Codeword(m as u16))
    }
}

impl BitAnd for Codeword {
    type Output = Codeword;
    fn bitand(self, rhs: Codeword) -> Codeword {
        Codeword(self.0 & rhs.0)
    }
}

impl BitOr for Codeword {
    type Output = Codeword;
    fn bitor(self, rhs: Codeword) -> Codeword {
        Codeword(self.0 | rhs.0)
    }
}

/// Subsets of a mask via the carry-rippler trick.
pub struct Subsets {
    set: u16,
    next: Option<u16>,
}

impl Iterator for Subsets {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        let cur = self.next?;
        let following = cur.wrapping_sub(self.set) & self.set;
        self.next = (following != 0).then_some(following);
        Some(Codeword(cur))
    }
}

/// Writes neurons as a digit string (`12`) when every index is below 10,
/// otherwise as a braced list (`{2,11}`). The empty set is `{}`.
impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        if self.neurons().all(|i| i < 10) {
            for i in self.neurons() {
                write!(f, "{i}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.neurons().map(|i| i.to_string()).collect();
            write!(f, "{{{}}}", parts.join(","))
        }
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Codeword({self})")
    }
}

impl Serialize for Codeword {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.neurons())
    }
}

/// A neural code: a proper, nonempty set of codewords on `n` neurons.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Code {
    n: usize,
    words: Vec<Codeword>,
    member: Vec<u64>,
}

impl Code {
    /// Deduplicates `words`. Empty and full codes are rejected.
    pub fn new<I: IntoIterator<Item = Codeword>>(n: usize, words: I) -> Result<Self> {
        if n == 0 || n > MAX_NEURONS {
            return Err(Error::NeuronCount(n));
        }
        let mut member = vec![0u64; (1usize << n).div_ceil(64)];
        for w in words {
            if !w.fits(n) {
                let neuron = w.difference(Codeword::full(n)).neurons().next().unwrap_or(0);
                return Err(Error::NeuronOutOfRange { neuron, n });
            }
            let m = w.mask() as usize;
            member[m / 64] |= 1 << (m % 64);
        }
        let words: Vec<Codeword> = Codeword::all(n)
            .filter(|w| {
                let m = w.mask() as usize;
                member[m / 64] & (1 << (m % 64)) != 0
            })
            .collect();
        if words.is_empty() {
            return Err(Error::EmptyCode);
        }
        if words.len() == 1 << n {
            return Err(Error::FullCode(n));
        }
        Ok(Code { n, words, member })
    }

    pub fn from_masks<I: IntoIterator<Item = u16>>(n: usize, masks: I) -> Result<Self> {
        Code::new(n, masks.into_iter().map(Codeword::from_mask))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Codewords in ascending mask order.
    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: Codeword) -> bool {
        let m = w.mask() as usize;
        w.fits(self.n) && self.member[m / 64] & (1 << (m % 64)) != 0
    }

    /// `2^[n] \ C`.
    pub fn complement(&self) -> Code {
        let words = Codeword::all(self.n).filter(|&w| !self.contains(w));
        Code::new(self.n, words).expect("complement of a proper nonempty code is proper and nonempty")
    }

    /// True iff every member of `iv` is a codeword.
    pub fn contains_interval(&self, iv: &Interval) -> bool {
        iv.members().all(|w| self.contains(w))
    }

    /// Codewords maximal under inclusion.
    pub fn maximal_codewords(&self) -> Vec<Codeword> {
        // Scanning from the largest masks down means a superset, if any,
        // has already been kept.
        let mut maximal: Vec<Codeword> = Vec::new();
        for &w in self.words.iter().rev() {
            if !maximal.iter().any(|&m| w.is_subset(m)) {
                maximal.push(w);
            }
        }
        maximal.sort();
        maximal
    }

    /// The intervals contained in the code that are maximal under inclusion.
    ///
    /// Candidates `[c, d]` range over codeword pairs `c ⊆ d` (so `d` lies
    /// below some maximal codeword). An interval inside the code is maximal
    /// iff none of its one-step enlargements `[c, d ∪ i]` or `[c \ i, d]`
    /// stays inside the code.
    pub fn maximal_intervals(&self) -> Vec<Interval> {
        let n = self.n;
        let mut out = Vec::new();
        for &d in &self.words {
            for c in d.subsets() {
                if !self.contains(c) {
                    continue;
                }
                let iv = Interval { lo: c, hi: d };
                if !self.contains_interval(&iv) {
                    continue;
                }
                let grows_up = d
                    .complement(n)
                    .neurons()
                    .any(|i| self.contains_interval(&Interval { lo: c, hi: d.with(i) }));
                let grows_down = c
                    .neurons()
                    .any(|i| self.contains_interval(&Interval { lo: c.without(i), hi: d }));
                if !grows_up && !grows_down {
                    out.push(iv);
                }
            }
        }
        out.sort();
        out
    }

    /// Δ(C): facets are the maximal codewords.
    pub fn downward_closure(&self) -> SimplicialComplex {
        let facets = self
            .maximal_codewords()
            .into_iter()
            .map(|w| VertexSet::from_mask(w.mask() as u32));
        SimplicialComplex::new(Universe::Plain(self.n), facets)
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code(n={}, {self})", self.n)
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.words.iter().map(|w| w.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl Serialize for Code {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Code", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("words", &self.words)?;
        s.end()
    }
}

/// The Boolean interval `[lo, hi] = { w : lo ⊆ w ⊆ hi }`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Interval {
    lo: Codeword,
    hi: Codeword,
}

impl Interval {
    pub fn new(lo: Codeword, hi: Codeword) -> Result<Self> {
        if !lo.is_subset(hi) {
            return Err(Error::MalformedInterval { lo: lo.to_string(), hi: hi.to_string() });
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(w: Codeword) -> Self {
        Interval { lo: w, hi: w }
    }

    pub fn lo(&self) -> Codeword {
        self.lo
    }

    pub fn hi(&self) -> Codeword {
        self.hi
    }

    pub fn len(&self) -> usize {
        1 << self.hi.difference(self.lo).len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, w: Codeword) -> bool {
        self.lo.is_subset(w) && w.is_subset(self.hi)
    }

    /// `self ⊆ other` as sets of codewords.
    pub fn is_subinterval(&self, other: &Interval) -> bool {
        other.lo.is_subset(self.lo) && self.hi.is_subset(other.hi)
    }

    /// Members in ascending mask order.
    pub fn members(&self) -> impl Iterator<Item = Codeword> {
        let lo = self.lo;
        self.hi.difference(lo).subsets().map(move |s| s | lo)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Interval{self}")
    }
}
