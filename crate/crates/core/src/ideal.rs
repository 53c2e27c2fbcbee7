//! Pseudomonomials, neural-ideal membership, canonical forms and prime
//! decompositions.
//!
//! Ideals are never handled symbolically. The neural ideal `J_C` is
//! carried by its code `C` (its zero-set); membership of a pseudomonomial is
//! decided by asking whether the interval it is nonzero on avoids `C`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::code::{Code, Codeword, Interval};
use crate::error::{Error, Result};

/// Largest `n` for which [`canonical_form`] will scan all `3^n` candidates.
pub const CANONICAL_FORM_CAP: usize = 12;

/// `∏_{i∈σ} x_i ∏_{j∈τ} (1 - x_j)` with `σ ∩ τ = ∅`.
///
/// Ordered by `(σ, τ)` masks. The unit (`σ = τ = ∅`) is representable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Pseudomonomial {
    sigma: Codeword,
    tau: Codeword,
}

impl Pseudomonomial {
    pub const UNIT: Pseudomonomial = Pseudomonomial { sigma: Codeword::EMPTY, tau: Codeword::EMPTY };

    pub fn new(sigma: Codeword, tau: Codeword) -> Result<Self> {
        if !sigma.is_disjoint(tau) {
            return Err(Error::OverlappingFactors((sigma & tau).to_string()));
        }
        Ok(Pseudomonomial { sigma, tau })
    }

    /// The indicator `φ_c`, nonzero exactly at `c`.
    pub fn indicator(c: Codeword, n: usize) -> Self {
        Pseudomonomial { sigma: c, tau: c.complement(n) }
    }

    /// Positive variables `x_i`.
    pub fn sigma(&self) -> Codeword {
        self.sigma
    }

    /// Negated variables `1 - x_j`.
    pub fn tau(&self) -> Codeword {
        self.tau
    }

    pub fn degree(&self) -> usize {
        self.sigma.len() + self.tau.len()
    }

    pub fn is_monomial(&self) -> bool {
        self.tau.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.sigma.is_empty() && self.tau.is_empty()
    }

    /// Value at `w` over F2.
    pub fn evaluate(&self, w: Codeword) -> bool {
        self.sigma.is_subset(w) && self.tau.is_disjoint(w)
    }

    /// `self | other`.
    pub fn divides(&self, other: &Pseudomonomial) -> bool {
        self.sigma.is_subset(other.sigma) && self.tau.is_subset(other.tau)
    }

    /// The interval `[σ, [n] \ τ]` on which `self` evaluates to 1.
    pub fn support_interval(&self, n: usize) -> Interval {
        Interval::new(self.sigma, self.tau.complement(n)).expect("σ and τ are disjoint")
    }

    /// Divisors obtained by deleting a single factor.
    pub fn one_factor_deletions(&self) -> impl Iterator<Item = Pseudomonomial> + '_ {
        let drop_x = self.sigma.neurons().map(|i| Pseudomonomial { sigma: self.sigma.without(i), tau: self.tau });
        let drop_y = self.tau.neurons().map(|j| Pseudomonomial { sigma: self.sigma, tau: self.tau.without(j) });
        drop_x.chain(drop_y)
    }
}

/// `x1*(1-x2)*(1-x3)`; the unit is `1`.
impl fmt::Display for Pseudomonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let factors: Vec<String> = self
            .sigma
            .neurons()
            .map(|i| format!("x{i}"))
            .chain(self.tau.neurons().map(|j| format!("(1-x{j})")))
            .collect();
        f.write_str(&factors.join("*"))
    }
}

impl fmt::Debug for Pseudomonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pseudomonomial({self})")
    }
}

impl Serialize for Pseudomonomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Pseudomonomial", 3)?;
        s.serialize_field("sigma", &self.sigma)?;
        s.serialize_field("tau", &self.tau)?;
        s.serialize_field("text", &self.to_string())?;
        s.end()
    }
}

/// Maps the interval `[c, d]` to `∏_{i∈c} x_i ∏_{j∉d} (1 - x_j)`.
pub fn interval_to_pm(iv: &Interval, n: usize) -> Pseudomonomial {
    Pseudomonomial { sigma: iv.lo(), tau: iv.hi().complement(n) }
}

/// `p ∈ J_C`, decided by evaluating `p` on every codeword.
pub fn in_neural_ideal(p: &Pseudomonomial, code: &Code) -> bool {
    code.words().iter().all(|&w| !p.evaluate(w))
}

/// `p ∈ J_C`, decided by checking that the support interval of `p` misses
/// every codeword.
pub fn in_neural_ideal_by_interval(p: &Pseudomonomial, code: &Code) -> bool {
    p.support_interval(code.n()).members().all(|w| !code.contains(w))
}

/// A prime pseudomonomial ideal `⟨x_i : i ∈ pos⟩ + ⟨1 - x_j : j ∈ neg⟩`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimePseudoIdeal {
    pos: Codeword,
    neg: Codeword,
}

impl PrimePseudoIdeal {
    pub fn new(pos: Codeword, neg: Codeword) -> Result<Self> {
        if !pos.is_disjoint(neg) {
            return Err(Error::OverlappingFactors((pos & neg).to_string()));
        }
        Ok(PrimePseudoIdeal { pos, neg })
    }

    /// The prime whose zero-set is `iv`.
    pub fn of_interval(iv: &Interval, n: usize) -> Self {
        PrimePseudoIdeal { pos: iv.hi().complement(n), neg: iv.lo() }
    }

    pub fn pos(&self) -> Codeword {
        self.pos
    }

    pub fn neg(&self) -> Codeword {
        self.neg
    }

    pub fn zero_set(&self, n: usize) -> Interval {
        Interval::new(self.neg, self.pos.complement(n)).expect("pos and neg are disjoint")
    }

    /// A pseudomonomial lies in the prime iff one of its factors is a generator.
    pub fn contains(&self, p: &Pseudomonomial) -> bool {
        !p.sigma().is_disjoint(self.pos) || !p.tau().is_disjoint(self.neg)
    }
}

impl fmt::Display for PrimePseudoIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .pos
            .neurons()
            .map(|i| format!("x{i}"))
            .chain(self.neg.neurons().map(|j| format!("1-x{j}")))
            .collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

impl fmt::Debug for PrimePseudoIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Prime{self}")
    }
}

/// `CF(J_C)`: the divisibility-minimal pseudomonomials of the neural ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalForm {
    n: usize,
    elements: Vec<Pseudomonomial>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Elements in `(σ, τ)` order.
    pub fn elements(&self) -> &[Pseudomonomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, p: &Pseudomonomial) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Elements with no `1 - x_j` factor; they generate `I(Δ(C))`.
    pub fn monomials(&self) -> Vec<Pseudomonomial> {
        self.elements.iter().copied().filter(Pseudomonomial::is_monomial).collect()
    }

    pub fn non_monomials(&self) -> Vec<Pseudomonomial> {
        self.elements.iter().copied().filter(|p| !p.is_monomial()).collect()
    }
}

/// Free function form of [`CanonicalForm::monomials`].
pub fn cf_monomials(cf: &CanonicalForm) -> Vec<Pseudomonomial> {
    cf.monomials()
}

/// For every disjoint pair `(σ, τ)`, whether the interval `[σ, [n] \ τ]`
/// meets the code. Pairs are indexed in base 3: digit `i` is 0 when neuron
/// `i + 1` is free, 1 when it is in σ and 2 when it is in τ.
struct OccupancyTable {
    weight: Vec<usize>,
    occupied: Vec<bool>,
}

impl OccupancyTable {
    fn build(code: &Code) -> Self {
        let n = code.n();
        let powers: Vec<usize> = (0..=n).map(|i| 3usize.pow(i as u32)).collect();
        let weight: Vec<usize> = (0..1usize << n)
            .map(|m| (0..n).filter(|b| m & (1 << b) != 0).map(|b| powers[b]).sum())
            .collect();
        let size = powers[n];
        let mut occupied = vec![false; size];
        for idx in (0..size).rev() {
            let mut rest = idx;
            let mut sigma = 0usize;
            let mut free = None;
            for (b, &p) in powers[..n].iter().enumerate() {
                match rest % 3 {
                    0 if free.is_none() => free = Some(p),
                    1 => sigma |= 1 << b,
                    _ => {}
                }
                rest /= 3;
            }
            occupied[idx] = match free {
                // Splitting on a free neuron: it either fires or it does not.
                Some(p) => occupied[idx + p] || occupied[idx + 2 * p],
                None => code.contains(Codeword::from_mask(sigma as u16)),
            };
        }
        OccupancyTable { weight, occupied }
    }

    fn index(&self, p: &Pseudomonomial) -> usize {
        self.weight[p.sigma().mask() as usize] + 2 * self.weight[p.tau().mask() as usize]
    }

    fn is_member(&self, p: &Pseudomonomial) -> bool {
        !self.occupied[self.index(p)]
    }
}

/// Computes `CF(J_C)` by exhaustive enumeration of all `3^n` pseudomonomials.
///
/// Candidates are visited by increasing degree. Membership in `J_C` is
/// closed under multiplication, so a member is divisible by an earlier
/// (lower-degree) element exactly when one of its one-factor deletions is
/// already a member; such candidates are filtered out in a single pass.
pub fn canonical_form(code: &Code) -> Result<CanonicalForm> {
    let n = code.n();
    if n > CANONICAL_FORM_CAP {
        return Err(Error::CapExceeded { n, cap: CANONICAL_FORM_CAP });
    }
    let table = OccupancyTable::build(code);

    let mut by_degree: Vec<Vec<Codeword>> = vec![Vec::new(); n + 1];
    for s in Codeword::all(n) {
        by_degree[s.len()].push(s);
    }

    let mut elements = Vec::new();
    for support in by_degree.iter().flatten() {
        for sigma in support.subsets() {
            let p = Pseudomonomial { sigma, tau: support.difference(sigma) };
            if table.is_member(&p) && !p.one_factor_deletions().any(|q| table.is_member(&q)) {
                elements.push(p);
            }
        }
    }
    elements.sort();
    Ok(CanonicalForm { n, elements })
}

/// The irredundant prime decomposition `J_C = ∩ P_h`, one prime per maximal
/// interval of `C`.
pub fn primary_decomposition(code: &Code) -> Vec<PrimePseudoIdeal> {
    let n = code.n();
    let mut primes: Vec<_> = code
        .maximal_intervals()
        .iter()
        .map(|iv| PrimePseudoIdeal::of_interval(iv, n))
        .collect();
    primes.sort();
    primes
}
