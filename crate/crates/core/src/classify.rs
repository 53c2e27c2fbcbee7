//! Intersection-completeness (IC) and max-intersection-completeness (MIC).
//!
//! Each property is decided three ways: by brute force over intersections,
//! through the canonical form of the neural ideal, and through the factor
//! complex of the complement code. A negative verdict always carries a
//! witness that [`Witness::replays`] re-checks from scratch.

use std::time::Instant;

use serde::Serialize;

use crate::code::{Code, Codeword, Interval};
use crate::complex::{
    complex_of_ideal, face_to_interval, factor_complex, factor_ideal, interval_to_face, is_effective,
    prime_sets, sr_minimal_primes, PolarFace,
};
use crate::error::Result;
use crate::hypergraph::minimal_transversals;
use crate::ideal::{canonical_form, in_neural_ideal, interval_to_pm, Pseudomonomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Property {
    #[serde(rename = "IC")]
    IntersectionComplete,
    #[serde(rename = "MIC")]
    MaxIntersectionComplete,
}

impl Property {
    pub fn label(self) -> &'static str {
        match self {
            Property::IntersectionComplete => "IC",
            Property::MaxIntersectionComplete => "MIC",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    BruteForce,
    CanonicalForm,
    FactorComplex,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::BruteForce, Method::CanonicalForm, Method::FactorComplex];

    pub fn label(self) -> &'static str {
        match self {
            Method::BruteForce => "brute_force",
            Method::CanonicalForm => "canonical_form",
            Method::FactorComplex => "factor_complex",
        }
    }
}

/// Why a candidate index `i` fails for a pseudomonomial or facet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum IndexFailure {
    /// `(1 - x_i)` does not divide `φ`; on the facet side, `i ∈ F`.
    Ineligible,
    /// A minimal prime `⟨x_j : j ∈ set⟩` containing `x_i` misses `φ`; on the
    /// facet side, a minimal prime-set `set̄` containing `ī` lies inside `F`.
    BlockedBy { set: Codeword },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IndexRejection {
    pub index: usize,
    pub failure: IndexFailure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Codewords (or maximal codewords) whose intersection is missing.
    MissingIntersection { family: Vec<Codeword>, intersection: Codeword },
    /// An element of `CF(J_C)` with `|τ| ≥ 2`.
    WideNegation { phi: Pseudomonomial },
    /// A facet of `Δ∩(C')` with `|F ∩ [n]| < n - 1`.
    NarrowFacet { facet: PolarFace },
    /// A non-monomial of `CF(J_C)` for which no index works.
    UncoveredPseudomonomial { phi: Pseudomonomial, rejections: Vec<IndexRejection> },
    /// A facet of `Δ∩(C')` not containing `[n]` for which no index works.
    UncoveredFacet { facet: PolarFace, rejections: Vec<IndexRejection> },
}

/// One entry per non-monomial `φ ∈ CF(J_C)`, paired with its facet `F` of
/// `Δ∩(C')`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateEntry {
    pub phi: Pseudomonomial,
    pub facet: PolarFace,
    /// The least index satisfying both clauses.
    pub index: usize,
    /// The minimal prime-sets `B_v` with `B̄_v ⊆ F`.
    pub h_f: Vec<Codeword>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MicCertificate {
    pub entries: Vec<CertificateEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub property: Property,
    pub method: Method,
    pub verdict: bool,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<MicCertificate>,
    /// Wall-clock time of the decision.
    pub micros: u64,
}

fn report(
    property: Property,
    method: Method,
    started: Instant,
    witness: Option<Witness>,
    certificate: Option<MicCertificate>,
) -> ClassificationReport {
    ClassificationReport {
        property,
        method,
        verdict: witness.is_none(),
        witness,
        certificate,
        micros: started.elapsed().as_micros() as u64,
    }
}

/// Runs one decider.
pub fn classify(code: &Code, property: Property, method: Method) -> Result<ClassificationReport> {
    use Method::*;
    use Property::*;
    match (property, method) {
        (IntersectionComplete, BruteForce) => Ok(is_intersection_complete_bruteforce(code)),
        (IntersectionComplete, CanonicalForm) => is_intersection_complete_cf(code),
        (IntersectionComplete, FactorComplex) => Ok(is_intersection_complete_facets(code)),
        (MaxIntersectionComplete, BruteForce) => Ok(is_mic_bruteforce(code)),
        (MaxIntersectionComplete, CanonicalForm) => is_mic_algebraic(code),
        (MaxIntersectionComplete, FactorComplex) => Ok(is_mic_facets(code)),
    }
}

/// Pairwise closure: the least pair (in codeword order) whose intersection
/// is missing is the witness.
pub fn is_intersection_complete_bruteforce(code: &Code) -> ClassificationReport {
    let started = Instant::now();
    let words = code.words();
    let witness = words.iter().enumerate().find_map(|(i, &a)| {
        words[i + 1..].iter().find_map(|&b| {
            let meet = a & b;
            (!code.contains(meet))
                .then(|| Witness::MissingIntersection { family: vec![a, b], intersection: meet })
        })
    });
    report(Property::IntersectionComplete, Method::BruteForce, started, witness, None)
}

/// IC iff every element of `CF(J_C)` has at most one `1 - x_j` factor.
pub fn is_intersection_complete_cf(code: &Code) -> Result<ClassificationReport> {
    let started = Instant::now();
    let cf = canonical_form(code)?;
    let witness = cf
        .elements()
        .iter()
        .find(|p| p.tau().len() > 1)
        .map(|&phi| Witness::WideNegation { phi });
    Ok(report(Property::IntersectionComplete, Method::CanonicalForm, started, witness, None))
}

/// IC iff every facet `F` of `Δ∩(C')` has `|F ∩ [n]| ≥ n - 1`.
pub fn is_intersection_complete_facets(code: &Code) -> ClassificationReport {
    let started = Instant::now();
    let n = code.n();
    let witness = factor_complex(&code.complement())
        .polar_facets()
        .into_iter()
        .find(|f| f.x.len() + 1 < n)
        .map(|facet| Witness::NarrowFacet { facet });
    report(Property::IntersectionComplete, Method::FactorComplex, started, witness, None)
}

/// Closes the maximal codewords under intersection and looks for a missing
/// member. The witness is the least missing intersection `c` (by mask),
/// with the family of all maximal codewords containing `c`, whose
/// intersection is exactly `c`.
pub fn is_mic_bruteforce(code: &Code) -> ClassificationReport {
    let started = Instant::now();
    let maximal = code.maximal_codewords();
    let mut seen = vec![false; 1 << code.n()];
    let mut stack: Vec<Codeword> = Vec::new();
    for &m in &maximal {
        if !seen[m.mask() as usize] {
            seen[m.mask() as usize] = true;
            stack.push(m);
        }
    }
    // Every intersection of a family is reached by intersecting with one
    // generator at a time.
    while let Some(x) = stack.pop() {
        for &m in &maximal {
            let meet = x & m;
            if !seen[meet.mask() as usize] {
                seen[meet.mask() as usize] = true;
                stack.push(meet);
            }
        }
    }
    let witness = Codeword::all(code.n())
        .find(|&c| seen[c.mask() as usize] && !code.contains(c))
        .map(|c| Witness::MissingIntersection {
            family: maximal.iter().copied().filter(|&m| c.is_subset(m)).collect(),
            intersection: c,
        });
    report(Property::MaxIntersectionComplete, Method::BruteForce, started, witness, None)
}

/// The facet of `Δ∩(C')` matching `φ ∈ CF(J_C)`: `([n] \ τ) ∪ ‾([n] \ σ)`.
fn facet_of_pm(p: &Pseudomonomial, n: usize) -> PolarFace {
    PolarFace::new(p.tau().complement(n), p.sigma().complement(n))
}

/// Checks the algebraic criterion for one non-monomial: returns the least
/// working index, or every index's failure.
fn algebraic_index(
    phi: &Pseudomonomial,
    primes: &[Codeword],
    n: usize,
) -> std::result::Result<usize, Vec<IndexRejection>> {
    let mut rejections = Vec::with_capacity(n);
    for i in 1..=n {
        if !phi.tau().contains(i) {
            rejections.push(IndexRejection { index: i, failure: IndexFailure::Ineligible });
            continue;
        }
        // ⟨x_j : j ∈ B⟩ contains φ iff B meets σ.
        match primes.iter().find(|b| b.contains(i) && b.is_disjoint(phi.sigma())) {
            Some(&set) => rejections.push(IndexRejection { index: i, failure: IndexFailure::BlockedBy { set } }),
            None => return Ok(i),
        }
    }
    Err(rejections)
}

/// MIC iff every non-monomial `φ ∈ CF(J_C)` has an index `i` with
/// `(1 - x_i) | φ` such that every minimal prime of `I(Δ(C))` containing
/// `x_i` also contains `φ`. Minimal primes stand in for associated primes
/// since `I(Δ(C))` is radical.
pub fn is_mic_algebraic(code: &Code) -> Result<ClassificationReport> {
    let started = Instant::now();
    let n = code.n();
    let cf = canonical_form(code)?;
    let primes = sr_minimal_primes(code);
    let mut entries = Vec::new();
    let mut witness = None;
    for phi in cf.non_monomials() {
        match algebraic_index(&phi, &primes, n) {
            Ok(index) => entries.push(CertificateEntry {
                phi,
                facet: facet_of_pm(&phi, n),
                index,
                h_f: primes.iter().copied().filter(|b| b.is_disjoint(phi.sigma())).collect(),
            }),
            Err(rejections) => {
                witness = Some(Witness::UncoveredPseudomonomial { phi, rejections });
                break;
            }
        }
    }
    let certificate = witness.is_none().then_some(MicCertificate { entries });
    Ok(report(Property::MaxIntersectionComplete, Method::CanonicalForm, started, witness, certificate))
}

/// Per-facet outcome of the combinatorial MIC criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetCheck {
    pub facet: PolarFace,
    /// Least index passing both clauses, or all rejections.
    pub index: std::result::Result<usize, Vec<IndexRejection>>,
    /// The prime-sets `B_v` with `B̄_v ⊆ F`.
    pub h_f: Vec<Codeword>,
    /// Whether `([n] \ ∪_{v ∈ H_F} B_v) ⊄ F`.
    pub star: bool,
}

/// Evaluates, for every facet of `Δ∩(C')` not containing `[n]`, both the
/// index criterion and the `H_F` union condition.
pub fn mic_facet_checks(code: &Code) -> Vec<FacetCheck> {
    let n = code.n();
    let complement = code.complement();
    let facets = factor_complex(&complement).polar_facets();
    let minimal: Vec<Codeword> = prime_sets(&complement, true).into_iter().map(|b| b.y).collect();
    let all = Codeword::full(n);

    facets
        .into_iter()
        .filter(|f| f.x != all)
        .map(|facet| {
            let mut rejections = Vec::new();
            let mut found = None;
            for i in 1..=n {
                if facet.x.contains(i) {
                    rejections.push(IndexRejection { index: i, failure: IndexFailure::Ineligible });
                    continue;
                }
                match minimal.iter().find(|b| b.contains(i) && b.is_subset(facet.y)) {
                    Some(&set) => {
                        rejections.push(IndexRejection { index: i, failure: IndexFailure::BlockedBy { set } })
                    }
                    None => {
                        found = Some(i);
                        break;
                    }
                }
            }
            let h_f: Vec<Codeword> = minimal.iter().copied().filter(|b| b.is_subset(facet.y)).collect();
            let union = h_f.iter().fold(Codeword::EMPTY, |acc, &b| acc | b);
            let star = !union.complement(n).is_subset(facet.x);
            FacetCheck { facet, index: found.ok_or(rejections), h_f, star }
        })
        .collect()
}

/// MIC via the factor complex of the complement. Also evaluates the
/// `H_F` union form on every facet and asserts that both forms agree.
pub fn is_mic_facets(code: &Code) -> ClassificationReport {
    let started = Instant::now();
    let n = code.n();
    let checks = mic_facet_checks(code);
    for check in &checks {
        assert_eq!(
            check.index.is_ok(),
            check.star,
            "index criterion and H_F condition disagree on facet {} of code {code}",
            check.facet
        );
    }
    let mut witness = None;
    let mut entries = Vec::new();
    for check in checks {
        match check.index {
            Ok(index) => {
                let iv = face_to_interval(check.facet, n).expect("facets of a factor complex are effective");
                entries.push(CertificateEntry { phi: interval_to_pm(&iv, n), facet: check.facet, index, h_f: check.h_f });
            }
            Err(rejections) => {
                witness = Some(Witness::UncoveredFacet { facet: check.facet, rejections });
                break;
            }
        }
    }
    let certificate = witness.is_none().then(|| {
        entries.sort_by_key(|e| e.phi);
        MicCertificate { entries }
    });
    report(Property::MaxIntersectionComplete, Method::FactorComplex, started, witness, certificate)
}

impl Witness {
    /// Re-derives the violation of `property` through the public operations.
    pub fn replays(&self, code: &Code, property: Property) -> bool {
        let n = code.n();
        match self {
            Witness::MissingIntersection { family, intersection } => {
                let Some(meet) = family.iter().copied().reduce(|a, b| a & b) else {
                    return false;
                };
                let members_ok = match property {
                    Property::IntersectionComplete => family.iter().all(|&w| code.contains(w)),
                    Property::MaxIntersectionComplete => {
                        let maximal = code.maximal_codewords();
                        family.iter().all(|w| maximal.contains(w))
                    }
                };
                meet == *intersection && !code.contains(meet) && members_ok
            }
            Witness::WideNegation { phi } => {
                phi.tau().len() >= 2 && canonical_form(code).map(|cf| cf.contains(phi)).unwrap_or(false)
            }
            Witness::NarrowFacet { facet } => {
                facet.x.len() + 1 < n
                    && factor_complex(&code.complement()).is_facet(facet.to_vertices(n))
            }
            Witness::UncoveredPseudomonomial { phi, .. } => {
                let in_cf = canonical_form(code).map(|cf| cf.contains(phi)).unwrap_or(false);
                let primes = sr_minimal_primes(code);
                let covered = (1..=n).any(|i| {
                    phi.tau().contains(i)
                        && primes.iter().filter(|b| b.contains(i)).all(|b| !b.is_disjoint(phi.sigma()))
                });
                in_cf && !phi.is_monomial() && !covered
            }
            Witness::UncoveredFacet { facet, .. } => {
                let complement = code.complement();
                let is_facet = factor_complex(&complement).is_facet(facet.to_vertices(n));
                let minimal = prime_sets(&complement, true);
                let covered = (1..=n).any(|i| {
                    !facet.x.contains(i)
                        && minimal
                            .iter()
                            .filter(|b| b.y.contains(i))
                            .all(|b| !b.y.is_subset(facet.y))
                });
                is_facet && facet.x != Codeword::full(n) && !covered
            }
        }
    }
}

impl MicCertificate {
    /// Re-checks every entry against freshly computed `CF(J_C)` and minimal
    /// primes of `I(Δ(C))`, and that the entries cover every non-monomial.
    pub fn verify(&self, code: &Code) -> bool {
        let n = code.n();
        let Ok(cf) = canonical_form(code) else {
            return false;
        };
        let primes = sr_minimal_primes(code);
        let mut phis: Vec<Pseudomonomial> = self.entries.iter().map(|e| e.phi).collect();
        phis.sort();
        if phis != cf.non_monomials() {
            return false;
        }
        self.entries.iter().all(|e| {
            let divides = e.phi.tau().contains(e.index);
            let primes_ok = primes
                .iter()
                .filter(|b| b.contains(e.index))
                .all(|b| !b.is_disjoint(e.phi.sigma()));
            let facet_ok = e.facet == facet_of_pm(&e.phi, n);
            let h_f: Vec<Codeword> = primes.iter().copied().filter(|b| b.is_subset(e.facet.y)).collect();
            divides && primes_ok && facet_ok && h_f == e.h_f
        })
    }
}

/// One check of the code/ideal/complex dictionary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DictionaryItem {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A maximal interval of `C` with its images under α and β.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalCorrespondence {
    pub interval: Interval,
    pub pseudomonomial: Pseudomonomial,
    pub facet: PolarFace,
}

/// A maximal codeword `M` with its images under γ and δ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodewordCorrespondence {
    pub codeword: Codeword,
    /// Variable set of the minimal prime `⟨x_i : i ∉ M⟩`.
    pub prime: Codeword,
    /// The minimal prime-set `‾([n] \ M)` of `Δ∩(C')`.
    pub prime_set: PolarFace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DictionaryReport {
    pub n: usize,
    pub items: Vec<DictionaryItem>,
    pub intervals: Vec<IntervalCorrespondence>,
    pub codewords: Vec<CodewordCorrespondence>,
}

impl DictionaryReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }
}

fn item(name: &'static str, failure: Option<String>) -> DictionaryItem {
    DictionaryItem { name, passed: failure.is_none(), detail: failure }
}

/// Checks the interval/pseudomonomial/facet bijections and the
/// codeword/prime/prime-set bijections for `code`, each side computed by an
/// independent route: `CF` by enumeration, `Δ∩(C)` from the factor ideal,
/// minimal primes as transversals of the monomials of `CF(J_C)`.
pub fn verify_dictionary(code: &Code) -> Result<DictionaryReport> {
    let n = code.n();
    let complement = code.complement();
    let cf_complement = canonical_form(&complement)?;
    let cf = canonical_form(code)?;
    let factor = complex_of_ideal(&factor_ideal(code));
    let maximal_intervals = code.maximal_intervals();

    let all_intervals: Vec<Interval> = Codeword::all(n)
        .flat_map(|d| d.subsets().map(move |c| Interval::new(c, d).expect("c ⊆ d")))
        .collect();

    let mut items = Vec::new();

    // (a) α: intervals of C ↔ pseudomonomials of J_{C'}.
    let alpha_bad = all_intervals.iter().find(|iv| {
        code.contains_interval(iv) != in_neural_ideal(&interval_to_pm(iv, n), &complement)
    });
    let mut alpha_max: Vec<Pseudomonomial> = maximal_intervals.iter().map(|iv| interval_to_pm(iv, n)).collect();
    alpha_max.sort();
    let alpha_failure = alpha_bad
        .map(|iv| format!("interval {iv} disagrees with membership of {}", interval_to_pm(iv, n)))
        .or_else(|| {
            (alpha_max != cf_complement.elements())
                .then(|| "maximal intervals do not map onto CF(J_C')".to_string())
        });
    items.push(item("alpha", alpha_failure));

    // (b) β: intervals of C ↔ effective faces of Δ∩(C).
    let beta_bad = all_intervals
        .iter()
        .find(|iv| code.contains_interval(iv) != factor.contains_polar_face(interval_to_face(iv, n)));
    let mut beta_max: Vec<PolarFace> = maximal_intervals.iter().map(|iv| interval_to_face(iv, n)).collect();
    beta_max.sort_by_key(|f| f.to_vertices(n));
    let beta_failure = beta_bad
        .map(|iv| format!("interval {iv} disagrees with face {}", interval_to_face(iv, n)))
        .or_else(|| {
            (beta_max != factor.polar_facets())
                .then(|| "maximal intervals do not map onto the facets of the factor complex".to_string())
        });
    items.push(item("beta", beta_failure));

    let defective = factor.polar_facets().into_iter().find(|&f| !is_effective(f, n));
    items.push(item("facets_effective", defective.map(|f| format!("facet {f} is defective"))));

    // (c) maximal interval ⇔ α image in CF(J_{C'}) ⇔ β image is a facet.
    let maximality_bad = all_intervals.iter().filter(|iv| code.contains_interval(iv)).find(|iv| {
        let maximal = maximal_intervals.binary_search(iv).is_ok();
        let in_cf = cf_complement.contains(&interval_to_pm(iv, n));
        let facet = factor.is_facet(interval_to_face(iv, n).to_vertices(n));
        maximal != in_cf || maximal != facet
    });
    items.push(item(
        "maximality",
        maximality_bad.map(|iv| format!("interval {iv}: maximality, CF membership and facethood disagree")),
    ));

    // (d) γ and δ.
    let maximal_words = code.maximal_codewords();
    let mut gamma: Vec<Codeword> = maximal_words.iter().map(|m| m.complement(n)).collect();
    gamma.sort();
    let supports: Vec<u32> = cf.monomials().iter().map(|p| p.sigma().mask() as u32).collect();
    let minimal_primes: Vec<Codeword> =
        minimal_transversals(&supports).into_iter().map(|t| Codeword::from_mask(t as u16)).collect();
    items.push(item(
        "gamma",
        (gamma != minimal_primes).then(|| "maximal codewords do not match the minimal primes of I(Δ(C))".into()),
    ));
    let prime_set_list: Vec<Codeword> = prime_sets(&complement, true).into_iter().map(|b| b.y).collect();
    items.push(item(
        "delta",
        (gamma != prime_set_list).then(|| "maximal codewords do not match the minimal prime-sets of Δ∩(C')".into()),
    ));

    let intervals = maximal_intervals
        .iter()
        .map(|iv| IntervalCorrespondence {
            interval: *iv,
            pseudomonomial: interval_to_pm(iv, n),
            facet: interval_to_face(iv, n),
        })
        .collect();
    let codewords = maximal_words
        .iter()
        .map(|&m| CodewordCorrespondence {
            codeword: m,
            prime: m.complement(n),
            prime_set: PolarFace::new(Codeword::EMPTY, m.complement(n)),
        })
        .collect();

    Ok(DictionaryReport { n, items, intervals, codewords })
}
