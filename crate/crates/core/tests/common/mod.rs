//! Independent oracles and code generators shared by the integration tests.
//!
//! Every oracle here works from the definitions by plain enumeration and
//! touches the library only for its data types.

#![allow(dead_code)]

use neurocode::{Code, Codeword, Interval, PolarFace, Pseudomonomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn w(s: &str) -> Codeword {
    if s == "0" {
        return Codeword::EMPTY;
    }
    Codeword::from_neurons(s.chars().map(|c| c.to_digit(10).unwrap() as usize)).unwrap()
}

pub fn code(n: usize, words: &[&str]) -> Code {
    Code::new(n, words.iter().map(|s| w(s))).unwrap()
}

pub fn pm(sigma: &str, tau: &str) -> Pseudomonomial {
    Pseudomonomial::new(w(sigma), w(tau)).unwrap()
}

pub fn face(x: &str, y: &str) -> PolarFace {
    PolarFace::new(w(x), w(y))
}

/// Every valid code on `n` neurons, by ascending word-set id.
pub fn all_codes(n: usize) -> impl Iterator<Item = Code> {
    let last = (1u64 << (1u32 << n)) - 1;
    (1..last).map(move |id| {
        Code::from_masks(n, (0..1u32 << n).filter(|m| id >> m & 1 == 1).map(|m| m as u16)).unwrap()
    })
}

/// `count` valid codes with a spread of densities, reproducible from `seed`.
pub fn random_codes(n: usize, count: usize, seed: u64) -> Vec<Code> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let density: f64 = rng.gen_range(0.05..0.95);
        let words: Vec<u16> = (0..1u32 << n).filter(|_| rng.gen_bool(density)).map(|m| m as u16).collect();
        if let Ok(c) = Code::from_masks(n, words) {
            out.push(c);
        }
    }
    out
}

/// Every pair `c ⊆ d ⊆ [n]`.
pub fn all_intervals(n: usize) -> Vec<Interval> {
    let mut out = Vec::new();
    for d in 0..1u32 << n {
        for c in 0..1u32 << n {
            if c & !d == 0 {
                out.push(Interval::new(Codeword::from_mask(c as u16), Codeword::from_mask(d as u16)).unwrap());
            }
        }
    }
    out
}

/// Every disjoint pair `(σ, τ)`.
pub fn all_pseudomonomials(n: usize) -> Vec<Pseudomonomial> {
    let mut out = Vec::new();
    for s in 0..1u32 << n {
        for t in 0..1u32 << n {
            if s & t == 0 {
                out.push(Pseudomonomial::new(Codeword::from_mask(s as u16), Codeword::from_mask(t as u16)).unwrap());
            }
        }
    }
    out
}

fn interval_inside(code: &Code, iv: &Interval) -> bool {
    (0..1u32 << code.n())
        .map(|m| Codeword::from_mask(m as u16))
        .filter(|&x| iv.lo().is_subset(x) && x.is_subset(iv.hi()))
        .all(|x| code.contains(x))
}

/// Maximal intervals from all `3^n` pairs, pruned by pairwise comparison.
pub fn oracle_maximal_intervals(code: &Code) -> Vec<Interval> {
    let inside: Vec<Interval> =
        all_intervals(code.n()).into_iter().filter(|iv| interval_inside(code, iv)).collect();
    let mut out: Vec<Interval> = inside
        .iter()
        .filter(|a| !inside.iter().any(|b| b != *a && a.is_subinterval(b)))
        .copied()
        .collect();
    out.sort();
    out
}

/// Membership by evaluating `p` at every codeword, written out bit by bit.
pub fn oracle_member(p: &Pseudomonomial, code: &Code) -> bool {
    code.words().iter().all(|&x| {
        let all_sigma_fire = p.sigma().neurons().all(|i| x.contains(i));
        let no_tau_fires = p.tau().neurons().all(|j| !x.contains(j));
        !(all_sigma_fire && no_tau_fires)
    })
}

/// CF by the definition: members of `J_C` minimal under divisibility.
pub fn oracle_canonical_form(code: &Code) -> Vec<Pseudomonomial> {
    let members: Vec<Pseudomonomial> =
        all_pseudomonomials(code.n()).into_iter().filter(|p| oracle_member(p, code)).collect();
    let mut out: Vec<Pseudomonomial> = members
        .iter()
        .filter(|p| !members.iter().any(|q| q != *p && q.divides(p)))
        .copied()
        .collect();
    out.sort();
    out
}

/// Facets of the complex with minimal non-faces `generators`, by scanning
/// all `2^vertices` subsets.
pub fn oracle_facets(generators: &[u32], vertices: usize) -> Vec<u32> {
    let faces: Vec<u32> = (0..1u32 << vertices)
        .filter(|&s| generators.iter().all(|&g| g & !s != 0))
        .collect();
    let mut facets: Vec<u32> = faces
        .iter()
        .filter(|&&f| !faces.iter().any(|&g| g != f && f & !g == 0))
        .copied()
        .collect();
    facets.sort_unstable();
    facets
}

/// Intersection of every nonempty subfamily of `family` lies in `code`.
fn closed_under_subfamilies(code: &Code, family: &[Codeword]) -> bool {
    (1u64..1 << family.len()).all(|pick| {
        let meet = family
            .iter()
            .enumerate()
            .filter(|(i, _)| pick >> i & 1 == 1)
            .fold(Codeword::full(code.n()), |acc, (_, &x)| acc & x);
        code.contains(meet)
    })
}

/// IC over every nonempty subfamily of codewords. Only for small codes.
pub fn oracle_ic(code: &Code) -> bool {
    assert!(code.len() <= 20);
    closed_under_subfamilies(code, code.words())
}

/// MIC over every nonempty subfamily of maximal codewords.
pub fn oracle_mic(code: &Code) -> bool {
    let words = code.words();
    let maximal: Vec<Codeword> = words
        .iter()
        .copied()
        .filter(|&a| !words.iter().any(|&b| b != a && a.is_subset(b)))
        .collect();
    closed_under_subfamilies(code, &maximal)
}

/// Cross-method agreement on one code: the three IC deciders, the three MIC
/// deciders (the facet decider also checks its `H_F` form), the oracles, and
/// the dictionary.
pub fn agreement(code: &Code) -> Result<(), String> {
    use neurocode::{classify, verify_dictionary, Method, Property};
    for property in [Property::IntersectionComplete, Property::MaxIntersectionComplete] {
        let mut verdicts = Vec::new();
        for method in Method::ALL {
            let r = classify(code, property, method).map_err(|e| e.to_string())?;
            match (&r.witness, r.verdict) {
                (Some(w), false) if w.replays(code, property) => {}
                (None, true) => {}
                _ => return Err(format!("{code}: {} {} witness does not replay", property.label(), method.label())),
            }
            if let Some(cert) = &r.certificate {
                if !cert.verify(code) {
                    return Err(format!("{code}: {} certificate rejected", method.label()));
                }
            }
            verdicts.push(r.verdict);
        }
        if verdicts.iter().any(|&v| v != verdicts[0]) {
            return Err(format!("{code}: {} verdicts {verdicts:?}", property.label()));
        }
        let oracle = match property {
            Property::IntersectionComplete if code.len() <= 12 => oracle_ic(code),
            Property::IntersectionComplete => verdicts[0],
            Property::MaxIntersectionComplete => oracle_mic(code),
        };
        if oracle != verdicts[0] {
            return Err(format!("{code}: {} oracle says {oracle}", property.label()));
        }
    }
    let dict = verify_dictionary(code).map_err(|e| e.to_string())?;
    if let Some(bad) = dict.items.iter().find(|i| !i.passed) {
        return Err(format!("{code}: dictionary item {} failed: {:?}", bad.name, bad.detail));
    }
    Ok(())
}

/// The lemmas tying codes to their factor and polar complexes.
pub fn lemma_suite(code: &Code) -> Result<(), String> {
    use neurocode::{
        canonical_form, complex_of_ideal, factor_complex, factor_ideal, is_effective, polar_complex,
        polar_ideal, polarize, prime_sets,
    };
    let n = code.n();
    let factor = factor_complex(code);
    let polar = polar_complex(code).map_err(|e| e.to_string())?;
    let fi = factor_ideal(code);
    let pj = polar_ideal(code).map_err(|e| e.to_string())?;

    if complex_of_ideal(&fi) != factor {
        return Err(format!("{code}: factor ideal and factor complex disagree"));
    }
    if let Some(f) = factor.polar_facets().into_iter().find(|&f| !is_effective(f, n)) {
        return Err(format!("{code}: defective facet {f}"));
    }
    for iv in all_intervals(n) {
        let inside = interval_inside(code, &iv);
        let face = PolarFace::new(iv.hi(), iv.lo().complement(n));
        if inside != factor.contains_polar_face(face) || inside != polar.contains_polar_face(face) {
            return Err(format!("{code}: interval {iv} vs face {face}"));
        }
    }
    for x in Codeword::all(n) {
        let face = PolarFace::new(x, x.complement(n));
        if code.contains(x) != factor.contains_polar_face(face) || code.contains(x) != polar.contains_polar_face(face) {
            return Err(format!("{code}: codeword {x} vs face {face}"));
        }
    }
    for p in all_pseudomonomials(n) {
        let member = oracle_member(&p, code);
        let f = polarize(&p);
        if member != fi.contains_polar(f) || member != pj.contains_polar(f) {
            return Err(format!("{code}: membership of {p} vs its polarization"));
        }
    }
    if !pj.is_subideal_of(&fi) {
        return Err(format!("{code}: P(J_C) not inside FI(C)"));
    }
    let mut effective: Vec<PolarFace> = polar.polar_facets().into_iter().filter(|&f| is_effective(f, n)).collect();
    effective.sort_by_key(|f| f.to_vertices(n));
    if effective != factor.polar_facets() {
        return Err(format!("{code}: effective facets of the polar complex differ from the factor complex"));
    }

    // Prime-sets of Δ∩(C) against the monomials of CF(J_{C'}).
    let complement = code.complement();
    let monomials: Vec<Codeword> = canonical_form(&complement)
        .map_err(|e| e.to_string())?
        .monomials()
        .iter()
        .map(|p| p.sigma())
        .collect();
    let expected: Vec<Codeword> = Codeword::all(n)
        .filter(|&b| monomials.iter().all(|s| !s.is_disjoint(b)))
        .collect();
    let mut found: Vec<Codeword> = prime_sets(code, false).into_iter().map(|f| f.y).collect();
    found.sort();
    if found != expected {
        return Err(format!("{code}: prime-sets {found:?}, monomial primes {expected:?}"));
    }
    Ok(())
}

pub mod strategies {
    use neurocode::Code;
    use proptest::prelude::*;

    /// Valid codes on `1..=max_n` neurons, each word present with
    /// probability one half.
    pub fn codes(max_n: usize) -> impl Strategy<Value = Code> {
        (1..=max_n)
            .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), 1 << n)))
            .prop_filter_map("empty or full", |(n, bits)| {
                let masks = bits.iter().enumerate().filter(|(_, &b)| b).map(|(m, _)| m as u16);
                Code::from_masks(n, masks).ok()
            })
    }

    /// A vertex count up to 8 and a few nonempty supports on it.
    pub fn supports() -> impl Strategy<Value = (usize, Vec<u32>)> {
        (1usize..=8).prop_flat_map(|v| (Just(v), proptest::collection::vec(1u32..1 << v, 0..6)))
    }
}

pub fn check_complement_involution(c: &Code) -> Result<(), String> {
    let back = c.complement().complement();
    if back != *c {
        return Err(format!("{c}: complement twice gives {back}"));
    }
    match Codeword::all(c.n()).find(|&x| c.contains(x) == c.complement().contains(x)) {
        Some(x) => Err(format!("{c}: {x} on both or neither side")),
        None => Ok(()),
    }
}

pub fn check_canonical_form(c: &Code) -> Result<(), String> {
    use neurocode::{canonical_form, in_neural_ideal};
    let cf = canonical_form(c).map_err(|e| e.to_string())?;
    for p in cf.elements() {
        if !in_neural_ideal(p, c) {
            return Err(format!("{c}: {p} not in J_C"));
        }
        if let Some(q) = p.one_factor_deletions().find(|q| in_neural_ideal(q, c)) {
            return Err(format!("{c}: {p} reduces to {q}"));
        }
        if let Some(q) = cf.elements().iter().find(|q| *q != p && q.divides(p)) {
            return Err(format!("{c}: {q} divides {p}"));
        }
    }
    Ok(())
}

pub fn check_decomposition(c: &Code) -> Result<(), String> {
    let n = c.n();
    let zero_sets: Vec<Interval> =
        neurocode::primary_decomposition(c).iter().map(|p| p.zero_set(n)).collect();
    if let Some(x) = Codeword::all(n).find(|&x| zero_sets.iter().any(|z| z.contains(x)) != c.contains(x)) {
        return Err(format!("{c}: components miscover {x}"));
    }
    for (i, a) in zero_sets.iter().enumerate() {
        for (j, b) in zero_sets.iter().enumerate() {
            if i != j && a.is_subinterval(b) {
                return Err(format!("{c}: component {a} lies inside {b}"));
            }
        }
    }
    Ok(())
}

pub fn check_round_trip(vertices: usize, supports: &[u32]) -> Result<(), String> {
    use neurocode::{complex_of_ideal, ideal_of_complex, SquarefreeMonomialIdeal, Universe, VertexSet};
    let ideal = SquarefreeMonomialIdeal::new(
        Universe::Plain(vertices),
        supports.iter().map(|&s| VertexSet::from_mask(s)),
    );
    let complex = complex_of_ideal(&ideal);
    if ideal_of_complex(&complex) != ideal {
        return Err(format!("ideal {ideal} does not survive the round trip"));
    }
    if complex_of_ideal(&ideal_of_complex(&complex)) != complex {
        return Err(format!("complex of {ideal} does not survive the round trip"));
    }
    Ok(())
}

/// Every negative verdict's witness replays; every certificate verifies.
pub fn check_witnesses(c: &Code) -> Result<(), String> {
    use neurocode::{classify, Method, Property};
    for property in [Property::IntersectionComplete, Property::MaxIntersectionComplete] {
        for method in Method::ALL {
            let r = classify(c, property, method).map_err(|e| e.to_string())?;
            let ok = match &r.witness {
                Some(w) => !r.verdict && w.replays(c, property),
                None => r.verdict,
            };
            let cert_ok = r.certificate.as_ref().is_none_or(|cert| cert.verify(c));
            if !ok || !cert_ok {
                return Err(format!("{c}: {} {} report does not check out", property.label(), method.label()));
            }
        }
    }
    Ok(())
}
