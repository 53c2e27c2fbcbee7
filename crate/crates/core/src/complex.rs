//! Polarization, squarefree monomial ideals and the three complexes of a
//! code: Δ(C), the factor complex Δ∩(C) and the polar complex Δ_P(C).
//!
//! Vertex sets are `u32` masks. On the plain universe `[n]` vertex `i` is
//! bit `i - 1`; on the polar universe `[n] ∪ [n̄]` the barred vertex `ī`
//! is vertex `n + i`, i.e. bit `n + i - 1`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::code::{Code, Codeword, Interval};
use crate::error::{Error, Result};
use crate::hypergraph::{maximize, minimal_transversals, minimize};
use crate::ideal::{canonical_form, primary_decomposition, Pseudomonomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Universe {
    /// `[n]`
    Plain(usize),
    /// `[n] ∪ [n̄]`
    Polar(usize),
}

impl Universe {
    pub fn n(self) -> usize {
        match self {
            Universe::Plain(n) | Universe::Polar(n) => n,
        }
    }

    pub fn vertex_count(self) -> usize {
        match self {
            Universe::Plain(n) => n,
            Universe::Polar(n) => 2 * n,
        }
    }

    pub fn full(self) -> VertexSet {
        VertexSet(((1u64 << self.vertex_count()) - 1) as u32)
    }

    fn render(self, v: VertexSet) -> String {
        match self {
            Universe::Plain(_) => Codeword::from_mask(v.0 as u16).to_string(),
            Universe::Polar(n) => PolarFace::from_vertices(v, n).to_string(),
        }
    }

    fn render_monomial(self, v: VertexSet) -> String {
        if v.is_empty() {
            return "1".into();
        }
        let n = self.n();
        let vars: Vec<String> = v
            .vertices()
            .map(|k| match self {
                Universe::Polar(_) if k > n => format!("y{}", k - n),
                _ => format!("x{k}"),
            })
            .collect();
        vars.join("*")
    }
}

/// A set of vertices, as a bit mask over the universe.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_mask(mask: u32) -> Self {
        VertexSet(mask)
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// 1-based vertex indices, ascending.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32).filter(move |b| mask & (1 << b) != 0).map(|b| b + 1)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet({:#b})", self.0)
    }
}

/// A subset of `[n] ∪ [n̄]`: plain vertices `x` and barred vertices `y`.
///
/// Doubles as the support of a squarefree monomial in `x, y`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolarFace {
    pub x: Codeword,
    pub y: Codeword,
}

impl PolarFace {
    pub fn new(x: Codeword, y: Codeword) -> Self {
        PolarFace { x, y }
    }

    pub fn to_vertices(self, n: usize) -> VertexSet {
        VertexSet(self.x.mask() as u32 | (self.y.mask() as u32) << n)
    }

    pub fn from_vertices(v: VertexSet, n: usize) -> Self {
        let low = (1u32 << n) - 1;
        PolarFace {
            x: Codeword::from_mask((v.0 & low) as u16),
            y: Codeword::from_mask(((v.0 >> n) & low) as u16),
        }
    }

    pub fn is_subset(self, other: PolarFace) -> bool {
        self.x.is_subset(other.x) && self.y.is_subset(other.y)
    }

    pub fn len(self) -> usize {
        self.x.len() + self.y.len()
    }

    pub fn is_empty(self) -> bool {
        self.x.is_empty() && self.y.is_empty()
    }
}

/// Plain vertices ascending, then barred ones as `~i`: `123~1`, `1~2~3`.
/// Past neuron 9 the tokens are comma-separated.
impl fmt::Display for PolarFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        let tokens: Vec<String> = self
            .x
            .neurons()
            .map(|i| i.to_string())
            .chain(self.y.neurons().map(|j| format!("~{j}")))
            .collect();
        let compact = self.x.neurons().chain(self.y.neurons()).all(|i| i < 10);
        f.write_str(&tokens.join(if compact { "" } else { "," }))
    }
}

impl fmt::Debug for PolarFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolarFace({self})")
    }
}

impl Serialize for PolarFace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("PolarFace", 2)?;
        s.serialize_field("x", &self.x)?;
        s.serialize_field("y", &self.y)?;
        s.end()
    }
}

/// A simplicial complex given by its facets.
///
/// A complex with no facets at all is the void complex (the complex of the
/// unit ideal); it has no faces, not even the empty one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    universe: Universe,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal sets of `faces` as facets.
    pub fn new<I: IntoIterator<Item = VertexSet>>(universe: Universe, faces: I) -> Self {
        let facets = maximize(faces.into_iter().map(|f| f.0).collect());
        SimplicialComplex { universe, facets: facets.into_iter().map(VertexSet).collect() }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    /// Facets in ascending mask order.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|&f| face.is_subset(f))
    }

    pub fn contains_polar_face(&self, face: PolarFace) -> bool {
        self.contains_face(face.to_vertices(self.universe.n()))
    }

    pub fn is_facet(&self, face: VertexSet) -> bool {
        self.facets.binary_search(&face).is_ok()
    }

    /// Facets read as polar faces (meaningful on the polar universe).
    pub fn polar_facets(&self) -> Vec<PolarFace> {
        let n = self.universe.n();
        self.facets.iter().map(|&f| PolarFace::from_vertices(f, n)).collect()
    }

    /// Every face, ascending. Exponential in the number of vertices.
    pub fn faces(&self) -> Vec<VertexSet> {
        let full = self.universe.full().0;
        let mut out: Vec<u32> = Vec::new();
        for &f in &self.facets {
            let mut s = 0u32;
            loop {
                out.push(s);
                s = s.wrapping_sub(f.0) & f.0;
                if s == 0 {
                    break;
                }
            }
        }
        debug_assert!(out.iter().all(|s| s & !full == 0));
        out.sort_unstable();
        out.dedup();
        out.into_iter().map(VertexSet).collect()
    }

    pub fn rendered_facets(&self) -> Vec<String> {
        self.facets.iter().map(|&f| self.universe.render(f)).collect()
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("SimplicialComplex", 3)?;
        match self.universe {
            Universe::Plain(n) => {
                s.serialize_field("universe", "plain")?;
                s.serialize_field("n", &n)?;
                let facets: Vec<Codeword> =
                    self.facets.iter().map(|f| Codeword::from_mask(f.0 as u16)).collect();
                s.serialize_field("facets", &facets)?;
            }
            Universe::Polar(n) => {
                s.serialize_field("universe", "polar")?;
                s.serialize_field("n", &n)?;
                s.serialize_field("facets", &self.polar_facets())?;
            }
        }
        s.end()
    }
}

/// A squarefree monomial ideal, stored as its minimal generator supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeMonomialIdeal {
    universe: Universe,
    generators: Vec<VertexSet>,
}

impl SquarefreeMonomialIdeal {
    /// Reduces `supports` to its inclusion-minimal elements.
    pub fn new<I: IntoIterator<Item = VertexSet>>(universe: Universe, supports: I) -> Self {
        let gens = minimize(supports.into_iter().map(|g| g.0).collect());
        SquarefreeMonomialIdeal { universe, generators: gens.into_iter().map(VertexSet).collect() }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    /// Minimal generators in ascending mask order.
    pub fn generators(&self) -> &[VertexSet] {
        &self.generators
    }

    pub fn polar_generators(&self) -> Vec<PolarFace> {
        let n = self.universe.n();
        self.generators.iter().map(|&g| PolarFace::from_vertices(g, n)).collect()
    }

    /// Whether the monomial with this support lies in the ideal.
    pub fn contains(&self, support: VertexSet) -> bool {
        self.generators.iter().any(|&g| g.is_subset(support))
    }

    pub fn contains_polar(&self, support: PolarFace) -> bool {
        self.contains(support.to_vertices(self.universe.n()))
    }

    /// `self ⊆ other`.
    pub fn is_subideal_of(&self, other: &SquarefreeMonomialIdeal) -> bool {
        self.generators.iter().all(|&g| other.contains(g))
    }

    pub fn rendered_generators(&self) -> Vec<String> {
        self.generators.iter().map(|&g| self.universe.render_monomial(g)).collect()
    }
}

impl fmt::Display for SquarefreeMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.rendered_generators().join(", "))
    }
}

impl Serialize for SquarefreeMonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("SquarefreeMonomialIdeal", 2)?;
        match self.universe {
            Universe::Plain(_) => {
                let gens: Vec<Codeword> =
                    self.generators.iter().map(|g| Codeword::from_mask(g.0 as u16)).collect();
                s.serialize_field("generators", &gens)?;
            }
            Universe::Polar(_) => s.serialize_field("generators", &self.polar_generators())?,
        }
        s.serialize_field("text", &self.rendered_generators())?;
        s.end()
    }
}

/// `P(φ)`: `x_i` for `i ∈ σ`, `y_j` for `j ∈ τ`.
pub fn polarize(p: &Pseudomonomial) -> PolarFace {
    PolarFace { x: p.sigma(), y: p.tau() }
}

/// The β map `[c, d] ↦ d ∪ ‾([n] \ c)`.
pub fn interval_to_face(iv: &Interval, n: usize) -> PolarFace {
    PolarFace { x: iv.hi(), y: iv.lo().complement(n) }
}

/// A polar face is effective when it contains `i` or `ī` for every `i`.
pub fn is_effective(face: PolarFace, n: usize) -> bool {
    (face.x | face.y) == Codeword::full(n)
}

/// Inverse of [`interval_to_face`]: `d = x`, `c = [n] \ y`.
pub fn face_to_interval(face: PolarFace, n: usize) -> Result<Interval> {
    if !is_effective(face, n) {
        return Err(Error::DefectiveFace(face.to_string()));
    }
    Interval::new(face.y.complement(n), face.x)
}

/// The polar ideal `P(J_C)`, generated by the polarized canonical form.
pub fn polar_ideal(code: &Code) -> Result<SquarefreeMonomialIdeal> {
    let n = code.n();
    let cf = canonical_form(code)?;
    Ok(SquarefreeMonomialIdeal::new(
        Universe::Polar(n),
        cf.elements().iter().map(|p| polarize(p).to_vertices(n)),
    ))
}

/// The factor ideal: the intersection of the polarized primes of `J_C`.
///
/// Each polarized prime is generated by variables, so the intersection is
/// the product of their generator sets distributed out and reduced to its
/// minimal supports, i.e. the minimal transversals of the variable sets.
pub fn factor_ideal(code: &Code) -> SquarefreeMonomialIdeal {
    let n = code.n();
    let primes: Vec<u32> = primary_decomposition(code)
        .iter()
        .map(|p| PolarFace::new(p.pos(), p.neg()).to_vertices(n).0)
        .collect();
    SquarefreeMonomialIdeal::new(
        Universe::Polar(n),
        minimal_transversals(&primes).into_iter().map(VertexSet),
    )
}

/// The complex whose Stanley–Reisner ideal is `ideal`.
///
/// Facets are the complements of the minimal transversals of the generator
/// supports (each minimal prime `⟨x_v : v ∉ F⟩` gives a facet `F`).
pub fn complex_of_ideal(ideal: &SquarefreeMonomialIdeal) -> SimplicialComplex {
    let universe = ideal.universe();
    let full = universe.full().0;
    let gens: Vec<u32> = ideal.generators().iter().map(|g| g.0).collect();
    let facets = minimal_transversals(&gens).into_iter().map(|t| VertexSet(full & !t));
    SimplicialComplex::new(universe, facets)
}

/// The Stanley–Reisner ideal of `complex`: its minimal non-faces.
///
/// A set is a non-face iff it meets the complement of every facet.
pub fn ideal_of_complex(complex: &SimplicialComplex) -> SquarefreeMonomialIdeal {
    let universe = complex.universe();
    let full = universe.full().0;
    let cofacets: Vec<u32> = complex.facets().iter().map(|f| full & !f.0).collect();
    SquarefreeMonomialIdeal::new(
        universe,
        minimal_transversals(&cofacets).into_iter().map(VertexSet),
    )
}

/// Δ∩(C), built directly from the maximal intervals of `C` via β.
pub fn factor_complex(code: &Code) -> SimplicialComplex {
    let n = code.n();
    SimplicialComplex::new(
        Universe::Polar(n),
        code.maximal_intervals().iter().map(|iv| interval_to_face(iv, n).to_vertices(n)),
    )
}

/// Δ_P(C), the complex of the polar ideal.
pub fn polar_complex(code: &Code) -> Result<SimplicialComplex> {
    Ok(complex_of_ideal(&polar_ideal(code)?))
}

/// The prime-sets `B̄` of Δ∩(C): barred sets with `[n] ∪ B̄` not a face.
///
/// All `2^n` candidates are tested against the factor complex. Returned
/// faces have empty `x` part and are ordered by `B`.
pub fn prime_sets(code: &Code, minimal_only: bool) -> Vec<PolarFace> {
    let n = code.n();
    let complex = factor_complex(code);
    let all_plain = Codeword::full(n);
    let sets: Vec<u32> = Codeword::all(n)
        .filter(|&b| !complex.contains_polar_face(PolarFace::new(all_plain, b)))
        .map(|b| b.mask() as u32)
        .collect();
    let sets = if minimal_only { minimize(sets) } else { sets };
    sets.into_iter()
        .map(|b| PolarFace::new(Codeword::EMPTY, Codeword::from_mask(b as u16)))
        .collect()
}

/// Variable sets `[n] \ M`, over the maximal codewords `M`, of the minimal
/// primes of `I(Δ(C))`. Ascending.
pub fn sr_minimal_primes(code: &Code) -> Vec<Codeword> {
    let n = code.n();
    let mut primes: Vec<Codeword> =
        code.maximal_codewords().into_iter().map(|m| m.complement(n)).collect();
    primes.sort();
    primes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Codeword {
        if s == "0" {
            return Codeword::EMPTY;
        }
        Codeword::from_neurons(s.chars().map(|c| c.to_digit(10).unwrap() as usize)).unwrap()
    }

    fn code(n: usize, words: &[&str]) -> Code {
        Code::new(n, words.iter().map(|s| w(s))).unwrap()
    }

    fn face(x: &str, y: &str) -> PolarFace {
        PolarFace::new(w(x), w(y))
    }

    fn sorted(mut v: Vec<PolarFace>, n: usize) -> Vec<PolarFace> {
        v.sort_by_key(|f| f.to_vertices(n));
        v
    }

    fn running() -> Code {
        code(3, &["0", "2", "3", "12", "13"])
    }

    fn running_complement() -> Code {
        code(3, &["1", "23", "123"])
    }

    #[test]
    fn polar_face_rendering() {
        assert_eq!(face("123", "1").to_string(), "123~1");
        assert_eq!(face("1", "23").to_string(), "1~2~3");
        assert_eq!(PolarFace::default().to_string(), "{}");
        let wide = PolarFace::new(Codeword::from_neurons([1, 10]).unwrap(), w("2"));
        assert_eq!(wide.to_string(), "1,10,~2");
        assert_eq!(
            serde_json::to_string(&face("123", "1")).unwrap(),
            r#"{"x":[1,2,3],"y":[1]}"#
        );
    }

    #[test]
    fn barred_vertex_is_n_plus_i() {
        let v = face("0", "1").to_vertices(3);
        assert_eq!(v.vertices().collect::<Vec<_>>(), vec![4]);
        assert_eq!(PolarFace::from_vertices(face("13", "2").to_vertices(5), 5), face("13", "2"));
    }

    #[test]
    fn polarize_examples() {
        let pm = |s: &str, t: &str| Pseudomonomial::new(w(s), w(t)).unwrap();
        assert_eq!(polarize(&pm("0", "13")), face("0", "13"));
        assert_eq!(polarize(&pm("2", "3")), face("2", "3"));
        assert!(polarize(&Pseudomonomial::UNIT).is_empty());
    }

    #[test]
    fn polar_ideal_examples() {
        let ideal = polar_ideal(&running_complement()).unwrap();
        assert_eq!(
            sorted(ideal.polar_generators(), 3),
            sorted(vec![face("0", "13"), face("0", "12"), face("2", "3"), face("3", "2")], 3)
        );
        let ideal = polar_ideal(&running()).unwrap();
        assert_eq!(sorted(ideal.polar_generators(), 3), sorted(vec![face("1", "23"), face("23", "0")], 3));
        let ideal = polar_ideal(&code(1, &["0"])).unwrap();
        assert_eq!(ideal.polar_generators(), vec![face("1", "0")]);
        assert_eq!(ideal.to_string(), "<x1>");
    }

    #[test]
    fn factor_ideal_examples() {
        let ideal = factor_ideal(&running_complement());
        let expected = vec![
            face("2", "2"),
            face("2", "3"),
            face("3", "2"),
            face("3", "3"),
            face("0", "12"),
            face("0", "13"),
        ];
        assert_eq!(sorted(ideal.polar_generators(), 3), sorted(expected, 3));

        // Code {0} on one neuron decomposes as the single prime <x1>.
        assert_eq!(factor_ideal(&code(1, &["0"])).polar_generators(), vec![face("1", "0")]);

        let c = running();
        assert_eq!(complex_of_ideal(&factor_ideal(&c)), factor_complex(&c));
    }

    #[test]
    fn complex_of_ideal_examples() {
        let i = SquarefreeMonomialIdeal::new(Universe::Plain(3), [VertexSet::from_mask(0b110)]);
        let cx = complex_of_ideal(&i);
        assert_eq!(cx.rendered_facets(), vec!["12", "13"]);

        let empty = SquarefreeMonomialIdeal::new(Universe::Polar(2), []);
        assert_eq!(complex_of_ideal(&empty).facets(), &[Universe::Polar(2).full()]);

        let polar = complex_of_ideal(&polar_ideal(&running_complement()).unwrap());
        assert_eq!(
            sorted(polar.polar_facets(), 3),
            sorted(vec![face("1", "23"), face("123", "1"), face("12", "2"), face("13", "3")], 3)
        );
    }

    #[test]
    fn unit_ideal_gives_void_complex() {
        let unit = SquarefreeMonomialIdeal::new(Universe::Plain(2), [VertexSet::EMPTY]);
        let cx = complex_of_ideal(&unit);
        assert!(cx.is_void());
        assert!(!cx.contains_face(VertexSet::EMPTY));
        assert_eq!(ideal_of_complex(&cx), unit);
    }

    #[test]
    fn factor_complex_examples() {
        let cx = factor_complex(&running_complement());
        assert_eq!(sorted(cx.polar_facets(), 3), sorted(vec![face("1", "23"), face("123", "1")], 3));

        let cx = factor_complex(&running());
        let expected = vec![face("2", "123"), face("3", "123"), face("12", "13"), face("13", "12")];
        assert_eq!(sorted(cx.polar_facets(), 3), sorted(expected, 3));

        let cx = factor_complex(&code(4, &["24"]));
        assert_eq!(cx.polar_facets(), vec![face("24", "13")]);
    }

    #[test]
    fn polar_complex_examples() {
        let single = code(4, &["24"]);
        assert_eq!(polar_complex(&single).unwrap(), factor_complex(&single));

        let c = running_complement();
        let polar = polar_complex(&c).unwrap();
        let factor = factor_complex(&c);
        let effective: Vec<PolarFace> =
            polar.polar_facets().into_iter().filter(|&f| is_effective(f, 3)).collect();
        assert_eq!(effective, factor.polar_facets());
        assert!(factor.facets().iter().all(|&f| polar.contains_face(f)));
    }

    #[test]
    fn effectiveness_examples() {
        assert!(is_effective(face("1", "23"), 3));
        assert!(!is_effective(face("12", "2"), 3));
        assert!(!is_effective(PolarFace::default(), 1));
    }

    #[test]
    fn face_to_interval_examples() {
        assert_eq!(face_to_interval(face("123", "1"), 3).unwrap(), Interval::new(w("23"), w("123")).unwrap());
        assert_eq!(face_to_interval(face("1", "23"), 3).unwrap(), Interval::point(w("1")));
        assert_eq!(face_to_interval(face("24", "13"), 4).unwrap(), Interval::point(w("24")));
        assert!(matches!(face_to_interval(face("12", "2"), 3), Err(Error::DefectiveFace(_))));
    }

    #[test]
    fn prime_set_examples() {
        let minimal = prime_sets(&running_complement(), true);
        assert_eq!(minimal, vec![face("0", "2"), face("0", "3")]);
        let all = prime_sets(&running_complement(), false);
        // Every B not inside {1}, since 123~1 is the only facet holding all of [3].
        let expected: Vec<PolarFace> =
            ["2", "12", "3", "13", "23", "123"].iter().map(|b| face("0", b)).collect();
        assert_eq!(all, expected);
        assert!(all.iter().all(|f| f.x.is_empty()));
    }

    #[test]
    fn empty_prime_set_reported_when_all_plain_vertices_are_not_a_face() {
        // Δ∩ of {∅,1} on two neurons: the only maximal interval is [∅,1],
        // so {1,2} is not a face and ∅ is a prime-set.
        let sets = prime_sets(&code(2, &["0", "1"]), true);
        assert_eq!(sets, vec![PolarFace::default()]);
    }

    #[test]
    fn sr_minimal_prime_examples() {
        assert_eq!(sr_minimal_primes(&running()), vec![w("2"), w("3")]);
        assert_eq!(sr_minimal_primes(&code(4, &["24"])), vec![w("13")]);

        let c = running();
        let cf = canonical_form(&c).unwrap();
        let supports: Vec<u32> = cf.monomials().iter().map(|p| p.sigma().mask() as u32).collect();
        let via_ideal: Vec<Codeword> = minimal_transversals(&supports)
            .into_iter()
            .map(|t| Codeword::from_mask(t as u16))
            .collect();
        assert_eq!(via_ideal, sr_minimal_primes(&c));
    }

    #[test]
    fn round_trip_on_plain_complex() {
        let c = running();
        let dc = c.downward_closure();
        let ideal = ideal_of_complex(&dc);
        assert_eq!(ideal.rendered_generators(), vec!["x2*x3"]);
        assert_eq!(complex_of_ideal(&ideal), dc);
    }

    #[test]
    fn faces_enumerates_down_closure() {
        let cx = running().downward_closure();
        let faces: Vec<u32> = cx.faces().iter().map(|f| f.mask()).collect();
        assert_eq!(faces, vec![0, 1, 2, 3, 4, 5]);
    }
}
