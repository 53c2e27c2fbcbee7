//! Neural codes and their algebra–combinatorics dictionary.
//!
//! A [`Code`] on `n` neurons determines its neural ideal `J_C` (carried
//! here by the code itself), the canonical form `CF(J_C)`, the prime
//! decomposition of `J_C`, and three simplicial complexes: the downward
//! closure Δ(C), the factor complex Δ∩(C) and the polar complex Δ_P(C).
//! The [`classify`] module uses them to decide intersection-completeness
//! and max-intersection-completeness, each by three independent methods.
//!
//! ```
//! use neurocode::{canonical_form, is_mic_bruteforce, parse_code};
//!
//! let code = parse_code("n=3\n000\n010\n001\n110\n101").unwrap();
//! let cf = canonical_form(&code).unwrap();
//! let rendered: Vec<String> = cf.elements().iter().map(|p| p.to_string()).collect();
//! assert_eq!(rendered, ["x1*(1-x2)*(1-x3)", "x2*x3"]);
//! assert!(!is_mic_bruteforce(&code).verdict);
//! ```

pub mod classify;
pub mod code;
pub mod complex;
pub mod document;
pub mod error;
pub mod hypergraph;
pub mod ideal;
pub mod survey;

pub use classify::{
    classify, is_intersection_complete_bruteforce, is_intersection_complete_cf,
    is_intersection_complete_facets, is_mic_algebraic, is_mic_bruteforce, is_mic_facets,
    verify_dictionary, ClassificationReport, DictionaryReport, MicCertificate, Method, Property,
    Witness,
};
pub use code::{Code, Codeword, Interval, MAX_NEURONS};
pub use complex::{
    complex_of_ideal, face_to_interval, factor_complex, factor_ideal, ideal_of_complex,
    interval_to_face, is_effective, polar_complex, polar_ideal, polarize, prime_sets,
    sr_minimal_primes, PolarFace, SimplicialComplex, SquarefreeMonomialIdeal, Universe, VertexSet,
};
pub use document::{parse_code, render_code, CodeDocument};
pub use error::{Error, Result};
pub use ideal::{
    canonical_form, cf_monomials, in_neural_ideal, in_neural_ideal_by_interval, interval_to_pm,
    primary_decomposition, CanonicalForm, PrimePseudoIdeal, Pseudomonomial,
};
pub use survey::{survey, Survey, SurveyRow};
