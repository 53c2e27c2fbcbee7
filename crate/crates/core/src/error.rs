use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("neuron count {0} is out of range (expected 1..=16)")]
    NeuronCount(usize),

    #[error("neuron {neuron} does not fit in [{n}]")]
    NeuronOutOfRange { neuron: usize, n: usize },

    #[error("the empty code has no primary decomposition")]
    EmptyCode,

    #[error("the full code 2^[{0}] has no primary decomposition")]
    FullCode(usize),

    #[error("malformed interval: {lo} is not a subset of {hi}")]
    MalformedInterval { lo: String, hi: String },

    #[error("pseudomonomial factors overlap: {0} appears as both x and 1-x")]
    OverlappingFactors(String),

    #[error("n = {n} exceeds the exhaustive enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("face {0} is defective")]
    DefectiveFace(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("survey over n = {n} would enumerate {codes} codes; the limit is n = {max}")]
    SurveyTooLarge { n: usize, codes: u128, max: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
