use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("graph has {0} vertices, cap is {1}")]
    TooManyVertices(usize, usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("variable contexts differ")]
    ContextMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("ideal is not squarefree (generator `{0}`); polarize first")]
    NotSquarefree(String),
    #[error("zero ideal has no resolution data")]
    ZeroIdeal,
    #[error("unit ideal has no resolution data")]
    UnitIdeal,
    #[error("{0} generators exceed the cap of {1}")]
    TooManyGenerators(usize, usize),
    #[error("{0} variables exceed the cap of {1} for subset enumeration")]
    TooManyVariables(usize, usize),
    #[error("monomial `{0}` is not a minimal generator of the requested power")]
    NotInPower(String),
    #[error("monomial `{0}` is not a product of edges")]
    NotEdgeProduct(String),
    #[error("`{0}` is not an edge of the graph")]
    NotAnEdge(String),
    #[error("field characteristic {0} is not 0 or a prime")]
    BadCharacteristic(u32),
    #[error("claw parameter must be at least 2, got {0}")]
    BadClawParameter(u32),
    #[error("sampling budget exhausted after {0} attempts")]
    SamplingBudget(u64),
    #[error("mixed generator degrees; table is not for an ideal generated in one degree")]
    MixedDegrees,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
