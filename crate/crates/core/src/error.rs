use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed braid word: {0}")]
    MalformedWord(String),

    #[error("closure of {word} is a {components}-component link, not a knot")]
    NotAKnot { word: String, components: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("malformed polynomial `{0}`")]
    MalformedPolynomial(String),

    #[error("table parse error at row {row}: {message}")]
    TableParse { row: usize, message: String },

    #[error("table integrity error in record {name}: {message}")]
    TableIntegrity { name: String, message: String },

    #[error("unknown knot name `{0}`")]
    UnknownName(String),

    #[error("inconsistent bound: {0}")]
    InconsistentBound(String),

    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },

    #[error("rule refused: {0}")]
    RuleRefused(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
