use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid rational number `{0}`")]
    Rational(String),
    #[error("invalid partition `{0}`: expected comma-separated positive integers in weakly decreasing order")]
    Partition(String),
    #[error("invalid step `{0}` in lattice path (expected U, D or H)")]
    Step(char),
    #[error("invalid tree file: {0}")]
    TreeFile(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("expected {expected} edges for {n} vertices, got {got}")]
    EdgeCount { n: usize, expected: usize, got: usize },
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge list is not connected")]
    Disconnected,
    #[error("Prüfer sequence for {n} vertices must have length {expected}, got {got}")]
    PrueferLength { n: usize, expected: usize, got: usize },
    #[error("enumerating all labeled trees is capped at n <= {cap}, requested n = {n}")]
    EnumerationCap { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("shape has size {shape} but cycle type has size {cycles}")]
    SizeMismatch { shape: usize, cycles: usize },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("sum of binomial-weighted characters {sum} is not divisible by 2^{i}")]
    NonIntegral { sum: String, i: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ImmanantError {
    #[error("brute-force immanant is capped at n <= {cap}, matrix has n = {n}")]
    BruteForceCap { n: usize, cap: usize },
    #[error("shape size {shape} does not match matrix dimension {n}")]
    Dimension { shape: usize, n: usize },
    #[error(transparent)]
    Character(#[from] CharError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("inconsistent path parameters: {0}")]
    Parameters(String),
    #[error("path `{path}` is outside the domain: {reason}")]
    Domain { path: String, reason: String },
    #[error("malformed tableau: {0}")]
    Tableau(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
