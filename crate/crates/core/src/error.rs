use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("bipartition violated by edge {0}-{1}")]
    BipartitionViolation(usize, usize),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is disconnected")]
    DisconnectedInput,
    #[error("edge {0}-{1} not found")]
    EdgeNotFound(usize, usize),
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not even (some vertex has odd degree)")]
    NotEvenGraph,
    #[error("graph has no 1-factorization")]
    NotOneFactorable,
    #[error("search budget of {0} nodes exceeded")]
    SearchBudgetExceeded(u64),
    #[error("more than {0} results found")]
    LimitExceeded(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("mu = {mu} exceeds the admissible maximum {max}")]
    MuTooLarge { mu: usize, max: usize },
    #[error("operands carry different mu ({0} vs {1})")]
    MuMismatch(usize, usize),
    #[error("no simultaneous edge coloring exists for this input")]
    NoSuchColoring,
    #[error("expected a valid 2-simultaneous edge coloring: {0}")]
    NotTwoSimultaneous(String),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("not a Hamiltonian circuit of the graph")]
    NotHamiltonian,
    #[error("circuit of odd length {0}")]
    OddCircuit(usize),
    #[error("graph minus the circuit is not bipartite")]
    ResidualNotBipartite,
    #[error("no oriented cycle double cover found ({})", if *.exhaustive { "none exists" } else { "search incomplete" })]
    NoOcdcFound { exhaustive: bool },
    #[error("cover has {classes} classes, fewer than the chromatic index {needed}")]
    TooFewClasses { classes: usize, needed: usize },
    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("invalid trade: {0}")]
    InvalidTrade(String),
    #[error("trade is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("sequence is not bipartite graphic")]
    NotGraphic,
    #[error("sequence element {element} is below mu = {mu}")]
    ElementBelowMu { element: usize, mu: usize },
}
