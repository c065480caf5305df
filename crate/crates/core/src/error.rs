use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex cover search exceeded its budget of {0} nodes")]
    BudgetExceeded(u64),
    #[error("component is not a cycle")]
    NotACycle,
    #[error("component is not a grid")]
    NotAGrid,
    #[error("graph is not a co-graph: induced path {0:?}")]
    NotACograph([String; 4]),
    #[error("composition part has fewer than two vertices")]
    SizeTooSmall,
    #[error("composition part is not connected")]
    NotConnected,
    #[error("composition arguments do not line up: {0}")]
    BadComposition(String),
    #[error("label `{0}` occurs in more than one composition part")]
    LabelCollision(String),
    #[error("set does not strongly resolve `{0}` and `{1}`")]
    NotResolving(String, String),
    #[error("source and target are both `{0}`")]
    SameVertex(String),
    #[error("no registered solver accepts the component")]
    NoSolver,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
