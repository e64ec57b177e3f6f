use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("unsupported size: n = {n} (allowed 1..={cap})")]
    UnsupportedSize { n: usize, cap: usize },
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("vertex {0} out of range")]
    InvalidVertex(usize),
    #[error("empty source set")]
    EmptySourceSet,
    #[error("cycle budget exceeded: more than {0} cycles")]
    CycleBudgetExceeded(usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("tree order {0} is below 3")]
    OrderTooSmall(usize),
    #[error("automorphism group budget exceeded: order above {0}")]
    GroupBudgetExceeded(u64),
    #[error("search budget exceeded: more than {0} labelings examined")]
    SearchBudgetExceeded(u64),
    #[error("graph has no cycles")]
    NoCycles,
    #[error("not defined: a nontrivial automorphism fixes every edge")]
    NotDefined,
    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),
    #[error("no edge labeling of the orbit subgraph satisfies the local conditions")]
    Step1Infeasible,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
}
