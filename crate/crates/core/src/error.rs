use thiserror::Error;

/// Crate-wide error type.
///
/// The CLI maps variants onto exit codes: parse/schema problems are exit 2,
/// verification failures exit 3, everything else exit 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("certificate schema mismatch: {0}")]
    Schema(String),

    #[error("verification failed: {0}")]
    Verification(String),

    /// Brooks coloring rejected a complete component `K_{r+1}`.
    #[error("complete-graph obstruction: component is K_{{r+1}} for r = {0}")]
    CompleteObstruction(usize),

    /// Brooks coloring rejected an odd cycle at r = 2.
    #[error("odd-cycle obstruction at r = 2")]
    OddCycleObstruction,

    /// Brooks coloring rejected a component with maximum degree above budget.
    #[error("degree obstruction: component has maximum degree {found} > {budget}")]
    DegreeObstruction { found: usize, budget: usize },

    /// A structural claim the engine relies on failed at runtime even after a
    /// reseed. Carries the move trace that led to the failure.
    #[error("engine diagnostic: {msg}")]
    Engine { msg: String, trace: Vec<crate::partition::TraceMove> },

    /// A conclusion guaranteed by theory did not hold; indicates a defect.
    #[error("internal violation: {0}")]
    Violation(String),

    /// Hypotheses of a critical-structure operation are not satisfied.
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("exact search timed out after {elapsed_ms} ms")]
    Timeout { elapsed_ms: u128 },

    #[error("graph too large for exact search: n = {n} exceeds bound {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
