use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A construction would exceed the 64-vertex representation limit.
    #[error("graph order {n} exceeds the {max}-vertex limit")]
    OrderOverflow { n: usize, max: usize },

    /// A precondition on the arguments failed.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Excluded parameter combination: `a = b` with `n*a` odd.
    #[error("parity-excluded parameters: a = b = {a} with n*a odd (n = {n})")]
    ParityExcluded { n: usize, a: usize },

    /// The backtracking factor search ran out of its node budget.
    #[error("factor search exceeded the node budget of {limit}")]
    BudgetExceeded { limit: u64 },

    /// Subset search is limited to `p + q <= cap`.
    #[error("subset search supports p+q <= {cap}, got {got}")]
    SubsetCapExceeded { cap: usize, got: usize },

    /// Full non-isomorphic enumeration is capped.
    #[error("enumeration cap exceeded: {what} = {got}, cap = {cap}")]
    EnumerationCapExceeded {
        what: &'static str,
        got: usize,
        cap: usize,
    },

    /// The eigensolver did not reach the requested residual.
    #[error("power iteration did not converge after {iterations} iterations (residual {residual:.3e})")]
    NoConvergence { iterations: u64, residual: f64 },

    /// A quotient operation requires an equitable partition.
    #[error("vertex partition is not equitable")]
    NotEquitable,

    /// The blocks do not form a partition of the vertex set.
    #[error("malformed vertex partition: {0}")]
    MalformedPartition(String),

    /// The biquadratic x^4 - c x^2 + d has no real roots.
    #[error("biquadratic has complex roots (c = {c}, d = {d})")]
    ComplexRoots { c: i64, d: i64 },

    /// graph6 parse failure.
    #[error("graph6: {0}")]
    Graph6(String),
}

pub type Result<T> = std::result::Result<T, Error>;
