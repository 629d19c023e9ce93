use std::fmt;

/// Errors surfaced by the summation engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EngineError {
    /// Substituting a non-shift value for an index bound by a sum operator.
    SubstituteIntoBoundIndex(String),
    /// A boundary synchronization was asked for a non-integer shift.
    SymbolicOffset(String),
    /// A term matched none of the supported summation shapes.
    UnsupportedShape(String),
    /// 1/(a+b*ep) with a = 0; the pole must be extracted first.
    PoleAtZero(String),
    /// Conjugation sums (type C/D) with an infinite upper limit.
    InfiniteConjugation,
    /// Flip of a sum with infinite upper limit.
    InfiniteFlip,
    /// A coefficient beyond the truncation order was requested.
    InsufficientOrder { requested: i64, trunc: i64 },
    /// The formal divergent symbol survived where a finite result was expected.
    ResidualDivergence(String),
    /// Numeric evaluation of a divergent object.
    DivergentEvaluation(String),
    /// A free symbol had no assigned value.
    UnassignedSymbol(String),
    /// Unknown hypergeometric builder kind.
    UnsupportedKind(String),
    /// Parse error with position information.
    Syntax { line: usize, col: usize, msg: String },
    /// Negative power routed to the wrong summation routine.
    NegativePower(String),
    /// Anything else worth reporting verbatim.
    Other(String),
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::SubstituteIntoBoundIndex(s) => {
                write!(f, "substitution into bound index: {s}")
            }
            EngineError::SymbolicOffset(s) => write!(f, "symbolic offset: {s}"),
            EngineError::UnsupportedShape(s) => write!(f, "unsupported sum shape: {s}"),
            EngineError::PoleAtZero(s) => write!(f, "pole at ep = 0 in {s}"),
            EngineError::InfiniteConjugation => {
                write!(f, "conjugation sum with infinite upper limit")
            }
            EngineError::InfiniteFlip => write!(f, "cannot flip a sum with infinite upper limit"),
            EngineError::InsufficientOrder { requested, trunc } => write!(
                f,
                "coefficient at order {requested} requested, series truncated at {trunc}"
            ),
            EngineError::ResidualDivergence(s) => write!(f, "residual divergence: {s}"),
            EngineError::DivergentEvaluation(s) => write!(f, "divergent evaluation: {s}"),
            EngineError::UnassignedSymbol(s) => write!(f, "unassigned symbol: {s}"),
            EngineError::UnsupportedKind(s) => write!(f, "unsupported kind: {s}"),
            EngineError::Syntax { line, col, msg } => {
                write!(f, "syntax error at {line}:{col}: {msg}")
            }
            EngineError::NegativePower(s) => write!(f, "negative power: {s}"),
            EngineError::Other(s) => write!(f, "{s}"),
        }
    }
}

impl std::error::Error for EngineError {}
