use alloc::string::String;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Operand shapes do not fit together.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// A word uses a symbol that is not in the alphabet.
    #[error("letter `{0}` is not in the alphabet")]
    ForeignLetter(String),
    /// Two automata or matrix sets were expected to share an alphabet.
    #[error("alphabets differ")]
    AlphabetMismatch,
    /// Malformed alphabet (empty or with repeated letters).
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    /// The operation needs the alphabet `["0", "1"]`.
    #[error("operation requires the binary alphabet [\"0\", \"1\"]")]
    NotBinary,
    /// The operation needs an average preserving automaton.
    #[error("automaton is not average preserving")]
    NotAp,
    /// The operation needs a left minimal automaton.
    #[error("automaton is not left minimal")]
    NotLeftMinimal,
    /// The operation needs a minimal automaton.
    #[error("automaton is not minimal")]
    NotMinimal,
    /// A matrix that must be invertible is singular.
    #[error("singular matrix: {0}")]
    Singular(String),
    /// Polynomial root tests expect a monic input.
    #[error("polynomial is not monic")]
    NonMonic,
    /// A periodic word needs a nonempty period.
    #[error("period of an ultimately periodic word must be nonempty")]
    EmptyPeriod,
    /// Real evaluation point is not a dyadic rational in `[0, 1)`.
    #[error("{0} is not a dyadic rational in [0, 1)")]
    NotDyadic(String),
    /// Depth budgets must be positive.
    #[error("depth budget must be at least 1")]
    ZeroDepth,
    /// A matrix set must contain at least one matrix.
    #[error("matrix set is empty")]
    EmptySet,
    /// A precondition of a procedure does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
}
