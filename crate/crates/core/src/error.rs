use thiserror::Error;

/// Errors raised by the library. Negative answers (a failing identity, a
/// countermodel, a rejected proof line) are values, not errors.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
    Parse {
        offset: usize,
        expected: Vec<String>,
        found: String,
    },

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("algebra `{algebra}` has no negation table")]
    MissingNegation { algebra: String },

    #[error("invalid algebra `{name}`: {reason}")]
    InvalidAlgebra { name: String, reason: String },

    #[error("algebra file line {line}: {reason}")]
    AlgebraFormat { line: usize, reason: String },

    #[error("identity file line {line}: {reason}")]
    IdentityFormat { line: usize, reason: String },

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("unknown class `{0}`")]
    UnknownClass(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("unknown logic `{0}`")]
    UnknownLogic(String),

    #[error("unknown base key `{0}`")]
    UnknownBase(String),

    #[error("logic `{name}` is not decided here: {reason}")]
    NotFinitelyGenerated { name: String, reason: String },

    #[error("order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("closure limit exceeded: {what} reached {reached} (limit {limit})")]
    ClosureLimit { what: String, reached: usize, limit: usize },

    #[error("{0}")]
    WrongShape(String),

    #[error("not a congruence: {0}")]
    NotCongruence(String),

    #[error("Stone identity fails in `{algebra}` at {witness}")]
    StoneFails { algebra: String, witness: String },

    #[error("generator `{generator}` is outside ambient `{ambient}` ({identity} fails)")]
    GeneratorOutsideAmbient {
        generator: String,
        ambient: String,
        identity: String,
    },

    #[error("missing metavariable `{0}` in substitution")]
    MissingMetavariable(String),

    #[error("unknown axiom schema `{0}`")]
    UnknownSchema(String),

    #[error("proof file line {line}: {reason}")]
    ProofFormat { line: usize, reason: String },

    #[error("deduction property fails for `{0}`")]
    NoDeductionProperty(String),

    #[error("chain identity parameter {n} out of range (minimum {min})")]
    ChainParameter { n: usize, min: usize },

    #[error("bad setting `{name}`: {reason}")]
    Config { name: String, reason: String },

    #[error("io error on `{path}`: {reason}")]
    Io { path: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
