//! Error type shared by every module of the crate.
//!
//! All fallible operations return [`Result`]. Errors carry enough context to
//! be actionable from the CLI (which maps every library error to exit code 2)
//! and from the C ABI (which maps each variant to a stable error code).

use thiserror::Error;

/// Errors produced by root-system construction, character arithmetic, and
/// Demazure / Weyl module computations.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The requested finite or affine type is outside the supported tables.
    #[error("unsupported type: {0}")]
    UnsupportedType(String),

    /// A weight had the wrong length, or was required to be dominant and
    /// integral but was not.
    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    /// A node or coordinate index was out of range.
    #[error("index {index} out of range (rank {rank})")]
    InvalidIndex {
        /// The offending index.
        index: usize,
        /// The rank (or node count) it was checked against.
        rank: usize,
    },

    /// The level of a Demazure or Weyl module must be a positive rational.
    #[error("level must be positive, got {0}")]
    NonPositiveLevel(String),

    /// A translation weight lies outside the lattice through which the
    /// affine Weyl group translates, or a residual element failed to reduce
    /// to the identity.
    #[error("element is not in the affine Weyl group: {0}")]
    NotInAffineWeylGroup(String),

    /// Finite-mode and affine-mode characters (or characters of different
    /// rank) were mixed in one arithmetic operation.
    #[error("cannot combine characters of different mode or rank: {0}")]
    ModeError(String),

    /// An operation that needs at least one term received the zero character.
    #[error("empty character")]
    EmptyCharacter,

    /// A character is not a nonnegative integer combination of irreducible
    /// characters (it is not the character of any finite-dimensional module).
    #[error("not a module character: {0}")]
    NotAModuleCharacter(String),

    /// A Demazure operator was applied to an exponent whose pairing with the
    /// chosen simple coroot is not an integer.
    #[error("non-integral pairing {value} with simple coroot {index}")]
    NonIntegralPairing {
        /// Node index of the simple coroot.
        index: usize,
        /// The offending pairing, formatted exactly.
        value: String,
    },

    /// The highest weight handed to a character constructor must be dominant
    /// and integral.
    #[error("invalid highest weight: {0}")]
    InvalidHighestWeight(String),

    /// The pair `(λ, k)` admits no Demazure realization: the dominance chain
    /// of `w0(λ) + kΛ0` does not terminate in a dominant integral weight.
    #[error("no Demazure realization for this weight/level pair: {0}")]
    NotInX(String),

    /// For the affine families with a doubled short end node, Weyl modules
    /// whose coefficient at the short fundamental weight is even have no
    /// established Demazure realization; they are refused rather than
    /// guessed.
    #[error("even short-node coefficient not supported: {0}")]
    UnsupportedEvenCase(String),

    /// A caller-supplied word is not a reduced expression (its length exceeds
    /// the length of the group element it spells).
    #[error("word is not reduced: {0:?}")]
    NonReducedWord(Vec<usize>),

    /// Exact arithmetic exceeded the fixed-width rational range.
    #[error("arithmetic overflow in {0}")]
    Overflow(String),

    /// A string failed to parse (rational literal, type name, weight list).
    #[error("parse error: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable numeric code for the C ABI and for scripted CLI use.
    pub fn code(&self) -> i32 {
        match self {
            Error::UnsupportedType(_) => 10,
            Error::InvalidWeight(_) => 11,
            Error::InvalidIndex { .. } => 12,
            Error::NonPositiveLevel(_) => 13,
            Error::NotInAffineWeylGroup(_) => 14,
            Error::ModeError(_) => 15,
            Error::EmptyCharacter => 16,
            Error::NotAModuleCharacter(_) => 17,
            Error::NonIntegralPairing { .. } => 18,
            Error::InvalidHighestWeight(_) => 19,
            Error::NotInX(_) => 20,
            Error::UnsupportedEvenCase(_) => 21,
            Error::NonReducedWord(_) => 22,
            Error::Overflow(_) => 23,
            Error::Parse(_) => 24,
        }
    }

    /// Stable variant name, used by the CLI to label diagnostics (e.g.
    /// `error[UnsupportedEvenCase]: …`).
    pub fn name(&self) -> &'static str {
        match self {
            Error::UnsupportedType(_) => "UnsupportedType",
            Error::InvalidWeight(_) => "InvalidWeight",
            Error::InvalidIndex { .. } => "InvalidIndex",
            Error::NonPositiveLevel(_) => "NonPositiveLevel",
            Error::NotInAffineWeylGroup(_) => "NotInAffineWeylGroup",
            Error::ModeError(_) => "ModeError",
            Error::EmptyCharacter => "EmptyCharacter",
            Error::NotAModuleCharacter(_) => "NotAModuleCharacter",
            Error::NonIntegralPairing { .. } => "NonIntegralPairing",
            Error::InvalidHighestWeight(_) => "InvalidHighestWeight",
            Error::NotInX(_) => "NotInX",
            Error::UnsupportedEvenCase(_) => "UnsupportedEvenCase",
            Error::NonReducedWord(_) => "NonReducedWord",
            Error::Overflow(_) => "Overflow",
            Error::Parse(_) => "Parse",
        }
    }
}
