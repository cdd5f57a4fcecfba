use thiserror::Error;

/// Errors shared across the library.
///
/// Variants mirror the failure modes of the public operations; parse errors
/// carry the byte offset of the offending input so the CLI can point at it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("the empty word is not allowed here")]
    EmptyWord,

    #[error("word is not cyclically reduced")]
    NotCyclicallyReduced,

    #[error("generator index {index} is outside the alphabet x0..x{max}")]
    IndexOutOfAlphabet { index: u32, max: u32 },

    #[error("invalid relator: {0}")]
    InvalidRelator(String),

    #[error("not a Magnus subset: {0}")]
    NotMagnus(String),

    #[error("degenerate pair: every relator letter lies inside one subgroup of the pair")]
    DegeneratePair,

    #[error("relator of length {len} exceeds the exhaustive-search cap {max}")]
    TooLong { len: usize, max: usize },

    #[error("interior window x{start}..x{end} involves no generator of the relator")]
    Condition3Violated { start: u32, end: u32 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
