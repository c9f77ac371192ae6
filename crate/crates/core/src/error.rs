use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero ring: {0}")]
    ZeroRing(String),
    #[error("ring of size {size} exceeds the size cap {cap} (raise --max-ring-size)")]
    RingTooLarge { size: u128, cap: usize },
    #[error("polynomial modulus must be monic of degree >= 1: {0}")]
    NonMonic(String),
    #[error("ring axiom violated: {0}")]
    Axiom(String),
    #[error("not a ring homomorphism: {0}")]
    InvalidHom(String),
    #[error("zero localization: {0} is nilpotent")]
    ZeroLocalization(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("bad element literal '{literal}': {reason}")]
    Literal { literal: String, reason: String },
    #[error("ideal lattice exceeds the cap of {cap} ideals (raise --max-ideals)")]
    IdealCap { cap: usize },
    #[error(
        "closed-set enumeration exceeds the cap of {cap} sets (raise --max-closed-sets or use point-closure mode)"
    )]
    ClosedSetCap { cap: usize },
    #[error("not a cover: {0}")]
    NotACover(String),
    #[error("invalid topology: {0}")]
    Topology(String),
    #[error("internal consistency violation: {0}")]
    Consistency(String),
    #[error("{0}")]
    Invalid(String),
    #[error("parse error at {position}: {message} (expected {expected})")]
    Parse {
        position: usize,
        message: String,
        expected: String,
    },
}

impl Error {
    /// Resource caps map to their own CLI exit code.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::RingTooLarge { .. } | Error::IdealCap { .. } | Error::ClosedSetCap { .. }
        )
    }
}
