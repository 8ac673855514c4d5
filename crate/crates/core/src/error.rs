use thiserror::Error;

/// Errors raised by the library. CLI exit codes are assigned in `cli`.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unsupported solid n={0}; expected 3, 4 or 5")]
    UnsupportedSolid(u32),
    #[error("cannot normalize a zero vector")]
    ZeroVector,
    #[error("arc endpoints are antipodal")]
    AntipodalEndpoints,
    #[error("arc endpoints coincide")]
    DegenerateArc,
    #[error("point is the antipode of the chart origin")]
    AntipodeOfOrigin,
    #[error("Möbius map is singular (ad - bc = 0)")]
    SingularMobius,
    #[error("anchor makes a pentagon edge degenerate")]
    DegenerateAnchor,
    #[error("pentagon construction meets an antipodal pair")]
    AntipodalConstruction,
    #[error("theta = {theta} outside admissible range [{lo}, {hi}]")]
    OutOfRange { theta: f64, lo: f64, hi: f64 },
    #[error("no root in the unit disk at theta = {0}")]
    NoRootInDisk(f64),
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
