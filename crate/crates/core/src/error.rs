use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("boost speed {beta} outside [0, 1)")]
    SpeedOutOfRange { beta: f64 },

    #[error("energy factor {gamma} below 1")]
    EnergyOutOfRange { gamma: f64 },

    #[error("rapidity {rapidity} must be finite and non-negative")]
    RapidityOutOfRange { rapidity: f64 },

    #[error("observable is not Hermitian (max |M - M†| = {deviation:e})")]
    NonHermitianObservable { deviation: f64 },

    #[error("expectation value has imaginary residue {residue:e}")]
    ImaginaryResidue { residue: f64 },

    #[error("state is not normalized (|ψ|² = {norm_sq})")]
    NotNormalized { norm_sq: f64 },

    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },

    #[error("direction vector has zero length")]
    ZeroDirection,

    #[error("CHSH value {value} exceeds the Tsirelson bound 2√2")]
    BoundViolation { value: f64 },

    #[error("Lorentz decomposition left a rotation that is not about y (residual {residual:e})")]
    DecompositionFailure { residual: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
