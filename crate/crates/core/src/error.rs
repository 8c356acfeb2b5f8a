use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A physical parameter lies outside its allowed domain.
    #[error("parameter out of domain: {0}")]
    Parameter(String),

    #[error("state is not normalized: norm² = {norm_sq}")]
    Normalization { norm_sq: f64 },

    /// A matrix failed the Hermitian / unit-trace / PSD checks of a density operator.
    #[error("not a valid density matrix: {0}")]
    InvalidDensity(String),

    #[error("tomography failed: {0}")]
    Tomography(String),

    #[error("numerical instability: {0}")]
    NumericalInstability(String),

    #[error("invalid measurement settings: {0}")]
    Settings(String),

    /// The brute-force CHSH search did not land inside its tolerance window.
    #[error(
        "optimizer did not converge: found {found}, expected {expected} (tolerance {tolerance})"
    )]
    Convergence {
        found: f64,
        expected: f64,
        tolerance: f64,
    },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
