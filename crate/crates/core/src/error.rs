use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Config,
    Regime,
    Resolution,
    Infeasible,
    Io,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("wavelength {wavelength} um is outside the validity range [{min}, {max}] um")]
    WavelengthOutOfRange { wavelength: f64, min: f64, max: f64 },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },

    #[error("crystal data: {0}")]
    CrystalData(String),

    #[error(
        "collinear-forbidden regime: pump index n_p = {n_pump:.6} exceeds n_o(2 lambda_p) = {n_signal:.6}, \
         so the emission cone angle is imaginary"
    )]
    CollinearForbidden { n_pump: f64, n_signal: f64 },

    #[error("collinear regime (theta0 = 0): linearization of the phase mismatch is impossible")]
    CollinearRegime,

    #[error("n_p(phi0) - n_o(2 lambda_p) never changes sign on [0, pi]: no noncollinear window")]
    NoNoncollinearWindow,

    #[error("degenerate geometry: k1 + k2 transverse sum vanishes, pump azimuth undefined")]
    DegenerateGeometry,

    #[error("insufficient resolution for {what}: need at least {required} points, got {actual}")]
    Resolution { what: String, required: usize, actual: usize },

    #[error("regime precondition violated: {0}")]
    Precondition(String),

    #[error("angle {angle} rad is outside the allowed range [-{limit}, {limit}]")]
    AngleOutOfRange { angle: f64, limit: f64 },

    #[error("infeasible channel layout: constraint `{constraint}` violated")]
    InfeasibleLayout { constraint: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidParameter { name: name.into(), reason: reason.into() }
    }

    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::WavelengthOutOfRange { .. }
            | Error::InvalidParameter { .. }
            | Error::CrystalData(_)
            | Error::AngleOutOfRange { .. } => ErrorCategory::Config,
            Error::CollinearForbidden { .. }
            | Error::CollinearRegime
            | Error::NoNoncollinearWindow
            | Error::DegenerateGeometry
            | Error::Precondition(_) => ErrorCategory::Regime,
            Error::Resolution { .. } => ErrorCategory::Resolution,
            Error::InfeasibleLayout { .. } => ErrorCategory::Infeasible,
            Error::Io(_) | Error::Csv(_) | Error::Json(_) => ErrorCategory::Io,
        }
    }
}
