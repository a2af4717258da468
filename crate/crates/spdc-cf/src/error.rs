use crate::cf::Domain;

/// Errors surfaced by the simulation library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid physical parameters: {0}")]
    InvalidParams(String),

    #[error("grid does not resolve the pump: {0}")]
    UnderResolved(String),

    #[error("state is in the {found:?} domain, expected {expected:?}")]
    DomainMismatch { expected: Domain, found: Domain },

    #[error("invalid step plan: {0}")]
    InvalidPlan(String),

    #[error("analytic solution unavailable: {0}")]
    AnalyticUnavailable(String),

    #[error(
        "correlation support reached the window edge at z = {z:.6}: \
         fraction {fraction:.3e} of |f| mass lies in the outer 10% of the window"
    )]
    SupportViolation { z: f64, fraction: f64 },

    #[error("quadratic form rejected its input: {0}")]
    NonPhysicalState(String),

    #[error("eigensolver failure: {0}")]
    Eigen(String),
}

pub type Result<T> = std::result::Result<T, Error>;
