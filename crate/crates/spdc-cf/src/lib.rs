//! Propagation of the two first-order correlation functions of multimode
//! spontaneous parametric down-conversion (SPDC) through a lossy, dispersive
//! nonlinear waveguide, plus extraction of the squeezed-mode structure by
//! homodyne analysis.
//!
//! The state of the fluorescence field is Gaussian and zero-mean throughout,
//! so it is fully described by the pair of correlation matrices
//! `g(ω,ω′) = ⟨â†(ω)â(ω′)⟩` and `f(ω,ω′) = ⟨â(ω)â(ω′)⟩`. The [`propagator`]
//! module advances this pair along the crystal with a split-step Fourier
//! scheme; [`singlemode`] holds the dispersion-free closed-form solutions used
//! as the verification oracle; [`homodyne`] turns a state into observable
//! quadrature variances, eigenmodes and photon numbers.
//!
//! All lengths are expressed in units of the nonlinear length and times in
//! units of the pump duration unless stated otherwise; the formulas carry
//! `l_nl` and `tau_p` explicitly so un-normalized inputs are also valid.

pub mod cf;
pub mod error;
pub mod grid;
pub mod homodyne;
pub mod params;
pub mod propagator;
pub mod pump;
pub mod singlemode;
pub mod transform;

pub use cf::{CfState, Domain};
pub use error::{Error, Result};
pub use grid::{build_grid, suggest_window, SimGrid};
pub use homodyne::{
    build_quadratic_form, conjugate_partner, mean_photon_number, most_squeezed_mode,
    quadrature_spectrum, stage_classifier, trace_quantities, QuadraticForm, QuadratureMode, Stage,
    StageKind, StageReport, TraceRow,
};
pub use params::{CharLength, PhysicalParams};
pub use propagator::{
    convergence_check, evolve, evolve_with_pump, linear_half_step, nonlinear_step,
    ConvergenceReport, EvolveResult, StepPlan,
};
pub use pump::{build_pump, PumpEnvelope};
pub use singlemode::{
    analytic_moments, integrate_moments, moment_ode_rhs, variance_extrema, MomentPair,
};
pub use transform::{cf_to_frequency, cf_to_time};
