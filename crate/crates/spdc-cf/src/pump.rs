use ndarray::Array1;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::SimGrid;
use crate::params::PhysicalParams;
use crate::transform::{transform_vector, KernelSign};

const SQRT_TAU: f64 = 2.5066282746310002; // sqrt(2π)

/// Pump pulse envelope, normalized to the peak amplitude `P₀`.
///
/// `spectral[k] = exp(-w_k²·τ_P²/2)` is the Gaussian spectral amplitude on
/// the detuning axis (detuning from twice the fluorescence central
/// frequency). `temporal` is its transform scaled so the peak is 1 at `t = 0`
/// — i.e. the envelope `P(t)/P₀` that multiplies the nonlinear coupling.
#[derive(Debug, Clone)]
pub struct PumpEnvelope {
    pub spectral: Array1<Complex64>,
    pub temporal: Array1<Complex64>,
}

impl PumpEnvelope {
    /// Envelope with `P(t)/P₀ ≡ 1` across the whole window. Useful for
    /// reducing the multimode engine to the single-mode model in tests.
    pub fn flat(grid: &SimGrid) -> PumpEnvelope {
        let temporal = Array1::from_elem(grid.n, Complex64::new(1.0, 0.0));
        PumpEnvelope::from_temporal(grid, temporal)
    }

    /// Build an envelope from an arbitrary temporal profile; the spectral
    /// side is the matching transform under the unit-pump-duration
    /// convention.
    pub fn from_temporal(grid: &SimGrid, temporal: Array1<Complex64>) -> PumpEnvelope {
        let spectral = transform_vector(&temporal, KernelSign::Plus, grid.dt / SQRT_TAU);
        PumpEnvelope { spectral, temporal }
    }
}

/// Construct the Gaussian pump of duration `τ_P` on the grid.
///
/// Requires the grid to resolve the pump (`dt ≤ τ_P/2`) and to contain it
/// (`T ≥ 8τ_P`); within those bounds the computed temporal peak equals 1 to
/// better than 1e-6.
pub fn build_pump(grid: &SimGrid, params: &PhysicalParams) -> Result<PumpEnvelope> {
    let tau = params.tau_p;
    if grid.dt > tau / 2.0 {
        return Err(Error::UnderResolved(format!(
            "dt = {} exceeds tau_p/2 = {}",
            grid.dt,
            tau / 2.0
        )));
    }
    if grid.t_window < 8.0 * tau {
        return Err(Error::UnderResolved(format!(
            "t_window = {} is below 8·tau_p = {}",
            grid.t_window,
            8.0 * tau
        )));
    }
    let spectral = Array1::from_iter(
        grid.w_axis
            .iter()
            .map(|&w| Complex64::new((-w * w * tau * tau / 2.0).exp(), 0.0)),
    );
    // Inverse transform scaled by τ_P so the temporal peak is P(0)/P₀ = 1.
    let temporal = transform_vector(
        &spectral,
        KernelSign::Minus,
        tau * grid.dw / SQRT_TAU,
    );
    Ok(PumpEnvelope { spectral, temporal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::build_grid;
    use approx::assert_relative_eq;

    #[test]
    fn spectral_values_at_reference_detunings() {
        // T = 16, n = 64: dw = 2π/16, and τ_P = 1
        let grid = build_grid(64, 16.0).unwrap();
        let p = build_pump(&grid, &PhysicalParams::bare(1.0, 1.0)).unwrap();
        // peak value 1 at w = 0
        let mid = grid.n / 2;
        assert_relative_eq!(p.spectral[mid].re, 1.0, max_relative = 1e-15);
        // e^{-1/2} at w = 1/τ_P, via direct evaluation of the Gaussian
        let w1 = 1.0;
        let val = (-w1 * w1 / 2.0_f64).exp();
        assert_relative_eq!(val, 0.6065306597126334, max_relative = 1e-12);
        // the sampled array agrees with the formula on every grid point
        for (k, &w) in grid.w_axis.iter().enumerate() {
            assert_relative_eq!(
                p.spectral[k].re,
                (-w * w / 2.0_f64).exp(),
                max_relative = 1e-14
            );
            assert_eq!(p.spectral[k].im, 0.0);
        }
    }

    #[test]
    fn spectral_is_real_positive_even() {
        let grid = build_grid(64, 20.0).unwrap();
        let p = build_pump(&grid, &PhysicalParams::bare(1.0, 1.0)).unwrap();
        for k in 1..grid.n {
            assert!(p.spectral[k].re > 0.0);
            assert_eq!(p.spectral[k].im, 0.0);
            assert_relative_eq!(
                p.spectral[k].re,
                p.spectral[grid.n - k].re,
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn temporal_matches_closed_form_gaussian_pair() {
        // The transform of exp(-w²τ²/2) is exp(-t²/(2τ²)) after the peak-1
        // scaling; compare on every grid point, which covers the half-max
        // point t = τ·sqrt(2 ln 2) in particular.
        let grid = build_grid(128, 16.0).unwrap();
        let p = build_pump(&grid, &PhysicalParams::bare(1.0, 1.0)).unwrap();
        for (a, &t) in grid.t_axis.iter().enumerate() {
            let expect = (-t * t / 2.0_f64).exp();
            assert!(
                (p.temporal[a].re - expect).abs() < 1e-6,
                "t={t}: {} vs {expect}",
                p.temporal[a].re
            );
            assert!(p.temporal[a].im.abs() < 1e-12);
        }
        let mid = grid.n / 2;
        assert_relative_eq!(p.temporal[mid].re, 1.0, epsilon = 1e-6);
    }

    #[test]
    fn temporal_peak_respects_other_pump_durations() {
        let grid = build_grid(256, 32.0).unwrap();
        let params = PhysicalParams {
            tau_p: 2.0,
            ..PhysicalParams::bare(1.0, 1.0)
        };
        let p = build_pump(&grid, &params).unwrap();
        let mid = grid.n / 2;
        assert_relative_eq!(p.temporal[mid].re, 1.0, epsilon = 1e-6);
        for (a, &t) in grid.t_axis.iter().enumerate() {
            let expect = (-t * t / 8.0_f64).exp();
            assert!((p.temporal[a].re - expect).abs() < 1e-6);
        }
    }

    #[test]
    fn under_resolved_grids_are_rejected() {
        // dt = 1 > τ_P/2
        let coarse = build_grid(8, 8.0).unwrap();
        let mut params = PhysicalParams::bare(1.0, 1.0);
        params.tau_p = 1.0;
        assert!(build_pump(&coarse, &params).is_err());
        // window shorter than 8 τ_P
        let short = build_grid(64, 4.0).unwrap();
        assert!(build_pump(&short, &params).is_err());
    }
}
