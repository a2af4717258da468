use ndarray::Array1;

use crate::error::{Error, Result};
use crate::params::PhysicalParams;

/// Uniform time/frequency lattice shared by all fields of a simulation.
///
/// Both axes hold `n` points centred on zero: `t_axis[k] = (k - n/2)·dt` and
/// `w_axis[k] = (k - n/2)·dw` with `dt·dw·n = 2π`, so the centred discrete
/// transforms in [`crate::transform`] are exactly invertible.
#[derive(Debug, Clone)]
pub struct SimGrid {
    /// Number of grid points per axis; a power of two.
    pub n: usize,
    /// Total time window `T`.
    pub t_window: f64,
    /// Time spacing `T/n`.
    pub dt: f64,
    /// Angular frequency spacing `2π/T`.
    pub dw: f64,
    /// Time axis, centred on 0.
    pub t_axis: Array1<f64>,
    /// Detuning axis (from the fluorescence central frequency), centred on 0.
    pub w_axis: Array1<f64>,
}

/// Build the simulation lattice for `n` points over a window `t_window`.
pub fn build_grid(n: usize, t_window: f64) -> Result<SimGrid> {
    if n < 8 || !n.is_power_of_two() {
        return Err(Error::InvalidGrid(format!(
            "n must be a power of two >= 8, got {n}"
        )));
    }
    if !(t_window > 0.0 && t_window.is_finite()) {
        return Err(Error::InvalidGrid(format!(
            "t_window must be strictly positive, got {t_window}"
        )));
    }
    let dt = t_window / n as f64;
    let dw = 2.0 * std::f64::consts::PI / t_window;
    let half = (n / 2) as isize;
    let t_axis = Array1::from_iter((0..n).map(|k| (k as isize - half) as f64 * dt));
    let w_axis = Array1::from_iter((0..n).map(|k| (k as isize - half) as f64 * dw));
    Ok(SimGrid {
        n,
        t_window,
        dt,
        dw,
        t_axis,
        w_axis,
    })
}

/// Window size that keeps the drifting correlation support inside the
/// periodic box.
///
/// The correlation functions unwind from the pump seed region along the
/// diagonal at speed `τ_P/l_ov` per unit length, so over the full crystal the
/// support extends to `τ_P·l_total/l_ov` on either side, plus a margin (in
/// pump durations) for the pump tails and the antidiagonal spread.
pub fn suggest_window(params: &PhysicalParams, margin: f64) -> f64 {
    let drift = params.tau_p * params.l_total * params.l_ov.inverse();
    2.0 * (drift + margin * params.tau_p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::CharLength;
    use approx::assert_relative_eq;

    #[test]
    fn grid_axes_and_spacings() {
        let g = build_grid(8, 8.0).unwrap();
        assert_eq!(g.dt, 1.0);
        assert_relative_eq!(g.dw, std::f64::consts::PI / 4.0, max_relative = 1e-15);
        let expect: Vec<f64> = vec![-4.0, -3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0];
        for (a, b) in g.t_axis.iter().zip(&expect) {
            assert_relative_eq!(a, b, max_relative = 1e-15);
        }
        // dt*dw*n = 2pi up to rounding
        assert_relative_eq!(
            g.dt * g.dw * g.n as f64,
            2.0 * std::f64::consts::PI,
            max_relative = 1e-15
        );
    }

    #[test]
    fn grid_256_over_64tau() {
        let g = build_grid(256, 64.0).unwrap();
        assert_relative_eq!(g.dt, 0.25, max_relative = 1e-15);
        assert_relative_eq!(
            g.dw,
            std::f64::consts::PI / 32.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn grid_rejects_bad_inputs() {
        assert!(build_grid(7, 8.0).is_err());
        assert!(build_grid(12, 8.0).is_err());
        assert!(build_grid(4, 8.0).is_err());
        assert!(build_grid(8, 0.0).is_err());
        assert!(build_grid(8, -3.0).is_err());
    }

    #[test]
    fn axes_symmetric_about_zero() {
        let g = build_grid(16, 10.0).unwrap();
        // centred convention: t[k] + t[n-k] = 0 for k >= 1
        for k in 1..g.n {
            assert_relative_eq!(g.t_axis[k] + g.t_axis[g.n - k], 0.0, epsilon = 1e-12);
            assert_relative_eq!(g.w_axis[k] + g.w_axis[g.n - k], 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn window_accounts_for_drift() {
        let mut p = PhysicalParams::bare(1.0, 1.0);
        p.l_ov = CharLength::Finite(0.1);
        assert_relative_eq!(suggest_window(&p, 5.0), 30.0, max_relative = 1e-12);

        p.l_ov = CharLength::Infinite;
        assert_relative_eq!(suggest_window(&p, 5.0), 10.0, max_relative = 1e-12);

        let drifting = PhysicalParams {
            l_ov: CharLength::Finite(1.0),
            tau_p: 2.0,
            ..PhysicalParams::bare(1.0, 1.0)
        };
        assert_relative_eq!(suggest_window(&drifting, 5.0), 24.0, max_relative = 1e-12);
    }
}
