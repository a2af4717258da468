//! Centred discrete Fourier transforms between the time and frequency
//! representations of correlation-function pairs.
//!
//! The continuum convention is the symmetric one, `a(t) = (2π)^{-1/2} ∫dω
//! e^{-iωt} a(ω)`, so the matrix transforms come in exactly inverse pairs and
//! Parseval holds in the density-weighted norms: `Σ|g|²·dw²` in frequency
//! equals `Σ|g|²·dt²` in time. `g` transforms with the kernel
//! `e^{+iωt-iω′t′}` and `f` with `e^{-iωt-iω′t′}`, which maps Hermiticity of
//! `g` and symmetry of `f` through the transform.

use std::sync::Arc;

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::cf::{CfState, Domain};
use crate::error::{Error, Result};
use crate::grid::SimGrid;

/// Sign of the exponent in the centred kernel `e^{sign·iωt}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum KernelSign {
    Plus,
    Minus,
}

/// One-dimensional centred transforms of length `n`, built on FFTs with
/// `(-1)^k` modulation. Requires `n % 4 == 0` (guaranteed by the grid
/// contract `n` = power of two >= 8), which makes the residual global phase
/// exactly one.
pub(crate) struct Dft {
    n: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl Dft {
    pub(crate) fn new(n: usize) -> Dft {
        debug_assert!(n % 4 == 0, "centred transform requires n % 4 == 0");
        let mut planner = FftPlanner::new();
        Dft {
            n,
            forward: planner.plan_fft_forward(n),
            inverse: planner.plan_fft_inverse(n),
        }
    }

    /// In-place `X_j = Σ_a e^{sign·i ω_j t_a} x_a` on centred axes.
    pub(crate) fn apply(&self, buf: &mut [Complex64], sign: KernelSign) {
        debug_assert_eq!(buf.len(), self.n);
        for (k, v) in buf.iter_mut().enumerate() {
            if k % 2 == 1 {
                *v = -*v;
            }
        }
        match sign {
            KernelSign::Minus => self.forward.process(buf),
            KernelSign::Plus => self.inverse.process(buf),
        }
        for (k, v) in buf.iter_mut().enumerate() {
            if k % 2 == 1 {
                *v = -*v;
            }
        }
    }
}

/// Apply the centred 1-D transform along every row (second index).
fn transform_rows(a: &mut Array2<Complex64>, dft: &Dft, sign: KernelSign) {
    for mut row in a.rows_mut() {
        let s = row.as_slice_mut().expect("matrix rows must be contiguous");
        dft.apply(s, sign);
    }
}

/// Apply the centred 1-D transform along every column (first index).
fn transform_cols(a: &mut Array2<Complex64>, dft: &Dft, sign: KernelSign) {
    let mut t = a.t().to_owned();
    transform_rows(&mut t, dft, sign);
    a.assign(&t.t());
}

/// Double transform of one correlation matrix with independent kernel signs
/// for the two indices, times an overall scale.
pub(crate) fn transform_matrix(
    a: &Array2<Complex64>,
    dft: &Dft,
    first: KernelSign,
    second: KernelSign,
    scale: f64,
) -> Array2<Complex64> {
    let mut out = a.clone();
    transform_cols(&mut out, dft, first);
    transform_rows(&mut out, dft, second);
    out.mapv_inplace(|v| v * scale);
    out
}

/// 1-D centred transform of a vector; used for pump envelopes.
pub(crate) fn transform_vector(
    v: &Array1<Complex64>,
    sign: KernelSign,
    scale: f64,
) -> Array1<Complex64> {
    let dft = Dft::new(v.len());
    let mut buf: Vec<Complex64> = v.to_vec();
    dft.apply(&mut buf, sign);
    Array1::from_iter(buf.into_iter().map(|x| x * scale))
}

fn expect_domain(state: &CfState, expected: Domain) -> Result<()> {
    if state.domain != expected {
        return Err(Error::DomainMismatch {
            expected,
            found: state.domain,
        });
    }
    Ok(())
}

const SQRT_TAU: f64 = 2.5066282746310002; // sqrt(2π)

/// Transform a frequency-domain state to the time domain.
pub fn cf_to_time(state: &CfState, grid: &SimGrid) -> Result<CfState> {
    expect_domain(state, Domain::Frequency)?;
    let dft = Dft::new(grid.n);
    let scale = (grid.dw / SQRT_TAU).powi(2);
    Ok(CfState {
        g: transform_matrix(&state.g, &dft, KernelSign::Plus, KernelSign::Minus, scale),
        f: transform_matrix(&state.f, &dft, KernelSign::Minus, KernelSign::Minus, scale),
        domain: Domain::Time,
        z: state.z,
    })
}

/// Transform a time-domain state to the frequency domain.
pub fn cf_to_frequency(state: &CfState, grid: &SimGrid) -> Result<CfState> {
    expect_domain(state, Domain::Time)?;
    let dft = Dft::new(grid.n);
    let scale = (grid.dt / SQRT_TAU).powi(2);
    Ok(CfState {
        g: transform_matrix(&state.g, &dft, KernelSign::Minus, KernelSign::Plus, scale),
        f: transform_matrix(&state.f, &dft, KernelSign::Plus, KernelSign::Plus, scale),
        domain: Domain::Frequency,
        z: state.z,
    })
}
