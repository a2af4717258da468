use ndarray::Array2;
use num_complex::Complex64;

/// Representation domain of a correlation-function pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Time,
    Frequency,
}

/// The pair of correlation matrices that fully describes the zero-mean
/// Gaussian state of the fluorescence field.
///
/// `g[i][j]` holds `⟨â†_i â_j⟩` (Hermitian, real non-negative diagonal) and
/// `f[i][j]` holds `⟨â_i â_j⟩` (symmetric). Matrix entries store continuum
/// density values on the grid axes: integrals `∫dω` become sums `Σ·dw`, and
/// diagonal deltas discretize to `1/dw` (resp. `1/dt` in the time domain).
#[derive(Debug, Clone)]
pub struct CfState {
    /// Occupation/coherence correlation `⟨â†â⟩`.
    pub g: Array2<Complex64>,
    /// Anomalous (phase-sensitive) correlation `⟨ââ⟩`.
    pub f: Array2<Complex64>,
    /// Domain the matrices are currently expressed in.
    pub domain: Domain,
    /// Propagation distance the state belongs to.
    pub z: f64,
}

impl CfState {
    /// The vacuum state, `g = f = 0`, at `z = 0` in the frequency domain.
    pub fn vacuum(n: usize) -> CfState {
        CfState {
            g: Array2::zeros((n, n)),
            f: Array2::zeros((n, n)),
            domain: Domain::Frequency,
            z: 0.0,
        }
    }

    pub fn n(&self) -> usize {
        self.g.nrows()
    }

    /// Largest elementwise violation of `g[i][j] = conj(g[j][i])`.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.g.nrows() {
            for j in i..self.g.ncols() {
                let d = (self.g[[i, j]] - self.g[[j, i]].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Largest elementwise violation of `f[i][j] = f[j][i]`.
    pub fn symmetry_deviation(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.f.nrows() {
            for j in i + 1..self.f.ncols() {
                let d = (self.f[[i, j]] - self.f[[j, i]]).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Largest magnitude among the elements of `g` and `f`.
    pub fn max_abs(&self) -> f64 {
        let m1 = self.g.iter().fold(0.0_f64, |a, v| a.max(v.norm()));
        let m2 = self.f.iter().fold(0.0_f64, |a, v| a.max(v.norm()));
        m1.max(m2)
    }

    /// Frobenius norm of the `(g, f)` pair.
    pub fn frobenius_norm(&self) -> f64 {
        let s: f64 = self
            .g
            .iter()
            .chain(self.f.iter())
            .map(|v| v.norm_sqr())
            .sum();
        s.sqrt()
    }
}
