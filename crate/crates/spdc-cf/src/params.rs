use std::fmt;

use crate::error::{Error, Result};

/// A characteristic length that may be infinite.
///
/// Infinite means the associated process is disabled; every formula uses
/// [`CharLength::inverse`], so `1/L` terms vanish exactly instead of going
/// through large floats.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CharLength {
    Finite(f64),
    Infinite,
}

impl CharLength {
    /// `1/L`, exactly zero for the infinite variant.
    pub fn inverse(self) -> f64 {
        match self {
            CharLength::Finite(l) => 1.0 / l,
            CharLength::Infinite => 0.0,
        }
    }

    pub fn value(self) -> Option<f64> {
        match self {
            CharLength::Finite(l) => Some(l),
            CharLength::Infinite => None,
        }
    }

    pub fn is_disabled(self) -> bool {
        matches!(self, CharLength::Infinite)
    }

    /// Interpret a float, mapping `+inf` onto the disabled variant.
    pub fn from_f64(v: f64) -> Self {
        if v.is_infinite() {
            CharLength::Infinite
        } else {
            CharLength::Finite(v)
        }
    }

    fn check_positive(self, name: &str) -> Result<()> {
        match self {
            CharLength::Finite(l) if !(l > 0.0 && l.is_finite()) => Err(Error::InvalidParams(
                format!("{name} must be strictly positive, got {l}"),
            )),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for CharLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharLength::Finite(l) => write!(f, "{l}"),
            CharLength::Infinite => write!(f, "inf"),
        }
    }
}

/// The complete physics input: four characteristic lengths, the pump
/// duration, the crystal length and the optional pump attenuation length.
///
/// `l_nl` is the distance for one e-fold of parametric gain at the pump peak,
/// `l_a` the attenuation length of the fluorescence, `l_ov` the distance over
/// which group-velocity walk-off separates pump and fluorescence by one pump
/// duration, and `l_d` the second-order dispersion length `τ_P²/β₂`. Group
/// velocity mismatch and dispersion enter only through `l_ov` and `l_d`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhysicalParams {
    /// Nonlinear length; the reference length unit.
    pub l_nl: f64,
    /// Attenuation length of the down-converted light.
    pub l_a: CharLength,
    /// Pump-fluorescence group-velocity overlap length.
    pub l_ov: CharLength,
    /// Second-order dispersion length.
    pub l_d: CharLength,
    /// Pump duration; the time unit.
    pub tau_p: f64,
    /// Crystal length to propagate.
    pub l_total: f64,
    /// Pump attenuation length; `None` leaves the pump undamped.
    pub pump_damping: Option<f64>,
}

impl PhysicalParams {
    /// Lossless, dispersion-free parameter set; a convenient starting point
    /// for tests and sweeps.
    pub fn bare(l_nl: f64, l_total: f64) -> Self {
        PhysicalParams {
            l_nl,
            l_a: CharLength::Infinite,
            l_ov: CharLength::Infinite,
            l_d: CharLength::Infinite,
            tau_p: 1.0,
            l_total,
            pump_damping: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.l_nl > 0.0 && self.l_nl.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "l_nl must be strictly positive and finite, got {}",
                self.l_nl
            )));
        }
        if !(self.tau_p > 0.0 && self.tau_p.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "tau_p must be strictly positive and finite, got {}",
                self.tau_p
            )));
        }
        if !(self.l_total >= 0.0 && self.l_total.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "l_total must be non-negative and finite, got {}",
                self.l_total
            )));
        }
        self.l_a.check_positive("l_a")?;
        self.l_ov.check_positive("l_ov")?;
        self.l_d.check_positive("l_d")?;
        if let Some(lap) = self.pump_damping {
            if !(lap > 0.0 && lap.is_finite()) {
                return Err(Error::InvalidParams(format!(
                    "pump_damping must be strictly positive and finite, got {lap}"
                )));
            }
        }
        Ok(())
    }

    /// Rescale so that `l_nl = 1` and `tau_p = 1`: lengths in nonlinear-length
    /// units, times in pump-duration units. All formulas are covariant under
    /// this rescaling; it only fixes the reporting units.
    pub fn normalized(&self) -> PhysicalParams {
        let scale = |l: CharLength| match l {
            CharLength::Finite(v) => CharLength::Finite(v / self.l_nl),
            CharLength::Infinite => CharLength::Infinite,
        };
        PhysicalParams {
            l_nl: 1.0,
            l_a: scale(self.l_a),
            l_ov: scale(self.l_ov),
            l_d: scale(self.l_d),
            tau_p: 1.0,
            l_total: self.l_total / self.l_nl,
            pump_damping: self.pump_damping.map(|l| l / self.l_nl),
        }
    }
}
