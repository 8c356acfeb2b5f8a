//! Physical parameter points: the squeezing angle `r`, the Unruh-mode weights
//! `(q_r, q_l)`, and the map from proper acceleration to `r`.

use std::f64::consts::{FRAC_PI_4, PI};

use crate::error::{Error, Result};
use crate::C64;

/// Tolerance on `|q_r|² + |q_l|² = 1`.
pub const WEIGHT_NORM_TOL: f64 = 1e-12;

/// Slack allowed above `π/4` so that grids ending at `π/4` are accepted.
const R_SLACK: f64 = 1e-12;

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// A validated point in parameter space.
///
/// `r ∈ [0, π/4]` is the squeezing angle (`π/4` being the infinite
/// acceleration limit) and `q_r`, `q_l` are the complex weights of the right
/// and left Unruh modes, normalized so that `|q_r|² + |q_l|² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnruhParams {
    r: f64,
    q_r: C64,
    q_l: C64,
}

impl UnruhParams {
    pub fn new(r: f64, q_r: C64, q_l: C64) -> Result<Self> {
        if !(0.0..=FRAC_PI_4 + R_SLACK).contains(&r) {
            return Err(Error::Parameter(format!("r = {r} not in [0, π/4]")));
        }
        if !(q_r.re.is_finite() && q_r.im.is_finite() && q_l.re.is_finite() && q_l.im.is_finite()) {
            return Err(Error::Parameter("non-finite Unruh weight".into()));
        }
        let norm = q_r.norm_sqr() + q_l.norm_sqr();
        if (norm - 1.0).abs() > WEIGHT_NORM_TOL {
            return Err(Error::Parameter(format!(
                "|q_r|² + |q_l|² = {norm}, expected 1"
            )));
        }
        Ok(Self { r, q_r, q_l })
    }

    /// Real, non-negative `q_r = |q_r|` with `q_l = √(1 − |q_r|²)·e^{i·phase}`.
    pub fn from_abs(r: f64, q_r_abs: f64, ql_phase: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&q_r_abs) {
            return Err(Error::Parameter(format!("|q_r| = {q_r_abs} not in [0, 1]")));
        }
        let q_l_abs = (1.0 - q_r_abs * q_r_abs).max(0.0).sqrt();
        Self::new(
            r,
            C64::new(q_r_abs, 0.0),
            C64::from_polar(q_l_abs, ql_phase),
        )
    }

    /// The `|q_r| = cos α`, `|q_l| = sin α` parameterization used by the grids.
    pub fn from_angle(r: f64, alpha: f64, ql_phase: f64) -> Result<Self> {
        Self::new(
            r,
            C64::new(alpha.cos(), 0.0),
            C64::from_polar(alpha.sin(), ql_phase),
        )
    }

    /// The single-mode approximation `q_r = 1, q_l = 0`.
    pub fn single_mode(r: f64) -> Result<Self> {
        Self::new(r, C64::new(1.0, 0.0), C64::new(0.0, 0.0))
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn q_r(&self) -> C64 {
        self.q_r
    }

    pub fn q_l(&self) -> C64 {
        self.q_l
    }

    /// Same point with the weights replaced; used by the closed-form
    /// substitution rules, which may swap or negate them.
    pub(crate) fn with_weights(&self, q_r: C64, q_l: C64) -> Self {
        Self {
            r: self.r,
            q_r,
            q_l,
        }
    }
}

/// Physical inputs of the acceleration → squeezing map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccelerationSpec {
    /// Rindler mode frequency Ω, rad/s.
    pub omega: f64,
    /// Proper acceleration a, m/s².
    pub accel: f64,
    /// Speed of light, m/s.
    pub c: f64,
}

impl AccelerationSpec {
    pub fn new(omega: f64, accel: f64) -> Self {
        Self {
            omega,
            accel,
            c: SPEED_OF_LIGHT,
        }
    }

    pub fn with_c(mut self, c: f64) -> Self {
        self.c = c;
        self
    }

    fn validate(&self) -> Result<()> {
        for (name, v) in [("omega", self.omega), ("accel", self.accel), ("c", self.c)] {
            if !(v > 0.0) {
                return Err(Error::Parameter(format!("{name} = {v} must be positive")));
            }
        }
        Ok(())
    }
}

/// Squeezing angle `r = arctan(exp(−π c Ω / a))`.
///
/// Monotonically increasing in the acceleration, tends to `0` as `a → 0⁺`
/// and to `π/4` as `a → ∞`.
pub fn accel_to_r(spec: &AccelerationSpec) -> Result<f64> {
    spec.validate()?;
    let exponent = PI * spec.c * spec.omega / spec.accel;
    Ok((-exponent).exp().atan())
}
