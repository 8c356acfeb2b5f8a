//! Parameter lattices over `(r, α, φ)` with `q_r = cos α`, `q_l = sin α·e^{iφ}`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

use crate::error::{Error, Result};
use crate::params::UnruhParams;

/// The default `q_l` phases: `0, π/3, π/2`.
pub const DEFAULT_PHASES: [f64; 3] = [0.0, FRAC_PI_3, FRAC_PI_2];

/// `points` uniformly spaced values on `[lo, hi]`, both ends included exactly.
pub fn linspace(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![lo],
        n => (0..n)
            .map(|i| {
                if i == n - 1 {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

/// `r` values on `[0, π/4]` inclusive.
pub fn r_axis(points: usize) -> Vec<f64> {
    linspace(0.0, FRAC_PI_4, points)
}

/// One lattice point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub r: f64,
    pub alpha: f64,
    pub phase: f64,
    pub params: UnruhParams,
}

/// A rectangular `(r, α)` lattice repeated for each phase.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamGrid {
    pub r_points: usize,
    pub alpha_points: usize,
    pub phases: Vec<f64>,
}

impl ParamGrid {
    /// `n × n` lattice with the three default phases.
    pub fn square(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Parameter(format!(
                "grid size {n} must be at least 2"
            )));
        }
        Ok(Self {
            r_points: n,
            alpha_points: n,
            phases: DEFAULT_PHASES.to_vec(),
        })
    }

    pub fn len(&self) -> usize {
        self.r_points * self.alpha_points * self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Points ordered by phase, then `r`, then `α`.
    pub fn points(&self) -> Vec<GridPoint> {
        let rs = r_axis(self.r_points);
        let alphas = linspace(0.0, FRAC_PI_2, self.alpha_points);
        let mut out = Vec::with_capacity(self.len());
        for &phase in &self.phases {
            for &r in &rs {
                for &alpha in &alphas {
                    let params = UnruhParams::from_angle(r, alpha, phase)
                        .expect("lattice points lie in the parameter domain");
                    out.push(GridPoint {
                        r,
                        alpha,
                        phase,
                        params,
                    });
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linspace_hits_both_ends() {
        let v = r_axis(7);
        assert_eq!(v[0], 0.0);
        assert_eq!(v[6], FRAC_PI_4);
        assert_eq!(linspace(1.0, 2.0, 1), vec![1.0]);
    }

    #[test]
    fn square_grid_rejects_degenerate_sizes() {
        assert!(ParamGrid::square(1).is_err());
        assert!(ParamGrid::square(0).is_err());
        let g = ParamGrid::square(2).unwrap();
        assert_eq!(g.points().len(), 12);
    }
}
