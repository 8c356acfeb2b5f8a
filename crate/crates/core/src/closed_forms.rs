//! The eight reduced states written down directly, without forming the
//! joint state. Serves as an independent check on [`crate::fock::reduce`].
//!
//! Every reduced state is one of two X-shaped templates evaluated with the
//! Unruh weights substituted into its two slots:
//!
//! * `Coherent` (Rob, particle sector of `ψ+`):
//!   `diag(c², s², |y|²c², |x|² + |y|²s²)/2` with `ρ₁₄ = x̄ c/2`.
//! * `Flipped` (Rob, antiparticle sector of `ψ+`):
//!   `diag(c², s², |y|² + |x|²c², |x|²s²)/2` with `ρ₂₃ = −ȳ s/2`.
//!
//! where `c = cos r`, `s = sin r` and `(x, y)` is the slot assignment.

use nalgebra::Matrix4;

use crate::density::TwoQubitDensity;
use crate::fock::{InitialSign, Observer, ReductionSpec, Sector};
use crate::params::UnruhParams;
use crate::C64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Template {
    Coherent,
    Flipped,
}

/// What goes into a template slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    QR,
    QL,
    NegQR,
    NegQL,
}

impl Slot {
    fn eval(self, params: &UnruhParams) -> C64 {
        match self {
            Slot::QR => params.q_r(),
            Slot::QL => params.q_l(),
            Slot::NegQR => -params.q_r(),
            Slot::NegQL => -params.q_l(),
        }
    }
}

/// Template and `(x, y)` slot assignment for each reduced state.
///
/// AntiRob swaps the roles of the two weights; `ψ−` exchanges the sectors and
/// flips the sign of the second slot of the flipped template.
pub fn substitution(spec: ReductionSpec) -> (Template, Slot, Slot) {
    use InitialSign::*;
    use Observer::*;
    use Sector::*;
    match (spec.initial, spec.observer, spec.sector) {
        (Plus, Rob, Particle) => (Template::Coherent, Slot::QR, Slot::QL),
        (Plus, AntiRob, Particle) => (Template::Coherent, Slot::QL, Slot::QR),
        (Plus, Rob, Antiparticle) => (Template::Flipped, Slot::QR, Slot::QL),
        (Plus, AntiRob, Antiparticle) => (Template::Flipped, Slot::QL, Slot::NegQR),
        (Minus, Rob, Particle) => (Template::Flipped, Slot::QR, Slot::NegQL),
        (Minus, AntiRob, Particle) => (Template::Flipped, Slot::QL, Slot::QR),
        (Minus, Rob, Antiparticle) => (Template::Coherent, Slot::QR, Slot::QL),
        (Minus, AntiRob, Antiparticle) => (Template::Coherent, Slot::QL, Slot::QR),
    }
}

fn template_matrix(template: Template, r: f64, x: C64, y: C64) -> Matrix4<C64> {
    let (s, c) = r.sin_cos();
    let (x2, y2) = (x.norm_sqr(), y.norm_sqr());
    let re = |v: f64| C64::new(0.5 * v, 0.0);
    let mut m = Matrix4::<C64>::zeros();
    m[(0, 0)] = re(c * c);
    m[(1, 1)] = re(s * s);
    match template {
        Template::Coherent => {
            m[(2, 2)] = re(y2 * c * c);
            m[(3, 3)] = re(x2 + y2 * s * s);
            m[(0, 3)] = x.conj() * (0.5 * c);
            m[(3, 0)] = x * (0.5 * c);
        }
        Template::Flipped => {
            m[(2, 2)] = re(y2 + x2 * c * c);
            m[(3, 3)] = re(x2 * s * s);
            m[(1, 2)] = -y.conj() * (0.5 * s);
            m[(2, 1)] = -y * (0.5 * s);
        }
    }
    m
}

/// Closed-form reduced density matrix for `spec` at `params`.
pub fn reduced_state(params: &UnruhParams, spec: ReductionSpec) -> TwoQubitDensity {
    let (template, sx, sy) = substitution(spec);
    let m = template_matrix(template, params.r(), sx.eval(params), sy.eval(params));
    TwoQubitDensity::from_trusted(m)
}

/// Sum of the diagonal of the particle-sector template before halving,
/// `cos²r + sin²r + |q_l|²cos²r + |q_r|² + |q_l|²sin²r`, which equals 2.
pub fn coherent_diagonal_sum(params: &UnruhParams) -> f64 {
    let (s, c) = params.r().sin_cos();
    let (qr2, ql2) = (params.q_r().norm_sqr(), params.q_l().norm_sqr());
    c * c + s * s + ql2 * c * c + qr2 + ql2 * s * s
}

/// The same point with `q_r` multiplied by the unit phase `e^{iθ}`.
pub fn with_q_r_phase(params: &UnruhParams, theta: f64) -> UnruhParams {
    params.with_weights(params.q_r() * C64::from_polar(1.0, theta), params.q_l())
}
