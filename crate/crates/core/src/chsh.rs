//! Maximal CHSH violation.
//!
//! Three independent routes are provided:
//!
//! * [`horodecki_max`]: `2√(μ₁ + μ₂)` from the two largest eigenvalues of `TᵀT`.
//! * [`optimize_settings`]: a direct search over measurement directions,
//!   scored by the full operator expectation `Tr[ρ B]`.
//! * [`analytic_bmax`]: closed forms for the eight Unruh reduced states.

use std::f64::consts::{PI, SQRT_2};

use nalgebra::{Matrix3, Matrix4, Vector3};

use crate::density::{kron, pauli_dot, TwoQubitDensity};
use crate::error::{Error, Result};
use crate::fock::{InitialSign, Observer, ReductionSpec, Sector};
use crate::measures::{correlation_matrix, CorrelationMatrix};
use crate::params::UnruhParams;
use crate::C64;

/// Classical (local-realistic) bound on `|⟨B⟩|`.
pub const LOCAL_BOUND: f64 = 2.0;
/// Quantum maximum `2√2`.
pub const TSIRELSON_BOUND: f64 = 2.0 * SQRT_2;

pub const UNIT_TOL: f64 = 1e-12;
/// Allowed shortfall of the search below the Horodecki value.
pub const OPTIMIZER_TOL: f64 = 1e-3;
/// Allowed excess of the search above the Horodecki value.
pub const OPTIMIZER_OVERSHOOT_TOL: f64 = 1e-6;

/// Tolerance on the exclusivity bound.
pub const EXCLUSIVITY_TOL: f64 = 1e-12;

/// Four unit measurement directions `a, a′` (Alice) and `b, b′` (the other party).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementSettings {
    pub a: Vector3<f64>,
    pub a_prime: Vector3<f64>,
    pub b: Vector3<f64>,
    pub b_prime: Vector3<f64>,
}

impl MeasurementSettings {
    pub fn new(
        a: Vector3<f64>,
        a_prime: Vector3<f64>,
        b: Vector3<f64>,
        b_prime: Vector3<f64>,
    ) -> Result<Self> {
        for (name, v) in [("a", a), ("a'", a_prime), ("b", b), ("b'", b_prime)] {
            let n = v.norm();
            if !((n - 1.0).abs() <= UNIT_TOL) {
                return Err(Error::Settings(format!("|{name}| = {n}, expected 1")));
            }
        }
        Ok(Self {
            a,
            a_prime,
            b,
            b_prime,
        })
    }

    /// The textbook optimum for `(|00⟩ + |11⟩)/√2`.
    pub fn bell_optimal() -> Self {
        let x = Vector3::x();
        let z = Vector3::z();
        Self {
            a: x,
            a_prime: z,
            b: (x + z) / SQRT_2,
            b_prime: (x - z) / SQRT_2,
        }
    }

    /// `a·σ ⊗ (b + b′)·σ + a′·σ ⊗ (b − b′)·σ`.
    pub fn operator(&self) -> Matrix4<C64> {
        kron(&pauli_dot(&self.a), &pauli_dot(&(self.b + self.b_prime)))
            + kron(
                &pauli_dot(&self.a_prime),
                &pauli_dot(&(self.b - self.b_prime)),
            )
    }
}

/// `Tr[ρ B_CHSH]` from the full 4×4 operator.
pub fn chsh_value(rho: &TwoQubitDensity, settings: &MeasurementSettings) -> f64 {
    rho.expectation(&settings.operator()).re
}

/// `aᵀT(b + b′) + a′ᵀT(b − b′)`, equal to [`chsh_value`] for any state.
pub fn chsh_value_from_correlations(t: &CorrelationMatrix, s: &MeasurementSettings) -> f64 {
    let t = t.matrix();
    s.a.dot(&(t * (s.b + s.b_prime))) + s.a_prime.dot(&(t * (s.b - s.b_prime)))
}

/// `2√(μ₁ + μ₂)` for the correlation matrix of a state.
pub fn horodecki_from_correlations(t: &CorrelationMatrix) -> f64 {
    let mu = t.gram_eigenvalues();
    2.0 * (mu[0] + mu[1]).max(0.0).sqrt()
}

/// Maximal CHSH expectation over all measurement settings.
pub fn horodecki_max(rho: &TwoQubitDensity) -> Result<f64> {
    Ok(horodecki_from_correlations(&correlation_matrix(rho)?))
}

/// Result of the brute-force CHSH search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChshReport {
    pub horodecki_value: f64,
    pub analytic_value: Option<f64>,
    pub optimizer_value: f64,
    pub optimal_settings: MeasurementSettings,
}

impl ChshReport {
    pub fn violates_local_bound(&self) -> bool {
        violates_local_bound(self.horodecki_value)
    }
}

/// Slack above [`LOCAL_BOUND`] absorbed as rounding when deciding violation.
pub const VIOLATION_TOL: f64 = 1e-12;

/// Whether a maximal CHSH value exceeds the local-realistic bound.
pub fn violates_local_bound(value: f64) -> bool {
    value > LOCAL_BOUND + VIOLATION_TOL
}

/// Grid-then-refine search over Alice's two directions.
///
/// For fixed `a, a′` the best `b, b′` are the normalized `Tᵀ(a ± a′)`, giving
/// `|Tᵀ(a + a′)| + |Tᵀ(a − a′)|`; only the four polar angles of `a, a′` are
/// searched.
#[derive(Debug, Clone, Copy)]
pub struct SettingsSearch {
    /// Grid subdivisions per angle.
    pub subdivisions: usize,
    /// Number of best grid points refined locally.
    pub candidates: usize,
    /// Refinement stops when the coordinate bracket half-width drops below this.
    pub min_step: f64,
    pub max_sweeps: usize,
}

impl Default for SettingsSearch {
    fn default() -> Self {
        Self {
            subdivisions: 12,
            candidates: 4,
            min_step: 1e-9,
            max_sweeps: 64,
        }
    }
}

fn direction(theta: f64, phi: f64) -> Vector3<f64> {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    Vector3::new(st * cp, st * sp, ct)
}

struct Objective {
    tt: Matrix3<f64>,
}

impl Objective {
    fn pair(&self, u: &Vector3<f64>, v: &Vector3<f64>) -> f64 {
        (u + v).norm() + (u - v).norm()
    }

    fn eval(&self, x: &[f64; 4]) -> f64 {
        let u = self.tt * direction(x[0], x[1]);
        let v = self.tt * direction(x[2], x[3]);
        self.pair(&u, &v)
    }
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section maximization of `f` on `[lo, hi]`.
fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

impl SettingsSearch {
    fn grid_candidates(&self, obj: &Objective) -> Vec<(f64, [f64; 4])> {
        let n = self.subdivisions.max(1);
        let mut dirs = Vec::with_capacity((n + 1) * n);
        for i in 0..=n {
            let theta = PI * i as f64 / n as f64;
            for j in 0..n {
                let phi = 2.0 * PI * j as f64 / n as f64;
                dirs.push((theta, phi, obj.tt * direction(theta, phi)));
            }
        }
        let mut scored = Vec::with_capacity(dirs.len() * (dirs.len() + 1) / 2);
        for (i, (t1, p1, u)) in dirs.iter().enumerate() {
            for (t2, p2, v) in &dirs[i..] {
                scored.push((obj.pair(u, v), [*t1, *p1, *t2, *p2]));
            }
        }
        let k = self.candidates.clamp(1, scored.len());
        scored.select_nth_unstable_by(k - 1, |a, b| b.0.total_cmp(&a.0));
        scored.truncate(k);
        scored.sort_by(|a, b| b.0.total_cmp(&a.0));
        scored
    }

    fn refine(&self, obj: &Objective, mut x: [f64; 4], mut best: f64) -> (f64, [f64; 4]) {
        let mut step = PI / self.subdivisions.max(1) as f64;
        for _ in 0..self.max_sweeps {
            if step < self.min_step {
                break;
            }
            for k in 0..4 {
                let probe = |t: f64| {
                    let mut y = x;
                    y[k] = t;
                    obj.eval(&y)
                };
                let (t, v) = golden_max(probe, x[k] - step, x[k] + step, step * 1e-3);
                if v > best {
                    best = v;
                    x[k] = t;
                }
            }
            step *= 0.5;
        }
        (best, x)
    }

    /// Searches for the settings maximizing `Tr[ρ B]` and compares the result
    /// with the Horodecki value.
    pub fn run(&self, rho: &TwoQubitDensity) -> Result<ChshReport> {
        let t = correlation_matrix(rho)?;
        let horodecki = horodecki_from_correlations(&t);
        let obj = Objective {
            tt: t.matrix().transpose(),
        };

        let (_, x) = self
            .grid_candidates(&obj)
            .into_iter()
            .map(|(v, x)| self.refine(&obj, x, v))
            .max_by(|a, b| a.0.total_cmp(&b.0))
            .expect("at least one candidate");

        let a = direction(x[0], x[1]);
        let a_prime = direction(x[2], x[3]);
        let unit_or_x = |v: Vector3<f64>| {
            let n = v.norm();
            if n > 1e-14 {
                v / n
            } else {
                Vector3::x()
            }
        };
        let settings = MeasurementSettings::new(
            a,
            a_prime,
            unit_or_x(obj.tt * (a + a_prime)),
            unit_or_x(obj.tt * (a - a_prime)),
        )?;
        let value = chsh_value(rho, &settings);

        if value < horodecki - OPTIMIZER_TOL || value > horodecki + OPTIMIZER_OVERSHOOT_TOL {
            return Err(Error::Convergence {
                found: value,
                expected: horodecki,
                tolerance: OPTIMIZER_TOL,
            });
        }
        Ok(ChshReport {
            horodecki_value: horodecki,
            analytic_value: None,
            optimizer_value: value,
            optimal_settings: settings,
        })
    }
}

/// [`SettingsSearch::run`] with default resolution.
pub fn optimize_settings(rho: &TwoQubitDensity) -> Result<ChshReport> {
    SettingsSearch::default().run(rho)
}

/// Closed-form maximal CHSH value of an Unruh reduced state.
///
/// For `ψ+`: Rob sees `2√2|q_r|cos r` (particles) and `2√2|q_l|sin r`
/// (antiparticles); AntiRob the same with `|q_r| ↔ |q_l|`. For `ψ−` the two
/// sectors trade places.
pub fn analytic_bmax(params: &UnruhParams, spec: ReductionSpec) -> f64 {
    let sector = match spec.initial {
        InitialSign::Plus => spec.sector,
        InitialSign::Minus => match spec.sector {
            Sector::Particle => Sector::Antiparticle,
            Sector::Antiparticle => Sector::Particle,
        },
    };
    let (near, far) = match spec.observer {
        Observer::Rob => (params.q_r().norm(), params.q_l().norm()),
        Observer::AntiRob => (params.q_l().norm(), params.q_r().norm()),
    };
    let (s, c) = params.r().sin_cos();
    match sector {
        Sector::Particle => TSIRELSON_BOUND * near * c,
        Sector::Antiparticle => TSIRELSON_BOUND * far * s,
    }
}

/// Rob and AntiRob can never both violate CHSH in the sector that carries the
/// excitation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExclusivityCheck {
    /// `(B_Rob + B_AntiRob)/2`.
    pub lhs: f64,
    pub holds: bool,
    /// `α` with `|q_r| = cos α`, `|q_l| = sin α`.
    pub alpha: f64,
    /// `2(1 + sin 2α)`, bounded by 4.
    pub proof_lhs: f64,
    pub proof_holds: bool,
}

/// The exclusivity bound for `ψ+` (particle sector).
pub fn exclusivity_check(params: &UnruhParams) -> ExclusivityCheck {
    exclusivity_check_for(params, InitialSign::Plus)
}

/// The exclusivity bound for either initial state: particle sector for `ψ+`,
/// antiparticle sector for `ψ−` (the latter follows by the sector exchange).
pub fn exclusivity_check_for(params: &UnruhParams, initial: InitialSign) -> ExclusivityCheck {
    let sector = match initial {
        InitialSign::Plus => Sector::Particle,
        InitialSign::Minus => Sector::Antiparticle,
    };
    let rob = analytic_bmax(params, ReductionSpec::new(initial, Observer::Rob, sector));
    let anti = analytic_bmax(
        params,
        ReductionSpec::new(initial, Observer::AntiRob, sector),
    );
    let lhs = 0.5 * (rob + anti);
    let alpha = params.q_l().norm().atan2(params.q_r().norm());
    let proof_lhs = 2.0 * (1.0 + (2.0 * alpha).sin());
    ExclusivityCheck {
        lhs,
        holds: lhs <= LOCAL_BOUND + EXCLUSIVITY_TOL,
        alpha,
        proof_lhs,
        proof_holds: proof_lhs <= 4.0 + EXCLUSIVITY_TOL,
    }
}
