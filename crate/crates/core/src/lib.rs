//! Entanglement versus CHSH nonlocality for fermionic Unruh modes.
//!
//! An inertial observer (Alice) shares `(|0⟩|0⟩_U + |1⟩|1⟩_U)/√2` with an
//! Unruh mode. A uniformly accelerated observer (Rob in wedge I, AntiRob in
//! wedge II) sees only part of that mode; tracing out the rest leaves a
//! two-qubit state whose concurrence, negativity and maximal CHSH value this
//! crate computes.
//!
//! * [`fock`]: Rindler occupation-number states and partial traces.
//! * [`closed_forms`]: the same reduced states written down directly.
//! * [`measures`]: correlation matrix, concurrence, negativity.
//! * [`chsh`]: Horodecki criterion, brute-force settings search, closed forms.
//! * [`sweep`], [`svg`], [`check`]: parameter sweeps, plots and invariant suites.

// Negated comparisons make NaN fail tolerance checks.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod check;
pub mod chsh;
pub mod closed_forms;
pub mod density;
pub mod error;
pub mod fock;
pub mod grid;
pub mod measures;
pub mod params;
pub mod svg;
pub mod sweep;

pub use nalgebra::Complex;

/// Complex amplitude type used throughout.
pub type C64 = Complex<f64>;

pub use chsh::{
    analytic_bmax, chsh_value, exclusivity_check, horodecki_max, optimize_settings, ChshReport,
    ExclusivityCheck, MeasurementSettings,
};
pub use closed_forms::reduced_state;
pub use density::TwoQubitDensity;
pub use error::{Error, Result};
pub use fock::{
    initial_state, reduce, unruh_particle, unruh_vacuum, Frequency, InitialSign, JointState,
    ModeState, Observer, ReductionSpec, Sector,
};
pub use measures::{concurrence, correlation_matrix, negativity, CorrelationMatrix};
pub use params::{accel_to_r, AccelerationSpec, UnruhParams};
