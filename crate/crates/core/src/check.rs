//! Invariant suites evaluated over a parameter lattice.
//!
//! Every suite records how many checks passed, the worst residual seen, and
//! the first failing point.

use std::f64::consts::FRAC_PI_4;
use std::fmt;

use rayon::prelude::*;

use crate::chsh::{
    analytic_bmax, exclusivity_check_for, horodecki_max, SettingsSearch, LOCAL_BOUND, OPTIMIZER_TOL,
};
use crate::closed_forms::{coherent_diagonal_sum, reduced_state, with_q_r_phase};
use crate::density::{HERMITIAN_TOL, PSD_TOL, TRACE_TOL};
use crate::error::Result;
use crate::fock::{
    initial_state, reduce, unruh_particle, unruh_vacuum, InitialSign, Observer, ReductionSpec,
    Sector,
};
use crate::grid::{GridPoint, ParamGrid};
use crate::measures::{concurrence, correlation_matrix, negativity};
use crate::params::{accel_to_r, AccelerationSpec, UnruhParams};

const ORACLE_TOL: f64 = 1e-12;
const ALGEBRA_TOL: f64 = 1e-10;
const ENTANGLED: f64 = 1e-9;
const BOUND_TOL: f64 = 1e-12;
/// Lattices larger than this run the brute-force optimizer on a sub-lattice.
pub const OPTIMIZER_LATTICE: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum SuiteId {
    FockNorm,
    FockOrthogonality,
    Physicality,
    OracleEquivalence,
    TraceIdentity,
    PhaseCovariance,
    CorrelationBounds,
    PptEquivalence,
    MeasurePhaseInvariance,
    ConcurrenceClosedForm,
    AnalyticAgreement,
    InfiniteAcceleration,
    AntiparticleBound,
    Exclusivity,
    MonotoneInR,
    OptimizerAgreement,
    AccelerationMap,
}

const SUITES: [(SuiteId, &str); 17] = [
    (SuiteId::FockNorm, "fock.norm"),
    (SuiteId::FockOrthogonality, "fock.orthogonality"),
    (SuiteId::Physicality, "fock.physicality"),
    (
        SuiteId::OracleEquivalence,
        "closed_forms.oracle_equivalence",
    ),
    (SuiteId::TraceIdentity, "closed_forms.trace_identity"),
    (SuiteId::PhaseCovariance, "closed_forms.phase_covariance"),
    (SuiteId::CorrelationBounds, "measures.correlation_bounds"),
    (
        SuiteId::PptEquivalence,
        "measures.concurrence_negativity_equivalence",
    ),
    (SuiteId::MeasurePhaseInvariance, "measures.phase_invariance"),
    (
        SuiteId::ConcurrenceClosedForm,
        "measures.concurrence_closed_form",
    ),
    (SuiteId::AnalyticAgreement, "chsh.analytic_agreement"),
    (
        SuiteId::InfiniteAcceleration,
        "chsh.no_violation_at_infinite_acceleration",
    ),
    (
        SuiteId::AntiparticleBound,
        "chsh.excitation_free_sector_bound",
    ),
    (SuiteId::Exclusivity, "chsh.exclusivity"),
    (SuiteId::MonotoneInR, "chsh.monotone_in_r"),
    (SuiteId::OptimizerAgreement, "chsh.optimizer_agreement"),
    (SuiteId::AccelerationMap, "params.acceleration_map"),
];

/// Outcome of one invariant suite.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    pub worst_residual: f64,
    pub first_failure: Option<String>,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:<45} {:>7}/{:<7} worst residual {:.3e}",
            if self.ok() { "PASS" } else { "FAIL" },
            self.name,
            self.passed,
            self.total,
            self.worst_residual
        )?;
        if let Some(fail) = &self.first_failure {
            write!(f, "\n       first failure: {fail}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub grid: usize,
    pub suites: Vec<SuiteResult>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::ok)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }
}

/// One check outcome: which suite, its residual, and whether it passed.
struct Outcome {
    suite: SuiteId,
    residual: f64,
    ok: bool,
    at: String,
}

#[derive(Default)]
struct Sink(Vec<Outcome>);

impl Sink {
    /// Records `residual ≤ tol`.
    fn within(&mut self, suite: SuiteId, residual: f64, tol: f64, at: impl FnOnce() -> String) {
        let ok = residual <= tol;
        self.push(suite, residual, ok, at);
    }

    fn push(&mut self, suite: SuiteId, residual: f64, ok: bool, at: impl FnOnce() -> String) {
        let at = if ok { String::new() } else { at() };
        self.0.push(Outcome {
            suite,
            residual,
            ok,
            at,
        });
    }
}

fn describe(p: &GridPoint, spec: Option<ReductionSpec>) -> String {
    let mut s = format!("r = {:.15}, α = {:.15}, φ = {:.15}", p.r, p.alpha, p.phase);
    if let Some(spec) = spec {
        s.push_str(&format!(", state {spec}"));
    }
    s
}

fn check_point(p: &GridPoint, run_optimizer: bool) -> Result<Sink> {
    let mut sink = Sink::default();
    let params = &p.params;

    let vacuum = unruh_vacuum(params);
    for sign in [InitialSign::Plus, InitialSign::Minus] {
        let psi = initial_state(params, sign)?;
        sink.within(
            SuiteId::FockNorm,
            (psi.norm_sqr() - 1.0).abs(),
            ORACLE_TOL,
            || describe(p, None),
        );
        let overlap = vacuum
            .inner(&unruh_particle(params, sign.frequency()))
            .norm();
        sink.within(SuiteId::FockOrthogonality, overlap, ORACLE_TOL, || {
            describe(p, None)
        });
    }

    sink.within(
        SuiteId::TraceIdentity,
        (coherent_diagonal_sum(params) - 2.0).abs(),
        ORACLE_TOL,
        || describe(p, None),
    );

    let rotated = with_q_r_phase(params, 0.7);
    let rephased_l = UnruhParams::new(
        params.r(),
        params.q_r(),
        params.q_l() * crate::C64::from_polar(1.0, -1.3),
    )?;

    let search = SettingsSearch::default();
    for spec in ReductionSpec::all() {
        let at = || describe(p, Some(spec));
        let traced = reduce(
            &initial_state(params, spec.initial)?,
            spec.observer,
            spec.sector,
        );
        let closed = reduced_state(params, spec);

        let herm = traced.hermiticity_residual();
        let tr = (traced.trace() - 1.0).abs();
        let min_eig = traced.min_eigenvalue();
        let ok = herm <= HERMITIAN_TOL && tr <= TRACE_TOL && min_eig >= PSD_TOL;
        sink.push(
            SuiteId::Physicality,
            herm.max(tr).max((-min_eig).max(0.0)),
            ok,
            at,
        );

        sink.within(
            SuiteId::OracleEquivalence,
            traced.max_abs_diff(&closed),
            ORACLE_TOL,
            at,
        );

        let ev = closed.eigenvalues();
        let ev_rot = reduced_state(&rotated, spec).eigenvalues();
        let drift = ev
            .iter()
            .zip(ev_rot.iter())
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        sink.within(SuiteId::PhaseCovariance, drift, ORACLE_TOL, at);

        let t = correlation_matrix(&traced)?;
        let entry = t.matrix().abs().max();
        let sv = t.singular_values()[0];
        let ok = entry <= 1.0 + BOUND_TOL && sv <= 1.0 + ALGEBRA_TOL;
        sink.push(
            SuiteId::CorrelationBounds,
            (entry - 1.0).max(sv - 1.0).max(0.0),
            ok,
            at,
        );

        let c = concurrence(&traced)?;
        let n = negativity(&traced);
        let ok = (c > ENTANGLED) == (n > ENTANGLED);
        sink.push(
            SuiteId::PptEquivalence,
            if ok { 0.0 } else { c.max(n) },
            ok,
            at,
        );

        let phased = reduced_state(&with_q_r_phase(&rephased_l, -0.4), spec);
        let dc = (concurrence(&phased)? - c).abs();
        let dn = (negativity(&phased) - n).abs();
        sink.within(SuiteId::MeasurePhaseInvariance, dc.max(dn), ORACLE_TOL, at);

        if spec == ReductionSpec::all()[0] {
            let (s, cr) = params.r().sin_cos();
            let want = cr * (params.q_r().norm() - params.q_l().norm() * s).max(0.0);
            sink.within(
                SuiteId::ConcurrenceClosedForm,
                (c - want).abs(),
                ALGEBRA_TOL,
                at,
            );
        }

        let h = horodecki_max(&traced)?;
        let analytic = analytic_bmax(params, spec);
        sink.within(
            SuiteId::AnalyticAgreement,
            (h - analytic).abs(),
            ALGEBRA_TOL,
            at,
        );

        if spec.initial == InitialSign::Plus && p.r == FRAC_PI_4 {
            sink.within(
                SuiteId::InfiniteAcceleration,
                (h - LOCAL_BOUND).max(0.0),
                BOUND_TOL,
                at,
            );
        }

        // The sector that does not carry the excitation never violates.
        let idle = matches!(
            (spec.initial, spec.sector),
            (InitialSign::Plus, Sector::Antiparticle) | (InitialSign::Minus, Sector::Particle)
        );
        if idle {
            sink.within(
                SuiteId::AntiparticleBound,
                (analytic - LOCAL_BOUND).max(0.0),
                BOUND_TOL,
                at,
            );
        }

        if run_optimizer {
            match search.run(&traced) {
                Ok(rep) => sink.within(
                    SuiteId::OptimizerAgreement,
                    (rep.optimizer_value - rep.horodecki_value).abs(),
                    OPTIMIZER_TOL,
                    at,
                ),
                Err(e) => sink.push(SuiteId::OptimizerAgreement, f64::INFINITY, false, || {
                    format!("{}: {e}", at())
                }),
            }
        }
    }

    for sign in [InitialSign::Plus, InitialSign::Minus] {
        let chk = exclusivity_check_for(params, sign);
        sink.push(
            SuiteId::Exclusivity,
            (chk.lhs - LOCAL_BOUND).max(chk.proof_lhs - 4.0).max(0.0),
            chk.holds && chk.proof_holds,
            || format!("{} ({sign})", describe(p, None)),
        );
    }
    Ok(sink)
}

/// Strict decrease in `r` of the `ψ+` Rob particle-sector Horodecki value
/// along each `(α, φ)` line of the lattice.
fn check_monotone(grid: &ParamGrid, points: &[GridPoint], sink: &mut Sink) -> Result<()> {
    let spec = ReductionSpec::new(InitialSign::Plus, Observer::Rob, Sector::Particle);
    let (nr, na) = (grid.r_points, grid.alpha_points);
    for (ph, _) in grid.phases.iter().enumerate() {
        for ia in 0..na {
            let mut prev: Option<(f64, &GridPoint)> = None;
            for ir in 0..nr {
                let p = &points[ph * nr * na + ir * na + ia];
                if p.params.q_r().norm() < 1e-6 {
                    break;
                }
                let h = horodecki_max(&reduced_state(&p.params, spec))?;
                if let Some((last, _)) = prev {
                    let ok = h < last;
                    sink.push(SuiteId::MonotoneInR, (h - last).max(0.0), ok, || {
                        describe(p, Some(spec))
                    });
                }
                prev = Some((h, p));
            }
        }
    }
    Ok(())
}

fn check_acceleration_map(sink: &mut Sink) -> Result<()> {
    let omega = 1.0;
    let mut last = -1.0;
    for k in -300..=300 {
        let accel = 10f64.powi(k);
        let r = accel_to_r(&AccelerationSpec::new(omega, accel))?;
        let ok = r >= last && (0.0..=FRAC_PI_4).contains(&r);
        sink.push(SuiteId::AccelerationMap, (last - r).max(0.0), ok, || {
            format!("a = 1e{k}, r = {r}")
        });
        last = r;
    }
    let lo = accel_to_r(&AccelerationSpec::new(omega, 1e-300))?;
    let hi = accel_to_r(&AccelerationSpec::new(omega, 1e300))?;
    sink.within(SuiteId::AccelerationMap, lo.abs(), BOUND_TOL, || {
        format!("a → 0: r = {lo}")
    });
    sink.within(
        SuiteId::AccelerationMap,
        (hi - FRAC_PI_4).abs(),
        BOUND_TOL,
        || format!("a → ∞: r = {hi}"),
    );
    Ok(())
}

fn optimizer_stride(n: usize) -> usize {
    if n <= OPTIMIZER_LATTICE {
        1
    } else {
        n.div_ceil(OPTIMIZER_LATTICE)
    }
}

/// Runs every suite on the `grid × grid` lattice with the default phases.
pub fn run_checks(grid: usize) -> Result<CheckReport> {
    let lattice = ParamGrid::square(grid)?;
    let points = lattice.points();
    let stride = optimizer_stride(grid);
    let per_point: Result<Vec<Sink>> = points
        .par_iter()
        .enumerate()
        .map(|(idx, p)| {
            let ir = (idx / grid) % grid;
            let ia = idx % grid;
            let on_sub = (ir.is_multiple_of(stride) || ir == grid - 1)
                && (ia.is_multiple_of(stride) || ia == grid - 1);
            check_point(p, on_sub)
        })
        .collect();

    let mut sink = Sink::default();
    for s in per_point? {
        sink.0.extend(s.0);
    }
    check_monotone(&lattice, &points, &mut sink)?;
    check_acceleration_map(&mut sink)?;

    let suites = SUITES
        .iter()
        .map(|&(id, name)| {
            let mut res = SuiteResult {
                name,
                passed: 0,
                total: 0,
                worst_residual: 0.0,
                first_failure: None,
            };
            for o in sink.0.iter().filter(|o| o.suite == id) {
                res.total += 1;
                if o.ok {
                    res.passed += 1;
                } else if res.first_failure.is_none() {
                    res.first_failure = Some(o.at.clone());
                }
                if o.residual > res.worst_residual || o.residual.is_nan() {
                    res.worst_residual = o.residual;
                }
            }
            res
        })
        .collect();
    Ok(CheckReport { grid, suites })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corner_lattice_passes() {
        let report = run_checks(2).unwrap();
        for s in &report.suites {
            assert!(s.ok(), "{s}");
            assert!(s.total > 0, "{} ran no checks", s.name);
        }
    }

    #[test]
    fn degenerate_lattice_is_rejected() {
        assert!(run_checks(1).is_err());
    }

    #[test]
    fn optimizer_sublattice_stride() {
        assert_eq!(optimizer_stride(5), 1);
        assert_eq!(optimizer_stride(10), 1);
        assert_eq!(optimizer_stride(50), 5);
    }
}
