use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2, TAU};

use nalgebra::{Matrix2, Matrix4, Vector3, Vector4};
use proptest::prelude::*;

use fermion_chsh::chsh::{chsh_value_from_correlations, TSIRELSON_BOUND};
use fermion_chsh::closed_forms::with_q_r_phase;
use fermion_chsh::density::{pauli_dot, HERMITIAN_TOL, PSD_TOL, TRACE_TOL};
use fermion_chsh::measures::{spin_flipped, wootters_roots};
use fermion_chsh::sweep::format_sig;
use fermion_chsh::{
    chsh_value, concurrence, correlation_matrix, horodecki_max, initial_state, negativity, reduce,
    reduced_state, InitialSign, MeasurementSettings, Observer, ReductionSpec, Sector,
    TwoQubitDensity, UnruhParams, C64,
};

fn params() -> impl Strategy<Value = UnruhParams> {
    (0.0..=FRAC_PI_4, 0.0..=FRAC_PI_2, 0.0..TAU, 0.0..TAU).prop_map(|(r, alpha, tr, tl)| {
        let q_r = C64::from_polar(alpha.cos(), tr);
        let q_l = C64::from_polar(alpha.sin(), tl);
        UnruhParams::new(r, q_r, q_l).unwrap()
    })
}

fn spec() -> impl Strategy<Value = ReductionSpec> {
    (0..8usize).prop_map(|k| ReductionSpec::all()[k])
}

fn unit() -> impl Strategy<Value = Vector3<f64>> {
    (-1.0..=1.0f64, 0.0..TAU).prop_map(|(z, phi)| {
        let s = (1.0 - z * z).sqrt();
        Vector3::new(s * phi.cos(), s * phi.sin(), z)
    })
}

/// A random SU(2) element `exp(−iθ n·σ/2)`.
fn su2() -> impl Strategy<Value = Matrix2<C64>> {
    (unit(), 0.0..TAU).prop_map(|(n, theta)| {
        let (s, c) = (0.5 * theta).sin_cos();
        Matrix2::identity() * C64::new(c, 0.0) - pauli_dot(&n) * C64::new(0.0, s)
    })
}

/// A mixture of up to four random pure states.
fn density() -> impl Strategy<Value = TwoQubitDensity> {
    let vector = proptest::array::uniform8(-1.0..=1.0f64);
    (proptest::collection::vec((vector, 0.01..1.0f64), 1..=4)).prop_filter_map(
        "degenerate vector",
        |terms| {
            let mut m = Matrix4::<C64>::zeros();
            let mut total = 0.0;
            for (v, w) in terms {
                let psi = Vector4::from_fn(|i, _| C64::new(v[2 * i], v[2 * i + 1]));
                let n = psi.norm();
                if n < 1e-3 {
                    return None;
                }
                let psi = psi / C64::new(n, 0.0);
                m += psi * psi.adjoint() * C64::new(w, 0.0);
                total += w;
            }
            m /= C64::new(total, 0.0);
            // Rounding in the mixture leaves a residue far below tolerance.
            m = (m + m.adjoint()) * C64::new(0.5, 0.0);
            TwoQubitDensity::new(m).ok()
        },
    )
}

fn traced(p: &UnruhParams, s: ReductionSpec) -> TwoQubitDensity {
    reduce(&initial_state(p, s.initial).unwrap(), s.observer, s.sector)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn initial_states_are_normalized(p in params()) {
        for sign in [InitialSign::Plus, InitialSign::Minus] {
            prop_assert!((initial_state(&p, sign).unwrap().norm_sqr() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn reduced_states_are_physical(p in params(), s in spec()) {
        let rho = traced(&p, s);
        prop_assert!(rho.hermiticity_residual() <= HERMITIAN_TOL);
        prop_assert!((rho.trace() - 1.0).abs() <= TRACE_TOL);
        prop_assert!(rho.min_eigenvalue() >= PSD_TOL);
    }

    #[test]
    fn partial_trace_matches_closed_form(p in params(), s in spec()) {
        prop_assert!(traced(&p, s).max_abs_diff(&reduced_state(&p, s)) <= 1e-12);
    }

    /// A common phase on `q_r` and `q_l` is a phase gate on Alice's qubit.
    #[test]
    fn common_weight_phase_is_alice_phase_gate(p in params(), s in spec(), theta in 0.0..TAU) {
        let common = UnruhParams::new(
            p.r(),
            p.q_r() * C64::from_polar(1.0, theta),
            p.q_l() * C64::from_polar(1.0, theta),
        ).unwrap();
        let gate = Matrix2::new(
            C64::new(1.0, 0.0), C64::new(0.0, 0.0),
            C64::new(0.0, 0.0), C64::from_polar(1.0, theta),
        );
        let want = reduced_state(&p, s).rotate_local(&gate, &Matrix2::identity()).unwrap();
        prop_assert!(reduced_state(&common, s).max_abs_diff(&want) <= 1e-12);
    }

    #[test]
    fn measures_ignore_weight_phases(p in params(), s in spec(), theta in 0.0..TAU) {
        let a = reduced_state(&p, s);
        let b = reduced_state(&with_q_r_phase(&p, theta), s);
        prop_assert!((concurrence(&a).unwrap() - concurrence(&b).unwrap()).abs() <= 1e-12);
        prop_assert!((negativity(&a) - negativity(&b)).abs() <= 1e-12);
        prop_assert!((horodecki_max(&a).unwrap() - horodecki_max(&b).unwrap()).abs() <= 1e-12);
    }

    #[test]
    fn horodecki_is_local_unitary_invariant(rho in density(), u in su2(), v in su2()) {
        let rotated = rho.rotate_local(&u, &v).unwrap();
        let (h, hr) = (horodecki_max(&rho).unwrap(), horodecki_max(&rotated).unwrap());
        prop_assert!((h - hr).abs() <= 1e-10, "{h} vs {hr}");
        let (c, cr) = (concurrence(&rho).unwrap(), concurrence(&rotated).unwrap());
        prop_assert!((c - cr).abs() <= 1e-8, "{c} vs {cr}");
    }

    #[test]
    fn measures_stay_in_range(rho in density()) {
        let h = horodecki_max(&rho).unwrap();
        let c = concurrence(&rho).unwrap();
        let n = negativity(&rho);
        prop_assert!((0.0..=TSIRELSON_BOUND + 1e-12).contains(&h));
        prop_assert!((0.0..=1.0 + 1e-12).contains(&c));
        prop_assert!((0.0..=0.5 + 1e-12).contains(&n));
        // Two-qubit PPT criterion: entangled exactly when the partial transpose is not PSD.
        prop_assert!(!(c > 1e-8 && n <= 1e-12) && !(n > 1e-8 && c <= 1e-12), "C = {c}, N = {n}");
    }

    /// The singular-value route agrees with a general eigensolver on `ρρ̃`.
    #[test]
    fn wootters_roots_match_general_eigensolver(rho in density()) {
        let product = rho.matrix() * spin_flipped(&rho);
        let eig = product.schur().eigenvalues().expect("4×4 Schur converges");
        let mut lambdas: Vec<f64> = eig.iter().map(|z| z.re).collect();
        lambdas.sort_by(|a, b| b.total_cmp(a));
        for (root, lambda) in wootters_roots(&rho).unwrap().iter().zip(&lambdas) {
            prop_assert!((root * root - lambda).abs() <= 1e-10, "{root}² vs {lambda}");
        }
    }

    #[test]
    fn chsh_operator_matches_correlation_form(
        rho in density(), a in unit(), ap in unit(), b in unit(), bp in unit()
    ) {
        let s = MeasurementSettings::new(a, ap, b, bp).unwrap();
        let t = correlation_matrix(&rho).unwrap();
        let direct = chsh_value(&rho, &s);
        prop_assert!((direct - chsh_value_from_correlations(&t, &s)).abs() <= 1e-12);
        prop_assert!(direct.abs() <= horodecki_max(&rho).unwrap() + 1e-12);
    }

    #[test]
    fn rob_particle_chsh_strictly_decreases_in_r(
        alpha in 0.0..1.5f64, r1 in 0.0..=FRAC_PI_4, r2 in 0.0..=FRAC_PI_4
    ) {
        prop_assume!((r1 - r2).abs() > 1e-6);
        let (lo, hi) = if r1 < r2 { (r1, r2) } else { (r2, r1) };
        let spec = ReductionSpec::all()[0];
        let at = |r| horodecki_max(&traced(&UnruhParams::from_angle(r, alpha, 0.3).unwrap(), spec)).unwrap();
        prop_assert!(at(lo) > at(hi));
    }

    #[test]
    fn excitation_free_sector_never_violates(p in params(), observer in prop_oneof![Just(Observer::Rob), Just(Observer::AntiRob)]) {
        let plus = ReductionSpec::new(InitialSign::Plus, observer, Sector::Antiparticle);
        let minus = ReductionSpec::new(InitialSign::Minus, observer, Sector::Particle);
        for s in [plus, minus] {
            prop_assert!(horodecki_max(&traced(&p, s)).unwrap() <= 2.0 + 1e-12);
        }
    }

    #[test]
    fn csv_numbers_round_trip(x in prop_oneof![-1e3..1e3f64, -1e-7..1e-7f64, Just(2.0 * SQRT_2)]) {
        let back: f64 = format_sig(x).parse().unwrap();
        prop_assert!((back - x).abs() <= 5e-12 * x.abs().max(f64::MIN_POSITIVE));
    }
}
