// Concurrence, negativity and the correlation matrix of reduced states,
// with a Bell state and a product state as reference points.

use std::error::Error;

use nalgebra::Vector3;

use fermion_chsh::measures::wootters_roots;
use fermion_chsh::{
    concurrence, correlation_matrix, negativity, reduced_state, ReductionSpec, TwoQubitDensity,
    UnruhParams,
};

fn describe(label: &str, rho: &TwoQubitDensity) -> Result<(), Box<dyn Error>> {
    let t = correlation_matrix(rho)?;
    println!(
        "{label:<32} C = {:.6}  N = {:.6}  √λ = {:.4?}  singular values of T = {:.4?}",
        concurrence(rho)?,
        negativity(rho),
        wootters_roots(rho)?,
        t.singular_values()
    );
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    describe("Bell state", &TwoQubitDensity::bell_phi_plus())?;
    describe("maximally mixed", &TwoQubitDensity::maximally_mixed())?;
    let z = Vector3::new(0.0, 0.0, 1.0);
    describe(
        "product |0⟩|0⟩",
        &TwoQubitDensity::product_from_bloch(&z, &z)?,
    )?;

    for r in [0.0, 0.3, 0.6, std::f64::consts::FRAC_PI_4] {
        let params = UnruhParams::from_abs(r, 0.85, 0.0)?;
        for spec in ReductionSpec::plus_family() {
            describe(&format!("r = {r:.3} {spec}"), &reduced_state(&params, spec))?;
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
