// From a physical proper acceleration to the squeezing angle `r`, and the
// resulting CHSH values of the four ψ+ reduced states.

use std::error::Error;

use fermion_chsh::chsh::violates_local_bound;
use fermion_chsh::{accel_to_r, analytic_bmax, AccelerationSpec, ReductionSpec, UnruhParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let omega = 2.0 * std::f64::consts::PI * 1.0e9;
    for accel in [1e15, 1e17, 1e18, 1e19, 1e21] {
        let r = accel_to_r(&AccelerationSpec::new(omega, accel))?;
        let params = UnruhParams::from_abs(r, 1.0, 0.0)?;
        let values: Vec<String> = ReductionSpec::plus_family()
            .iter()
            .map(|&s| {
                let v = analytic_bmax(&params, s);
                format!("{v:.4}{}", if violates_local_bound(v) { "*" } else { " " })
            })
            .collect();
        println!("a = {accel:.0e} m/s²  r = {r:.6}  {}", values.join("  "));
    }
    println!("(* marks a CHSH violation)");
    let unit = accel_to_r(&AccelerationSpec::new(1.0, 1.0).with_c(1.0))?;
    println!("cΩ/a = 1 gives r = atan(e^−π) = {unit:.15}");
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
