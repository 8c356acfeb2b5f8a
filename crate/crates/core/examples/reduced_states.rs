// Trace out the unobserved modes for all eight observer/sector choices and
// compare with the closed-form reduced states.

use std::error::Error;

use fermion_chsh::closed_forms::substitution;
use fermion_chsh::{initial_state, reduce, reduced_state, ReductionSpec, UnruhParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let params = UnruhParams::from_abs(0.5, 0.85, 1.0)?;
    for spec in ReductionSpec::all() {
        let traced = reduce(
            &initial_state(&params, spec.initial)?,
            spec.observer,
            spec.sector,
        );
        let closed = reduced_state(&params, spec);
        let (template, x, y) = substitution(spec);
        println!(
            "{:<30} {template:?}({x:?}, {y:?})  max entry gap {:.1e}  eigenvalues {:.4?}",
            spec.to_string(),
            traced.max_abs_diff(&closed),
            traced.eigenvalues()
        );
    }

    let spec = ReductionSpec::all()[0];
    let m = reduced_state(&params, spec).into_matrix();
    println!("\n{spec} real part:");
    for i in 0..4 {
        println!(
            "  {}",
            (0..4)
                .map(|j| format!("{:>9.5}", m[(i, j)].re))
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
