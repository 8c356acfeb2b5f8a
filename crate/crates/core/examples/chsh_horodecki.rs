// Maximal CHSH value three ways: the Horodecki criterion, a brute-force
// search over measurement directions, and the closed forms.

use std::error::Error;

use fermion_chsh::chsh::SettingsSearch;
use fermion_chsh::{
    analytic_bmax, chsh_value, horodecki_max, optimize_settings, reduced_state,
    MeasurementSettings, ReductionSpec, TwoQubitDensity, UnruhParams,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let bell = TwoQubitDensity::bell_phi_plus();
    println!(
        "Bell state: textbook settings give {:.12}, Horodecki {:.12}",
        chsh_value(&bell, &MeasurementSettings::bell_optimal()),
        horodecki_max(&bell)?
    );

    let params = UnruhParams::from_abs(0.4, 0.85, 0.7)?;
    for spec in ReductionSpec::all() {
        let rho = reduced_state(&params, spec);
        let report = optimize_settings(&rho)?;
        println!(
            "{:<30} Horodecki {:.9}  search {:.9}  closed form {:.9}  violation {}",
            spec.to_string(),
            report.horodecki_value,
            report.optimizer_value,
            analytic_bmax(&params, spec),
            report.violates_local_bound()
        );
    }

    // A coarser search still lands within the optimizer tolerance.
    let coarse = SettingsSearch {
        subdivisions: 6,
        candidates: 2,
        ..SettingsSearch::default()
    };
    let rho = reduced_state(&params, ReductionSpec::all()[0]);
    let report = coarse.run(&rho)?;
    let s = report.optimal_settings;
    println!(
        "coarse search: {:.9}, a = {:.4?}, b = {:.4?}",
        report.optimizer_value,
        s.a.as_slice(),
        s.b.as_slice()
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
