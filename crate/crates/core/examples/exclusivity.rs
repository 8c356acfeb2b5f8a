// Rob and AntiRob cannot both violate CHSH in the particle sector: the
// average of their maximal values never exceeds 2.

use std::error::Error;
use std::f64::consts::FRAC_PI_2;

use fermion_chsh::chsh::exclusivity_check_for;
use fermion_chsh::grid::linspace;
use fermion_chsh::{exclusivity_check, InitialSign, UnruhParams};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!(
        "{:>8} {:>8} {:>12} {:>14}",
        "r", "α", "(B_R+B_R̄)/2", "2(1+sin 2α)"
    );
    for r in [0.0, 0.2, 0.5] {
        for alpha in linspace(0.0, FRAC_PI_2, 5) {
            let check = exclusivity_check(&UnruhParams::from_angle(r, alpha, 0.0)?);
            assert!(check.holds && check.proof_holds);
            println!(
                "{r:>8.3} {alpha:>8.4} {:>12.9} {:>14.9}",
                check.lhs, check.proof_lhs
            );
        }
    }
    let minus = exclusivity_check_for(
        &UnruhParams::from_angle(0.0, FRAC_PI_2 / 2.0, 0.0)?,
        InitialSign::Minus,
    );
    println!(
        "ψ− antiparticle sector at r = 0, α = π/4: {:.15} (holds: {})",
        minus.lhs, minus.holds
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
