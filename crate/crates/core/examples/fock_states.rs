// Build the Unruh vacuum and one-particle states, then the joint
// Alice–mode state, and list its nonzero occupation-number amplitudes.

use std::error::Error;
use std::f64::consts::FRAC_PI_4;

use fermion_chsh::fock::{mode_index, JOINT_DIM};
use fermion_chsh::{
    initial_state, unruh_particle, unruh_vacuum, Frequency, InitialSign, UnruhParams,
};

fn bits(index: usize, width: usize) -> String {
    (0..width)
        .rev()
        .map(|b| if index >> b & 1 == 1 { '1' } else { '0' })
        .collect()
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let params = UnruhParams::from_abs(FRAC_PI_4 / 2.0, 0.85, 0.0)?;
    let vacuum = unruh_vacuum(&params);
    let particle = unruh_particle(&params, Frequency::Positive);
    println!(
        "r = {:.4}, q_R = {}, q_L = {:.4}",
        params.r(),
        params.q_r(),
        params.q_l()
    );
    println!(
        "⟨0|0⟩ = {:.12}, ⟨1|1⟩ = {:.12}, ⟨0|1⟩ = {:.1e}",
        vacuum.norm_sqr(),
        particle.norm_sqr(),
        particle.inner(&vacuum).norm()
    );
    println!(
        "vacuum amplitude on |0000⟩ = {:.6}",
        vacuum.amplitude(0, 0, 0, 0)
    );
    assert_eq!(mode_index(1, 0, 0, 1), 9);

    let psi = initial_state(&params, InitialSign::Plus)?;
    println!("nonzero amplitudes of ψ+ over |Alice, I+, I−, II+, II−⟩:");
    for index in 0..JOINT_DIM {
        let z = psi.amplitudes()[index];
        if z.norm() > 1e-14 {
            println!("  |{}⟩  {:+.6}{:+.6}i", bits(index, 5), z.re, z.im);
        }
    }
    println!("norm² = {:.15}", psi.norm_sqr());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
