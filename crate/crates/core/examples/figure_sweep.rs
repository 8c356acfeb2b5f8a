// Sweep `r` over `[0, π/4]`, write the CSV table and render both figures
// into a temporary directory.

use std::error::Error;
use std::fs::File;
use std::io::BufWriter;

use fermion_chsh::svg::render_figures;
use fermion_chsh::sweep::{sweep, write_csv};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let rows = sweep(0.85, 0.0, 200)?;
    let reference = sweep(1.0, 0.0, 200)?;
    let dir = std::env::temp_dir().join("fermion-chsh-figure-sweep");
    std::fs::create_dir_all(&dir)?;
    let csv_path = dir.join("sweep.csv");
    write_csv(&rows, BufWriter::new(File::create(&csv_path)?))?;
    let svg_path = dir.join("figures.svg");
    std::fs::write(&svg_path, render_figures(&rows, &reference))?;
    println!("{} rows → {}", rows.len(), csv_path.display());
    println!("figures → {}", svg_path.display());

    for rec in rows
        .iter()
        .filter(|r| r.r == 0.0 || r.r == std::f64::consts::FRAC_PI_4)
    {
        if rec.initial_sign == fermion_chsh::InitialSign::Plus {
            println!(
                "r = {:.4} {:<28} C = {:.6}  B = {:.6}",
                rec.r,
                rec.spec().to_string(),
                rec.concurrence,
                rec.chsh_horodecki
            );
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
