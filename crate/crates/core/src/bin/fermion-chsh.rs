use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fermion_chsh::chsh::violates_local_bound;
use fermion_chsh::params::SPEED_OF_LIGHT;
use fermion_chsh::{
    accel_to_r, analytic_bmax, check, concurrence, horodecki_max, initial_state, negativity,
    reduce, svg, sweep, AccelerationSpec, Error, InitialSign, Observer, ReductionSpec, Sector,
    UnruhParams,
};

#[derive(Parser)]
#[command(
    version,
    about = "Entanglement and CHSH nonlocality of accelerated fermionic modes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep r over [0, π/4] and write every reduced state's measures as CSV.
    Sweep {
        /// |q_R|, in [0, 1].
        #[arg(long = "qr")]
        q_r: f64,
        /// Phase of q_L in radians.
        #[arg(
            long,
            alias = "ql-phase",
            default_value_t = 0.0,
            allow_negative_numbers = true
        )]
        phase: f64,
        #[arg(long, default_value_t = 200)]
        points: usize,
        #[arg(long)]
        out: PathBuf,
        /// Also render concurrence and CHSH curves to this SVG file.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Print one reduced state and all of its measures.
    State {
        #[arg(long)]
        r: f64,
        #[arg(long = "qr")]
        q_r: f64,
        #[arg(
            long,
            alias = "ql-phase",
            default_value_t = 0.0,
            allow_negative_numbers = true
        )]
        phase: f64,
        #[arg(long)]
        initial: InitialSign,
        #[arg(long)]
        observer: Observer,
        #[arg(long)]
        sector: Sector,
    },
    /// Run every invariant suite on a grid × grid (r, α) lattice.
    Check {
        #[arg(long, default_value_t = 50)]
        grid: usize,
    },
    /// Convert a proper acceleration into r and print the ψ+ CHSH closed forms.
    Accel {
        /// Mode frequency Ω, rad/s.
        #[arg(long)]
        omega: f64,
        /// Proper acceleration, m/s².
        #[arg(long = "a", allow_negative_numbers = true)]
        accel: f64,
        #[arg(long, default_value_t = SPEED_OF_LIGHT)]
        c: f64,
        #[arg(long = "qr", default_value_t = 1.0)]
        q_r: f64,
    },
}

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parameter(_) | Error::Settings(_) => EXIT_USAGE,
        Error::Io(_) | Error::Csv(_) => EXIT_IO,
        _ => EXIT_FAILURE,
    }
}

fn cmd_sweep(
    q_r: f64,
    phase: f64,
    points: usize,
    out: PathBuf,
    svg_path: Option<PathBuf>,
) -> Result<(), Error> {
    let rows = sweep::sweep(q_r, phase, points)?;
    sweep::write_csv(&rows, BufWriter::new(File::create(&out)?))?;
    println!("wrote {} rows to {}", rows.len(), out.display());
    if let Some(path) = svg_path {
        let reference = sweep::sweep(1.0, phase, points)?;
        std::fs::write(&path, svg::render_figures(&rows, &reference))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_state(params: UnruhParams, spec: ReductionSpec) -> Result<(), Error> {
    let rho = reduce(
        &initial_state(&params, spec.initial)?,
        spec.observer,
        spec.sector,
    );
    println!(
        "state {spec} at r = {}, q_r = {}, q_l = {}",
        params.r(),
        params.q_r(),
        params.q_l()
    );
    let m = rho.matrix();
    println!("density matrix (real part):");
    for i in 0..4 {
        let row: Vec<String> = (0..4).map(|j| format!("{:>10.6}", m[(i, j)].re)).collect();
        println!("  {}", row.join(" "));
    }
    if m.iter().any(|z| z.im.abs() > 5e-7) {
        println!("density matrix (imaginary part):");
        for i in 0..4 {
            let row: Vec<String> = (0..4).map(|j| format!("{:>10.6}", m[(i, j)].im)).collect();
            println!("  {}", row.join(" "));
        }
    }
    let h = horodecki_max(&rho)?;
    println!("concurrence      {:.6}", concurrence(&rho)?);
    println!("negativity       {:.6}", negativity(&rho));
    println!("chsh_horodecki   {h:.6}");
    println!("chsh_analytic    {:.6}", analytic_bmax(&params, spec));
    println!("violation        {}", violates_local_bound(h));
    Ok(())
}

fn cmd_check(grid: usize) -> Result<bool, Error> {
    let report = check::run_checks(grid)?;
    println!("invariant suites on a {grid}×{grid} (r, α) lattice, 3 phases");
    for suite in &report.suites {
        println!("{suite}");
    }
    let ok = report.all_passed();
    println!("{}", if ok { "all suites passed" } else { "FAILED" });
    Ok(ok)
}

fn cmd_accel(spec: AccelerationSpec, q_r: f64) -> Result<(), Error> {
    let r = accel_to_r(&spec)?;
    let params = UnruhParams::from_abs(r, q_r, 0.0)?;
    println!("r = {r:.12} (π/4 = {:.12})", std::f64::consts::FRAC_PI_4);
    for s in ReductionSpec::plus_family() {
        let v = analytic_bmax(&params, s);
        println!(
            "{:<28} chsh_analytic = {v:.12}  violation = {}",
            s.to_string(),
            violates_local_bound(v)
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sweep {
            q_r,
            phase,
            points,
            out,
            svg,
        } => cmd_sweep(q_r, phase, points, out, svg),
        Command::State {
            r,
            q_r,
            phase,
            initial,
            observer,
            sector,
        } => UnruhParams::from_abs(r, q_r, phase)
            .and_then(|p| cmd_state(p, ReductionSpec::new(initial, observer, sector))),
        Command::Check { grid } => match cmd_check(grid) {
            Ok(true) => Ok(()),
            Ok(false) => return ExitCode::from(EXIT_FAILURE),
            Err(e) => Err(e),
        },
        Command::Accel {
            omega,
            accel,
            c,
            q_r,
        } => cmd_accel(AccelerationSpec::new(omega, accel).with_c(c), q_r),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
