//! Sweeps over the squeezing angle and their CSV serialization.

use std::io::Write;

use rayon::prelude::*;

use crate::chsh::{analytic_bmax, horodecki_max};
use crate::error::{Error, Result};
use crate::fock::{initial_state, reduce, InitialSign, Observer, ReductionSpec, Sector};
use crate::grid::r_axis;
use crate::measures::{concurrence, negativity};
use crate::params::UnruhParams;

/// Largest tolerated gap between the Horodecki and closed-form CHSH values.
pub const CHSH_AGREEMENT_TOL: f64 = 1e-9;

pub const CSV_HEADER: [&str; 11] = [
    "r",
    "q_r_abs",
    "q_l_abs",
    "q_phase",
    "initial_sign",
    "observer",
    "sector",
    "concurrence",
    "negativity",
    "chsh_horodecki",
    "chsh_analytic",
];

/// All measures of one reduced state at one parameter point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub r: f64,
    pub q_r_abs: f64,
    pub q_l_abs: f64,
    /// Phase of `q_l`, radians.
    pub q_phase: f64,
    pub initial_sign: InitialSign,
    pub observer: Observer,
    pub sector: Sector,
    pub concurrence: f64,
    pub negativity: f64,
    pub chsh_horodecki: f64,
    pub chsh_analytic: f64,
}

impl SweepRecord {
    /// Builds the reduced state by partial trace and evaluates every measure.
    pub fn evaluate(params: &UnruhParams, spec: ReductionSpec) -> Result<Self> {
        let psi = initial_state(params, spec.initial)?;
        let rho = reduce(&psi, spec.observer, spec.sector);
        let rec = Self {
            r: params.r(),
            q_r_abs: params.q_r().norm(),
            q_l_abs: params.q_l().norm(),
            q_phase: params.q_l().arg(),
            initial_sign: spec.initial,
            observer: spec.observer,
            sector: spec.sector,
            concurrence: concurrence(&rho)?,
            negativity: negativity(&rho),
            chsh_horodecki: horodecki_max(&rho)?,
            chsh_analytic: analytic_bmax(params, spec),
        };
        rec.validate()?;
        Ok(rec)
    }

    pub fn spec(&self) -> ReductionSpec {
        ReductionSpec::new(self.initial_sign, self.observer, self.sector)
    }

    fn validate(&self) -> Result<()> {
        let gap = (self.chsh_horodecki - self.chsh_analytic).abs();
        if !(gap <= CHSH_AGREEMENT_TOL) {
            return Err(Error::Invariant(format!(
                "{} at r = {}: Horodecki {} vs analytic {}",
                self.spec(),
                self.r,
                self.chsh_horodecki,
                self.chsh_analytic
            )));
        }
        for (name, v) in [
            ("concurrence", self.concurrence),
            ("negativity", self.negativity),
            ("chsh_horodecki", self.chsh_horodecki),
            ("chsh_analytic", self.chsh_analytic),
        ] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::Invariant(format!("{name} = {v} at r = {}", self.r)));
            }
        }
        Ok(())
    }

    fn csv_fields(&self) -> [String; 11] {
        [
            format_sig(self.r),
            format_sig(self.q_r_abs),
            format_sig(self.q_l_abs),
            format_sig(self.q_phase),
            self.initial_sign.token().to_string(),
            self.observer.token().to_string(),
            self.sector.token().to_string(),
            format_sig(self.concurrence),
            format_sig(self.negativity),
            format_sig(self.chsh_horodecki),
            format_sig(self.chsh_analytic),
        ]
    }
}

/// Evaluates all eight reduced states at `points` values of `r ∈ [0, π/4]`
/// for `q_r = |q_r|` real and `q_l = √(1 − |q_r|²)·e^{i·phase}`.
///
/// Rows are ordered by `r`, then by [`ReductionSpec::all`].
pub fn sweep(q_r_abs: f64, ql_phase: f64, points: usize) -> Result<Vec<SweepRecord>> {
    if points < 2 {
        return Err(Error::Parameter(format!(
            "points = {points} must be at least 2"
        )));
    }
    UnruhParams::from_abs(0.0, q_r_abs, ql_phase)?;
    let rows: Result<Vec<Vec<SweepRecord>>> = r_axis(points)
        .into_par_iter()
        .map(|r| {
            let params = UnruhParams::from_abs(r, q_r_abs, ql_phase)?;
            ReductionSpec::all()
                .into_iter()
                .map(|spec| {
                    // arg(q_l) is undefined when |q_r| = 1; keep the requested phase.
                    SweepRecord::evaluate(&params, spec).map(|rec| SweepRecord {
                        q_phase: ql_phase,
                        ..rec
                    })
                })
                .collect()
        })
        .collect();
    Ok(rows?.into_iter().flatten().collect())
}

/// Writes the header and one line per record.
pub fn write_csv<W: Write>(records: &[SweepRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for rec in records {
        w.write_record(rec.csv_fields())?;
    }
    w.flush()?;
    Ok(())
}

/// Formats `x` with 12 significant digits in the style of C's `%.12g`.
pub fn format_sig(x: f64) -> String {
    const DIGITS: usize = 12;
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= DIGITS as i32 {
        let m = trim_zeros(mantissa);
        format!("{m}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs())
    } else {
        let decimals = (DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, SQRT_2};

    #[test]
    fn format_sig_matches_printf_g() {
        assert_eq!(format_sig(0.0), "0");
        assert_eq!(format_sig(-0.0), "0");
        assert_eq!(format_sig(1.0), "1");
        assert_eq!(format_sig(2.0 * SQRT_2), "2.82842712475");
        assert_eq!(format_sig(FRAC_PI_4), "0.785398163397");
        assert_eq!(format_sig(1.5e-7), "1.5e-07");
        assert_eq!(format_sig(-0.125), "-0.125");
        assert_eq!(format_sig(123456789012345.0), "1.23456789012e+14");
        assert_eq!(format_sig(0.0001), "0.0001");
    }

    #[test]
    fn two_point_sweep_endpoints() {
        let rows = sweep(1.0, 0.0, 2).unwrap();
        assert_eq!(rows.len(), 16);
        let rob: Vec<_> = rows
            .iter()
            .filter(|r| r.spec() == ReductionSpec::all()[0])
            .collect();
        assert!((rob[0].chsh_horodecki - 2.0 * SQRT_2).abs() < 1e-12);
        assert!((rob[1].chsh_horodecki - 2.0).abs() < 1e-12);
        assert_eq!(rob[1].r, FRAC_PI_4);
    }

    #[test]
    fn sweep_rejects_bad_input() {
        assert!(sweep(1.2, 0.0, 10).is_err());
        assert!(sweep(0.5, 0.0, 1).is_err());
    }

    #[test]
    fn csv_has_header_and_tokens() {
        let rows = sweep(0.85, 0.0, 3).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        let first: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(first.len(), 11);
        assert_eq!(&first[4..7], &["plus", "rob", "particle"]);
        assert_eq!(text.lines().count(), 1 + 3 * 8);
    }
}
