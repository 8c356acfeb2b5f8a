//! Static SVG rendering of concurrence and maximal CHSH curves versus `r`.

use std::f64::consts::{FRAC_PI_4, SQRT_2};
use std::fmt::Write;

use crate::chsh::LOCAL_BOUND;
use crate::fock::{InitialSign, Observer, ReductionSpec, Sector};
use crate::sweep::SweepRecord;

const PANEL_W: f64 = 460.0;
const PANEL_H: f64 = 320.0;
const MARGIN_L: f64 = 60.0;
const MARGIN_R: f64 = 20.0;
const MARGIN_T: f64 = 40.0;
const MARGIN_B: f64 = 50.0;

struct CurveStyle {
    spec: ReductionSpec,
    label: &'static str,
    color: &'static str,
    dash: Option<&'static str>,
}

fn plus_styles() -> [CurveStyle; 4] {
    use InitialSign::Plus;
    [
        CurveStyle {
            spec: ReductionSpec::new(Plus, Observer::Rob, Sector::Particle),
            label: "Alice–Rob, particle",
            color: "#1f4fb4",
            dash: None,
        },
        CurveStyle {
            spec: ReductionSpec::new(Plus, Observer::Rob, Sector::Antiparticle),
            label: "Alice–Rob, antiparticle",
            color: "#1f4fb4",
            dash: Some("8 5"),
        },
        CurveStyle {
            spec: ReductionSpec::new(Plus, Observer::AntiRob, Sector::Particle),
            label: "Alice–AntiRob, particle",
            color: "#c62828",
            dash: Some("10 4 2 4"),
        },
        CurveStyle {
            spec: ReductionSpec::new(Plus, Observer::AntiRob, Sector::Antiparticle),
            label: "Alice–AntiRob, antiparticle",
            color: "#c62828",
            dash: Some("5 4"),
        },
    ]
}

struct Panel {
    x0: f64,
    title: String,
    y_max: f64,
    y_ticks: Vec<(f64, String)>,
}

impl Panel {
    fn px(&self, r: f64) -> f64 {
        self.x0 + MARGIN_L + (PANEL_W - MARGIN_L - MARGIN_R) * r / FRAC_PI_4
    }

    fn py(&self, y: f64) -> f64 {
        MARGIN_T + (PANEL_H - MARGIN_T - MARGIN_B) * (1.0 - y / self.y_max)
    }

    fn frame(&self, out: &mut String) {
        let (l, r) = (self.px(0.0), self.px(FRAC_PI_4));
        let (t, b) = (self.py(self.y_max), self.py(0.0));
        let _ = writeln!(
            out,
            r#"<rect x="{l:.2}" y="{t:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="black"/>"#,
            r - l,
            b - t
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-size="14">{}</text>"#,
            0.5 * (l + r),
            MARGIN_T - 14.0,
            self.title
        );
        for (k, label) in ["0", "π/16", "π/8", "3π/16", "π/4"].iter().enumerate() {
            let x = self.px(FRAC_PI_4 * k as f64 / 4.0);
            let _ = writeln!(
                out,
                r#"<line x1="{x:.2}" y1="{b:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/><text x="{x:.2}" y="{:.2}" text-anchor="middle" font-size="11">{label}</text>"#,
                b + 5.0,
                b + 18.0
            );
        }
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-size="12">r</text>"#,
            0.5 * (l + r),
            b + 36.0
        );
        for (y, label) in &self.y_ticks {
            let py = self.py(*y);
            let _ = writeln!(
                out,
                r#"<line x1="{:.2}" y1="{py:.2}" x2="{l:.2}" y2="{py:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end" font-size="11">{label}</text>"#,
                l - 5.0,
                l - 8.0,
                py + 4.0
            );
        }
    }

    fn curve(&self, out: &mut String, points: &[(f64, f64)], color: &str, dash: Option<&str>) {
        if points.is_empty() {
            return;
        }
        let coords: Vec<String> = points
            .iter()
            .map(|&(r, y)| format!("{:.2},{:.2}", self.px(r), self.py(y.min(self.y_max))))
            .collect();
        let dash = dash
            .map(|d| format!(r#" stroke-dasharray="{d}""#))
            .unwrap_or_default();
        let _ = writeln!(
            out,
            r#"<polyline fill="none" stroke="{color}" stroke-width="2"{dash} points="{}"/>"#,
            coords.join(" ")
        );
    }

    fn legend(&self, out: &mut String, row: usize, label: &str, color: &str, dash: Option<&str>) {
        let x = self.px(0.0) + 10.0;
        let y = self.py(0.0) - 12.0 - 16.0 * row as f64;
        let dash = dash
            .map(|d| format!(r#" stroke-dasharray="{d}""#))
            .unwrap_or_default();
        let _ = writeln!(
            out,
            r#"<line x1="{x:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="{color}" stroke-width="2"{dash}/><text x="{:.2}" y="{:.2}" font-size="11">{label}</text>"#,
            x + 28.0,
            x + 34.0,
            y + 4.0
        );
    }
}

fn series(
    records: &[SweepRecord],
    spec: ReductionSpec,
    value: fn(&SweepRecord) -> f64,
) -> Vec<(f64, f64)> {
    records
        .iter()
        .filter(|rec| rec.spec() == spec)
        .map(|rec| (rec.r, value(rec)))
        .collect()
}

/// Two side-by-side panels: concurrence and maximal CHSH value of the four
/// `ψ+` reduced states in `records`, with the `ψ+` Rob particle curve of
/// `reference` (typically `|q_r| = 1`) overlaid on the CHSH panel and the
/// local-realism bound drawn as a dashed rule.
pub fn render_figures(records: &[SweepRecord], reference: &[SweepRecord]) -> String {
    let q_r = records.first().map(|r| r.q_r_abs).unwrap_or(f64::NAN);
    let q_ref = reference.first().map(|r| r.q_r_abs).unwrap_or(f64::NAN);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}" font-family="sans-serif">"#,
        2.0 * PANEL_W,
        PANEL_H,
        2.0 * PANEL_W,
        PANEL_H
    );
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    let conc = Panel {
        x0: 0.0,
        title: format!("Concurrence, |q_R| = {q_r:.3}"),
        y_max: 1.0,
        y_ticks: (0..=4)
            .map(|k| (k as f64 / 4.0, format!("{:.2}", k as f64 / 4.0)))
            .collect(),
    };
    let bell = Panel {
        x0: PANEL_W,
        title: format!("Maximal CHSH value, |q_R| = {q_r:.3}"),
        y_max: 2.0 * SQRT_2,
        y_ticks: vec![
            (0.0, "0".into()),
            (1.0, "1".into()),
            (2.0, "2".into()),
            (2.0 * SQRT_2, "2√2".into()),
        ],
    };
    conc.frame(&mut out);
    bell.frame(&mut out);

    let _ = writeln!(
        out,
        r#"<line x1="{:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="gray" stroke-dasharray="4 4"/>"#,
        bell.px(0.0),
        bell.px(FRAC_PI_4),
        y = bell.py(LOCAL_BOUND)
    );

    for (row, style) in plus_styles().iter().enumerate() {
        conc.curve(
            &mut out,
            &series(records, style.spec, |r| r.concurrence),
            style.color,
            style.dash,
        );
        bell.curve(
            &mut out,
            &series(records, style.spec, |r| r.chsh_horodecki),
            style.color,
            style.dash,
        );
        conc.legend(&mut out, 4 - row, style.label, style.color, style.dash);
    }
    let rob_particle = plus_styles()[0].spec;
    if !reference.is_empty() {
        bell.curve(
            &mut out,
            &series(reference, rob_particle, |r| r.chsh_horodecki),
            "#7b1fa2",
            None,
        );
        bell.legend(
            &mut out,
            0,
            &format!("Alice–Rob, particle, |q_R| = {q_ref:.3}"),
            "#7b1fa2",
            None,
        );
    }
    out.push_str("</svg>\n");
    out
}
