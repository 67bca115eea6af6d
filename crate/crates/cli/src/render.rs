use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use lissatoric::curve::{sample_knot, Strands};
use lissatoric::oracle::{default_phase, default_samples, detect_crossings_float};
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::{CliError, CliResult};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 320.0;
const MARGIN: f64 = 40.0;
const COLORS: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

fn save(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// CSV `t,x,y,z` over `[0, 2π]`, both ends included.
pub fn write_coords(
    n: u64,
    q: u64,
    p: u64,
    phi: f64,
    samples: usize,
    path: &Path,
) -> CliResult<()> {
    // validates the triple
    lissatoric::symbolic::normalize_params(n, q, p)?;
    let mut out = String::from("t,x,y,z\n");
    for (t, [x, y, z]) in sample_knot(n, q, p, phi, samples) {
        // adding 0.0 turns -0.0 into 0.0
        let (x, y, z) = (x + 0.0, y + 0.0, z + 0.0);
        writeln!(out, "{t:.12},{x:.12},{y:.12},{z:.12}").unwrap();
    }
    save(path, &out)
}

/// Strand heights over the window with the under strand broken at every crossing.
pub fn write_svg(n: u64, q: u64, p: u64, phase: Option<BigRational>, path: &Path) -> CliResult<()> {
    let mut spec = default_phase(n, q, p)?;
    if let Some(phi) = phase {
        spec.phi = phi;
    }
    let phi = spec.phi.to_f64().unwrap_or(0.0);
    let eta = spec.eta.to_f64().unwrap_or(0.0);
    let crossings = detect_crossings_float(n, q, p, phi, eta, default_samples(n, q))?;
    let strands = Strands::new(n, q, p, phi);

    let sx = |t: f64| MARGIN + (t - eta) * (WIDTH - 2.0 * MARGIN);
    let sy = |y: f64| HEIGHT / 2.0 - y * (HEIGHT / 2.0 - MARGIN);
    let path_of = |k: usize, t0: f64, t1: f64, steps: usize| {
        let mut d = String::new();
        for j in 0..=steps {
            let t = t0 + (t1 - t0) * j as f64 / steps as f64;
            let cmd = if j == 0 { 'M' } else { 'L' };
            write!(d, "{cmd}{:.2},{:.2} ", sx(t), sy(strands.y(k, t))).unwrap();
        }
        d.trim_end().to_string()
    };

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" data-crossings="{}">"#,
        crossings.len()
    )
    .unwrap();
    writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(
        svg,
        r#"<text x="{MARGIN}" y="24" font-family="sans-serif" font-size="14">K({n},{q},{p}) braid shadow, {} crossings</text>"#,
        crossings.len()
    )
    .unwrap();
    for k in 0..n as usize {
        writeln!(
            svg,
            r#"<path class="strand" d="{}" fill="none" stroke="{}" stroke-width="2"/>"#,
            path_of(k, eta, 1.0 + eta, 600),
            COLORS[k % COLORS.len()]
        )
        .unwrap();
    }
    let half = 0.012_f64.min(0.25 / q as f64);
    for c in &crossings {
        let over = if strands.z(c.k, c.t) > strands.z(c.l, c.t) {
            c.k
        } else {
            c.l
        };
        let d = path_of(over, c.t - half, c.t + half, 12);
        writeln!(
            svg,
            r#"<g class="crossing" data-t="{:.9}" data-gen="{}" data-sign="{}"><path d="{d}" fill="none" stroke="white" stroke-width="8"/><path d="{d}" fill="none" stroke="{}" stroke-width="2"/></g>"#,
            c.t,
            c.gen_index,
            c.sign,
            COLORS[over % COLORS.len()]
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    save(path, &svg)
}
