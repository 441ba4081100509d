//! Snail atlas: slice hulls as CSV rows and an SVG overlay in the `(re, im)` plane.

use std::fmt::Write as _;
use std::path::Path;

use cdpoly::geometry::{self, critical_points, default_slice_count, snail_sample, SnailSlice};
use cdpoly::roots::FinderOptions;
use cdpoly::{CDPolynomial, Complex64};
use serde_json::{json, Value};

use crate::doc::PolynomialDocument;
use crate::error::{CliError, CliResult};
use crate::with_poly;

pub struct SnailOptions<'a> {
    pub slices: Option<usize>,
    pub seed: u64,
    pub svg: Option<&'a Path>,
    pub csv: Option<&'a Path>,
}

pub fn write_csv(path: &Path, slices: &[SnailSlice], dim: usize) -> CliResult<()> {
    let io = |e: csv::Error| CliError::Io(format!("{}: {e}", path.display()));
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    let mut header = vec!["slice_index".to_string()];
    header.extend((0..dim).map(|k| format!("I_{k}")));
    header.extend(["vertex_index", "re", "im_along_I"].map(String::from));
    w.write_record(&header).map_err(io)?;
    for (s, slice) in slices.iter().enumerate() {
        let mut prefix = vec![s.to_string()];
        prefix.extend(slice.direction.element().coeffs().iter().map(|c| c.to_string()));
        if slice.hull.is_empty() {
            // whole plane: no vertices
            let mut row = prefix.clone();
            row.extend([String::new(), String::new(), String::new()]);
            w.write_record(&row).map_err(io)?;
        }
        for (v, z) in slice.hull.iter().enumerate() {
            let mut row = prefix.clone();
            row.extend([v.to_string(), z.re.to_string(), z.im.to_string()]);
            w.write_record(&row).map_err(io)?;
        }
    }
    w.flush().map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn render_svg(slices: &[SnailSlice], radius: Option<f64>, critical: &[Complex64]) -> String {
    let mut extent: f64 = 1.0;
    for z in slices.iter().flat_map(|s| &s.hull).chain(critical) {
        extent = extent.max(z.norm());
    }
    if let Some(r) = radius {
        extent = extent.max(r);
    }
    let e = extent * 1.1;
    let sw = e / 300.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="640" height="640" viewBox="{} {} {} {}">"##,
        -e,
        -e,
        2.0 * e,
        2.0 * e
    );
    let _ = writeln!(
        out,
        r##"<rect x="{}" y="{}" width="{}" height="{}" fill="white"/>"##,
        -e,
        -e,
        2.0 * e,
        2.0 * e
    );
    let _ = writeln!(
        out,
        r##"<g stroke="#bbb" stroke-width="{sw}"><line x1="{}" y1="0" x2="{e}" y2="0"/><line x1="0" y1="{}" x2="0" y2="{e}"/></g>"##,
        -e, -e
    );
    if let Some(r) = radius {
        let _ = writeln!(
            out,
            r##"<circle cx="0" cy="0" r="{r}" fill="none" stroke="#444" stroke-dasharray="{} {}" stroke-width="{sw}"/>"##,
            4.0 * sw,
            3.0 * sw
        );
    }
    // SVG y grows downward; flip so the imaginary axis points up
    let _ = writeln!(
        out,
        r##"<g fill="#1f77b4" fill-opacity="0.04" stroke="#1f77b4" stroke-opacity="0.5" stroke-width="{sw}">"##
    );
    for slice in slices {
        let pts: Vec<String> = slice.hull.iter().map(|z| format!("{},{}", z.re, -z.im)).collect();
        match slice.hull.len() {
            0 => {}
            1 => {
                let z = slice.hull[0];
                let _ = writeln!(out, r##"<circle cx="{}" cy="{}" r="{}"/>"##, z.re, -z.im, 1.5 * sw);
            }
            2 => {
                let _ = writeln!(out, r##"<polyline fill="none" points="{}"/>"##, pts.join(" "));
            }
            _ => {
                let _ = writeln!(out, r##"<polygon points="{}"/>"##, pts.join(" "));
            }
        }
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r##"<g fill="#d62728">"##);
    for z in critical {
        let _ = writeln!(out, r##"<circle cx="{}" cy="{}" r="{}"/>"##, z.re, -z.im, 3.0 * sw);
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}

fn critical_markers(f: &CDPolynomial<f64>, opts: &FinderOptions) -> Vec<Complex64> {
    let Ok(cp) = critical_points(f, opts) else {
        return Vec::new();
    };
    cp.representatives()
        .iter()
        .filter_map(|x| Some(Complex64::new(x.re().ok()?, x.im().ok()?.norm().max(0.0).sqrt())))
        .flat_map(|z| [z, z.conj()])
        .collect()
}

pub fn snail(poly: &PolynomialDocument, snail_opts: &SnailOptions, opts: &FinderOptions) -> CliResult<Value> {
    let f = with_poly!(poly.build()?, f => f.to_f64());
    let count = snail_opts
        .slices
        .unwrap_or_else(|| default_slice_count(f.params().level()));
    let slices = snail_sample(&f, count, snail_opts.seed, opts.tol)?;
    let radius = geometry::bounds(&f, opts.tol).ok().map(|b| b.r3);
    let critical = critical_markers(&f, opts);
    let max_vertex = slices
        .iter()
        .flat_map(|s| &s.hull)
        .map(|z| z.norm())
        .fold(0.0, f64::max);

    if let Some(path) = snail_opts.csv {
        write_csv(path, &slices, f.params().dim())?;
    }
    if let Some(path) = snail_opts.svg {
        std::fs::write(path, render_svg(&slices, radius, &critical))
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(json!({
        "slices": slices.len(),
        "seed": snail_opts.seed,
        "whole_plane": slices.iter().filter(|s| s.whole_plane).count(),
        "max_vertex_modulus": max_vertex,
        "r3": radius,
        "within_r3": radius.map(|r| max_vertex <= r + opts.tol.sqrt() * (1.0 + r)),
        "critical_points": critical.len() / 2,
    }))
}
