//! Static SVG line charts of campaign results: mean final fitness versus
//! the swept parameter, one series per algorithm. Output is
//! self-contained (no external references) and a pure function of the
//! rows, so identical campaigns render identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::bench::ResultRow;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const MARGIN_LEFT: f64 = 78.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 26.0;
const MARGIN_BOTTOM: f64 = 56.0;
const TICKS: usize = 5;

const SERIES_STYLE: &[(&str, &str)] = &[("HS", "#1f77b4"), ("GA", "#d62728")];

struct Series {
    label: &'static str,
    color: &'static str,
    /// (swept value, mean final fitness), ascending by value.
    points: Vec<(f64, f64)>,
}

fn collect_series<T: Scalar>(rows: &[ResultRow<T>]) -> Vec<Series> {
    let mut grouped: [BTreeMap<u64, (f64, u32)>; 2] = [BTreeMap::new(), BTreeMap::new()];
    for row in rows {
        let slot = if row.experiment.ends_with("_ga") { 1 } else { 0 };
        let entry = grouped[slot].entry(row.value).or_insert((0.0, 0));
        entry.0 += row.f_final.to_f64().unwrap_or(f64::NAN);
        entry.1 += 1;
    }
    grouped
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_empty())
        .map(|(slot, g)| Series {
            label: SERIES_STYLE[slot].0,
            color: SERIES_STYLE[slot].1,
            points: g
                .iter()
                .map(|(&v, &(sum, n))| (v as f64, sum / n as f64))
                .collect(),
        })
        .collect()
}

/// Pad a data range so it never degenerates to a single point.
fn padded(min: f64, max: f64) -> (f64, f64) {
    if (max - min).abs() < f64::EPSILON {
        let pad = (min.abs() * 0.1).max(0.5);
        (min - pad, max + pad)
    } else {
        let pad = (max - min) * 0.06;
        (min - pad, max + pad)
    }
}

/// Render rows as an SVG line chart. Rows must be nonempty.
pub fn svg_string<T: Scalar>(rows: &[ResultRow<T>]) -> Result<String> {
    if rows.is_empty() {
        return Err(Error::InvalidParams("no result rows to plot".into()));
    }
    let series = collect_series(rows);
    let xs: Vec<f64> = series
        .iter()
        .flat_map(|s| s.points.iter().map(|p| p.0))
        .collect();
    let ys: Vec<f64> = series
        .iter()
        .flat_map(|s| s.points.iter().map(|p| p.1))
        .collect();
    let (x0, x1) = padded(
        xs.iter().copied().fold(f64::INFINITY, f64::min),
        xs.iter().copied().fold(f64::NEG_INFINITY, f64::max),
    );
    let (y0, y1) = padded(
        ys.iter().copied().fold(f64::INFINITY, f64::min),
        ys.iter().copied().fold(f64::NEG_INFINITY, f64::max),
    );

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = |x: f64| MARGIN_LEFT + (x - x0) / (x1 - x0) * plot_w;
    let sy = |y: f64| MARGIN_TOP + plot_h - (y - y0) / (y1 - y0) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(svg, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);

    // Axes.
    let _ = writeln!(
        svg,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="1"/>"#,
        MARGIN_LEFT,
        MARGIN_TOP + plot_h,
        MARGIN_LEFT + plot_w,
        MARGIN_TOP + plot_h
    );
    let _ = writeln!(
        svg,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="1"/>"#,
        MARGIN_LEFT,
        MARGIN_TOP,
        MARGIN_LEFT,
        MARGIN_TOP + plot_h
    );

    // Ticks, grid and labels.
    for t in 0..TICKS {
        let frac = t as f64 / (TICKS - 1) as f64;
        let xv = x0 + frac * (x1 - x0);
        let yv = y0 + frac * (y1 - y0);
        let px = sx(xv);
        let py = sy(yv);
        let _ = writeln!(
            svg,
            r#"<line x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{:.2}" stroke="black" stroke-width="1"/>"#,
            MARGIN_TOP + plot_h,
            MARGIN_TOP + plot_h + 5.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{px:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="middle">{xv:.1}</text>"#,
            MARGIN_TOP + plot_h + 18.0
        );
        let _ = writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{py:.2}" x2="{:.2}" y2="{py:.2}" stroke="black" stroke-width="1"/>"#,
            MARGIN_LEFT - 5.0,
            MARGIN_LEFT
        );
        let _ = writeln!(
            svg,
            r##"<line x1="{:.2}" y1="{py:.2}" x2="{:.2}" y2="{py:.2}" stroke="#dddddd" stroke-width="1"/>"##,
            MARGIN_LEFT,
            MARGIN_LEFT + plot_w
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="end">{yv:.3}</text>"#,
            MARGIN_LEFT - 9.0,
            py + 4.0
        );
    }

    // Axis titles.
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="13" text-anchor="middle">{}</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 14.0,
        rows[0].param
    );
    let _ = writeln!(
        svg,
        r#"<text x="16" y="{:.2}" font-family="sans-serif" font-size="13" text-anchor="middle" transform="rotate(-90 16 {:.2})">mean final fitness</text>"#,
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0
    );

    // Series: line (when there is more than one point) plus markers.
    for s in &series {
        if s.points.len() > 1 {
            let mut path = String::new();
            for (x, y) in &s.points {
                let _ = write!(path, "{:.2},{:.2} ", sx(*x), sy(*y));
            }
            let _ = writeln!(
                svg,
                r#"<polyline points="{}" fill="none" stroke="{}" stroke-width="2"/>"#,
                path.trim_end(),
                s.color
            );
        }
        for (x, y) in &s.points {
            let _ = writeln!(
                svg,
                r#"<circle cx="{:.2}" cy="{:.2}" r="3.5" fill="{}"/>"#,
                sx(*x),
                sy(*y),
                s.color
            );
        }
    }

    // Legend, top right.
    for (j, s) in series.iter().enumerate() {
        let ly = MARGIN_TOP + 14.0 + j as f64 * 18.0;
        let lx = MARGIN_LEFT + plot_w - 90.0;
        let _ = writeln!(
            svg,
            r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{}" stroke-width="2"/>"#,
            lx + 26.0,
            s.color
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12">{}</text>"#,
            lx + 32.0,
            ly + 4.0,
            s.label
        );
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Write the chart to a file. Rows must be nonempty.
pub fn emit_plot<T: Scalar>(rows: &[ResultRow<T>], path: &Path) -> Result<()> {
    std::fs::write(path, svg_string(rows)?)?;
    Ok(())
}
