//! Minimal standalone SVG emission: polygon overlays (body plus witness) and
//! profile/trace polylines with axes. Output is byte-stable for identical
//! input.

use crate::geom::{GeomError, GeomResult, Polytope};

const W: f64 = 640.0;
const H: f64 = 640.0;
const MARGIN: f64 = 40.0;

fn fmt(x: f64) -> String {
    format!("{x:.6}")
}

struct Frame {
    x0: f64,
    y0: f64,
    sx: f64,
    sy: f64,
}

impl Frame {
    fn fit(xs: impl Iterator<Item = f64> + Clone, ys: impl Iterator<Item = f64> + Clone) -> Frame {
        let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
        for x in xs {
            xmin = xmin.min(x);
            xmax = xmax.max(x);
        }
        let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
        for y in ys {
            ymin = ymin.min(y);
            ymax = ymax.max(y);
        }
        let dx = (xmax - xmin).max(1e-12);
        let dy = (ymax - ymin).max(1e-12);
        Frame {
            x0: xmin,
            y0: ymax,
            sx: (W - 2.0 * MARGIN) / dx,
            sy: (H - 2.0 * MARGIN) / dy,
        }
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (MARGIN + (x - self.x0) * self.sx, MARGIN + (self.y0 - y) * self.sy)
    }
}

fn document(body: &str) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">\n{body}</svg>\n"
    )
}

/// Closed paths for 2D polygons, each with a stroke color; the first polygon
/// fixes the scale together with the rest.
pub fn polygons_svg(layers: &[(&Polytope, &str)]) -> GeomResult<String> {
    if layers.iter().any(|(p, _)| p.dim != 2) {
        let d = layers.iter().map(|(p, _)| p.dim).find(|&d| d != 2).unwrap();
        return Err(GeomError::UnsupportedDimension(d));
    }
    let xs = layers.iter().flat_map(|(p, _)| p.vertices.iter().map(|v| v[0])).collect::<Vec<_>>();
    let ys = layers.iter().flat_map(|(p, _)| p.vertices.iter().map(|v| v[1])).collect::<Vec<_>>();
    let frame = Frame::fit(xs.iter().copied(), ys.iter().copied());
    let mut out = String::new();
    for (poly, color) in layers {
        let mut d = String::new();
        for (i, v) in poly.vertices.iter().enumerate() {
            let (x, y) = frame.map(v[0], v[1]);
            d.push_str(if i == 0 { "M" } else { " L" });
            d.push_str(&format!(" {} {}", fmt(x), fmt(y)));
        }
        d.push_str(" Z");
        out.push_str(&format!(
            "<path d=\"{d}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n"
        ));
    }
    Ok(document(&out))
}

fn polyline(points: &[(f64, f64)], color: &str) -> String {
    let coords: Vec<String> =
        points.iter().map(|(x, y)| format!("{},{}", fmt(*x), fmt(*y))).collect();
    format!(
        "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n",
        coords.join(" ")
    )
}

fn axes(frame: &Frame, xmin: f64, xmax: f64, ymin: f64, ymax: f64) -> String {
    let (x_axis_a, y_at_zero) = frame.map(xmin, ymin.max(0.0).min(ymax));
    let (x_axis_b, _) = frame.map(xmax, 0.0);
    let mut out = format!(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#999\" stroke-width=\"1\"/>\n",
        fmt(x_axis_a),
        fmt(y_at_zero),
        fmt(x_axis_b),
        fmt(y_at_zero)
    );
    if xmin <= 0.0 && xmax >= 0.0 {
        let (x_at_zero, ya) = frame.map(0.0, ymin);
        let (_, yb) = frame.map(0.0, ymax);
        out.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#999\" stroke-width=\"1\"/>\n",
            fmt(x_at_zero),
            fmt(ya),
            fmt(x_at_zero),
            fmt(yb)
        ));
    }
    out
}

/// Profile polyline (grid vs values) with light axes.
pub fn profile_svg(grid: &[f64], values: &[f64]) -> String {
    let (xmin, xmax) = (grid[0], grid[grid.len() - 1]);
    let ymin = values.iter().copied().fold(f64::INFINITY, f64::min).min(0.0);
    let ymax = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let frame = Frame::fit([xmin, xmax].into_iter(), [ymin, ymax].into_iter());
    let pts: Vec<(f64, f64)> =
        grid.iter().zip(values).map(|(x, y)| frame.map(*x, *y)).collect();
    document(&(axes(&frame, xmin, xmax, ymin, ymax) + &polyline(&pts, "#1f77b4")))
}

/// Cascade trace polyline (step index vs f value).
pub fn trace_svg(values: &[f64]) -> String {
    let grid: Vec<f64> = (0..values.len()).map(|i| i as f64).collect();
    profile_svg(&grid, values)
}
