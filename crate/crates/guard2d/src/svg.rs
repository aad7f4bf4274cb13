//! SVG rendering of deployments: polygon outline, translucent coverage
//! discs, center crosshairs, and optionally the sample dots.
//!
//! Output is byte-stable for identical inputs: fixed float formatting, one
//! element per line, deterministic ordering. Coordinates stay in workspace
//! units; a `scale(1,-1)` group flips the y-axis for display.

use crate::deployment::Deployment;
use crate::geom::{PolygonSet, Ring};
use crate::sampling::SampleSet;
use std::fmt::Write;

fn fmt(v: f64) -> String {
    format!("{v:.6}")
}

fn ring_path(ring: &Ring, out: &mut String) {
    for (i, v) in ring.vertices().iter().enumerate() {
        let op = if i == 0 { 'M' } else { 'L' };
        let _ = write!(out, "{op} {} {} ", fmt(v.x), fmt(v.y));
    }
    out.push('Z');
}

/// Renders a deployment over its workspace. `samples`, when given, are
/// drawn as small dots.
pub fn render(poly: &PolygonSet, deployment: &Deployment, samples: Option<&SampleSet>) -> String {
    let (mut lo, mut hi) = poly.bbox();
    for c in &deployment.centers {
        lo.x = lo.x.min(c.x - deployment.radius);
        lo.y = lo.y.min(c.y - deployment.radius);
        hi.x = hi.x.max(c.x + deployment.radius);
        hi.y = hi.y.max(c.y + deployment.radius);
    }
    let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-6);
    let margin = 0.05 * span;
    let min_x = lo.x - margin;
    let width = hi.x - lo.x + 2.0 * margin;
    let height = hi.y - lo.y + 2.0 * margin;
    // The y-flip maps y to -y, so the visible vertical range is [-hi.y, -lo.y].
    let min_y = -hi.y - margin;
    let stroke = span / 300.0;
    let cross = span / 80.0;
    let dot = span / 250.0;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        fmt(min_x),
        fmt(min_y),
        fmt(width),
        fmt(height)
    );
    let _ = writeln!(svg, "<g transform=\"scale(1,-1)\">");

    let mut path = String::new();
    for ring in poly.rings() {
        ring_path(ring, &mut path);
        path.push(' ');
    }
    let _ = writeln!(
        svg,
        "<path d=\"{}\" fill=\"#e8e4d8\" stroke=\"#44403c\" stroke-width=\"{}\" fill-rule=\"evenodd\"/>",
        path.trim_end(),
        fmt(stroke)
    );

    for c in &deployment.centers {
        let _ = writeln!(
            svg,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#2c7fb8\" fill-opacity=\"0.25\" stroke=\"#2c7fb8\" stroke-width=\"{}\"/>",
            fmt(c.x),
            fmt(c.y),
            fmt(deployment.radius),
            fmt(stroke)
        );
    }
    for c in &deployment.centers {
        let _ = writeln!(
            svg,
            "<path d=\"M {} {} L {} {} M {} {} L {} {}\" stroke=\"#b30000\" stroke-width=\"{}\"/>",
            fmt(c.x - cross),
            fmt(c.y),
            fmt(c.x + cross),
            fmt(c.y),
            fmt(c.x),
            fmt(c.y - cross),
            fmt(c.x),
            fmt(c.y + cross),
            fmt(stroke)
        );
    }
    if let Some(s) = samples {
        for p in &s.points {
            let _ = writeln!(
                svg,
                "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#1a1a1a\"/>",
                fmt(p.x - dot / 2.0),
                fmt(p.y - dot / 2.0),
                fmt(dot),
                fmt(dot)
            );
        }
    }
    svg.push_str("</g>\n</svg>\n");
    svg
}
