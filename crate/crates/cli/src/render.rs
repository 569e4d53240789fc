//! CSV and SVG renderings of a boundary report. Both read only the report.

use std::fmt::Write as _;

use serde_json::Value;

use crate::error::{CliError, Result};
use crate::report::RunReport;

fn column<'a>(boundary: &'a Value, key: &str) -> Result<Vec<f64>> {
    boundary
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Report(format!("boundary column `{key}` missing")))?
        .iter()
        .map(|v| v.as_f64().ok_or_else(|| CliError::Report(format!("non-numeric entry in `{key}`"))))
        .collect()
}

struct Columns {
    theta: Vec<f64>,
    lambda: Vec<f64>,
    x: Vec<f64>,
    y: Vec<f64>,
}

fn boundary_columns(report: &RunReport) -> Result<Columns> {
    let b = report
        .results
        .get("boundary")
        .ok_or_else(|| CliError::Report("report has no boundary".into()))?;
    let cols = Columns { theta: column(b, "theta")?, lambda: column(b, "lambda")?, x: column(b, "x")?, y: column(b, "y")? };
    let n = cols.theta.len();
    if cols.lambda.len() != n || cols.x.len() != n || cols.y.len() != n {
        return Err(CliError::Report("boundary columns differ in length".into()));
    }
    Ok(cols)
}

fn sci(v: f64) -> String {
    format!("{v:.16e}")
}

/// `theta,lambda,x,y` with 17 significant digits.
pub fn boundary_csv(report: &RunReport) -> Result<String> {
    let cols = boundary_columns(report)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["theta", "lambda", "x", "y"])?;
    for i in 0..cols.theta.len() {
        w.write_record([sci(cols.theta[i]), sci(cols.lambda[i]), sci(cols.x[i]), sci(cols.y[i])])?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Report(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Report(e.to_string()))
}

fn polygon_vertices(report: &RunReport) -> Option<Vec<(f64, f64)>> {
    let verts = report.results.get("poncelet")?.get("vertices")?.as_array()?;
    verts
        .iter()
        .map(|v| {
            let pair = v.as_array()?;
            Some((pair.first()?.as_f64()?, pair.get(1)?.as_f64()?))
        })
        .collect()
}

fn points_attr(points: impl Iterator<Item = (f64, f64)>) -> String {
    let mut s = String::new();
    for (i, (x, y)) in points.enumerate() {
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{x:.6},{:.6}", -y);
    }
    s
}

/// Unit circle, the sampled boundary of `W(T)` and the Poncelet polygon if
/// the report carries one.
pub fn boundary_svg(report: &RunReport) -> Result<String> {
    let cols = boundary_columns(report)?;
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    s.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n",
    );
    s.push_str("  <line x1=\"-1.1\" y1=\"0\" x2=\"1.1\" y2=\"0\" stroke=\"#ccc\" stroke-width=\"0.004\"/>\n");
    s.push_str("  <line x1=\"0\" y1=\"-1.1\" x2=\"0\" y2=\"1.1\" stroke=\"#ccc\" stroke-width=\"0.004\"/>\n");
    s.push_str("  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#000\" stroke-width=\"0.006\"/>\n");
    if let Some(verts) = polygon_vertices(report) {
        let _ = writeln!(
            s,
            "  <polygon points=\"{}\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"0.006\"/>",
            points_attr(verts.into_iter())
        );
    }
    let pts = cols.x.iter().copied().zip(cols.y.iter().copied());
    let closed = pts.clone().chain(pts.clone().take(1));
    let _ = writeln!(
        s,
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"0.008\"/>",
        points_attr(closed)
    );
    s.push_str("</svg>\n");
    Ok(s)
}
