//! Deterministic text output.
//!
//! CSV numbers carry 17 significant digits, which round-trip any `f64`.
//! Runs of a polyline are separated by one blank line. SVG coordinates use a
//! fixed 6 decimals.

use std::fmt::Write as _;
use std::io::{self, Write};

use crate::curves::{Polyline, Run, Sample};
use crate::mechanisms::OscillatorSample;
use crate::smf::PlanePoint;

pub const CURVE_HEADER: &str = "theta,x,y";
pub const OSCILLATOR_HEADER: &str = "t,theta,alpha,x,omega";

/// Formats `v` with 17 significant digits: positional notation for
/// exponents in `[-5, 17)`, scientific otherwise. Negative zero prints as
/// zero.
pub fn fmt_sig17(v: f64) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    if v == 0.0 {
        return "0.0000000000000000".to_string();
    }
    let sci = format!("{v:.16e}");
    let exp: i32 = sci[sci.find('e').expect("exponent") + 1..]
        .parse()
        .expect("integer exponent");
    // the exponent is taken after rounding, so 9.99…95 already reads e1
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp) as usize;
        format!("{v:.decimals$}")
    } else {
        sci
    }
}

fn write_row<W: Write>(out: &mut W, values: &[f64]) -> io::Result<()> {
    let mut line = String::new();
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            line.push(',');
        }
        line.push_str(&fmt_sig17(*v));
    }
    line.push('\n');
    out.write_all(line.as_bytes())
}

/// Writes `theta,x,y` rows, one blank line between runs.
pub fn write_polyline_csv<W: Write>(polyline: &Polyline, out: &mut W) -> io::Result<()> {
    writeln!(out, "{CURVE_HEADER}")?;
    let mut first = true;
    for run in polyline.runs.iter().filter(|r| !r.samples.is_empty()) {
        if !first {
            out.write_all(b"\n")?;
        }
        first = false;
        for s in &run.samples {
            write_row(out, &[s.theta, s.point.x, s.point.y])?;
        }
    }
    Ok(())
}

pub fn write_oscillator_csv<W: Write>(samples: &[OscillatorSample], out: &mut W) -> io::Result<()> {
    writeln!(out, "{OSCILLATOR_HEADER}")?;
    for s in samples {
        write_row(out, &[s.t, s.theta, s.alpha, s.x, s.omega])?;
    }
    Ok(())
}

/// Generic series writer. `blocks` are separated by a blank line.
pub fn write_series_csv<W: Write>(
    header: &[&str],
    blocks: &[Vec<Vec<f64>>],
    out: &mut W,
) -> io::Result<()> {
    writeln!(out, "{}", header.join(","))?;
    let mut first = true;
    for block in blocks.iter().filter(|b| !b.is_empty()) {
        if !first {
            out.write_all(b"\n")?;
        }
        first = false;
        for row in block {
            write_row(out, row)?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("missing or unexpected header (expected `{CURVE_HEADER}`)")]
    Header,
    #[error("line {line}: {reason}")]
    Row { line: usize, reason: String },
}

/// Reads back what [`write_polyline_csv`] produced. Closedness is not part
/// of the CSV, so every parsed run is open.
pub fn parse_polyline_csv(text: &str) -> Result<Polyline, ParseError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h == CURVE_HEADER => {}
        _ => return Err(ParseError::Header),
    }
    let mut runs = Vec::new();
    let mut current = Run::default();
    for (i, line) in lines {
        if line.is_empty() {
            if !current.samples.is_empty() {
                runs.push(std::mem::take(&mut current));
            }
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(ParseError::Row {
                line: i + 1,
                reason: format!("expected 3 fields, found {}", fields.len()),
            });
        }
        let mut vals = [0.0; 3];
        for (v, f) in vals.iter_mut().zip(&fields) {
            *v = f.parse().map_err(|e| ParseError::Row {
                line: i + 1,
                reason: format!("`{f}`: {e}"),
            })?;
        }
        current.samples.push(Sample {
            theta: vals[0],
            point: PlanePoint::new(vals[1], vals[2]),
        });
    }
    if !current.samples.is_empty() {
        runs.push(current);
    }
    Ok(Polyline { runs })
}

/// `(min_x, min_y, width, height)` of an SVG viewBox in data coordinates
/// (y up).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ViewBox {
    pub min_x: f64,
    pub min_y: f64,
    pub width: f64,
    pub height: f64,
}

/// Data bounding box grown on every side by 5% of the largest absolute
/// coordinate. A degenerate (single-point) box gets a unit margin.
pub fn view_box<I: IntoIterator<Item = PlanePoint>>(points: I) -> ViewBox {
    let (mut lo_x, mut lo_y) = (f64::INFINITY, f64::INFINITY);
    let (mut hi_x, mut hi_y) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in points {
        lo_x = lo_x.min(p.x);
        lo_y = lo_y.min(p.y);
        hi_x = hi_x.max(p.x);
        hi_y = hi_y.max(p.y);
    }
    if !lo_x.is_finite() {
        (lo_x, lo_y, hi_x, hi_y) = (0.0, 0.0, 0.0, 0.0);
    }
    let scale = [lo_x, lo_y, hi_x, hi_y]
        .iter()
        .fold(0.0f64, |m, v| m.max(v.abs()));
    let mut pad = 0.05 * scale;
    if hi_x - lo_x + pad == 0.0 || hi_y - lo_y + pad == 0.0 {
        pad = pad.max(1.0);
    }
    ViewBox {
        min_x: lo_x - pad,
        min_y: lo_y - pad,
        width: hi_x - lo_x + 2.0 * pad,
        height: hi_y - lo_y + 2.0 * pad,
    }
}

fn fmt6(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

/// Renders the polyline as a standalone SVG document: one `<path>` per run
/// (closed runs end in `Z`), y axis pointing up.
pub fn polyline_svg(polyline: &Polyline) -> String {
    let vb = view_box(polyline.points());
    let stroke = 0.004 * vb.width.max(vb.height);
    let mut svg = String::new();
    // SVG y grows downwards, so the data is mirrored through y = 0
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        fmt6(vb.min_x),
        fmt6(-(vb.min_y + vb.height)),
        fmt6(vb.width),
        fmt6(vb.height)
    );
    for run in polyline.runs.iter().filter(|r| !r.samples.is_empty()) {
        let mut d = String::new();
        for (i, s) in run.samples.iter().enumerate() {
            let _ = write!(
                d,
                "{}{} {}",
                if i == 0 { "M" } else { " L" },
                fmt6(s.point.x),
                fmt6(-s.point.y)
            );
        }
        if run.closed {
            d.push_str(" Z");
        }
        let _ = writeln!(
            svg,
            r#"<path d="{d}" fill="none" stroke="black" stroke-width="{}"/>"#,
            fmt6(stroke)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

pub fn write_polyline_svg<W: Write>(polyline: &Polyline, out: &mut W) -> io::Result<()> {
    out.write_all(polyline_svg(polyline).as_bytes())
}
