//! Deterministic SVG rendering. Coordinates are rounded for display only.

use std::fmt::Write;

use mcc_core::arrangement::Arrangement;
use mcc_core::{Point, PolygonWithHoles, Rational};
use num_traits::ToPrimitive;

const PALETTE: [&str; 8] = ["#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7"];
const SIZE: f64 = 800.0;

/// Decimal with at most 12 significant digits and no trailing zeros.
pub fn fmt_num(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".into();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    margin: f64,
}

impl Frame {
    fn new(poly: &PolygonWithHoles) -> (Self, f64, f64) {
        let xs: Vec<f64> = poly.outer().iter().map(|p| to_f64(&p.x)).collect();
        let ys: Vec<f64> = poly.outer().iter().map(|p| to_f64(&p.y)).collect();
        let (min_x, max_x) = bounds(&xs);
        let (min_y, max_y) = bounds(&ys);
        let span = (max_x - min_x).max(max_y - min_y).max(f64::MIN_POSITIVE);
        let scale = SIZE / span;
        let margin = 20.0;
        let w = (max_x - min_x) * scale + 2.0 * margin;
        let h = (max_y - min_y) * scale + 2.0 * margin;
        (Frame { min_x, max_y, scale, margin }, w, h)
    }

    fn xy(&self, p: &Point) -> (String, String) {
        let x = (to_f64(&p.x) - self.min_x) * self.scale + self.margin;
        let y = (self.max_y - to_f64(&p.y)) * self.scale + self.margin;
        (fmt_num(x), fmt_num(y))
    }

    fn path(&self, rings: &[&[Point]]) -> String {
        let mut d = String::new();
        for ring in rings {
            for (i, p) in ring.iter().enumerate() {
                let (x, y) = self.xy(p);
                let _ = write!(d, "{}{x} {y} ", if i == 0 { "M" } else { "L" });
            }
            d.push('Z');
        }
        d
    }
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

fn bounds(v: &[f64]) -> (f64, f64) {
    v.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)))
}

pub fn render(poly: &PolygonWithHoles, pieces: &[Vec<Point>], arrangement: Option<&Arrangement<Rational>>) -> String {
    let (frame, w, h) = Frame::new(poly);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{1}" viewBox="0 0 {0} {1}">"#,
        fmt_num(w),
        fmt_num(h)
    );
    let rings: Vec<&[Point]> = poly.rings().iter().map(Vec::as_slice).collect();
    let _ = writeln!(
        out,
        r##"<path d="{}" fill="#f4f4f4" fill-rule="evenodd" stroke="#222" stroke-width="2"/>"##,
        frame.path(&rings)
    );
    for (i, piece) in pieces.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let _ = writeln!(
            out,
            r#"<path d="{}" fill="{color}" fill-opacity="0.35" stroke="{color}" stroke-width="1.5"/>"#,
            frame.path(&[piece.as_slice()])
        );
    }
    if let Some(arr) = arrangement {
        for ext in &arr.extensions {
            let ((x1, y1), (x2, y2)) = (frame.xy(&ext.seg.a), frame.xy(&ext.seg.b));
            let _ = writeln!(
                out,
                r##"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#888" stroke-width="0.6" stroke-dasharray="4 3"/>"##
            );
        }
        for p in &arr.vertices {
            let (x, y) = frame.xy(p);
            let _ = writeln!(out, r##"<circle cx="{x}" cy="{y}" r="2.5" fill="#333"/>"##);
        }
    }
    out.push_str("</svg>\n");
    out
}
