//! Text output: fixed-width number formatting, CSV rows and SVG plots.

use std::fmt::Write as _;

/// 17 significant digits in scientific notation; bit-stable across runs.
pub fn sig17(v: f64) -> String {
    format!("{v:.16e}")
}

/// Shortest round-trip form, with negative zero printed as `0`.
pub fn short(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else {
        format!("{v}")
    }
}

pub struct Csv {
    buf: String,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        let mut buf = header.join(",");
        buf.push('\n');
        Self { buf }
    }

    pub fn row<I, T>(&mut self, cells: I)
    where
        I: IntoIterator<Item = T>,
        T: AsRef<str>,
    {
        let mut first = true;
        for cell in cells {
            if !first {
                self.buf.push(',');
            }
            first = false;
            self.buf.push_str(cell.as_ref());
        }
        self.buf.push('\n');
    }

    pub fn finish(self) -> String {
        self.buf
    }
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 40.0;

/// A polyline of `(x, y)` samples with the coordinate axes drawn where they
/// fall inside the plotted range. Non-finite samples break the line.
pub fn svg_plot(title: &str, points: &[(f64, f64)]) -> String {
    let finite: Vec<&(f64, f64)> = points.iter().filter(|(x, y)| x.is_finite() && y.is_finite()).collect();
    let (mut x0, mut x1) = bounds(finite.iter().map(|p| p.0));
    let (mut y0, mut y1) = bounds(finite.iter().map(|p| p.1));
    if x1 - x0 <= 0.0 {
        x0 -= 0.5;
        x1 += 0.5;
    }
    if y1 - y0 <= 0.0 {
        y0 -= 0.5;
        y1 += 0.5;
    }
    let pad = 0.05 * (y1 - y0);
    let (y0, y1) = (y0 - pad, y1 + pad);
    let sx = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
    let sy = |y: f64| HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{MARGIN}" y="{:.1}" font-family="monospace" font-size="14">{}</text>"#,
        MARGIN * 0.6,
        escape(title)
    );
    let axis_y = if y0 <= 0.0 && 0.0 <= y1 { 0.0 } else { y0 };
    let axis_x = if x0 <= 0.0 && 0.0 <= x1 { 0.0 } else { x0 };
    let _ = writeln!(
        s,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gray"/>"#,
        sx(x0),
        sy(axis_y),
        sx(x1),
        sy(axis_y)
    );
    let _ = writeln!(
        s,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gray"/>"#,
        sx(axis_x),
        sy(y0),
        sx(axis_x),
        sy(y1)
    );
    for (label, x, y, anchor) in [
        (short(x0), sx(x0), HEIGHT - MARGIN * 0.4, "start"),
        (short(x1), sx(x1), HEIGHT - MARGIN * 0.4, "end"),
        (format!("{:.4}", y1), MARGIN * 0.2, sy(y1) + 4.0, "start"),
        (format!("{:.4}", y0), MARGIN * 0.2, sy(y0) + 4.0, "start"),
    ] {
        let _ = writeln!(
            s,
            r#"<text x="{x:.2}" y="{y:.2}" font-family="monospace" font-size="10" text-anchor="{anchor}">{label}</text>"#
        );
    }

    let mut segment: Vec<String> = Vec::new();
    let flush = |segment: &mut Vec<String>, s: &mut String| {
        if !segment.is_empty() {
            let _ = writeln!(
                s,
                r#"<polyline fill="none" stroke="steelblue" stroke-width="1.5" points="{}"/>"#,
                segment.join(" ")
            );
            segment.clear();
        }
    };
    for &(x, y) in points {
        if x.is_finite() && y.is_finite() {
            segment.push(format!("{:.2},{:.2}", sx(x), sy(y)));
        } else {
            flush(&mut segment, &mut s);
        }
    }
    flush(&mut segment, &mut s);
    s.push_str("</svg>\n");
    s
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if lo.is_finite() {
        (lo, hi)
    } else {
        (0.0, 0.0)
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
