//! Minimal deterministic SVG writer. Coordinates are printed with two
//! decimals so output is byte-stable across platforms.

use std::fmt::Write;

pub(crate) type Segment = ((f64, f64), (f64, f64));

pub(crate) struct Svg {
    buf: String,
}

impl Svg {
    pub fn new(width: f64, height: f64) -> Self {
        let mut buf = String::new();
        let _ = writeln!(
            buf,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#,
            w = width,
            h = height
        );
        Svg { buf }
    }

    pub fn rect(&mut self, x: f64, y: f64, w: f64, h: f64, fill: &str) {
        let _ = writeln!(
            self.buf,
            r#"<rect x="{x:.2}" y="{y:.2}" width="{w:.2}" height="{h:.2}" fill="{fill}"/>"#
        );
    }

    pub fn line(&mut self, a: (f64, f64), b: (f64, f64), stroke: &str, width: f64, dash: Option<&str>) {
        let dash = dash
            .map(|d| format!(r#" stroke-dasharray="{d}""#))
            .unwrap_or_default();
        let _ = writeln!(
            self.buf,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{stroke}" stroke-width="{width:.2}"{dash}/>"#,
            a.0, a.1, b.0, b.1
        );
    }

    pub fn polyline(&mut self, pts: &[(f64, f64)], stroke: &str, width: f64) {
        let mut points = String::new();
        for (k, (x, y)) in pts.iter().enumerate() {
            if k > 0 {
                points.push(' ');
            }
            let _ = write!(points, "{x:.2},{y:.2}");
        }
        let _ = writeln!(
            self.buf,
            r#"<polyline points="{points}" fill="none" stroke="{stroke}" stroke-width="{width:.2}" stroke-linejoin="round"/>"#
        );
    }

    /// Disconnected segments drawn as a single path.
    pub fn segments(&mut self, segs: &[Segment], stroke: &str, width: f64, dash: Option<&str>) {
        if segs.is_empty() {
            return;
        }
        let mut d = String::new();
        for (a, b) in segs {
            let _ = write!(d, "M{:.2} {:.2}L{:.2} {:.2}", a.0, a.1, b.0, b.1);
        }
        let dash = dash
            .map(|d| format!(r#" stroke-dasharray="{d}""#))
            .unwrap_or_default();
        let _ = writeln!(
            self.buf,
            r#"<path d="{d}" fill="none" stroke="{stroke}" stroke-width="{width:.2}"{dash}/>"#
        );
    }

    pub fn text(&mut self, x: f64, y: f64, size: f64, anchor: &str, content: &str) {
        let _ = writeln!(
            self.buf,
            r#"<text x="{x:.2}" y="{y:.2}" font-family="sans-serif" font-size="{size:.1}" text-anchor="{anchor}">{}</text>"#,
            escape(content)
        );
    }

    pub fn finish(mut self) -> String {
        self.buf.push_str("</svg>\n");
        self.buf
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
