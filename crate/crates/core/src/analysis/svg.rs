use std::fmt::Write as _;
use std::path::Path;

use crate::error::AnalysisError;
use crate::geometry::Vec2;

/// A closed curve to draw, with the CSS class of its stroke.
#[derive(Clone, Debug, PartialEq)]
pub struct SvgObject {
    pub points: Vec<Vec2>,
    pub class: String,
}

impl SvgObject {
    pub fn new(points: Vec<Vec2>, class: impl Into<String>) -> Self {
        Self {
            points,
            class: class.into(),
        }
    }
}

const STYLE: &str = "path{fill:none;stroke-width:0.004;vector-effect:non-scaling-stroke}\
.polygon{stroke:#1f4e9c}.limit{stroke:#c0392b}.hull{stroke:#2e8b57}.shape{stroke:#7d3c98}\
.grid{stroke:#dddddd}";

/// Standalone SVG document; identical input gives identical bytes.
///
/// The view box fits all objects with a 5% margin, and the y-axis points up.
/// With `grid`, integer gridlines are drawn under the objects.
pub fn svg_document(objects: &[SvgObject], grid: bool) -> Result<String, AnalysisError> {
    let pts = || objects.iter().flat_map(|o| o.points.iter());
    if pts().next().is_none() {
        return Err(AnalysisError::EmptyRender);
    }
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in pts() {
        x0 = x0.min(p.x);
        x1 = x1.max(p.x);
        y0 = y0.min(p.y);
        y1 = y1.max(p.y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-12);
    let m = 0.05 * span;
    let (vx, vy, vw, vh) = (x0 - m, -(y1 + m), x1 - x0 + 2.0 * m, y1 - y0 + 2.0 * m);

    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{vx:.6} {vy:.6} {vw:.6} {vh:.6}\" width=\"800\" height=\"{:.0}\">",
        800.0 * vh / vw
    );
    let _ = writeln!(s, "<style>{STYLE}</style>");
    if grid {
        let mut d = String::new();
        for x in (x0 - m).ceil() as i64..=(x1 + m).floor() as i64 {
            let _ = write!(d, "M{x} {:.6}V{:.6}", vy, vy + vh);
        }
        for y in (y0 - m).ceil() as i64..=(y1 + m).floor() as i64 {
            let _ = write!(d, "M{:.6} {}H{:.6}", vx, -y, vx + vw);
        }
        let _ = writeln!(s, "<path class=\"grid\" d=\"{d}\"/>");
    }
    for o in objects {
        let mut d = String::new();
        for (i, p) in o.points.iter().enumerate() {
            // `0.0 - y` avoids printing negative zero.
            let _ = write!(d, "{}{:.6} {:.6}", if i == 0 { "M" } else { "L" }, p.x, 0.0 - p.y);
        }
        d.push('Z');
        let _ = writeln!(s, "<path class=\"{}\" d=\"{d}\"/>", o.class);
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// Writes [`svg_document`] to `path`. Nothing is written on error.
pub fn render_svg(objects: &[SvgObject], path: &Path, grid: bool) -> Result<(), AnalysisError> {
    let doc = svg_document(objects, grid)?;
    std::fs::write(path, doc).map_err(|source| AnalysisError::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> Vec<Vec2> {
        vec![
            Vec2::new(0.0, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(0.0, 1.0),
        ]
    }

    #[test]
    fn square_is_one_closed_path() {
        let doc = svg_document(&[SvgObject::new(unit_square(), "polygon")], false).unwrap();
        assert_eq!(doc.matches("<path").count(), 1);
        let d = doc.split("d=\"").nth(1).unwrap();
        assert_eq!(d.matches(['M', 'L']).count(), 4);
        assert!(d.starts_with("M0.000000 0.000000L1.000000 0.000000L1.000000 -1.000000"));
        assert!(doc.contains("viewBox=\"-0.050000 -1.050000 1.100000 1.100000\""));
    }

    #[test]
    fn overlay_has_distinct_classes() {
        let circle: Vec<Vec2> = (0..64).map(|k| crate::geometry::unit(k as f64 * 0.1)).collect();
        let objects = [SvgObject::new(unit_square(), "polygon"), SvgObject::new(circle, "limit")];
        let doc = svg_document(&objects, true).unwrap();
        assert!(doc.contains("class=\"polygon\""));
        assert!(doc.contains("class=\"limit\""));
        assert!(doc.contains("class=\"grid\""));
        assert_eq!(doc, svg_document(&objects, true).unwrap());
    }

    #[test]
    fn empty_list_writes_nothing() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.svg");
        assert!(matches!(render_svg(&[], &path, false), Err(AnalysisError::EmptyRender)));
        assert!(!path.exists());
        render_svg(&[SvgObject::new(unit_square(), "polygon")], &path, false).unwrap();
        assert!(path.exists());
    }
}
