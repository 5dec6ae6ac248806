//! SVG output for level sets and arc approximations.
//!
//! The unit triangle is drawn apex up: `P1` bottom left, `P2` bottom right,
//! `P3` on top. Coordinates are printed with three decimals so output is
//! byte-for-byte reproducible.

use std::fmt::Write as _;

use crate::arcs::ArcApprox;
use crate::geometry::{vertices, BaryPoint, CartPoint};
use crate::index::Orient;
use crate::pattern::Color;
use crate::substitute::LevelSets;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    /// Canvas width in pixels, equal to the side of the triangle.
    pub side: u32,
    /// Fills as six hex digits, indexed by `[color][orientation]`.
    pub white_up: String,
    pub white_down: String,
    pub yellow_up: String,
    pub yellow_down: String,
    pub background: String,
    pub arc_color: String,
    pub arc_width: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            side: 1000,
            white_up: "d9d9d9".into(),
            white_down: "f2c94c".into(),
            yellow_up: "f2c94c".into(),
            yellow_down: "d9d9d9".into(),
            background: "ffffff".into(),
            arc_color: "c0392b".into(),
            arc_width: 2.0,
        }
    }
}

fn is_hex6(s: &str) -> bool {
    s.len() == 6 && s.bytes().all(|b| b.is_ascii_hexdigit())
}

impl RenderStyle {
    /// Positive canvas, positive stroke and well-formed colours.
    pub fn is_valid(&self) -> bool {
        self.side > 0
            && self.arc_width > 0.0
            && [
                &self.white_up,
                &self.white_down,
                &self.yellow_up,
                &self.yellow_down,
                &self.background,
                &self.arc_color,
            ]
            .iter()
            .all(|c| is_hex6(c))
    }

    fn fill(&self, color: Color, orient: Orient) -> &str {
        match (color, orient) {
            (Color::White, Orient::Up) => &self.white_up,
            (Color::White, Orient::Down) => &self.white_down,
            (Color::Yellow, Orient::Up) => &self.yellow_up,
            (Color::Yellow, Orient::Down) => &self.yellow_down,
        }
    }

    fn height(&self) -> f64 {
        f64::from(self.side) * 3f64.sqrt() / 2.0
    }

    fn pixel(&self, p: CartPoint) -> (f64, f64) {
        let side = f64::from(self.side);
        (p.x * side, self.height() - p.y * side)
    }

    fn coords(&self, pts: &[BaryPoint]) -> String {
        pts.iter()
            .map(|p| {
                let (x, y) = self.pixel(p.to_cart());
                format!("{x:.3},{y:.3}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// One `polygon` per triangle of `ls`, then one `polyline` per overlay.
pub fn render_svg(ls: &LevelSets, style: &RenderStyle, overlays: &[ArcApprox]) -> String {
    let width = style.side;
    let height = style.height();
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height:.3}" viewBox="0 0 {width} {height:.3}">"#
    );
    let _ = writeln!(
        out,
        r##"<rect x="0" y="0" width="{width}" height="{height:.3}" fill="#{}"/>"##,
        style.background
    );
    let s = ls.scale();
    for t in ls.iter() {
        let _ = writeln!(
            out,
            r##"<polygon points="{}" fill="#{}"/>"##,
            style.coords(&vertices(t, s)),
            style.fill(ls.color, t.orient)
        );
    }
    for a in overlays {
        let _ = writeln!(
            out,
            r##"<polyline points="{}" fill="none" stroke="#{}" stroke-width="{:.3}"/>"##,
            style.coords(&a.polyline),
            style.arc_color,
            style.arc_width
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arcs::refine_arc;
    use crate::index::Pair;
    use crate::pattern::parse_system;
    use crate::substitute::substitute;

    #[test]
    fn counts_elements() {
        let sys = parse_system(include_str!("../examples/ex1.pat")).unwrap();
        let style = RenderStyle::default();
        let ls = substitute(&sys, Color::White, 2).unwrap();
        let svg = render_svg(&ls, &style, &[]);
        assert_eq!(svg.matches("<polygon").count(), 81);

        let ls = substitute(&sys, Color::White, 1).unwrap();
        let arc = refine_arc(&sys, Color::White, Pair::P12, 1).unwrap();
        let svg = render_svg(&ls, &style, &[arc]);
        assert_eq!(svg.matches("<polygon").count(), 9);
        assert_eq!(svg.matches("<polyline").count(), 1);
        let line = svg.lines().find(|l| l.starts_with("<polyline")).unwrap();
        let points = line.split('"').nth(1).unwrap();
        assert_eq!(points.split(' ').count(), 8);
        assert!(svg.rfind("<polygon").unwrap() < svg.find("<polyline").unwrap());
    }

    #[test]
    fn empty_set_draws_background_only() {
        let svg = render_svg(
            &LevelSets::empty(4, Color::White),
            &RenderStyle::default(),
            &[],
        );
        assert_eq!(svg.matches("<rect").count(), 1);
        assert!(!svg.contains("<polygon") && !svg.contains("<polyline"));
    }

    #[test]
    fn apex_is_on_top() {
        let style = RenderStyle {
            side: 100,
            ..RenderStyle::default()
        };
        let (x, y) = style.pixel(BaryPoint::vertex(2).to_cart());
        assert!((x - 50.0).abs() < 1e-9 && y.abs() < 1e-9);
        let (x, y) = style.pixel(BaryPoint::vertex(0).to_cart());
        assert!(x.abs() < 1e-9 && (y - style.height()).abs() < 1e-9);
    }

    #[test]
    fn style_validation() {
        assert!(RenderStyle::default().is_valid());
        let bad = RenderStyle {
            background: "#fff".into(),
            ..RenderStyle::default()
        };
        assert!(!bad.is_valid());
    }
}
