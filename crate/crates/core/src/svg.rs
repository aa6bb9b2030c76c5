//! SVG drawings of the polygon decomposition.
//!
//! Faces sit left to right in canonical order, each a regular polygon of
//! fixed radius traversed clockwise. Every side carries its arc name
//! outside the polygon as read along the face (`a5'` for a reversed arc) and
//! an arrowhead at 58% of its length pointing along the arc's own
//! orientation, i.e. against the traversal for a reversed arc. Bigons are
//! drawn as lenses.
//! Punctured faces get a dot at the centre.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::encoding::{ArcLabel, Curve};
use crate::verifier::GluedSurface;

const RADIUS: f64 = 70.0;
const GAP: f64 = 60.0;
const MARGIN: f64 = 40.0;
const LABEL_OFFSET: f64 = 14.0;
const ARROW_AT: f64 = 0.58;
const ARROW_LEN: f64 = 9.0;
const ARROW_HALF_WIDTH: f64 = 4.0;

#[derive(Clone, Copy)]
struct Pt {
    x: f64,
    y: f64,
}

impl Pt {
    fn new(x: f64, y: f64) -> Self {
        Pt { x, y }
    }

    fn lerp(self, o: Pt, t: f64) -> Pt {
        Pt::new(self.x + (o.x - self.x) * t, self.y + (o.y - self.y) * t)
    }

    fn add(self, o: Pt, s: f64) -> Pt {
        Pt::new(self.x + o.x * s, self.y + o.y * s)
    }

    fn unit_to(self, o: Pt) -> Pt {
        let (dx, dy) = (o.x - self.x, o.y - self.y);
        let len = (dx * dx + dy * dy).sqrt();
        Pt::new(dx / len, dy / len)
    }
}

fn colour(curve: Curve) -> &'static str {
    match curve {
        Curve::Alpha => "darkred",
        Curve::Beta => "blue",
    }
}

/// Outward normal of a side traversed clockwise on screen.
fn outward(dir: Pt) -> Pt {
    Pt::new(dir.y, -dir.x)
}

fn arrowhead(out: &mut String, tip_at: Pt, dir: Pt, stroke: &str) {
    let tip = tip_at.add(dir, ARROW_LEN / 2.0);
    let back = tip_at.add(dir, -ARROW_LEN / 2.0);
    let normal = outward(dir);
    let l = back.add(normal, ARROW_HALF_WIDTH);
    let r = back.add(normal, -ARROW_HALF_WIDTH);
    let _ = writeln!(
        out,
        r#"    <polygon points="{:.2},{:.2} {:.2},{:.2} {:.2},{:.2}" fill="{stroke}"/>"#,
        tip.x, tip.y, l.x, l.y, r.x, r.y
    );
}

fn label(out: &mut String, at: Pt, l: ArcLabel) {
    let _ = writeln!(
        out,
        r#"    <text x="{:.2}" y="{:.2}" text-anchor="middle" dominant-baseline="middle" font-family="serif" font-size="13">{}</text>"#,
        at.x, at.y, l
    );
}

fn face(out: &mut String, center: Pt, word: &[ArcLabel], punctured: bool) {
    let k = word.len();
    let start = -PI / 2.0 - PI / k as f64;
    let corner = |m: usize| {
        let theta = start + 2.0 * PI * (m % k) as f64 / k as f64;
        Pt::new(
            center.x + RADIUS * theta.cos(),
            center.y + RADIUS * theta.sin(),
        )
    };
    out.push_str("  <g>\n");
    for (m, &l) in word.iter().enumerate() {
        let (from, to) = (corner(m), corner(m + 1));
        let dir = from.unit_to(to);
        let normal = outward(dir);
        let stroke = colour(l.curve);
        // arrows follow the arc, not the traversal
        let sign = if l.inverted { -1.0 } else { 1.0 };
        let arrow_dir = Pt::new(dir.x * sign, dir.y * sign);
        if k == 2 {
            let mid = from.lerp(to, 0.5);
            let ctrl = mid.add(normal, RADIUS * 0.9);
            let _ = writeln!(
                out,
                r#"    <path d="M {:.2} {:.2} Q {:.2} {:.2} {:.2} {:.2}" fill="none" stroke="{stroke}" stroke-width="1.5"/>"#,
                from.x, from.y, ctrl.x, ctrl.y, to.x, to.y
            );
            let t = if l.inverted { 1.0 - ARROW_AT } else { ARROW_AT };
            let a = from.lerp(ctrl, t);
            let b = ctrl.lerp(to, t);
            let on_curve = a.lerp(b, t);
            let tangent = a.unit_to(b);
            arrowhead(
                out,
                on_curve,
                Pt::new(tangent.x * sign, tangent.y * sign),
                stroke,
            );
            label(out, mid.add(normal, RADIUS * 0.45 + LABEL_OFFSET), l);
        } else {
            let _ = writeln!(
                out,
                r#"    <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{stroke}" stroke-width="1.5"/>"#,
                from.x, from.y, to.x, to.y
            );
            let t = if l.inverted { 1.0 - ARROW_AT } else { ARROW_AT };
            arrowhead(out, from.lerp(to, t), arrow_dir, stroke);
            label(out, from.lerp(to, 0.5).add(normal, LABEL_OFFSET), l);
        }
    }
    if punctured {
        let _ = writeln!(
            out,
            r#"    <circle cx="{:.2}" cy="{:.2}" r="3" fill="black"/>"#,
            center.x, center.y
        );
    }
    out.push_str("  </g>\n");
}

/// Renders the polygons of `surface` as a standalone SVG document.
pub fn render_svg(surface: &GluedSurface) -> String {
    let faces = surface.faces();
    let cell = 2.0 * RADIUS + GAP;
    let width = 2.0 * MARGIN + cell * faces.len() as f64 - GAP;
    let height = 2.0 * (MARGIN + RADIUS);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(
        out,
        r#"  <rect x="0" y="0" width="{width:.0}" height="{height:.0}" fill="white"/>"#
    );
    for (idx, (word, &punctured)) in faces.iter().zip(surface.punctured()).enumerate() {
        let center = Pt::new(MARGIN + RADIUS + cell * idx as f64, MARGIN + RADIUS);
        face(&mut out, center, word.labels(), punctured);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::glue;

    const G2_SIGMA: &str = "(1,2,19,14)(3,8,15,16,9,4,17,18,5,10,11,12)(6,13,20,7)";

    fn texts(svg: &str) -> Vec<String> {
        svg.split("<text ")
            .skip(1)
            .map(|s| {
                let body = &s[s.find('>').unwrap() + 1..];
                body[..body.find("</text>").unwrap()].to_string()
            })
            .collect()
    }

    #[test]
    fn genus_two_svg_labels() {
        let surface = glue(&G2_SIGMA.parse().unwrap(), 3).unwrap();
        let svg = render_svg(&surface);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
        let mut labels = texts(&svg);
        assert_eq!(labels.len(), 20);
        labels.sort();
        // every directed label appears exactly once
        let mut want: Vec<String> = (1..=5)
            .flat_map(|i| [format!("a{i}"), format!("b{i}")])
            .flat_map(|s| [format!("{s}'"), s])
            .collect();
        want.sort();
        assert_eq!(labels, want);
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches("<polygon").count(), 20);
        assert_eq!(svg.matches("<g>").count(), 3);
    }

    #[test]
    fn bigons_are_lenses() {
        let surface = glue(&"(1,2)(3,6)(4,5)(7,8)".parse().unwrap(), 4).unwrap();
        let svg = render_svg(&surface);
        assert_eq!(svg.matches("<path").count(), 8);
        assert_eq!(texts(&svg).len(), 8);
        assert_eq!(svg, render_svg(&surface));
    }
}
