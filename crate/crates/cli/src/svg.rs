//! SVG rendering of a decomposition.
//!
//! The union is painted in the core colour, then the shell pieces on top; whatever stays
//! dark grey is the core, which matches how its area is defined.

use std::f64::consts::{PI, TAU};
use std::fmt::Write;

use muarr_core::{MuArrangement, Point, RegionDecomposition};

const STYLE: &str = "\
.outer { fill: #ffffff; stroke: none; }
.inner { fill: #d3d3d3; stroke: none; }
.core { fill: #808080; stroke: none; }
.disk { fill: none; stroke: #000000; }
";

const WIDTH: f64 = 800.0;

/// SVG's y axis points down.
fn xy(p: Point) -> (f64, f64) {
    (p.x, -p.y)
}

fn pt(p: Point) -> String {
    let (x, y) = xy(p);
    format!("{x:.6},{y:.6}")
}

pub fn render(arr: &MuArrangement, d: &RegionDecomposition) -> String {
    let disks = arr.disks();
    let (mut lo, mut hi) = (Point::new(f64::INFINITY, f64::INFINITY), Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY));
    for m in disks {
        lo = Point::new(lo.x.min(m.center.x - m.radius), lo.y.min(m.center.y - m.radius));
        hi = Point::new(hi.x.max(m.center.x + m.radius), hi.y.max(m.center.y + m.radius));
    }
    let margin = 0.02 * (hi.x - lo.x).max(hi.y - lo.y);
    let (w, h) = (hi.x - lo.x + 2.0 * margin, hi.y - lo.y + 2.0 * margin);

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0}\" height=\"{:.0}\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\">",
        WIDTH,
        WIDTH * h / w,
        lo.x - margin,
        -hi.y - margin,
        w,
        h
    );
    let _ = writeln!(s, "<style>\n{STYLE}</style>");

    s.push_str("<g id=\"union\">\n");
    for m in disks {
        let (x, y) = xy(m.center);
        let _ = writeln!(s, "<circle class=\"core\" cx=\"{x:.6}\" cy=\"{y:.6}\" r=\"{:.6}\"/>", m.radius);
    }
    s.push_str("</g>\n<g id=\"core\">\n");
    for p in &d.core_polys {
        let points: Vec<String> = p.vertices.iter().map(|&k| pt(disks[k].center)).collect();
        let _ = writeln!(s, "<polygon class=\"core\" points=\"{}\"/>", points.join(" "));
    }
    s.push_str("</g>\n<g id=\"inner-shell\">\n");
    for t in &d.shell {
        let _ = writeln!(
            s,
            "<polygon class=\"inner\" points=\"{} {} {}\"/>",
            pt(disks[t.i].center),
            pt(disks[t.j].center),
            pt(t.q)
        );
    }
    s.push_str("</g>\n<g id=\"outer-shell\">\n");
    for o in &d.outer {
        let m = &disks[o.disk];
        if o.arc.sweep >= TAU - 1e-12 {
            let (x, y) = xy(m.center);
            let _ = writeln!(s, "<circle class=\"outer\" cx=\"{x:.6}\" cy=\"{y:.6}\" r=\"{:.6}\"/>", m.radius);
            continue;
        }
        if o.arc.sweep <= 0.0 {
            continue;
        }
        let large = u8::from(o.arc.sweep > PI);
        // Counterclockwise in the plane is sweep-flag 0 once y is flipped.
        let _ = writeln!(
            s,
            "<path class=\"outer\" d=\"M {} L {} A {r:.6} {r:.6} 0 {large} 0 {} Z\"/>",
            pt(m.center),
            pt(m.point_at(o.arc.start)),
            pt(m.point_at(o.arc.start + o.arc.sweep)),
            r = m.radius
        );
    }
    let _ = writeln!(s, "</g>\n<g id=\"boundaries\" stroke-width=\"{:.6}\">", 1.5 * w / WIDTH);
    for m in disks {
        let (x, y) = xy(m.center);
        let _ = writeln!(s, "<circle class=\"disk\" cx=\"{x:.6}\" cy=\"{y:.6}\" r=\"{:.6}\"/>", m.radius);
    }
    s.push_str("</g>\n</svg>\n");
    s
}
