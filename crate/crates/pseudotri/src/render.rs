//! Schematic SVG rendering: vertices on a circle, edges as chords, faces
//! as translucent midpoint polygons tinted by surface role, curves and
//! shadow arcs colored by family.  The drawings are combinatorial
//! schematics, not geometric embeddings.

use std::fmt::Write as _;

use crate::cell::{Complex, Role};
use crate::curve::Family;
use crate::diagram::Diagram;
use crate::format::{Content, DiagramFile};
use crate::shadow::{LinkDiagram, PseudoShadow};

const SIZE: f64 = 640.0;
const CENTER: f64 = SIZE / 2.0;
const RADIUS: f64 = SIZE / 2.0 - 60.0;

/// Stroke color for a curve family.
pub fn family_color(f: Family) -> &'static str {
    match f {
        Family::Alpha(0) => "#c0392b",
        Family::Alpha(1) => "#e74c3c",
        Family::Alpha(_) => "#f1948a",
        Family::Delta(0) => "#1f618d",
        Family::Delta(1) => "#2874a6",
        Family::Delta(_) => "#5dade2",
        Family::Tau(0) => "#b9770e",
        Family::Tau(1) => "#d68910",
        Family::Tau(_) => "#f5b041",
        Family::Ell(0) => "#117a65",
        Family::Ell(1) => "#16a085",
        Family::Ell(_) => "#48c9b0",
    }
}

/// Fill color for a surface role.
pub fn role_color(r: Role) -> &'static str {
    match r {
        Role::C => "#d5d8dc",
        Role::S(0) => "#fadbd8",
        Role::S(1) => "#d6eaf8",
        Role::S(2) => "#d5f5e3",
        Role::S(_) => "#fdebd0",
    }
}

fn point(i: usize, n: usize, radius: f64) -> (f64, f64) {
    let t = 2.0 * std::f64::consts::PI * i as f64 / n.max(1) as f64;
    (CENTER + radius * t.cos(), CENTER + radius * t.sin())
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

struct Svg {
    body: String,
}

impl Svg {
    fn new(title: &str) -> Svg {
        let mut body = String::new();
        let _ = writeln!(
            body,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{s}\" height=\"{s}\" \
             viewBox=\"0 0 {s} {s}\">",
            s = SIZE
        );
        let _ = writeln!(
            body,
            "<rect width=\"{s}\" height=\"{s}\" fill=\"white\"/>\
             <text x=\"12\" y=\"24\" font-family=\"monospace\" font-size=\"16\">{}</text>",
            esc(title),
            s = SIZE
        );
        Svg { body }
    }

    fn line(&mut self, a: (f64, f64), b: (f64, f64), color: &str, width: f64, dash: bool) {
        let _ = writeln!(
            self.body,
            "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"{}\" \
             stroke-width=\"{:.1}\"{}/>",
            a.0,
            a.1,
            b.0,
            b.1,
            color,
            width,
            if dash { " stroke-dasharray=\"6 4\"" } else { "" }
        );
    }

    /// Chord bowed sideways so parallel edges stay distinguishable.
    fn bow(&mut self, a: (f64, f64), b: (f64, f64), off: f64, color: &str, width: f64) {
        let mx = (a.0 + b.0) / 2.0;
        let my = (a.1 + b.1) / 2.0;
        let dx = b.0 - a.0;
        let dy = b.1 - a.1;
        let len = (dx * dx + dy * dy).sqrt().max(1.0);
        let cx = mx - dy / len * off;
        let cy = my + dx / len * off;
        let _ = writeln!(
            self.body,
            "<path d=\"M {:.1} {:.1} Q {:.1} {:.1} {:.1} {:.1}\" fill=\"none\" \
             stroke=\"{}\" stroke-width=\"{:.1}\"/>",
            a.0, a.1, cx, cy, b.0, b.1, color, width
        );
    }

    fn polygon(&mut self, pts: &[(f64, f64)], fill: &str) {
        if pts.len() < 3 {
            return;
        }
        let coords: Vec<String> =
            pts.iter().map(|p| format!("{:.1},{:.1}", p.0, p.1)).collect();
        let _ = writeln!(
            self.body,
            "<polygon points=\"{}\" fill=\"{}\" fill-opacity=\"0.5\" stroke=\"none\"/>",
            coords.join(" "),
            fill
        );
    }

    fn dot(&mut self, p: (f64, f64), r: f64, color: &str) {
        let _ = writeln!(
            self.body,
            "<circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"{:.1}\" fill=\"{}\"/>",
            p.0, p.1, r, color
        );
    }

    fn label(&mut self, p: (f64, f64), text: &str, color: &str) {
        let _ = writeln!(
            self.body,
            "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"11\" \
             fill=\"{}\">{}</text>",
            p.0,
            p.1,
            color,
            esc(text)
        );
    }

    fn finish(mut self) -> String {
        self.body.push_str("</svg>\n");
        self.body
    }
}

fn edge_midpoint(cx: &Complex, e: usize, n: usize) -> (f64, f64) {
    let (t, h) = cx.edges[e];
    let a = point(t as usize, n, RADIUS);
    let b = point(h as usize, n, RADIUS);
    ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0)
}

fn draw_diagram(svg: &mut Svg, d: &Diagram) {
    let cx = &d.cx;
    let n = cx.n_vertices.max(1);
    // Faces first, as translucent polygons over their edge midpoints.
    for f in &cx.faces {
        let pts: Vec<(f64, f64)> = f
            .walk
            .iter()
            .map(|dt| edge_midpoint(cx, dt.edge(), n))
            .collect();
        svg.polygon(&pts, role_color(f.role));
    }
    // Multi-edges between the same vertex pair get increasing bows.
    let mut seen: std::collections::BTreeMap<(usize, usize), usize> =
        std::collections::BTreeMap::new();
    for (e, &(t, h)) in cx.edges.iter().enumerate() {
        let key = (t.min(h), t.max(h));
        let k = seen.entry(key).or_default();
        let off = (*k as f64) * 14.0;
        *k += 1;
        let a = point(t as usize, n, RADIUS);
        let b = point(h as usize, n, RADIUS);
        if t == h {
            svg.bow(a, (a.0 + 24.0, a.1 + 24.0), 18.0 + off, "#7f8c8d", 1.0);
        } else {
            svg.bow(a, b, off, "#7f8c8d", 1.0);
        }
        let m = edge_midpoint(cx, e, n);
        svg.label((m.0 + 3.0, m.1 - 3.0), &format!("e{}", e), "#95a5a6");
    }
    for v in 0..cx.n_vertices {
        let p = point(v as usize, n, RADIUS);
        svg.dot(p, 3.0, "#2c3e50");
        svg.label((p.0 + 5.0, p.1 + 4.0), &format!("v{}", v), "#2c3e50");
    }
    // Binding circles: thick black bows along their darts.
    for circle in &d.binding {
        for dt in &circle.darts {
            let (t, h) = cx.edges[dt.edge()];
            svg.bow(
                point(t as usize, n, RADIUS),
                point(h as usize, n, RADIUS),
                -8.0,
                "#000000",
                2.5,
            );
        }
        if let Some(dt) = circle.darts.first() {
            let m = edge_midpoint(cx, dt.edge(), n);
            svg.label((m.0, m.1 + 14.0), &circle.label, "#000000");
        }
    }
    // Curves: colored bows offset by curve index.
    for (ci, curve) in d.curves.iter().enumerate() {
        let color = family_color(curve.family);
        for dt in &curve.darts {
            let (t, h) = cx.edges[dt.edge()];
            svg.bow(
                point(t as usize, n, RADIUS),
                point(h as usize, n, RADIUS),
                8.0 + 6.0 * ci as f64,
                color,
                2.0,
            );
        }
        if let Some(dt) = curve.darts.first() {
            let m = edge_midpoint(cx, dt.edge(), n);
            svg.label(
                (m.0, m.1 - 10.0 - 4.0 * ci as f64),
                &curve.family.label(),
                color,
            );
        }
    }
}

fn draw_shadow(svg: &mut Svg, sd: &PseudoShadow) {
    let n = sd.bridges.len().max(1);
    let pos = |label: &str| {
        let i = sd.bridges.iter().position(|b| b.label == label).unwrap_or(0);
        point(i, n, RADIUS * 0.7)
    };
    for (ai, arc) in sd.arcs.iter().enumerate() {
        let color = family_color(arc.family);
        let a = pos(&arc.ends[0]);
        let b = pos(&arc.ends[1]);
        svg.bow(a, b, 10.0 * (ai % 5) as f64 - 20.0, color, 2.0);
        let m = ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
        svg.label((m.0 + 4.0, m.1 - 4.0), &arc.label, color);
        // Tick per binding-circle crossing along the arc.
        for (k, circle) in arc.binding_crossings.iter().enumerate() {
            let t = (k + 1) as f64 / (arc.binding_crossings.len() + 1) as f64;
            let p = (a.0 + (b.0 - a.0) * t, a.1 + (b.1 - a.1) * t);
            svg.dot(p, 3.5, "#000000");
            svg.label((p.0 + 4.0, p.1 + 10.0), circle, "#000000");
        }
    }
    for bridge in &sd.bridges {
        let p = pos(&bridge.label);
        svg.dot(p, 4.0, role_color(bridge.surface).trim_start_matches('#'));
        svg.dot(p, 4.0, "#2c3e50");
        svg.label(
            (p.0 + 6.0, p.1 - 6.0),
            &format!("{}@{}", bridge.label, bridge.surface.label()),
            "#2c3e50",
        );
    }
    for (ci, cr) in sd.crossings.iter().enumerate() {
        let find = |label: &str| sd.arcs.iter().find(|a| a.label == label);
        if let (Some(aa), Some(ab)) = (find(&cr.a), find(&cr.b)) {
            let pa0 = pos(&aa.ends[0]);
            let pa1 = pos(&aa.ends[1]);
            let pb0 = pos(&ab.ends[0]);
            let pb1 = pos(&ab.ends[1]);
            let p = (
                (pa0.0 + pa1.0 + pb0.0 + pb1.0) / 4.0,
                (pa0.1 + pa1.1 + pb0.1 + pb1.1) / 4.0,
            );
            let sign = if cr.sign >= 0 { "+" } else { "-" };
            svg.dot(p, 5.0, "#8e44ad");
            svg.label(
                (p.0 + 6.0, p.1 + 4.0),
                &format!("x{}{} ({}/{})", ci, sign, cr.a, cr.b),
                "#8e44ad",
            );
        }
    }
}

fn draw_link(svg: &mut Svg, ld: &LinkDiagram) {
    let n = ld.crossing_signs.len().max(1);
    let palette = ["#c0392b", "#1f618d", "#117a65", "#b9770e", "#8e44ad"];
    for (i, sign) in ld.crossing_signs.iter().enumerate() {
        let p = point(i, n, RADIUS * 0.8);
        svg.dot(p, 4.0, "#2c3e50");
        let sign = if *sign >= 0 { "+" } else { "-" };
        svg.label((p.0 + 6.0, p.1 - 6.0), &format!("c{}{}", i + 1, sign), "#2c3e50");
    }
    for (ci, comp) in ld.components.iter().enumerate() {
        let color = palette[ci % palette.len()];
        let m = comp.passes.len();
        for k in 0..m {
            let (a, over_a) = comp.passes[k];
            let (b, _) = comp.passes[(k + 1) % m];
            let pa = point(a, n, RADIUS * 0.8);
            let pb = point(b, n, RADIUS * 0.8);
            // Under-passes are dashed, over-passes solid.
            svg.line(pa, pb, color, 2.0, !over_a);
        }
        if let Some(&(first, _)) = comp.passes.first() {
            let p = point(first, n, RADIUS * 0.8);
            svg.label((p.0 - 10.0, p.1 + 16.0), &comp.label, color);
        }
    }
}

/// Renders any diagram file as a schematic SVG document.
pub fn render_svg(file: &DiagramFile) -> String {
    let title = format!("{} ({})", file.metadata.name, file.content.kind_name());
    let mut svg = Svg::new(&title);
    match &file.content {
        Content::Triheeg(th) => draw_diagram(&mut svg, &th.diag),
        Content::Ptri(pt) => draw_diagram(&mut svg, &pt.diag),
        Content::Shadow(sd) => {
            draw_diagram(&mut svg, &sd.base.diag);
            draw_shadow(&mut svg, sd);
        }
        Content::Link(ld) => draw_link(&mut svg, ld),
    }
    svg.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn check_wellformed(svg: &str) {
        assert!(svg.starts_with("<svg "));
        assert!(svg.ends_with("</svg>\n"));
        for tag in ["line", "path", "polygon", "circle", "text", "rect"] {
            let open = svg.matches(&format!("<{}", tag)).count();
            let close = svg.matches(&format!("</{}", tag)).count()
                + svg.matches("/>").count();
            assert!(open <= close, "unclosed <{}> elements", tag);
        }
    }

    #[test]
    fn renders_every_kind() {
        let files = vec![
            DiagramFile::new("s1s2", Content::Triheeg(zoo::s1s2_heegaard())),
            DiagramFile::new("s2xd2", Content::Ptri(zoo::s2_d2())),
            DiagramFile::new("trefoil", Content::Shadow(zoo::trefoil_b4_shadow())),
        ];
        for f in files {
            let svg = render_svg(&f);
            check_wellformed(&svg);
            assert!(svg.contains(f.metadata.name.as_str()));
        }
    }

    #[test]
    fn curves_are_colored_by_family() {
        let svg = render_svg(&DiagramFile::new(
            "two-circles",
            Content::Triheeg(zoo::two_s1s2()),
        ));
        for f in [Family::Delta(0), Family::Delta(1), Family::Delta(2)] {
            assert!(svg.contains(family_color(f)), "missing color for {}", f.label());
            assert!(svg.contains(&f.label()), "missing label for {}", f.label());
        }
        assert!(svg.contains("B1") && svg.contains("B2"));
    }

    #[test]
    fn link_render_marks_crossing_signs() {
        let base = zoo::trefoil_b4_shadow();
        let orient = crate::ptri::orient_ptri(&base.base, "B1", true).unwrap();
        let link = crate::shadow::boundary_link(&base, Some(&orient)).unwrap();
        let svg = render_svg(&DiagramFile::new("lht", Content::Link(link)));
        check_wellformed(&svg);
        assert!(svg.contains("c1-") && svg.contains("c3-"));
    }
}
