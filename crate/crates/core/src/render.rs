//! SVG drawings of chord diagrams and meanders.
//!
//! Output is plain text with coordinates printed to two decimals, so the
//! same input always yields the same bytes.

use std::f64::consts::PI;
use std::fmt::Write;
use std::num::NonZeroU32;

use crate::gauss::ChordDiagram;
use crate::meander::MeanderReconstruction;

pub type Point = (f64, f64);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderTarget {
    ChordDiagram,
    Meander,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub target: RenderTarget,
    pub width: NonZeroU32,
    pub height: NonZeroU32,
    pub margin: f64,
    pub stroke_width: f64,
    pub point_radius: f64,
    /// Segments per semicircular arc.
    pub arc_samples: usize,
}

impl RenderSpec {
    pub fn chord_diagram() -> Self {
        Self {
            target: RenderTarget::ChordDiagram,
            width: NonZeroU32::new(400).unwrap(),
            height: NonZeroU32::new(400).unwrap(),
            margin: 40.0,
            stroke_width: 2.0,
            point_radius: 3.0,
            arc_samples: 32,
        }
    }

    pub fn meander() -> Self {
        Self {
            target: RenderTarget::Meander,
            width: NonZeroU32::new(480).unwrap(),
            height: NonZeroU32::new(480).unwrap(),
            margin: 40.0,
            stroke_width: 2.0,
            point_radius: 3.0,
            arc_samples: 32,
        }
    }

    pub fn with_size(mut self, width: NonZeroU32, height: NonZeroU32) -> Self {
        self.width = width;
        self.height = height;
        self
    }

    fn w(&self) -> f64 {
        f64::from(self.width.get())
    }

    fn h(&self) -> f64 {
        f64::from(self.height.get())
    }
}

fn header(spec: &RenderSpec) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n\
         <rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n",
        w = spec.width,
        h = spec.height
    )
}

fn escape(label: &str) -> String {
    label
        .replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Endpoint positions on the circle, one per letter of the word, starting
/// at the top and running clockwise.
pub fn circle_points(len: usize, spec: &RenderSpec) -> Vec<Point> {
    let (cx, cy) = (spec.w() / 2.0, spec.h() / 2.0);
    let r = (spec.w().min(spec.h()) / 2.0 - spec.margin).max(1.0);
    (0..len)
        .map(|k| {
            let t = -PI / 2.0 + 2.0 * PI * k as f64 / len as f64;
            (cx + r * t.cos(), cy + r * t.sin())
        })
        .collect()
}

/// One straight segment per chord, in chord order.
pub fn chord_segments(d: &ChordDiagram, spec: &RenderSpec) -> Vec<(Point, Point)> {
    let pts = circle_points(2 * d.n(), spec);
    (0..d.n())
        .map(|c| d.ends(c))
        .map(|(p, q)| (pts[p], pts[q]))
        .collect()
}

pub fn render_chord_diagram(d: &ChordDiagram, spec: &RenderSpec) -> String {
    let mut svg = header(spec);
    let (cx, cy) = (spec.w() / 2.0, spec.h() / 2.0);
    let r = (spec.w().min(spec.h()) / 2.0 - spec.margin).max(1.0);
    let _ = writeln!(
        svg,
        "<circle class=\"circle\" cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"{r:.2}\" fill=\"none\" stroke=\"black\" stroke-width=\"{:.2}\"/>",
        spec.stroke_width
    );
    for (c, ((x1, y1), (x2, y2))) in chord_segments(d, spec).into_iter().enumerate() {
        let _ = writeln!(
            svg,
            "<line class=\"chord\" data-chord=\"{}\" x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"steelblue\" stroke-width=\"{:.2}\"/>",
            escape(d.label(c)),
            spec.stroke_width
        );
    }
    let labels = circle_points(
        d.code().len(),
        &RenderSpec {
            margin: spec.margin - 18.0,
            ..spec.clone()
        },
    );
    for ((k, (x, y)), token) in circle_points(d.code().len(), spec)
        .into_iter()
        .enumerate()
        .zip(d.code().tokens())
    {
        let _ = writeln!(
            svg,
            "<circle class=\"point\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"{:.2}\"/>",
            spec.point_radius
        );
        let (lx, ly) = labels[k];
        let _ = writeln!(
            svg,
            "<text x=\"{lx:.2}\" y=\"{ly:.2}\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">{}</text>",
            escape(token)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// Arcs of a drawn meander as sampled polylines.
///
/// The line runs from `r` at the left through points `1..N`. Its closure
/// returns over the top to `r`, where the curve crosses it: the last lower
/// arc `(w_N, w₁)` is drawn as two arcs `w_N → r` and `r → w₁`.
#[derive(Debug, Clone, PartialEq)]
pub struct MeanderLayout {
    /// x coordinate of point `i` is `xs[i - 1]`.
    pub xs: Vec<f64>,
    /// x coordinate of `r`.
    pub r: f64,
    pub baseline: f64,
    pub upper: Vec<Vec<Point>>,
    pub lower: Vec<Vec<Point>>,
    /// The closure of the line, from its right end over the top to `r`.
    pub closing: Vec<Point>,
}

fn semicircle(x1: f64, x2: f64, y: f64, up: bool, samples: usize) -> Vec<Point> {
    let (cx, r) = ((x1 + x2) / 2.0, (x2 - x1).abs() / 2.0);
    let (start, end) = if x1 <= x2 { (PI, 0.0) } else { (0.0, PI) };
    let sign = if up { -1.0 } else { 1.0 };
    (0..=samples.max(1))
        .map(|k| {
            let t = start + (end - start) * k as f64 / samples.max(1) as f64;
            (cx + r * t.cos(), y + sign * r * t.sin())
        })
        .collect()
}

pub fn meander_layout(rec: &MeanderReconstruction, spec: &RenderSpec) -> MeanderLayout {
    let n = rec.n();
    // the closure and the outer lower arc have radius up to span / 2
    let span = (spec.w().min(spec.h()) - 2.0 * spec.margin).max(1.0);
    let left = spec.w() / 2.0 - span / 2.0;
    let right = left + span;
    let step = (right - left) / (n as f64 + 1.0);
    let r = left;
    let xs: Vec<f64> = (1..=n).map(|i| left + step * i as f64).collect();
    let baseline = spec.h() / 2.0;
    let x = |i: usize| if i == 0 { r } else { xs[i - 1] };
    let arc =
        |(a, b): (usize, usize), up: bool| semicircle(x(a), x(b), baseline, up, spec.arc_samples);
    let upper = rec.upper().into_iter().map(|p| arc(p, true)).collect();
    let mut pairs = rec.lower();
    let mut lower: Vec<Vec<Point>> = Vec::with_capacity(pairs.len() + 1);
    if let Some((last, first)) = pairs.pop() {
        lower.extend(pairs.into_iter().map(|p| arc(p, false)));
        lower.push(arc((last, 0), false));
        lower.push(arc((0, first), false));
    }
    let closing = semicircle(right, r, baseline, true, spec.arc_samples);
    MeanderLayout {
        xs,
        r,
        baseline,
        upper,
        lower,
        closing,
    }
}

fn polyline(
    svg: &mut String,
    class: &str,
    pts: &[Point],
    color: &str,
    spec: &RenderSpec,
    dashed: bool,
) {
    let coords: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
    let dash = if dashed {
        " stroke-dasharray=\"6 4\""
    } else {
        ""
    };
    let _ = writeln!(
        svg,
        "<polyline class=\"{class}\" points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{:.2}\"{dash}/>",
        coords.join(" "),
        spec.stroke_width
    );
}

pub fn render_meander(rec: &MeanderReconstruction, spec: &RenderSpec) -> String {
    let layout = meander_layout(rec, spec);
    let mut svg = header(spec);
    let (x0, x1) = (layout.r, layout.closing[0].0);
    let y = layout.baseline;
    let _ = writeln!(
        svg,
        "<line class=\"line\" x1=\"{x0:.2}\" y1=\"{y:.2}\" x2=\"{x1:.2}\" y2=\"{y:.2}\" stroke=\"black\" stroke-width=\"{:.2}\"/>",
        spec.stroke_width
    );
    polyline(&mut svg, "closing", &layout.closing, "gray", spec, true);
    for arc in &layout.upper {
        polyline(&mut svg, "upper", arc, "firebrick", spec, false);
    }
    for arc in &layout.lower {
        polyline(&mut svg, "lower", arc, "firebrick", spec, false);
    }
    let labels = std::iter::once((layout.r, "r".to_string())).chain(
        layout
            .xs
            .iter()
            .enumerate()
            .map(|(i, &x)| (x, (i + 1).to_string())),
    );
    for (x, label) in labels {
        let _ = writeln!(
            svg,
            "<circle class=\"point\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"{:.2}\"/>",
            spec.point_radius
        );
        let _ = writeln!(
            svg,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"start\">{label}</text>",
            x + 4.0,
            y - 6.0
        );
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cross(a: (Point, Point), b: (Point, Point)) -> bool {
        let orient =
            |p: Point, q: Point, r: Point| (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0);
        let d1 = orient(a.0, a.1, b.0);
        let d2 = orient(a.0, a.1, b.1);
        let d3 = orient(b.0, b.1, a.0);
        let d4 = orient(b.0, b.1, a.1);
        d1 * d2 < 0.0 && d3 * d4 < 0.0
    }

    #[test]
    fn chord_segments_cross_as_chords_do() {
        let spec = RenderSpec::chord_diagram();
        let abab = chord_segments(&ChordDiagram::parse("abab").unwrap(), &spec);
        assert!(cross(abab[0], abab[1]));
        let aabb = chord_segments(&ChordDiagram::parse("aabb").unwrap(), &spec);
        assert!(!cross(aabb[0], aabb[1]));
    }

    #[test]
    fn chord_svg_is_deterministic() {
        let spec = RenderSpec::chord_diagram();
        let d = ChordDiagram::parse("abab").unwrap();
        let svg = render_chord_diagram(&d, &spec);
        assert_eq!(svg, render_chord_diagram(&d, &spec));
        assert_eq!(svg.matches("<line class=\"chord\"").count(), 2);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    }

    #[test]
    fn meander_arcs() {
        let spec = RenderSpec::meander();
        let rec = MeanderReconstruction::from_visitation(vec![1, 2]);
        let layout = meander_layout(&rec, &spec);
        assert_eq!((layout.upper.len(), layout.lower.len()), (1, 2));
        assert!(layout.closing.iter().all(|p| p.1 <= layout.baseline + 1e-9));
        assert!(layout.upper[0]
            .iter()
            .all(|p| p.1 <= layout.baseline + 1e-9));
        assert!(layout.lower[0]
            .iter()
            .all(|p| p.1 >= layout.baseline - 1e-9));
        let svg = render_meander(&rec, &spec);
        assert_eq!(svg, render_meander(&rec, &spec));
        assert_eq!(svg.matches("class=\"upper\"").count(), 1);
    }

    #[test]
    fn worked_meander_arcs_stay_disjoint() {
        let spec = RenderSpec::meander();
        let rec = MeanderReconstruction::from_visitation(vec![3, 4, 5, 2, 1, 6]);
        let layout = meander_layout(&rec, &spec);
        assert_eq!((layout.upper.len(), layout.lower.len()), (3, 4));
        let span = |arc: &Vec<Point>| {
            let (a, b) = (arc[0].0, arc[arc.len() - 1].0);
            (a.min(b), a.max(b))
        };
        for arcs in [&layout.upper, &layout.lower] {
            for (k, a) in arcs.iter().enumerate() {
                for b in &arcs[k + 1..] {
                    let ((p, q), (s, t)) = (span(a), span(b));
                    // semicircles from a shared end on the same side are nested
                    if (p - s).abs() < 1e-9 {
                        continue;
                    }
                    let inside = |x: f64| p + 1e-9 < x && x < q - 1e-9;
                    assert_eq!(inside(s), inside(t), "{:?} vs {:?}", (p, q), (s, t));
                }
            }
        }
    }
}
