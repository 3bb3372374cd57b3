//! Static SVG figures of the disc.

use std::fmt::Write;

use pentile_core::tiling::TileRegion;
use pentile_core::{DiscPoint, Geodesic, NormalForm, Tile};

use crate::pipeline::Analysis;

const SIZE: f64 = 1000.0;
const RADIUS: f64 = 480.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TileStyle {
    Plain,
    Context,
    Core,
    Added,
}

impl TileStyle {
    fn attrs(self) -> &'static str {
        match self {
            TileStyle::Plain => r##"fill="none" stroke="#888" stroke-width="0.6""##,
            TileStyle::Context => r##"fill="#e8eef7" stroke="#667" stroke-width="0.8""##,
            TileStyle::Core => r##"fill="#9cc3e6" stroke="#234" stroke-width="1""##,
            TileStyle::Added => r##"fill="#f2b36b" stroke="#234" stroke-width="1""##,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SceneTile {
    pub word: NormalForm,
    pub vertices: [DiscPoint; 5],
    pub style: TileStyle,
}

#[derive(Clone, Debug, Default)]
pub struct Scene {
    pub tiles: Vec<SceneTile>,
    pub lines: Vec<Geodesic>,
    pub marks: Vec<DiscPoint>,
}

impl Scene {
    pub fn add_tile(&mut self, word: &NormalForm, style: TileStyle) {
        let t = Tile::new(word.clone());
        self.tiles.push(SceneTile {
            word: word.clone(),
            vertices: t.vertices(),
            style,
        });
    }

    /// Sorts tiles so that drawing order depends only on the content.
    fn ordered_tiles(&self) -> Vec<&SceneTile> {
        let mut v: Vec<_> = self.tiles.iter().collect();
        v.sort_by(|a, b| a.style.cmp(&b.style).then_with(|| a.word.cmp(&b.word)));
        v
    }
}

fn screen(p: &DiscPoint) -> (f64, f64) {
    (SIZE / 2.0 + RADIUS * p.x(), SIZE / 2.0 - RADIUS * p.y())
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

/// Path segment to the screen point `q` along `line`, which passes through
/// the disc points `pd` (the current point) and `qd`.
fn geodesic_to(out: &mut String, line: &Geodesic, q: (f64, f64), pd: (f64, f64), qd: (f64, f64)) {
    match *line {
        Geodesic::Diameter { .. } => {
            let _ = write!(out, " L {} {}", num(q.0), num(q.1));
        }
        Geodesic::Arc { center, radius } => {
            let cross = (pd.0 - center.re) * (qd.1 - center.im) - (pd.1 - center.im) * (qd.0 - center.re);
            let sweep = u8::from(cross > 0.0);
            let r = radius * RADIUS;
            let _ = write!(out, " A {} {} 0 0 {} {} {}", num(r), num(r), sweep, num(q.0), num(q.1));
        }
    }
}

fn polygon_path(vertices: &[DiscPoint; 5]) -> String {
    let mut d = String::new();
    let s = screen(&vertices[0]);
    let _ = write!(d, "M {} {}", num(s.0), num(s.1));
    for k in 0..5 {
        let (a, b) = (&vertices[k], &vertices[(k + 1) % 5]);
        let pd = (a.x(), a.y());
        let qd = (b.x(), b.y());
        match Geodesic::through(a, b) {
            Ok(line) => geodesic_to(&mut d, &line, screen(b), pd, qd),
            Err(_) => {
                let q = screen(b);
                let _ = write!(d, " L {} {}", num(q.0), num(q.1));
            }
        }
    }
    d.push_str(" Z");
    d
}

fn line_path(line: &Geodesic) -> String {
    let (u, v) = line.ideal_endpoints();
    let ps = (SIZE / 2.0 + RADIUS * u.re, SIZE / 2.0 - RADIUS * u.im);
    let qs = (SIZE / 2.0 + RADIUS * v.re, SIZE / 2.0 - RADIUS * v.im);
    let mut d = format!("M {} {}", num(ps.0), num(ps.1));
    geodesic_to(&mut d, line, qs, (u.re, u.im), (v.re, v.im));
    d
}

/// Renders a scene as a standalone SVG 1.1 document.
pub fn render_svg(scene: &Scene) -> String {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{s}\" height=\"{s}\" viewBox=\"0 0 {s} {s}\">",
        s = SIZE as u32
    );
    let c = num(SIZE / 2.0);
    let _ = writeln!(
        out,
        "  <circle cx=\"{c}\" cy=\"{c}\" r=\"{}\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>",
        num(RADIUS)
    );
    for t in scene.ordered_tiles() {
        let _ = writeln!(out, "  <path d=\"{}\" {}/>", polygon_path(&t.vertices), t.style.attrs());
    }
    for line in &scene.lines {
        let _ = writeln!(
            out,
            "  <path d=\"{}\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"/>",
            line_path(line)
        );
    }
    for p in &scene.marks {
        let s = screen(p);
        let _ = writeln!(out, "  <circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"#c0392b\"/>", num(s.0), num(s.1));
    }
    out.push_str("</svg>\n");
    out
}

/// The lifted hull (tiles of the axis set in one colour, additions in
/// another), its neighbouring translates, the axis and the seam point.
pub fn trace_scene(a: &Analysis) -> Scene {
    let mut scene = Scene::default();
    let s0 = &a.s0;
    match &a.lift {
        Some(lift) => {
            for w in lift.tiles() {
                let style = if s0.contains(w) { TileStyle::Core } else { TileStyle::Added };
                scene.add_tile(w, style);
            }
            for n in [-1, 1] {
                for w in lift.translate_words(n) {
                    scene.add_tile(&w, TileStyle::Context);
                }
            }
        }
        None => {
            for w in s0.window() {
                scene.add_tile(w.tile.word(), TileStyle::Core);
            }
        }
    }
    scene.lines.push(s0.axis().geodesic());
    scene.marks.push(s0.axis().point_at(s0.seam()));
    scene
}

/// Every tile of the ball of radius `n`.
pub fn ball_scene(words: &[NormalForm]) -> Scene {
    let mut scene = Scene::default();
    for w in words {
        scene.add_tile(w, TileStyle::Plain);
    }
    scene
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_scene_is_the_disc() {
        let svg = render_svg(&Scene::default());
        assert_eq!(svg.matches("<circle").count(), 1);
        assert_eq!(svg.matches("<path").count(), 0);
        assert!(svg.starts_with("<?xml") && svg.ends_with("</svg>\n"));
    }

    #[test]
    fn diameters_are_straight_and_arcs_are_minor() {
        let mut scene = Scene::default();
        scene.lines.push(Geodesic::diameter(0.0));
        let svg = render_svg(&scene);
        assert!(svg.contains("M 20.000 500.000 L 980.000 500.000") || svg.contains("M 980.000 500.000 L 20.000 500.000"));
        scene.add_tile(&NormalForm::identity(), TileStyle::Core);
        let svg = render_svg(&scene);
        assert_eq!(svg.matches(" A ").count(), 5);
        assert_eq!(svg.matches(" 0 0 1 ").count() + svg.matches(" 0 0 0 ").count(), 5);
    }

    #[test]
    fn rendering_is_deterministic() {
        let words: Vec<NormalForm> = ["s1", "e", "s2s4", "s3"].iter().map(|s| s.parse().unwrap()).collect();
        let mut rev = words.clone();
        rev.reverse();
        assert_eq!(render_svg(&ball_scene(&words)), render_svg(&ball_scene(&rev)));
    }
}
