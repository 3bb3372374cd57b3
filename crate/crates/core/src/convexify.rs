//! Boundary walks, corner words and the vertex-star convexification of a
//! union of tiles.
//!
//! Every vertex of the tessellation is shared by exactly four tiles. A
//! boundary vertex of a union with one incident member tile is a good
//! corner (interior angle pi/2), with two it is not a corner, and with three
//! it is a bad corner (interior angle 3pi/2). Completing every three-of-four
//! vertex star until none is left gives a locally convex union.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;
use core::fmt;

use thiserror::Error;

use crate::coxgroup::{invert, multiply, Generator, NormalForm};
use crate::hypgeo::{GeodesicParam, Parity};
#[cfg(test)]
use crate::hypgeo::DiscPoint;
use crate::lorentz::{self, Vec3};
use crate::tiling::{
    self, point_segment_distance, touching, vertex_star, QuotientTileSet, Tile, TileComplex,
    TileRegion, MEET_EPS,
};
#[allow(unused_imports)]
use num_traits::Float;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum ConvexifyError {
    #[error("the tile set is empty")]
    Empty,
    #[error("{tiles} tiles exceed the area budget {budget}")]
    AreaBudget { tiles: usize, budget: f64 },
    #[error("boundary walk from {start} did not close after {steps} steps")]
    OpenWalk { start: NormalForm, steps: usize },
}

/// A vertex of the tessellation, named by the least canonical word among
/// the four tiles around it and the vertex's local index in that tile.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexKey {
    pub tile: NormalForm,
    pub local: u8,
}

impl fmt::Display for VertexKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.tile, self.local)
    }
}

fn vertex_key<R: TileRegion>(region: &R, w: &NormalForm, j: usize) -> VertexKey {
    let tile = vertex_star(w, j)
        .iter()
        .map(|t| region.canonical(t))
        .min()
        .expect("a star has four tiles");
    VertexKey {
        tile,
        local: j as u8,
    }
}

fn star_count<R: TileRegion>(region: &R, w: &NormalForm, j: usize) -> (usize, Option<NormalForm>) {
    let mut count = 0;
    let mut missing = None;
    for t in vertex_star(w, j) {
        let c = region.canonical(&t);
        if region.members().contains(&c) {
            count += 1;
        } else {
            missing = Some(c);
        }
    }
    (count, missing)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CornerKind {
    Good,
    Bad,
}

impl CornerKind {
    pub fn letter(self) -> char {
        match self {
            CornerKind::Good => 'G',
            CornerKind::Bad => 'B',
        }
    }

    /// Interior angle of the union at the corner.
    pub fn angle(self) -> f64 {
        match self {
            CornerKind::Good => FRAC_PI_2,
            CornerKind::Bad => 3.0 * FRAC_PI_2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corner {
    pub vertex: VertexKey,
    pub kind: CornerKind,
}

/// A boundary edge: side `side` of the lift `tile`, with the union on its
/// left when walked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryEdge {
    pub tile: NormalForm,
    pub side: usize,
}

/// One step of a walk: an edge and the vertex at its end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkStep {
    pub edge: BoundaryEdge,
    pub end: VertexKey,
    /// Member tiles around `end`, swept from the incoming to the outgoing edge.
    pub swept: u8,
}

impl WalkStep {
    pub fn corner(&self) -> Option<Corner> {
        let kind = match self.swept {
            1 => CornerKind::Good,
            3 => CornerKind::Bad,
            _ => return None,
        };
        Some(Corner {
            vertex: self.end.clone(),
            kind,
        })
    }
}

/// One boundary component, walked once with the union on the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryWalk {
    pub steps: Vec<WalkStep>,
}

impl BoundaryWalk {
    pub fn edge_count(&self) -> usize {
        self.steps.len()
    }

    pub fn corners(&self) -> Vec<Corner> {
        self.steps.iter().filter_map(WalkStep::corner).collect()
    }
}

/// The cyclic sequence of corner kinds along a boundary component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CornerWord(pub Vec<CornerKind>);

impl CornerWord {
    pub fn bad_count(&self) -> usize {
        self.0.iter().filter(|&&k| k == CornerKind::Bad).count()
    }

    /// Whether two bad corners are cyclically consecutive.
    pub fn has_adjacent_bad(&self) -> bool {
        let n = self.0.len();
        (0..n).any(|i| self.0[i] == CornerKind::Bad && self.0[(i + 1) % n] == CornerKind::Bad)
    }

    /// Number of cyclic `BGB` patterns: bad corners one good corner apart.
    pub fn bad_pairs_one_apart(&self) -> usize {
        let n = self.0.len();
        if n < 4 {
            return 0;
        }
        (0..n)
            .filter(|&i| {
                self.0[i] == CornerKind::Bad
                    && self.0[(i + 1) % n] == CornerKind::Good
                    && self.0[(i + 2) % n] == CornerKind::Bad
            })
            .count()
    }
}

impl fmt::Display for CornerWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in &self.0 {
            write!(f, "{}", k.letter())?;
        }
        Ok(())
    }
}

impl core::str::FromStr for CornerWord {
    type Err = char;

    fn from_str(s: &str) -> Result<Self, char> {
        s.chars()
            .map(|c| match c {
                'G' => Ok(CornerKind::Good),
                'B' => Ok(CornerKind::Bad),
                other => Err(other),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(CornerWord)
    }
}

pub fn corner_word(walk: &BoundaryWalk) -> CornerWord {
    CornerWord(walk.corners().into_iter().map(|c| c.kind).collect())
}

/// Every bad corner is isolated, or the word is one of the short
/// exceptional words `B`, `BG`, `GB`.
pub fn bad_corners_isolated(cw: &CornerWord) -> bool {
    let s: String = alloc::format!("{cw}");
    matches!(s.as_str(), "B" | "BG" | "GB") || !cw.has_adjacent_bad()
}

/// End vertex of side `side` walked with the tile on the left.
fn end_vertex(tile: &NormalForm, side: usize) -> usize {
    match tile.parity() {
        Parity::Preserving => (side + 1) % 5,
        Parity::Reversing => side,
    }
}

fn boundary_edges<R: TileRegion>(region: &R) -> BTreeSet<(NormalForm, usize)> {
    let mut out = BTreeSet::new();
    for r in region.members() {
        for i in 0..5 {
            if !region.contains(&r.append(Generator::from_side(i))) {
                out.insert((r.clone(), i));
            }
        }
    }
    out
}

/// Walks every boundary component once.
pub fn boundary_walks<R: TileRegion>(region: &R) -> Result<Vec<BoundaryWalk>, ConvexifyError> {
    if region.is_empty() {
        return Err(ConvexifyError::Empty);
    }
    let edges = boundary_edges(region);
    let limit = 4 * edges.len() + 8;
    let mut visited: BTreeSet<(NormalForm, usize)> = BTreeSet::new();
    let mut walks = Vec::new();
    for start in &edges {
        if visited.contains(start) {
            continue;
        }
        let mut steps = Vec::new();
        let (mut cur, mut side) = start.clone();
        loop {
            visited.insert((region.canonical(&cur), side));
            let j = end_vertex(&cur, side);
            let edge = BoundaryEdge {
                tile: cur.clone(),
                side,
            };
            // Rotate about vertex j through member tiles.
            let mut h = cur.clone();
            let mut next = if side == j { (j + 4) % 5 } else { j };
            let mut swept = 1u8;
            loop {
                let t = h.append(Generator::from_side(next));
                if !region.contains(&t) {
                    break;
                }
                swept += 1;
                h = t;
                next = if next == j { (j + 4) % 5 } else { j };
            }
            steps.push(WalkStep {
                edge,
                end: vertex_key(region, &cur, j),
                swept,
            });
            cur = h;
            side = next;
            if (region.canonical(&cur), side) == *start {
                break;
            }
            if steps.len() > limit {
                return Err(ConvexifyError::OpenWalk {
                    start: start.0.clone(),
                    steps: steps.len(),
                });
            }
        }
        walks.push(BoundaryWalk { steps });
    }
    Ok(walks)
}

/// No vertex has exactly three of its four tiles in the region.
pub fn is_locally_convex<R: TileRegion>(region: &R) -> bool {
    region
        .members()
        .iter()
        .all(|r| (0..5).all(|j| star_count(region, r, j).0 != 3))
}

/// Order in which bad vertices are completed within a round.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FillOrder {
    #[default]
    Ascending,
    Descending,
}

#[derive(Clone, Debug)]
pub struct Filled<R> {
    pub region: R,
    pub added: Vec<NormalForm>,
    pub rounds: usize,
}

/// Completes three-of-four vertex stars until none is left among the
/// vertices accepted by `keep`.
pub fn fill_stars<R, F>(
    region: R,
    keep: F,
    order: FillOrder,
    max_tiles: usize,
) -> Result<Filled<R>, ConvexifyError>
where
    R: TileRegion,
    F: Fn(&NormalForm, usize) -> bool,
{
    let mut region = region;
    let mut added = Vec::new();
    let mut rounds = 0;
    loop {
        let mut bad: BTreeMap<VertexKey, (NormalForm, usize)> = BTreeMap::new();
        for r in region.members() {
            for j in 0..5 {
                if star_count(&region, r, j).0 == 3 && keep(r, j) {
                    bad.entry(vertex_key(&region, r, j))
                        .or_insert_with(|| (r.clone(), j));
                }
            }
        }
        if bad.is_empty() {
            break;
        }
        rounds += 1;
        let mut todo: Vec<(NormalForm, usize)> = bad.into_values().collect();
        if order == FillOrder::Descending {
            todo.reverse();
        }
        for (r, j) in todo {
            if let (3, Some(missing)) = star_count(&region, &r, j) {
                region.insert(missing.clone());
                added.push(missing);
                if region.len() > max_tiles {
                    return Err(ConvexifyError::AreaBudget {
                        tiles: region.len(),
                        budget: max_tiles as f64 * FRAC_PI_2,
                    });
                }
            }
        }
    }
    Ok(Filled {
        region,
        added,
        rounds,
    })
}

#[derive(Clone, Debug)]
pub struct ConvexificationResult {
    pub hull: QuotientTileSet,
    pub added: Vec<Tile>,
    pub rounds: usize,
}

/// Largest tile count allowed by the collar area bound for period `ell`.
fn tile_budget(ell: f64) -> usize {
    let area = 2.0 * ell * (2.0 * tiling::diameter()).sinh();
    (area / FRAC_PI_2 + 1e-6).floor() as usize
}

pub fn convexify(s0: &QuotientTileSet) -> Result<ConvexificationResult, ConvexifyError> {
    convexify_ordered(s0, FillOrder::Ascending)
}

pub fn convexify_ordered(
    s0: &QuotientTileSet,
    order: FillOrder,
) -> Result<ConvexificationResult, ConvexifyError> {
    if s0.is_empty() {
        return Err(ConvexifyError::Empty);
    }
    let budget = tile_budget(s0.period());
    if s0.len() > budget {
        return Err(ConvexifyError::AreaBudget {
            tiles: s0.len(),
            budget: budget as f64 * FRAC_PI_2,
        });
    }
    let filled = fill_stars(s0.clone(), |_, _| true, order, budget)?;
    Ok(ConvexificationResult {
        hull: filled.region,
        added: filled.added.into_iter().map(Tile::new).collect(),
        rounds: filled.rounds,
    })
}

/// Which side of an oriented geodesic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn signed_offset(curve: &GeodesicParam, x: &Vec3) -> f64 {
    lorentz::dot(x, &curve.normal())
}

fn on_side(curve: &GeodesicParam, side: Side, x: &Vec3) -> bool {
    let s = signed_offset(curve, x);
    match side {
        Side::Left => s > MEET_EPS,
        Side::Right => s < -MEET_EPS,
    }
}

/// Star completion restricted to vertices strictly on one side of `curve`.
pub fn convexify_one_side(
    tiles: &TileComplex,
    curve: &GeodesicParam,
    side: Side,
) -> Result<TileComplex, ConvexifyError> {
    if tiles.is_empty() {
        return Err(ConvexifyError::Empty);
    }
    let keep = |w: &NormalForm, j: usize| on_side(curve, side, &Tile::new(w.clone()).vertex_vec(j));
    let max = 16 * tiles.len() + 64;
    Ok(fill_stars(tiles.clone(), keep, FillOrder::Ascending, max)?.region)
}

/// Boundary vertices selected for a layer: those on a side of a curve (or
/// on both sides) whose foot on the curve lies in a parameter range.
#[derive(Clone, Debug)]
pub struct BoundaryPortion {
    pub curve: GeodesicParam,
    pub side: Option<Side>,
    pub range: Option<(f64, f64)>,
}

impl BoundaryPortion {
    fn selects(&self, x: &Vec3) -> bool {
        let side_ok = match self.side {
            Some(s) => on_side(&self.curve, s, x),
            None => true,
        };
        let range_ok = match self.range {
            Some((lo, hi)) => {
                let t = self.curve.param_of_vec(x);
                t >= lo && t <= hi
            }
            None => true,
        };
        side_ok && range_ok
    }
}

/// Adds every tile around the selected boundary vertices.
pub fn add_layer<R: TileRegion>(region: &R, portion: &BoundaryPortion) -> R {
    let mut out = region.clone();
    for r in region.members() {
        let tile = Tile::new(r.clone());
        for j in 0..5 {
            let (count, _) = star_count(region, r, j);
            if count == 4 || !portion.selects(&tile.vertex_vec(j)) {
                continue;
            }
            for t in vertex_star(r, j) {
                out.insert(region.canonical(&t));
            }
        }
    }
    out
}

/// Distance between two geodesic segments. The distance from a point of the
/// first to the second is convex along the first, so a golden-section
/// search finds its minimum.
pub(crate) fn segment_distance(a: &(Vec3, Vec3), b: &(Vec3, Vec3)) -> f64 {
    let len = lorentz::distance(&a.0, &a.1);
    if len < 1e-15 {
        return point_segment_distance(&a.0, &b.0, &b.1);
    }
    let u = lorentz::unit_spacelike(&lorentz::sub(&a.1, &lorentz::scale(&a.0, len.cosh())));
    let at = |t: f64| lorentz::add(&lorentz::scale(&a.0, t.cosh()), &lorentz::scale(&u, t.sinh()));
    let f = |t: f64| point_segment_distance(&at(t), &b.0, &b.1);
    let g = (5.0f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = (0.0, len);
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..120 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        }
    }
    f1.min(f2).min(f(0.0)).min(f(len))
}

/// Smallest distance from the boundary edges of `old` with both ends in
/// `portion` to the boundary of `new`. Each pair is measured in the frame of
/// the first edge's tile, so far-away tiles keep full precision.
pub fn layer_clearance(old: &TileComplex, new: &TileComplex, portion: &BoundaryPortion) -> f64 {
    let inner: Vec<_> = boundary_edges(old)
        .into_iter()
        .filter(|(w, i)| {
            let t = Tile::new(w.clone());
            portion.selects(&t.vertex_vec(*i)) && portion.selects(&t.vertex_vec(*i + 1))
        })
        .collect();
    let outer = boundary_edges(new);
    let base = Tile::new(NormalForm::identity());
    let mut best = f64::INFINITY;
    for (w, i) in &inner {
        let back = invert(w);
        let a = (base.vertex_vec(*i), base.vertex_vec(*i + 1));
        for (v, j) in &outer {
            let t = Tile::new(multiply(&back, v));
            best = best.min(segment_distance(&a, &(t.vertex_vec(*j), t.vertex_vec(*j + 1))));
        }
    }
    best
}

/// Distance from tile `w` to the nearest lift of a member of `region`
/// among the tiles touching it; infinite if none touches.
pub fn distance_to_region<R: TileRegion>(region: &R, w: &NormalForm) -> f64 {
    let tile = Tile::new(w.clone());
    let verts: [Vec3; 5] = core::array::from_fn(|k| tile.vertex_vec(k));
    let mut best = f64::INFINITY;
    for t in touching(w) {
        if !region.contains(&t) {
            continue;
        }
        let other = Tile::new(t);
        for k in 0..5 {
            let v = other.vertex_vec(k);
            for u in &verts {
                best = best.min(lorentz::distance(u, &v));
            }
        }
    }
    best
}
