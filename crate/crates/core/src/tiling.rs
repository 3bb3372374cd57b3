//! The tessellation of the disc by regular right-angled pentagons.
//!
//! Tile `g` is the image `gP` of the base pentagon under the group element
//! `g`. Side `i` of `gP` is shared with tile `g si`, and local vertex `j`
//! (the corner between sides `j - 1` and `j`) is shared by the four tiles
//! `g`, `g s(j-1)`, `g sj`, `g s(j-1) sj`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;
use thiserror::Error;

use crate::coxgroup::{invert, multiply, word_to_isometry, Generator, NormalForm};
use crate::hypgeo::{
    classify, ClassTag, DiscPoint, Geodesic, GeodesicParam, GeometryError, Isometry,
};
use crate::lorentz::{self, Interval, Mat3, Vec3};
#[allow(unused_imports)]
use num_traits::Float;

/// Slack, in units of sinh(distance), for closed-intersection predicates.
pub const MEET_EPS: f64 = 1e-9;

/// Below this size both coefficients of a side along a geodesic vanish and
/// the side lies on the geodesic.
const COINCIDENT_EPS: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum TilingError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("{0} is not axial")]
    NotAxial(ClassTag),
    #[error("gallery walk did not settle after {0} steps")]
    WalkDiverged(usize),
    #[error("no edge crossing found on the axis within one tile diameter")]
    NoSeam,
    #[error("orbit window cannot be bounded for translation length {0}")]
    WindowExhausted(f64),
}

/// `cosh` of the side length: `1 + 2 cos(2 pi / 5)`.
fn cosh_side() -> f64 {
    1.0 + 2.0 * (2.0 * PI / 5.0).cos()
}

pub(crate) fn side_length() -> f64 {
    cosh_side().acosh()
}

pub(crate) fn diameter() -> f64 {
    (cosh_side() * cosh_side()).acosh()
}

fn circumradius() -> f64 {
    // center, vertex, neighbouring vertex: angles 2pi/5, pi/4, pi/4
    let (a, c) = (FRAC_PI_4, 2.0 * PI / 5.0);
    (a.cos() * (1.0 + c.cos()) / (a.sin() * c.sin())).acosh()
}

fn inradius() -> f64 {
    // center, side midpoint, vertex: right triangle with angles pi/5, pi/4
    (FRAC_PI_4.cos() / (PI / 5.0).sin()).acosh()
}

/// The geodesic through side `side` (zero-based) of the base pentagon.
pub(crate) fn side_geodesic(side: usize) -> Geodesic {
    let rho = (inradius() / 2.0).tanh();
    let dir = Complex64::from_polar(1.0, 2.0 * PI * side as f64 / 5.0 + PI / 5.0);
    Geodesic::Arc {
        center: dir * ((1.0 + rho * rho) / (2.0 * rho)),
        radius: (1.0 - rho * rho) / (2.0 * rho),
    }
}

/// Normal of side `side` of the base tile, positive on the tile.
fn base_normal(side: usize) -> Vec3 {
    side_geodesic(side).normal()
}

fn base_vertex(k: usize) -> Vec3 {
    DiscPoint::polar(circumradius(), 2.0 * PI * (k % 5) as f64 / 5.0).hyperboloid()
}

/// The regular right-angled pentagon centred at the origin with vertex 1
/// on the positive real axis.
#[derive(Clone, Debug, PartialEq)]
pub struct BasePentagon {
    pub vertices: [DiscPoint; 5],
    /// Side `i` joins vertices `i` and `i + 1` (zero-based, cyclic).
    pub sides: [Geodesic; 5],
    pub side_length: f64,
    pub circumradius: f64,
    pub inradius: f64,
}

impl BasePentagon {
    pub fn new() -> Self {
        let r = circumradius();
        Self {
            vertices: core::array::from_fn(|k| DiscPoint::polar(r, 2.0 * PI * k as f64 / 5.0)),
            sides: core::array::from_fn(side_geodesic),
            side_length: side_length(),
            circumradius: r,
            inradius: inradius(),
        }
    }

    /// Largest distance between two vertices.
    pub fn diameter(&self) -> f64 {
        let mut d: f64 = 0.0;
        for p in &self.vertices {
            for q in &self.vertices {
                d = d.max(crate::hypgeo::dist(p, q));
            }
        }
        d
    }

    /// Interior angle at vertex `k`, between sides `k - 1` and `k`.
    pub fn interior_angle(&self, k: usize) -> f64 {
        let a = base_normal((k + 4) % 5);
        let b = base_normal(k % 5);
        // inward normals: the interior angle is pi - angle between normals
        PI - (-lorentz::dot(&a, &b)).clamp(-1.0, 1.0).acos()
    }
}

impl Default for BasePentagon {
    fn default() -> Self {
        Self::new()
    }
}

/// Lorentz matrix of a group element: the product of side reflections.
pub(crate) fn frame_of(word: &NormalForm) -> Mat3 {
    let refl: [Mat3; 5] = core::array::from_fn(|i| lorentz::reflection(&base_normal(i)));
    word.letters()
        .iter()
        .fold(lorentz::IDENTITY, |m, g| lorentz::mat_mul(&m, &refl[g.side()]))
}

/// A tile of the tessellation; equality is equality of words.
#[derive(Clone, Debug)]
pub struct Tile {
    word: NormalForm,
    frame: Mat3,
}

impl PartialEq for Tile {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}

impl Eq for Tile {}

impl PartialOrd for Tile {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tile {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.word.cmp(&other.word)
    }
}

impl Tile {
    pub fn new(word: NormalForm) -> Self {
        let frame = frame_of(&word);
        Self { word, frame }
    }

    /// `self * g`, reusing the cached frame.
    pub fn across(&self, side: usize) -> Tile {
        let g = Generator::from_side(side);
        Tile {
            word: self.word.append(g),
            frame: lorentz::mat_mul(&self.frame, &lorentz::reflection(&base_normal(side))),
        }
    }

    pub fn word(&self) -> &NormalForm {
        &self.word
    }

    pub fn isometry(&self) -> Isometry {
        word_to_isometry(&self.word)
    }

    /// Normal of side `i`, positive on the tile.
    pub(crate) fn normal(&self, i: usize) -> Vec3 {
        lorentz::mat_vec(&self.frame, &base_normal(i % 5))
    }

    pub(crate) fn vertex_vec(&self, k: usize) -> Vec3 {
        lorentz::unit_timelike(&lorentz::mat_vec(&self.frame, &base_vertex(k)))
    }

    pub(crate) fn center_vec(&self) -> Vec3 {
        [self.frame[0][0], self.frame[1][0], self.frame[2][0]]
    }

    pub fn center(&self) -> DiscPoint {
        DiscPoint::from_hyperboloid(&self.center_vec())
    }

    pub fn vertices(&self) -> [DiscPoint; 5] {
        core::array::from_fn(|k| DiscPoint::from_hyperboloid(&self.vertex_vec(k)))
    }

    pub fn sides(&self) -> [Geodesic; 5] {
        core::array::from_fn(|i| Geodesic::from_normal(&self.normal(i)))
    }

    /// Word of the neighbour across side `i` (zero-based).
    pub fn neighbor(&self, i: usize) -> NormalForm {
        self.word.append(Generator::from_side(i))
    }

    /// The four tiles around local vertex `j`, starting with this one.
    pub fn vertex_star(&self, j: usize) -> [NormalForm; 4] {
        vertex_star(&self.word, j)
    }

    /// Whether `p` lies in the closed tile, with slack `eps` in sinh units.
    pub fn contains(&self, p: &DiscPoint, eps: f64) -> bool {
        let x = p.hyperboloid();
        (0..5).all(|i| lorentz::dot(&x, &self.normal(i)) >= -eps)
    }

    /// Parameter interval on which `param` runs through the closed tile.
    pub(crate) fn chord(&self, param: &GeodesicParam, slack: f64) -> Option<Interval> {
        let mut iv = Interval::ALL;
        for i in 0..5 {
            let (a, b) = param.coefficients(&self.normal(i));
            if a.abs() <= COINCIDENT_EPS && b.abs() <= COINCIDENT_EPS {
                continue;
            }
            iv = iv.intersect(lorentz::halfplane_interval(a, b, slack)?)?;
        }
        Some(iv)
    }

    /// Whether some side of the tile lies on the geodesic.
    pub(crate) fn has_side_on(&self, param: &GeodesicParam) -> bool {
        (0..5).any(|i| {
            let (a, b) = param.coefficients(&self.normal(i));
            a.abs() <= COINCIDENT_EPS && b.abs() <= COINCIDENT_EPS
        })
    }

    /// Parameters where `param` crosses a side of the closed tile
    /// transversally.
    pub(crate) fn crossings(&self, param: &GeodesicParam) -> Vec<f64> {
        let mut out = Vec::new();
        for i in 0..5 {
            let (a, b) = param.coefficients(&self.normal(i));
            let coincident = a.abs() <= COINCIDENT_EPS && b.abs() <= COINCIDENT_EPS;
            if coincident || a.abs() >= b.abs() {
                continue;
            }
            let t = (-a / b).atanh();
            let x = param.at(t);
            let inside = (0..5)
                .filter(|&k| k != i)
                .all(|k| lorentz::dot(&x, &self.normal(k)) >= -MEET_EPS);
            if inside {
                out.push(t);
            }
        }
        out
    }

    /// Hyperbolic distance from the closed tile to a complete geodesic.
    pub fn distance_to_geodesic(&self, line: &Geodesic) -> f64 {
        self.distance_to_normal(&line.normal())
    }

    pub(crate) fn distance_to_normal(&self, n: &Vec3) -> f64 {
        let vals: [f64; 5] = core::array::from_fn(|k| lorentz::dot(&self.vertex_vec(k), n));
        let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if lo <= 0.0 && hi >= 0.0 {
            return 0.0;
        }
        // All vertices on one side; the nearest point may be inside an edge.
        let sign = if lo > 0.0 { 1.0 } else { -1.0 };
        let mut best = f64::INFINITY;
        for k in 0..5 {
            let (p, q) = (self.vertex_vec(k), self.vertex_vec(k + 1));
            best = best.min(segment_min(&p, &q, n, sign));
        }
        best.asinh()
    }

    /// Hyperbolic distance from a point to the closed tile.
    pub fn distance_to_point(&self, p: &DiscPoint) -> f64 {
        if self.contains(p, 0.0) {
            return 0.0;
        }
        let x = p.hyperboloid();
        let mut best = f64::INFINITY;
        for k in 0..5 {
            best = best.min(point_segment_distance(&x, &self.vertex_vec(k), &self.vertex_vec(k + 1)));
        }
        best
    }
}

/// Minimum of `sign * <x, n>` over the geodesic segment from `p` to `q`,
/// assuming it is positive throughout.
fn segment_min(p: &Vec3, q: &Vec3, n: &Vec3, sign: f64) -> f64 {
    let len = lorentz::distance(p, q);
    let (a, b) = (sign * lorentz::dot(p, n), sign * lorentz::dot(q, n));
    if len == 0.0 {
        return a;
    }
    // f(t) = A cosh t + B sinh t along the segment, f(0) = a, f(len) = b.
    let big_a = a;
    let big_b = (b - a * len.cosh()) / len.sinh();
    let mut m = a.min(b);
    if big_a > big_b.abs() {
        let t = (-big_b / big_a).atanh();
        if t > 0.0 && t < len {
            m = m.min((big_a * big_a - big_b * big_b).sqrt());
        }
    }
    m
}

/// Distance from `x` to the geodesic segment `[p, q]`, all on the hyperboloid.
pub(crate) fn point_segment_distance(x: &Vec3, p: &Vec3, q: &Vec3) -> f64 {
    let dxp = lorentz::distance(x, p);
    let dxq = lorentz::distance(x, q);
    let len = lorentz::distance(p, q);
    if len < 1e-15 {
        return dxp;
    }
    let u = lorentz::unit_spacelike(&lorentz::sub(q, &lorentz::scale(p, len.cosh())));
    let along = -lorentz::dot(x, &u);
    let base = lorentz::dot(x, p);
    let t = (along / base).atanh();
    if t > 0.0 && t < len {
        let n = lorentz::cross(p, &u);
        let n = lorentz::unit_spacelike(&n);
        lorentz::dot(x, &n).abs().asinh()
    } else {
        dxp.min(dxq)
    }
}

/// The four tiles around local vertex `j` of tile `w`.
pub fn vertex_star(w: &NormalForm, j: usize) -> [NormalForm; 4] {
    let a = Generator::from_side(j + 4);
    let b = Generator::from_side(j);
    let wa = w.append(a);
    let wb = w.append(b);
    let wab = wa.append(b);
    [w.clone(), wa, wb, wab]
}

/// The ten tiles sharing a side or a vertex with `w`.
pub fn touching(w: &NormalForm) -> Vec<NormalForm> {
    let mut out = Vec::with_capacity(10);
    for i in 0..5 {
        out.push(w.append(Generator::from_side(i)));
        out.push(w.append(Generator::from_side(i)).append(Generator::from_side(i + 1)));
    }
    out
}

/// The tile whose closure contains `p`, found by a gallery walk from the
/// base tile.
pub fn locate_tile(p: &DiscPoint) -> Result<NormalForm, TilingError> {
    const MAX_STEPS: usize = 100_000;
    let x = p.hyperboloid();
    let mut tile = Tile::new(NormalForm::identity());
    for _ in 0..MAX_STEPS {
        let mut worst = (0.0, usize::MAX);
        for i in 0..5 {
            let v = lorentz::dot(&x, &tile.normal(i));
            if v < worst.0 {
                worst = (v, i);
            }
        }
        if worst.1 == usize::MAX {
            return Ok(tile.word);
        }
        tile = tile.across(worst.1);
    }
    Err(TilingError::WalkDiverged(MAX_STEPS))
}

/// Tiles whose closure meets `param` on `[lo, hi]`, with their parameter
/// intervals, found by breadth-first search from `start`.
fn tiles_meeting(param: &GeodesicParam, lo: f64, hi: f64, start: NormalForm) -> Vec<(Tile, Interval)> {
    let window = Interval { lo, hi };
    let mut seen: BTreeSet<NormalForm> = BTreeSet::new();
    let mut queue: VecDeque<Tile> = VecDeque::new();
    let mut out = Vec::new();
    seen.insert(start.clone());
    queue.push_back(Tile::new(start));
    while let Some(tile) = queue.pop_front() {
        let Some(iv) = tile.chord(param, MEET_EPS).and_then(|c| c.intersect(window)) else {
            continue;
        };
        for i in 0..5 {
            let side = tile.across(i);
            let diag = side.across((i + 1) % 5);
            for t in [side, diag] {
                if seen.insert(t.word.clone()) {
                    queue.push_back(t);
                }
            }
        }
        out.push((tile, iv));
    }
    out
}

/// Tiles whose closure meets the geodesic segment `[p, q]`, ordered by
/// where the segment enters them.
pub fn trace_segment(p: &DiscPoint, q: &DiscPoint) -> Result<Vec<NormalForm>, TilingError> {
    let param = GeodesicParam::through(p, q)?;
    let len = crate::hypgeo::dist(p, q);
    let start = locate_tile(p)?;
    let mut hits = tiles_meeting(&param, 0.0, len, start);
    hits.sort_by(|(a, ia), (b, ib)| {
        ia.lo
            .total_cmp(&ib.lo)
            .then(ia.hi.total_cmp(&ib.hi))
            .then_with(|| a.word.cmp(&b.word))
    });
    Ok(hits.into_iter().map(|(t, _)| t.word).collect())
}

/// A set of tiles, possibly taken modulo a cyclic group.
pub trait TileRegion: Clone {
    /// The representative of `w` under the region's identifications.
    fn canonical(&self, w: &NormalForm) -> NormalForm;

    /// Canonical words of the member tiles.
    fn members(&self) -> &BTreeSet<NormalForm>;

    /// Adds a canonical word; returns whether it was new.
    fn insert(&mut self, canonical: NormalForm) -> bool;

    fn contains(&self, w: &NormalForm) -> bool {
        self.members().contains(&self.canonical(w))
    }

    fn len(&self) -> usize {
        self.members().len()
    }

    fn is_empty(&self) -> bool {
        self.members().is_empty()
    }
}

/// A finite union of tiles.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TileComplex {
    tiles: BTreeSet<NormalForm>,
}

impl TileComplex {
    pub fn new<I: IntoIterator<Item = NormalForm>>(words: I) -> Self {
        Self {
            tiles: words.into_iter().collect(),
        }
    }

    /// All tiles within `n` steps of the base tile.
    pub fn ball(n: usize) -> Result<Self, crate::coxgroup::WordError> {
        Ok(Self::new(crate::coxgroup::enumerate_ball(n)?))
    }

    pub fn tiles(&self) -> impl Iterator<Item = Tile> + '_ {
        self.tiles.iter().cloned().map(Tile::new)
    }

    pub fn words(&self) -> &BTreeSet<NormalForm> {
        &self.tiles
    }

    /// Neighbours across each side that belong to the complex.
    pub fn neighbors(&self, w: &NormalForm) -> Vec<(usize, NormalForm)> {
        (0..5)
            .map(|i| (i, w.append(Generator::from_side(i))))
            .filter(|(_, n)| self.tiles.contains(n))
            .collect()
    }

    /// Members of the vertex star at local vertex `j` of `w`.
    pub fn star_members(&self, w: &NormalForm, j: usize) -> Vec<NormalForm> {
        vertex_star(w, j)
            .into_iter()
            .filter(|t| self.tiles.contains(t))
            .collect()
    }

    /// Whether the union is connected through shared sides or vertices.
    pub fn is_connected(&self) -> bool {
        let Some(first) = self.tiles.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::new();
        let mut stack = alloc::vec![first.clone()];
        seen.insert(first.clone());
        while let Some(w) = stack.pop() {
            for t in touching(&w) {
                if self.tiles.contains(&t) && seen.insert(t.clone()) {
                    stack.push(t);
                }
            }
        }
        seen.len() == self.tiles.len()
    }
}

impl TileRegion for TileComplex {
    fn canonical(&self, w: &NormalForm) -> NormalForm {
        w.clone()
    }

    fn members(&self) -> &BTreeSet<NormalForm> {
        &self.tiles
    }

    fn insert(&mut self, canonical: NormalForm) -> bool {
        self.tiles.insert(canonical)
    }
}

/// How the axis sits relative to the tessellation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Degeneracy {
    /// The axis runs along tile edges.
    pub along_edges: bool,
    /// The axis passes through a tile vertex without running along edges.
    pub through_vertex: bool,
}

/// A tile meeting the axis window, with the parameters where it does.
#[derive(Clone, Debug)]
pub struct WindowTile {
    pub tile: Tile,
    pub lo: f64,
    pub hi: f64,
}

/// Tiles modulo the cyclic group generated by an axial element, one
/// ShortLex-least representative per orbit.
#[derive(Clone, Debug)]
pub struct QuotientTileSet {
    alpha: NormalForm,
    alpha_inv: NormalForm,
    alpha_iso: Isometry,
    class: ClassTag,
    period: f64,
    axis: GeodesicParam,
    axis_offset: f64,
    seam: f64,
    degeneracy: Degeneracy,
    window: Vec<WindowTile>,
    reps: BTreeSet<NormalForm>,
}

/// Distance between the centres of adjacent tiles; each letter of a word
/// moves the tile centre by at most this much.
fn center_step() -> f64 {
    2.0 * inradius()
}

impl QuotientTileSet {
    /// The pentagons whose closure meets the closed geodesic of `alpha`.
    pub fn s0(alpha: &NormalForm) -> Result<Self, TilingError> {
        compute_s0(alpha)
    }

    pub fn alpha(&self) -> &NormalForm {
        &self.alpha
    }

    pub fn alpha_isometry(&self) -> &Isometry {
        &self.alpha_iso
    }

    pub fn class(&self) -> ClassTag {
        self.class
    }

    /// Translation length of `alpha`.
    pub fn period(&self) -> f64 {
        self.period
    }

    /// The axis, oriented in the direction of translation, with `t = 0` at
    /// the point nearest the origin.
    pub fn axis(&self) -> &GeodesicParam {
        &self.axis
    }

    /// Axis parameter of the basepoint: the first edge crossing at `t >= 0`.
    pub fn seam(&self) -> f64 {
        self.seam
    }

    pub fn degeneracy(&self) -> Degeneracy {
        self.degeneracy
    }

    /// The lifts meeting the axis on `[seam, seam + period]`.
    pub fn window(&self) -> &[WindowTile] {
        &self.window
    }

    pub fn reps(&self) -> &BTreeSet<NormalForm> {
        &self.reps
    }

    pub fn tiles(&self) -> impl Iterator<Item = Tile> + '_ {
        self.reps.iter().cloned().map(Tile::new)
    }

    /// Same group and axis data with a different set of representatives.
    pub fn with_reps(&self, reps: BTreeSet<NormalForm>) -> Self {
        let mut out = self.clone();
        out.reps = reps;
        out
    }

    /// `alpha^n * w`.
    pub fn translate(&self, w: &NormalForm, n: i64) -> NormalForm {
        let step = if n < 0 { &self.alpha_inv } else { &self.alpha };
        let mut cur = w.clone();
        for _ in 0..n.unsigned_abs() {
            cur = multiply(step, &cur);
        }
        cur
    }

    /// Axis parameter of the foot of the perpendicular from the tile centre.
    pub fn axis_position(&self, w: &NormalForm) -> f64 {
        self.axis.param_of_vec(&Tile::new(w.clone()).center_vec())
    }
}

impl TileRegion for QuotientTileSet {
    fn canonical(&self, w: &NormalForm) -> NormalForm {
        let c = Tile::new(w.clone()).center_vec();
        let tau = self.axis.param_of_vec(&c);
        let off = lorentz::dot(&c, &self.axis.normal()).abs().asinh();
        let slack = off + self.axis_offset;
        let step = center_step();
        let ell = self.period;
        let mut best = w.clone();
        for dir in [1i64, -1] {
            let alpha = if dir > 0 { &self.alpha } else { &self.alpha_inv };
            let mut cur = w.clone();
            let mut n = 0i64;
            loop {
                n += dir;
                let shift = tau + n as f64 * ell;
                // |alpha^n w| >= d(O, alpha^n w O) / step, and the projection
                // of alpha^n w O onto the axis sits at tau + n ell.
                let lower = (shift.abs() - slack) / step - 1e-6;
                if shift * dir as f64 >= 0.0 && lower > best.len() as f64 {
                    break;
                }
                cur = multiply(alpha, &cur);
                if cur < best {
                    best = cur.clone();
                }
            }
        }
        best
    }

    fn members(&self) -> &BTreeSet<NormalForm> {
        &self.reps
    }

    fn insert(&mut self, canonical: NormalForm) -> bool {
        self.reps.insert(canonical)
    }
}

/// The pentagons whose closure meets the axis of `alpha`, modulo `alpha`.
pub fn compute_s0(alpha: &NormalForm) -> Result<QuotientTileSet, TilingError> {
    let iso = word_to_isometry(alpha);
    let class = classify(&iso)?;
    if !class.tag.is_axial() {
        return Err(TilingError::NotAxial(class.tag));
    }
    let ell = class.translation_length;
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(ell > 1e-9) {
        return Err(TilingError::WindowExhausted(ell));
    }
    let axis = GeodesicParam::axis(&iso)?;
    let axis_offset = crate::hypgeo::dist(&DiscPoint::ORIGIN, &axis.point_at(0.0));
    let d0 = diameter();

    // Centre the window on the anchor: far tiles have large coordinates and
    // lose precision in every inner product.
    let from = -ell / 2.0;
    let start = locate_tile(&axis.point_at(from))?;
    let near = tiles_meeting(&axis, from - 1e-9, from + d0 + 1e-6, start);
    let seam = near
        .iter()
        .flat_map(|(t, _)| t.crossings(&axis))
        .filter(|&t| t >= from - 1e-12)
        .fold(f64::INFINITY, f64::min);
    if !seam.is_finite() {
        return Err(TilingError::NoSeam);
    }

    let start = locate_tile(&axis.point_at(seam))?;
    let hits = tiles_meeting(&axis, seam, seam + ell, start);
    let along_edges = hits.iter().any(|(t, _)| t.has_side_on(&axis));
    let n = axis.normal();
    let through_vertex = !along_edges
        && hits.iter().any(|(t, _)| {
            (0..5).any(|k| lorentz::dot(&t.vertex_vec(k), &n).abs() <= MEET_EPS)
        });

    let mut window: Vec<WindowTile> = hits
        .into_iter()
        .map(|(tile, iv)| WindowTile {
            tile,
            lo: iv.lo,
            hi: iv.hi,
        })
        .collect();
    window.sort_by(|a, b| a.lo.total_cmp(&b.lo).then_with(|| a.tile.word.cmp(&b.tile.word)));

    let mut q = QuotientTileSet {
        alpha: alpha.clone(),
        alpha_inv: invert(alpha),
        alpha_iso: iso,
        class: class.tag,
        period: ell,
        axis,
        axis_offset,
        seam,
        degeneracy: Degeneracy {
            along_edges,
            through_vertex,
        },
        window: Vec::new(),
        reps: BTreeSet::new(),
    };
    let reps: BTreeSet<NormalForm> = window.iter().map(|w| q.canonical(&w.tile.word)).collect();
    q.reps = reps;
    q.window = core::mem::take(&mut window);
    Ok(q)
}

/// Groups the window lifts by orbit representative.
pub fn window_lifts(q: &QuotientTileSet) -> BTreeMap<NormalForm, Vec<NormalForm>> {
    let mut out: BTreeMap<NormalForm, Vec<NormalForm>> = BTreeMap::new();
    for w in q.window() {
        out.entry(q.canonical(&w.tile.word))
            .or_default()
            .push(w.tile.word.clone());
    }
    out
}
