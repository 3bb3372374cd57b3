//! Lifting a hull from the cyclic quotient back to the disc, and the
//! word-level certificates for the covers built from that lift.
//!
//! The lift takes, from every orbit of the hull, the tile lying between
//! the tessellation line through the basepoint and its image under the
//! axial element. That strip is a fundamental domain for the cyclic group,
//! so the lift is convex whenever the hull is.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use thiserror::Error;

use crate::convexify::is_locally_convex;
use crate::coxgroup::{invert, multiply, Generator, NormalForm};
use crate::hypgeo::{DiscPoint, GeodesicParam};
use crate::lorentz::{self, Vec3};
use crate::tiling::{frame_of, touching, QuotientTileSet, Tile, TileComplex, TileRegion, MEET_EPS};
#[allow(unused_imports)]
use num_traits::Float;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum CoverError {
    #[error("could not place a lift of {0} next to the chosen tiles")]
    Disconnected(NormalForm),
    #[error("{0} and its translate by alpha^{1} are both in the domain")]
    Collision(NormalForm, i64),
}

/// How the lift was chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftRule {
    /// Between the tessellation line through the basepoint and its image.
    Strip,
    /// Axis window for tiles meeting the axis, then adjacency for the rest;
    /// used when the line and its image cross.
    Adjacency,
}

/// Finitely many tiles of the disc together with the axis segment they
/// are meant to contain.
#[derive(Clone, Debug)]
pub struct LiftedDomain {
    tiles: BTreeSet<NormalForm>,
    alpha: NormalForm,
    axis: GeodesicParam,
    start: f64,
    length: f64,
    rule: LiftRule,
}

impl LiftedDomain {
    /// A domain from explicit parts; the segment is `[start, start + length]`.
    pub fn from_parts(
        tiles: BTreeSet<NormalForm>,
        alpha: NormalForm,
        axis: GeodesicParam,
        start: f64,
        length: f64,
    ) -> Self {
        Self {
            tiles,
            alpha,
            axis,
            start,
            length,
            rule: LiftRule::Adjacency,
        }
    }

    pub fn tiles(&self) -> &BTreeSet<NormalForm> {
        &self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn alpha(&self) -> &NormalForm {
        &self.alpha
    }

    pub fn axis(&self) -> &GeodesicParam {
        &self.axis
    }

    /// Axis parameters `(start, start + length)` of the segment.
    pub fn segment(&self) -> (f64, f64) {
        (self.start, self.start + self.length)
    }

    pub fn rule(&self) -> LiftRule {
        self.rule
    }

    pub fn complex(&self) -> TileComplex {
        TileComplex::new(self.tiles.iter().cloned())
    }

    /// `alpha^n` applied to every tile.
    pub fn translate_words(&self, n: i64) -> BTreeSet<NormalForm> {
        let step = if n < 0 { invert(&self.alpha) } else { self.alpha.clone() };
        let pow = step.power(n.unsigned_abs() as i64);
        self.tiles.iter().map(|w| multiply(&pow, w)).collect()
    }

    /// Boundary edges as `(tile, side)` with the neighbour outside.
    pub fn boundary_edges(&self) -> Vec<(NormalForm, usize)> {
        let mut out = Vec::new();
        for w in &self.tiles {
            for i in 0..5 {
                if !self.tiles.contains(&w.append(Generator::from_side(i))) {
                    out.push((w.clone(), i));
                }
            }
        }
        out
    }

    /// Whether the axis point at `t` lies in the union but on no boundary edge.
    pub fn interior_at(&self, t: f64) -> bool {
        let x = self.axis.point_at(t);
        let inside = self
            .tiles
            .iter()
            .any(|w| Tile::new(w.clone()).contains(&x, MEET_EPS));
        inside && !self.on_boundary(&x)
    }

    fn on_boundary(&self, p: &DiscPoint) -> bool {
        let x = p.hyperboloid();
        self.boundary_edges().into_iter().any(|(w, i)| {
            let t = Tile::new(w);
            on_edge(&t, i, &x)
        })
    }
}

fn on_edge(t: &Tile, i: usize, x: &Vec3) -> bool {
    lorentz::dot(x, &t.normal(i)).abs() <= MEET_EPS
        && (0..5)
            .filter(|&k| k != i)
            .all(|k| lorentz::dot(x, &t.normal(k)) >= -MEET_EPS)
}

/// Unit tangent of the axis at parameter `t`.
fn tangent_at(axis: &GeodesicParam, t: f64) -> Vec3 {
    lorentz::add(
        &lorentz::scale(&axis.origin_vec(), t.sinh()),
        &lorentz::scale(&axis.tangent_vec(), t.cosh()),
    )
}

/// Normal of the tessellation line crossing the axis at the basepoint,
/// choosing the most nearly perpendicular one at a vertex.
fn seam_line(y: &QuotientTileSet) -> Option<Vec3> {
    let t0 = y.seam();
    let tan = tangent_at(y.axis(), t0);
    let mut best: Option<(f64, Vec3)> = None;
    for w in y.window() {
        for i in 0..5 {
            let n = w.tile.normal(i);
            let (a, b) = y.axis().coefficients(&n);
            if a.abs() >= b.abs() {
                continue;
            }
            let t = (-a / b).atanh();
            if (t - t0).abs() > 1e-9 {
                continue;
            }
            let steep = lorentz::dot(&tan, &n).abs();
            if best.as_ref().is_none_or(|(s, _)| steep > *s + 1e-12) {
                best = Some((steep, n));
            }
        }
    }
    best.map(|(_, n)| n)
}

/// Picks one lift per orbit of `y` forming a connected union that contains
/// one period of the axis.
pub fn assemble_lift(y: &QuotientTileSet) -> Result<LiftedDomain, CoverError> {
    if let Some(d) = strip_lift(y) {
        return Ok(d);
    }
    adjacency_lift(y)
}

fn strip_lift(y: &QuotientTileSet) -> Option<LiftedDomain> {
    let t0 = y.seam();
    let ell = y.period();
    let m = seam_line(y)?;
    let am = lorentz::mat_vec(&frame_of(y.alpha()), &m);
    // the two lines must not cross
    if lorentz::dot(&m, &am).abs() < 1.0 + 1e-9 {
        return None;
    }
    let s1 = lorentz::dot(&tangent_at(y.axis(), t0), &m).signum();
    let s2 = lorentz::dot(&tangent_at(y.axis(), t0 + ell), &am).signum();
    let between = |c: &Vec3| s1 * lorentz::dot(c, &m) > 0.0 && s2 * lorentz::dot(c, &am) < 0.0;
    let mid = t0 + 0.5 * ell;
    let mut tiles = BTreeSet::new();
    for r in y.reps() {
        let n0 = ((mid - y.axis_position(r)) / ell).round() as i64;
        let mut found = None;
        for n in n0 - 2..=n0 + 2 {
            let lift = y.translate(r, n);
            if between(&Tile::new(lift.clone()).center_vec()) {
                if found.is_some() {
                    return None;
                }
                found = Some(lift);
            }
        }
        tiles.insert(found?);
    }
    let d = LiftedDomain {
        tiles,
        alpha: y.alpha().clone(),
        axis: *y.axis(),
        start: t0,
        length: ell,
        rule: LiftRule::Strip,
    };
    d.complex().is_connected().then_some(d)
}

fn adjacency_lift(y: &QuotientTileSet) -> Result<LiftedDomain, CoverError> {
    let t0 = y.seam();
    let ell = y.period();
    let mid = t0 + 0.5 * ell;
    let mut placed: BTreeSet<NormalForm> = BTreeSet::new();
    let mut orbits: BTreeSet<NormalForm> = BTreeSet::new();
    for w in y.window() {
        let c = 0.5 * (w.lo + w.hi);
        let r = y.canonical(&w.tile.word().clone());
        if c >= t0 && c < t0 + ell && y.members().contains(&r) && orbits.insert(r) {
            placed.insert(w.tile.word().clone());
        }
    }
    let mut pending: Vec<NormalForm> = y
        .reps()
        .iter()
        .filter(|r| !orbits.contains(*r))
        .cloned()
        .collect();
    while !pending.is_empty() {
        let mut progress = false;
        let mut rest = Vec::new();
        for r in pending {
            let mut best: Option<(f64, NormalForm)> = None;
            for p in &placed {
                for t in touching(p) {
                    if y.canonical(&t) != r {
                        continue;
                    }
                    let off = (y.axis_position(&t) - mid).abs();
                    if best.as_ref().is_none_or(|(b, w)| off < *b || (off == *b && t < *w)) {
                        best = Some((off, t));
                    }
                }
            }
            match best {
                Some((_, t)) => {
                    placed.insert(t);
                    progress = true;
                }
                None => rest.push(r),
            }
        }
        if !progress {
            return Err(CoverError::Disconnected(rest[0].clone()));
        }
        pending = rest;
    }
    Ok(LiftedDomain {
        tiles: placed,
        alpha: y.alpha().clone(),
        axis: *y.axis(),
        start: t0,
        length: ell,
        rule: LiftRule::Adjacency,
    })
}

/// Whether no two tiles differ by a power of alpha.
pub fn is_orbit_injective(y: &QuotientTileSet, d: &LiftedDomain) -> bool {
    let reps: BTreeSet<NormalForm> = d.tiles.iter().map(|w| y.canonical(w)).collect();
    reps.len() == d.tiles.len()
}

/// The checkable parts of the fundamental-domain property.
#[derive(Clone, Debug, PartialEq)]
pub struct DomainCertificate {
    /// Number of tiles, the index of the subgroup in the reflection group.
    pub index: usize,
    /// A tile whose translate by `alpha^n`, `0 < |n| <= 3`, is also a tile.
    pub translate_witness: Option<(NormalForm, i64)>,
    /// A boundary side whose reflection does not swap its tile with the outside neighbour.
    pub side_witness: Option<(NormalForm, usize)>,
}

impl DomainCertificate {
    pub fn passed(&self) -> bool {
        self.translate_witness.is_none() && self.side_witness.is_none()
    }
}

pub fn check_fundamental_domain(d: &LiftedDomain) -> DomainCertificate {
    let mut translate_witness = None;
    'outer: for n in [1i64, -1, 2, -2, 3, -3] {
        let moved = d.translate_words(n);
        for w in &moved {
            if d.tiles.contains(w) {
                let pre = multiply(&invert(&d.alpha).power(n), w);
                translate_witness = Some((pre, n));
                break 'outer;
            }
        }
    }
    let mut side_witness = None;
    for (w, i) in d.boundary_edges() {
        // the reflection in side i of tile w is w si w^-1
        let r = multiply(&w.append(Generator::from_side(i)), &invert(&w));
        // it must carry the tile across the side onto a tile outside the domain
        let across = w.append(Generator::from_side(i));
        let fixed = multiply(&r, &w) == across && !d.tiles.contains(&across);
        if !fixed {
            side_witness = Some((w, i));
            break;
        }
    }
    DomainCertificate {
        index: d.tiles.len(),
        translate_witness,
        side_witness,
    }
}

/// Whether the open axis segment misses every boundary edge while its
/// endpoints lie on the boundary, so that it embeds in the quotient.
pub fn embedded_lift_certificate(d: &LiftedDomain) -> bool {
    const END_EPS: f64 = 1e-7;
    let (lo, hi) = d.segment();
    let axis = d.axis();
    // The far end is a translate of the near one, so it carries the rounding
    // of a long word; ends are matched by parameter rather than by point.
    let mut ends = [false, false];
    let mut mark_ends = |p: f64, q: f64| {
        for (k, &t) in [lo, hi].iter().enumerate() {
            if t >= p - END_EPS && t <= q + END_EPS {
                ends[k] = true;
            }
        }
    };
    for (w, i) in d.boundary_edges() {
        let t = Tile::new(w);
        let n = t.normal(i);
        let (a, b) = axis.coefficients(&n);
        if a.abs() <= 1e-10 && b.abs() <= 1e-10 {
            // boundary edge along the axis
            let p = axis.param_of_vec(&t.vertex_vec(i));
            let q = axis.param_of_vec(&t.vertex_vec(i + 1));
            if p.max(q) > lo + END_EPS && p.min(q) < hi - END_EPS {
                return false;
            }
            mark_ends(p.min(q), p.max(q));
            continue;
        }
        if a.abs() >= b.abs() {
            continue;
        }
        let s = (-a / b).atanh();
        if !on_edge(&t, i, &axis.at(s)) {
            continue;
        }
        if s > lo + END_EPS && s < hi - END_EPS {
            return false;
        }
        mark_ends(s, s);
    }
    d.interior_at(0.5 * (lo + hi)) && ends[0] && ends[1]
}

/// The union of the domain and its translate by `alpha`, a domain for
/// `alpha^2`.
pub fn rf_witness(d: &LiftedDomain) -> Result<LiftedDomain, CoverError> {
    let moved = d.translate_words(1);
    let mut tiles = d.tiles.clone();
    for w in moved {
        if !tiles.insert(w.clone()) {
            return Err(CoverError::Collision(w, 1));
        }
    }
    Ok(LiftedDomain {
        tiles,
        alpha: d.alpha.power(2),
        axis: d.axis,
        start: d.start,
        length: 2.0 * d.length,
        rule: d.rule,
    })
}

/// Certificate data for a doubled domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RfCheck {
    pub tiles: usize,
    pub locally_convex: bool,
    pub seam_interior: bool,
}

pub fn check_rf_witness(d: &LiftedDomain, doubled: &LiftedDomain) -> RfCheck {
    RfCheck {
        tiles: doubled.len(),
        locally_convex: is_locally_convex(&doubled.complex()),
        seam_interior: doubled.interior_at(d.segment().1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexify::convexify;

    fn nf(s: &str) -> NormalForm {
        s.parse().unwrap()
    }

    fn lift(word: &str) -> (QuotientTileSet, LiftedDomain) {
        let s0 = QuotientTileSet::s0(&nf(word)).unwrap();
        let y = convexify(&s0).unwrap().hull;
        let d = assemble_lift(&y).unwrap();
        (y, d)
    }

    #[test]
    fn tessellation_line_lift() {
        let (y, d) = lift("s1s3");
        assert_eq!(d.len(), 4);
        assert_eq!(d.rule(), LiftRule::Strip);
        assert!(d.complex().is_connected());
        assert!(is_orbit_injective(&y, &d));
        let cert = check_fundamental_domain(&d);
        assert!(cert.passed(), "{cert:?}");
        assert_eq!(cert.index, 4);
        assert!(embedded_lift_certificate(&d));
        let w = rf_witness(&d).unwrap();
        let check = check_rf_witness(&d, &w);
        assert_eq!(check.tiles, 8);
        assert!(check.locally_convex && check.seam_interior);
    }

    #[test]
    fn duplicated_translate_is_caught() {
        let (_, d) = lift("s1s3");
        let mut tiles = d.tiles().clone();
        let first = tiles.iter().next().unwrap().clone();
        tiles.insert(multiply(d.alpha(), &first));
        let bad = LiftedDomain::from_parts(tiles, d.alpha().clone(), *d.axis(), d.segment().0, 1.0);
        let cert = check_fundamental_domain(&bad);
        assert!(cert.translate_witness.is_some());
    }

    #[test]
    fn single_tile_does_not_contain_a_period() {
        let (_, d) = lift("s1s3");
        let one: BTreeSet<_> = d.tiles().iter().take(1).cloned().collect();
        let (lo, hi) = d.segment();
        let single = LiftedDomain::from_parts(one, d.alpha().clone(), *d.axis(), lo, hi - lo);
        assert!(!embedded_lift_certificate(&single));
    }

    #[test]
    fn certificates_on_sample_axes() {
        for w in ["s1s2s4", "s1s3s5", "s1s4s2s5", "s1s2s3s4s5", "s1s3s2s4s1"] {
            let Ok(s0) = QuotientTileSet::s0(&nf(w)) else { continue };
            let y = convexify(&s0).unwrap().hull;
            let d = assemble_lift(&y).unwrap();
            assert_eq!(d.len(), y.len(), "{w}");
            assert!(is_orbit_injective(&y, &d), "{w}");
            assert!(check_fundamental_domain(&d).passed(), "{w}");
            assert!(embedded_lift_certificate(&d), "{w}");
            let double = rf_witness(&d).unwrap();
            let check = check_rf_witness(&d, &double);
            assert_eq!(check.tiles, 2 * d.len(), "{w}");
            assert!(check.locally_convex && check.seam_interior, "{w} {check:?}");
        }
    }
}
