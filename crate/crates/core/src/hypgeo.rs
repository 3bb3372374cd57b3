//! Hyperbolic plane primitives in the Poincaré disc model.
//!
//! Isometries are stored as SU(1,1) matrices `[[a, b], [conj b, conj a]]`
//! together with an orientation flag. An orientation-reversing isometry acts
//! as `z -> (a conj(z) + b) / (conj(b) conj(z) + conj(a))`.

use core::f64::consts::PI;
use core::fmt;

use num_complex::Complex64;
use thiserror::Error;

use crate::lorentz::{self, Vec3};
#[allow(unused_imports)]
use num_traits::Float;

/// Tolerance on `|trace| - 2` used to separate elliptic from hyperbolic.
pub const CLASSIFY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("point ({x}, {y}) is not strictly inside the unit disc")]
    OutsideDisc { x: f64, y: f64 },
    #[error("angles {0}, {1}, {2} do not form a hyperbolic triangle")]
    NotHyperbolicTriangle(f64, f64, f64),
    #[error("side lengths must be non-negative, got {0} and {1}")]
    NegativeSide(f64, f64),
    #[error("|trace| = {trace} is within tolerance of 2 for a non-identity isometry")]
    AmbiguousTrace { trace: f64 },
    #[error("{0} isometries have no axis")]
    NotAxial(ClassTag),
    #[error("geodesic needs two distinct points")]
    DegenerateGeodesic,
}

/// A point strictly inside the unit disc.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiscPoint {
    z: Complex64,
}

impl DiscPoint {
    pub const ORIGIN: DiscPoint = DiscPoint {
        z: Complex64::new(0.0, 0.0),
    };

    pub fn new(x: f64, y: f64) -> Result<Self, GeometryError> {
        if x.is_finite() && y.is_finite() && x * x + y * y < 1.0 {
            Ok(Self {
                z: Complex64::new(x, y),
            })
        } else {
            Err(GeometryError::OutsideDisc { x, y })
        }
    }

    /// The point at hyperbolic distance `r` from the origin in direction
    /// `angle`.
    pub fn polar(r: f64, angle: f64) -> Self {
        let rho = (r / 2.0).tanh();
        Self {
            z: Complex64::from_polar(rho, angle),
        }
    }

    pub(crate) fn from_complex(z: Complex64) -> Self {
        debug_assert!(z.norm_sqr() < 1.0, "left the disc: {z}");
        Self { z }
    }

    pub(crate) fn hyperboloid(&self) -> Vec3 {
        lorentz::from_disc(self.z)
    }

    pub(crate) fn from_hyperboloid(x: &Vec3) -> Self {
        Self::from_complex(lorentz::to_disc(x))
    }

    pub fn x(&self) -> f64 {
        self.z.re
    }

    pub fn y(&self) -> f64 {
        self.z.im
    }

    pub fn to_complex(&self) -> Complex64 {
        self.z
    }
}

/// Hyperbolic distance between two disc points.
pub fn dist(p: &DiscPoint, q: &DiscPoint) -> f64 {
    // cosh d = 1 + 2|p-q|^2 / ((1-|p|^2)(1-|q|^2)), written through sinh(d/2)
    // so that short distances keep their precision.
    let num = (p.z - q.z).norm();
    let den = ((1.0 - p.z.norm_sqr()) * (1.0 - q.z.norm_sqr())).sqrt();
    2.0 * (num / den).asinh()
}

/// A complete geodesic of the disc: a diameter, or a circular arc orthogonal
/// to the unit circle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Geodesic {
    /// Diameter through the origin in direction `angle`, with `angle` in `[0, pi)`.
    Diameter { angle: f64 },
    /// Arc of the circle `|z - center| = radius`, with `radius^2 = |center|^2 - 1`.
    Arc { center: Complex64, radius: f64 },
}

impl Geodesic {
    pub fn diameter(angle: f64) -> Self {
        let a = angle % PI;
        Geodesic::Diameter {
            angle: if a < 0.0 { a + PI } else { a },
        }
    }

    /// The geodesic through two distinct points.
    pub fn through(p: &DiscPoint, q: &DiscPoint) -> Result<Self, GeometryError> {
        if (p.z - q.z).norm() == 0.0 {
            return Err(GeometryError::DegenerateGeodesic);
        }
        let n = lorentz::cross(&p.hyperboloid(), &q.hyperboloid());
        Ok(Self::from_normal(&lorentz::unit_spacelike(&n)))
    }

    /// The geodesic joining two distinct points of the unit circle.
    pub fn from_ideal(u: Complex64, v: Complex64) -> Result<Self, GeometryError> {
        let (u, v) = (u / u.norm(), v / v.norm());
        if (u - v).norm() < 1e-15 {
            return Err(GeometryError::DegenerateGeodesic);
        }
        let n = lorentz::cross(&lorentz::from_ideal(u), &lorentz::from_ideal(v));
        Ok(Self::from_normal(&lorentz::unit_spacelike(&n)))
    }

    pub(crate) fn from_normal(n: &Vec3) -> Self {
        let scale = n[0].abs().max(n[1].abs()).max(n[2].abs());
        if n[0].abs() <= 1e-14 * scale {
            Geodesic::diameter((-n[1]).atan2(n[2]))
        } else {
            let s = if n[0] < 0.0 { -1.0 } else { 1.0 };
            let n0 = s * n[0];
            Geodesic::Arc {
                center: Complex64::new(s * n[1] / n0, s * n[2] / n0),
                radius: 1.0 / n0,
            }
        }
    }

    /// Unit spacelike normal; its sign is fixed by the representation.
    pub(crate) fn normal(&self) -> Vec3 {
        match *self {
            Geodesic::Diameter { angle } => [0.0, -angle.sin(), angle.cos()],
            Geodesic::Arc { center, radius } => {
                [1.0 / radius, center.re / radius, center.im / radius]
            }
        }
    }

    /// The two ideal endpoints on the unit circle.
    pub fn ideal_endpoints(&self) -> (Complex64, Complex64) {
        match *self {
            Geodesic::Diameter { angle } => {
                let u = Complex64::from_polar(1.0, angle);
                (u, -u)
            }
            Geodesic::Arc { center, radius } => {
                // The tangents from the origin touch the circle at the endpoints.
                let dir = center / center.norm();
                let half = radius.atan2(1.0);
                let rot = Complex64::from_polar(1.0, half);
                (dir * rot.conj(), dir * rot)
            }
        }
    }

    /// Hyperbolic distance from `p` to the geodesic.
    pub fn distance_to(&self, p: &DiscPoint) -> f64 {
        self.signed_sinh(&p.hyperboloid()).abs().asinh()
    }

    /// `sinh` of the signed distance, positive on one fixed side.
    pub(crate) fn signed_sinh(&self, x: &Vec3) -> f64 {
        lorentz::dot(x, &self.normal())
    }

    /// Whether two geodesics coincide as point sets.
    pub fn approx_eq(&self, other: &Geodesic, tol: f64) -> bool {
        let (a, b) = (self.normal(), other.normal());
        let close = |s: f64| (0..3).all(|i| (a[i] - s * b[i]).abs() <= tol * (1.0 + a[i].abs()));
        close(1.0) || close(-1.0)
    }
}

/// Orientation character of an isometry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Preserving,
    Reversing,
}

impl Parity {
    pub fn sign(self) -> i8 {
        match self {
            Parity::Preserving => 1,
            Parity::Reversing => -1,
        }
    }

    pub fn compose(self, other: Parity) -> Parity {
        if self == other {
            Parity::Preserving
        } else {
            Parity::Reversing
        }
    }
}

/// An isometry of the disc.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Isometry {
    a: Complex64,
    b: Complex64,
    parity: Parity,
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry {
        a: Complex64::new(1.0, 0.0),
        b: Complex64::new(0.0, 0.0),
        parity: Parity::Preserving,
    };

    /// Builds an isometry from the top row of its matrix, rescaling it to
    /// unit pseudo-determinant.
    pub fn from_row(a: Complex64, b: Complex64, parity: Parity) -> Option<Self> {
        let det = a.norm_sqr() - b.norm_sqr();
        // also rejects NaN
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(det > 0.0) {
            return None;
        }
        let s = 1.0 / det.sqrt();
        Some(Self {
            a: a * s,
            b: b * s,
            parity,
        })
    }

    /// Rotation by `angle` about the origin.
    pub fn rotation(angle: f64) -> Self {
        Self {
            a: Complex64::from_polar(1.0, angle / 2.0),
            b: Complex64::new(0.0, 0.0),
            parity: Parity::Preserving,
        }
    }

    /// Reflection in a geodesic; fixes it pointwise.
    pub fn reflect_in(line: &Geodesic) -> Self {
        match *line {
            // z -> e^{2i angle} conj(z)
            Geodesic::Diameter { angle } => Self {
                a: Complex64::from_polar(1.0, angle),
                b: Complex64::new(0.0, 0.0),
                parity: Parity::Reversing,
            },
            // circle inversion z -> (c conj(z) - 1) / (conj(z) - conj(c)),
            // rescaled by i / r into SU(1,1) form
            Geodesic::Arc { center, radius } => Self {
                a: Complex64::i() * center / radius,
                b: -Complex64::i() / radius,
                parity: Parity::Reversing,
            },
        }
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn top_row(&self) -> (Complex64, Complex64) {
        (self.a, self.b)
    }

    /// `|a|^2 - |b|^2`; equal to 1 up to rounding.
    pub fn pseudo_det(&self) -> f64 {
        self.a.norm_sqr() - self.b.norm_sqr()
    }

    /// Matrix trace. Only conjugation invariant for orientation-preserving maps.
    pub fn trace(&self) -> f64 {
        2.0 * self.a.re
    }

    fn renormalized(self) -> Self {
        let det = self.pseudo_det();
        let s = 1.0 / det.sqrt();
        Self {
            a: self.a * s,
            b: self.b * s,
            parity: self.parity,
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let (a2, b2) = match self.parity {
            Parity::Preserving => (other.a, other.b),
            Parity::Reversing => (other.a.conj(), other.b.conj()),
        };
        Isometry {
            a: self.a * a2 + self.b * b2.conj(),
            b: self.a * b2 + self.b * a2.conj(),
            parity: self.parity.compose(other.parity),
        }
        .renormalized()
    }

    pub fn inverse(&self) -> Isometry {
        match self.parity {
            Parity::Preserving => Isometry {
                a: self.a.conj(),
                b: -self.b,
                parity: Parity::Preserving,
            },
            Parity::Reversing => Isometry {
                a: self.a,
                b: -self.b.conj(),
                parity: Parity::Reversing,
            },
        }
    }

    /// `self^n` for any integer `n`.
    pub fn power(&self, n: i64) -> Isometry {
        let base = if n < 0 { self.inverse() } else { *self };
        let mut out = Isometry::IDENTITY;
        for _ in 0..n.unsigned_abs() {
            out = base.compose(&out);
        }
        out
    }

    fn act(&self, z: Complex64) -> Complex64 {
        let w = match self.parity {
            Parity::Preserving => z,
            Parity::Reversing => z.conj(),
        };
        (self.a * w + self.b) / (self.b.conj() * w + self.a.conj())
    }

    pub fn apply(&self, p: &DiscPoint) -> DiscPoint {
        DiscPoint::from_complex(self.act(p.z))
    }

    /// Action on a point of the unit circle.
    pub fn apply_ideal(&self, u: Complex64) -> Complex64 {
        let w = self.act(u);
        w / w.norm()
    }

    pub fn apply_geodesic(&self, line: &Geodesic) -> Geodesic {
        let (u, v) = line.ideal_endpoints();
        Geodesic::from_ideal(self.apply_ideal(u), self.apply_ideal(v))
            .expect("isometries keep ideal endpoints distinct")
    }

    /// Equality as maps: matrices agree up to an overall sign and the
    /// parities match.
    pub fn approx_eq(&self, other: &Isometry, tol: f64) -> bool {
        if self.parity != other.parity {
            return false;
        }
        let plus = (self.a - other.a).norm() + (self.b - other.b).norm();
        let minus = (self.a + other.a).norm() + (self.b + other.b).norm();
        plus.min(minus) <= tol
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.parity == Parity::Preserving && self.b.norm() <= tol && self.a.im.abs() <= tol
    }
}

/// Conjugacy type of an isometry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    Identity,
    Elliptic,
    Hyperbolic,
    Reflection,
    GlideReflection,
}

impl ClassTag {
    pub fn name(self) -> &'static str {
        match self {
            ClassTag::Identity => "Identity",
            ClassTag::Elliptic => "Elliptic",
            ClassTag::Hyperbolic => "Hyperbolic",
            ClassTag::Reflection => "Reflection",
            ClassTag::GlideReflection => "GlideReflection",
        }
    }

    pub fn is_axial(self) -> bool {
        matches!(self, ClassTag::Hyperbolic | ClassTag::GlideReflection)
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IsometryClass {
    pub tag: ClassTag,
    /// Zero unless the class is hyperbolic or a glide reflection.
    pub translation_length: f64,
}

pub fn classify(g: &Isometry) -> Result<IsometryClass, GeometryError> {
    match g.parity {
        Parity::Preserving => classify_preserving(g),
        Parity::Reversing => {
            let sq = g.compose(g);
            if sq.is_identity(CLASSIFY_TOL) {
                return Ok(IsometryClass {
                    tag: ClassTag::Reflection,
                    translation_length: 0.0,
                });
            }
            let c = classify_preserving(&sq)?;
            match c.tag {
                ClassTag::Hyperbolic => Ok(IsometryClass {
                    tag: ClassTag::GlideReflection,
                    translation_length: c.translation_length / 2.0,
                }),
                // The square of an orientation-reversing map is never a
                // rotation; getting here means the matrix has drifted.
                _ => Err(GeometryError::AmbiguousTrace {
                    trace: sq.trace().abs(),
                }),
            }
        }
    }
}

fn classify_preserving(g: &Isometry) -> Result<IsometryClass, GeometryError> {
    let tr = g.trace().abs();
    let tag = if g.is_identity(CLASSIFY_TOL) {
        ClassTag::Identity
    } else if tr < 2.0 - CLASSIFY_TOL {
        ClassTag::Elliptic
    } else if tr > 2.0 + CLASSIFY_TOL {
        return Ok(IsometryClass {
            tag: ClassTag::Hyperbolic,
            translation_length: 2.0 * (tr / 2.0).acosh(),
        });
    } else {
        return Err(GeometryError::AmbiguousTrace { trace: tr });
    };
    Ok(IsometryClass {
        tag,
        translation_length: 0.0,
    })
}

/// Ideal endpoints `(repelling, attracting)` of the axis of a hyperbolic
/// isometry or glide reflection.
pub fn axis_endpoints(g: &Isometry) -> Result<(Complex64, Complex64), GeometryError> {
    let class = classify(g)?;
    if !class.tag.is_axial() {
        return Err(GeometryError::NotAxial(class.tag));
    }
    let h = match g.parity {
        Parity::Preserving => *g,
        Parity::Reversing => g.compose(g),
    };
    // Fixed points solve conj(b) z^2 + (conj(a) - a) z - b = 0.
    let s = (h.a.re * h.a.re - 1.0).max(0.0).sqrt();
    let bc = h.b.conj();
    let i_im = Complex64::new(0.0, h.a.im);
    let z1 = (i_im + s) / bc;
    let z2 = (i_im - s) / bc;
    let (z1, z2) = (z1 / z1.norm(), z2 / z2.norm());
    // |g'(z)| = 1 / |conj(b) z + conj(a)|^2 is below one at the attractor.
    let stretch = |z: Complex64| (bc * z + h.a.conj()).norm();
    if stretch(z1) > stretch(z2) {
        Ok((z2, z1))
    } else {
        Ok((z1, z2))
    }
}

/// The invariant geodesic of a hyperbolic isometry or glide reflection.
pub fn axis_of(g: &Isometry) -> Result<Geodesic, GeometryError> {
    let (r, a) = axis_endpoints(g)?;
    Geodesic::from_ideal(r, a)
}

/// Side `c` opposite angle `gamma` of the triangle with angles
/// `alpha`, `beta`, `gamma`.
pub fn law_of_cosines_angles(alpha: f64, beta: f64, gamma: f64) -> Result<f64, GeometryError> {
    let ok = |x: f64| x > 0.0 && x < PI;
    if !(ok(alpha) && ok(beta) && ok(gamma)) || alpha + beta + gamma >= PI {
        return Err(GeometryError::NotHyperbolicTriangle(alpha, beta, gamma));
    }
    let c = (gamma.cos() + alpha.cos() * beta.cos()) / (alpha.sin() * beta.sin());
    Ok(c.max(1.0).acosh())
}

/// Side opposite the angle `gamma` enclosed by sides `a` and `b`.
pub fn law_of_cosines_sides(a: f64, b: f64, gamma: f64) -> Result<f64, GeometryError> {
    if a < 0.0 || b < 0.0 {
        return Err(GeometryError::NegativeSide(a, b));
    }
    let c = a.cosh() * b.cosh() - a.sinh() * b.sinh() * gamma.cos();
    Ok(c.max(1.0).acosh())
}

/// The angle `theta0` with `cot(pi/2 - theta0) = sinh b`.
pub fn angle_of_parallelism(b: f64) -> f64 {
    b.sinh().atan()
}

/// Unit-speed parameterisation `t -> x(t)` of a geodesic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeodesicParam {
    origin: Vec3,
    tangent: Vec3,
}

impl GeodesicParam {
    /// `x(0) = p` and `x(dist(p, q)) = q`.
    pub fn through(p: &DiscPoint, q: &DiscPoint) -> Result<Self, GeometryError> {
        let d = dist(p, q);
        if d == 0.0 {
            return Err(GeometryError::DegenerateGeodesic);
        }
        let (ph, qh) = (p.hyperboloid(), q.hyperboloid());
        let u = lorentz::sub(&qh, &lorentz::scale(&ph, d.cosh()));
        Ok(Self {
            origin: ph,
            tangent: lorentz::unit_spacelike(&u),
        })
    }

    /// Parameterises `line` from the foot of the perpendicular dropped from
    /// `anchor`, running towards the ideal point `toward`.
    pub fn along(line: &Geodesic, anchor: &DiscPoint, toward: Complex64) -> Self {
        let n = line.normal();
        let origin = lorentz::project(&anchor.hyperboloid(), &n);
        let mut tangent = lorentz::unit_spacelike(&lorentz::cross(&n, &origin));
        let target = lorentz::from_ideal(toward / toward.norm());
        // x(t) e^{-t} -> (origin + tangent) / 2, which is light-like and
        // proportional to the endpoint reached as t -> +inf.
        let fwd = lorentz::dot(&lorentz::add(&origin, &tangent), &target).abs();
        let bwd = lorentz::dot(&lorentz::sub(&origin, &tangent), &target).abs();
        if bwd < fwd {
            tangent = lorentz::scale(&tangent, -1.0);
        }
        Self { origin, tangent }
    }

    /// The axis of `g`, oriented in its direction of translation and
    /// anchored at the point nearest the origin.
    pub fn axis(g: &Isometry) -> Result<Self, GeometryError> {
        let (r, a) = axis_endpoints(g)?;
        let line = Geodesic::from_ideal(r, a)?;
        Ok(Self::along(&line, &DiscPoint::ORIGIN, a))
    }

    pub(crate) fn at(&self, t: f64) -> Vec3 {
        lorentz::add(
            &lorentz::scale(&self.origin, t.cosh()),
            &lorentz::scale(&self.tangent, t.sinh()),
        )
    }

    pub fn point_at(&self, t: f64) -> DiscPoint {
        DiscPoint::from_hyperboloid(&self.at(t))
    }

    /// Parameter of the foot of the perpendicular from `p`.
    pub fn param_of(&self, p: &DiscPoint) -> f64 {
        self.param_of_vec(&p.hyperboloid())
    }

    pub(crate) fn param_of_vec(&self, x: &Vec3) -> f64 {
        let along = -lorentz::dot(x, &self.tangent);
        let base = lorentz::dot(x, &self.origin);
        (along / base).atanh()
    }

    pub fn geodesic(&self) -> Geodesic {
        Geodesic::from_normal(&self.normal())
    }

    pub(crate) fn normal(&self) -> Vec3 {
        lorentz::unit_spacelike(&lorentz::cross(&self.origin, &self.tangent))
    }

    pub(crate) fn origin_vec(&self) -> Vec3 {
        self.origin
    }

    pub(crate) fn tangent_vec(&self) -> Vec3 {
        self.tangent
    }

    /// `(cosh, sinh)` coefficients of `t -> <x(t), n>`.
    pub(crate) fn coefficients(&self, n: &Vec3) -> (f64, f64) {
        (lorentz::dot(&self.origin, n), lorentz::dot(&self.tangent, n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::FRAC_PI_2;
    use core::f64::consts::FRAC_PI_4;

    fn e_p() -> f64 {
        (1.0 + 2.0 * (2.0 * PI / 5.0).cos()).acosh()
    }

    fn d0() -> f64 {
        let c = 1.0 + 2.0 * (2.0 * PI / 5.0).cos();
        (c * c).acosh()
    }

    #[test]
    fn dist_examples() {
        let o = DiscPoint::ORIGIN;
        assert_eq!(dist(&o, &o), 0.0);
        let p = DiscPoint::new((0.5f64).tanh(), 0.0).unwrap();
        assert!((dist(&o, &p) - 1.0).abs() < 1e-15);
        assert!((dist(&p, &o) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn outside_disc_rejected() {
        assert!(DiscPoint::new(1.0, 0.0).is_err());
        assert!(DiscPoint::new(0.8, 0.8).is_err());
        assert!(DiscPoint::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn diameter_reflection_is_conjugation() {
        let r = Isometry::reflect_in(&Geodesic::diameter(0.0));
        let p = DiscPoint::new(0.3, -0.4).unwrap();
        let q = r.apply(&p);
        assert!((q.x() - 0.3).abs() < 1e-15 && (q.y() - 0.4).abs() < 1e-15);
        assert_eq!(classify(&r).unwrap().tag, ClassTag::Reflection);
    }

    #[test]
    fn arc_reflection_fixes_the_arc_and_is_involutive() {
        let line = Geodesic::from_ideal(
            Complex64::from_polar(1.0, 0.3),
            Complex64::from_polar(1.0, 1.9),
        )
        .unwrap();
        let r = Isometry::reflect_in(&line);
        assert!((r.pseudo_det() - 1.0).abs() < 1e-12);
        assert!(r.compose(&r).is_identity(1e-10));
        let (u, v) = line.ideal_endpoints();
        assert!((r.apply_ideal(u) - u).norm() < 1e-12);
        assert!((r.apply_ideal(v) - v).norm() < 1e-12);
        let mid = GeodesicParam::along(&line, &DiscPoint::ORIGIN, u).point_at(0.7);
        assert!(line.distance_to(&mid) < 1e-12);
        assert!((r.apply(&mid).to_complex() - mid.to_complex()).norm() < 1e-12);
    }

    #[test]
    fn arc_invariant_holds() {
        let line = Geodesic::through(
            &DiscPoint::new(0.2, 0.1).unwrap(),
            &DiscPoint::new(-0.4, 0.6).unwrap(),
        )
        .unwrap();
        match line {
            Geodesic::Arc { center, radius } => {
                assert!((radius * radius - (center.norm_sqr() - 1.0)).abs() < 1e-12);
            }
            Geodesic::Diameter { .. } => panic!("expected an arc"),
        }
    }

    #[test]
    fn through_origin_gives_diameter() {
        let line = Geodesic::through(&DiscPoint::ORIGIN, &DiscPoint::new(0.0, 0.5).unwrap()).unwrap();
        match line {
            Geodesic::Diameter { angle } => assert!((angle - FRAC_PI_2).abs() < 1e-12),
            Geodesic::Arc { .. } => panic!("expected a diameter"),
        }
    }

    #[test]
    fn law_of_cosines_angles_examples() {
        let e = law_of_cosines_angles(FRAC_PI_4, FRAC_PI_4, 2.0 * PI / 5.0).unwrap();
        assert!((e - e_p()).abs() < 1e-14);
        assert!((e - 1.0613).abs() < 1e-4);
        let c = law_of_cosines_angles(PI / 6.0, PI / 6.0, FRAC_PI_2).unwrap();
        assert!((c - 3.0f64.acosh()).abs() < 1e-14);
        assert!(law_of_cosines_angles(FRAC_PI_2, FRAC_PI_2, FRAC_PI_2).is_err());
        assert!(law_of_cosines_angles(FRAC_PI_4, FRAC_PI_4, FRAC_PI_2).is_err());
    }

    #[test]
    fn law_of_cosines_sides_examples() {
        let d = law_of_cosines_sides(e_p(), e_p(), FRAC_PI_2).unwrap();
        assert!((d - d0()).abs() / d0() < 1e-12);
        assert!((law_of_cosines_sides(0.8, 0.0, 1.0).unwrap() - 0.8).abs() < 1e-14);
        let c = law_of_cosines_sides(1.0, 1.0, FRAC_PI_2).unwrap();
        assert!((c - (1.0f64.cosh().powi(2)).acosh()).abs() < 1e-14);
        assert!((c - 1.5133).abs() < 1e-4);
        assert!(law_of_cosines_sides(-1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn angle_of_parallelism_examples() {
        assert_eq!(angle_of_parallelism(0.0), 0.0);
        assert!((angle_of_parallelism(1.0f64.asinh()) - FRAC_PI_4).abs() < 1e-15);
        let b = 2.0 * d0();
        assert!((angle_of_parallelism(b) - b.sinh().atan()).abs() < 1e-15);
    }

    #[test]
    fn rotation_is_elliptic_and_composes() {
        let r = Isometry::rotation(2.0 * PI / 5.0);
        assert_eq!(classify(&r).unwrap().tag, ClassTag::Elliptic);
        assert!(r.power(5).approx_eq(&Isometry::IDENTITY, 1e-12));
        assert_eq!(classify(&r.power(5)).unwrap().tag, ClassTag::Identity);
    }

    #[test]
    fn translation_along_a_diameter() {
        // Reflections in two lines perpendicular to the real axis at
        // distance s apart translate by 2s.
        let s = 0.9f64;
        let l1 = Geodesic::diameter(FRAC_PI_2);
        let foot = DiscPoint::polar(s, 0.0);
        // perpendicular to the real axis through `foot`
        let dir = lorentz::cross(&[0.0, 0.0, 1.0], &foot.hyperboloid());
        let l2 = Geodesic::from_normal(&lorentz::unit_spacelike(&dir));
        let g = Isometry::reflect_in(&l2).compose(&Isometry::reflect_in(&l1));
        let c = classify(&g).unwrap();
        assert_eq!(c.tag, ClassTag::Hyperbolic);
        assert!((c.translation_length - 2.0 * s).abs() < 1e-12);
        let axis = axis_of(&g).unwrap();
        assert!(axis.approx_eq(&Geodesic::diameter(0.0), 1e-12));
        let param = GeodesicParam::axis(&g).unwrap();
        let moved = g.apply(&param.point_at(0.3));
        assert!((param.param_of(&moved) - (0.3 + 2.0 * s)).abs() < 1e-12);
    }

    #[test]
    fn geodesic_param_round_trip() {
        let p = DiscPoint::new(0.1, 0.2).unwrap();
        let q = DiscPoint::new(-0.5, 0.3).unwrap();
        let gp = GeodesicParam::through(&p, &q).unwrap();
        let d = dist(&p, &q);
        assert!((gp.point_at(d).to_complex() - q.to_complex()).norm() < 1e-12);
        assert!((gp.param_of(&q) - d).abs() < 1e-12);
        assert!(gp.geodesic().distance_to(&gp.point_at(-2.0)) < 1e-12);
    }

    use proptest::prelude::*;

    fn point() -> impl Strategy<Value = DiscPoint> {
        (0.0..4.0f64, -PI..PI).prop_map(|(r, t)| DiscPoint::polar(r, t))
    }

    fn isometry() -> impl Strategy<Value = Isometry> {
        (point(), point(), -PI..PI, any::<bool>()).prop_filter_map("coincident", |(p, q, t, flip)| {
            let line = Geodesic::through(&p, &q).ok()?;
            let r = Isometry::reflect_in(&line);
            let g = Isometry::rotation(t).compose(&r);
            Some(if flip { g.compose(&r) } else { g })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn triangle_inequality(p in point(), q in point(), r in point()) {
            let lhs = dist(&p, &r);
            prop_assert!(lhs <= dist(&p, &q) + dist(&q, &r) + 1e-9 * (1.0 + lhs));
        }
    }

    proptest! {
        #[test]
        fn isometries_preserve_distance(g in isometry(), p in point(), q in point()) {
            let d = dist(&p, &q);
            prop_assert!((dist(&g.apply(&p), &g.apply(&q)) - d).abs() < 1e-9 * (1.0 + d));
        }

        #[test]
        fn inverse_undoes(g in isometry(), p in point()) {
            prop_assert!(g.compose(&g.inverse()).is_identity(1e-9));
            let back = g.inverse().apply(&g.apply(&p));
            prop_assert!(dist(&back, &p) < 1e-8);
        }

        #[test]
        fn class_is_conjugation_invariant(g in isometry(), h in isometry()) {
            let c = classify(&g);
            let d = classify(&h.compose(&g).compose(&h.inverse()));
            if let (Ok(c), Ok(d)) = (c, d) {
                prop_assert_eq!(c.tag, d.tag);
                prop_assert!((c.translation_length - d.translation_length).abs() < 1e-7);
            }
        }

        #[test]
        fn displacement_is_minimised_on_the_axis(g in isometry(), p in point(), t in -3.0..3.0f64) {
            if let Ok(c) = classify(&g) {
                if c.tag.is_axial() {
                    let ell = c.translation_length;
                    prop_assert!(dist(&p, &g.apply(&p)) >= ell - 1e-8);
                    let on = GeodesicParam::axis(&g).unwrap().point_at(t);
                    prop_assert!((dist(&on, &g.apply(&on)) - ell).abs() < 1e-7);
                }
            }
        }

        #[test]
        fn moved_reflection_is_conjugate(g in isometry(), p in point(), q in point()) {
            if let Ok(line) = Geodesic::through(&p, &q) {
                let moved = Isometry::reflect_in(&g.apply_geodesic(&line));
                let conj = g.compose(&Isometry::reflect_in(&line)).compose(&g.inverse());
                prop_assert!(moved.approx_eq(&conj, 1e-7 * (1.0 + conj.top_row().0.norm_sqr())));
            }
        }
    }
}
