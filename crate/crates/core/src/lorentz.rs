//! Minkowski-space helpers for the hyperboloid model.
//!
//! Points of the plane are vectors `x` with `<x, x> = 1`, `x0 > 0`, where
//! `<a, b> = a0 b0 - a1 b1 - a2 b2`. A geodesic is the zero set of `<x, n>`
//! for a unit spacelike normal (`<n, n> = -1`), and `<x, n>` is the sinh of
//! the signed distance from `x` to that geodesic.

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

pub(crate) type Vec3 = [f64; 3];
pub(crate) type Mat3 = [[f64; 3]; 3];

pub(crate) const IDENTITY: Mat3 = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];

#[inline]
pub(crate) fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] - a[1] * b[1] - a[2] * b[2]
}

#[inline]
pub(crate) fn add(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

#[inline]
pub(crate) fn scale(a: &Vec3, s: f64) -> Vec3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

#[inline]
pub(crate) fn sub(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// A vector orthogonal (in the Minkowski form) to both arguments.
pub(crate) fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    let e = [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ];
    [e[0], -e[1], -e[2]]
}

/// Distance between two points of the hyperboloid. Goes through the chord
/// length, which stays accurate when the points are close.
pub(crate) fn distance(a: &Vec3, b: &Vec3) -> f64 {
    let d = sub(a, b);
    2.0 * ((-dot(&d, &d)).max(0.0).sqrt() / 2.0).asinh()
}

/// Rescales a spacelike vector to `<n, n> = -1`.
pub(crate) fn unit_spacelike(n: &Vec3) -> Vec3 {
    let q = -dot(n, n);
    debug_assert!(q > 0.0, "not spacelike: {n:?}");
    scale(n, 1.0 / q.sqrt())
}

/// Rescales a timelike vector onto the upper sheet of the hyperboloid.
pub(crate) fn unit_timelike(x: &Vec3) -> Vec3 {
    let q = dot(x, x);
    debug_assert!(q > 0.0, "not timelike: {x:?}");
    let s = 1.0 / q.sqrt();
    if x[0] < 0.0 {
        scale(x, -s)
    } else {
        scale(x, s)
    }
}

pub(crate) fn from_disc(z: Complex64) -> Vec3 {
    let r2 = z.norm_sqr();
    let d = 1.0 - r2;
    [(1.0 + r2) / d, 2.0 * z.re / d, 2.0 * z.im / d]
}

pub(crate) fn to_disc(x: &Vec3) -> Complex64 {
    let d = 1.0 + x[0];
    Complex64::new(x[1] / d, x[2] / d)
}

/// Light-like representative of an ideal point on the unit circle.
pub(crate) fn from_ideal(u: Complex64) -> Vec3 {
    [1.0, u.re, u.im]
}

pub(crate) fn mat_vec(m: &Mat3, v: &Vec3) -> Vec3 {
    [
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    ]
}

pub(crate) fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
        }
    }
    out
}

/// Inverse of a Lorentz matrix: `J M^T J`.
#[cfg(test)]
pub(crate) fn lorentz_inverse(m: &Mat3) -> Mat3 {
    let sign = [1.0, -1.0, -1.0];
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = sign[i] * m[j][i] * sign[j];
        }
    }
    out
}

/// Reflection in the geodesic with unit normal `n`: `x -> x + 2<x,n> n`.
pub(crate) fn reflection(n: &Vec3) -> Mat3 {
    let jn = [n[0], -n[1], -n[2]];
    let mut out = IDENTITY;
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell += 2.0 * n[i] * jn[j];
        }
    }
    out
}

/// Orthogonal projection of a hyperboloid point onto the geodesic with
/// normal `n`.
pub(crate) fn project(x: &Vec3, n: &Vec3) -> Vec3 {
    unit_timelike(&add(x, &scale(n, dot(x, n))))
}

/// Closed interval of real parameters; either end may be infinite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub const ALL: Interval = Interval {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };

    pub fn intersect(self, other: Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }
}

/// Parameters `t` with `a cosh t + b sinh t + slack >= 0`.
///
/// With `slack >= 0` the admissible set is always a single (possibly empty
/// or unbounded) interval.
pub(crate) fn halfplane_interval(a: f64, b: f64, slack: f64) -> Option<Interval> {
    // Substituting u = e^t gives p u^2 + 2 slack u + q >= 0 on u > 0.
    let p = a + b;
    let q = a - b;
    let roots = positive_roots(p, 2.0 * slack, q);
    let ln = |u: f64| u.ln();
    match (p > 0.0, q > 0.0) {
        (true, true) => Some(Interval::ALL),
        (true, false) => Some(Interval {
            lo: roots.first().map_or(f64::NEG_INFINITY, |&u| ln(u)),
            hi: f64::INFINITY,
        }),
        (false, true) => Some(Interval {
            lo: f64::NEG_INFINITY,
            hi: roots.last().map_or(f64::INFINITY, |&u| ln(u)),
        }),
        (false, false) => {
            if p == 0.0 && q == 0.0 {
                return (slack >= 0.0).then_some(Interval::ALL);
            }
            match roots.as_slice() {
                [u1, u2] => Some(Interval {
                    lo: ln(*u1),
                    hi: ln(*u2),
                }),
                [u] if p == 0.0 => Some(Interval {
                    lo: ln(*u),
                    hi: f64::INFINITY,
                }),
                [u] if q == 0.0 => Some(Interval {
                    lo: f64::NEG_INFINITY,
                    hi: ln(*u),
                }),
                [u] => Some(Interval {
                    lo: ln(*u),
                    hi: ln(*u),
                }),
                _ => None,
            }
        }
    }
}

/// Positive real roots of `a u^2 + b u + c`, ascending.
fn positive_roots(a: f64, b: f64, c: f64) -> Roots {
    let mut out = Roots::default();
    if a == 0.0 {
        if b != 0.0 && -c / b > 0.0 {
            out.push(-c / b);
        }
        return out;
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return out;
    }
    let sq = disc.sqrt();
    let qq = -0.5 * (b + if b >= 0.0 { sq } else { -sq });
    let mut rs = [qq / a, if qq != 0.0 { c / qq } else { qq / a }];
    if rs[0] > rs[1] {
        rs.swap(0, 1);
    }
    let distinct = if disc == 0.0 { 1 } else { 2 };
    for &u in &rs[..distinct] {
        if u > 0.0 {
            out.push(u);
        }
    }
    out
}

/// At most two roots, without allocating.
#[derive(Default)]
struct Roots {
    buf: [f64; 2],
    len: usize,
}

impl Roots {
    fn push(&mut self, v: f64) {
        self.buf[self.len] = v;
        self.len += 1;
    }

    fn as_slice(&self) -> &[f64] {
        &self.buf[..self.len]
    }

    fn first(&self) -> Option<&f64> {
        self.as_slice().first()
    }

    fn last(&self) -> Option<&f64> {
        self.as_slice().last()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_interval(a: f64, b: f64, slack: f64) {
        let iv = halfplane_interval(a, b, slack);
        for k in -400..=400 {
            let t = k as f64 * 0.025;
            let g = a * t.cosh() + b * t.sinh() + slack;
            let inside = iv.is_some_and(|iv| iv.lo - 1e-9 <= t && t <= iv.hi + 1e-9);
            if g > 1e-9 {
                assert!(inside, "a={a} b={b} t={t} g={g} iv={iv:?}");
            } else if g < -1e-9 {
                assert!(!inside, "a={a} b={b} t={t} g={g} iv={iv:?}");
            }
        }
    }

    #[test]
    fn halfplane_interval_matches_sampling() {
        let vals = [-3.0, -1.0, -0.2, 0.0, 0.2, 1.0, 3.0];
        for &a in &vals {
            for &b in &vals {
                for &s in &[0.0, 1e-3, 0.5] {
                    check_interval(a, b, s);
                }
            }
        }
    }

    #[test]
    fn reflection_is_involutive_isometry() {
        let n = unit_spacelike(&[0.3, 1.2, -0.4]);
        let r = reflection(&n);
        let rr = mat_mul(&r, &r);
        for i in 0..3 {
            for j in 0..3 {
                assert!((rr[i][j] - IDENTITY[i][j]).abs() < 1e-12);
            }
        }
        let x = from_disc(Complex64::new(0.2, 0.5));
        let y = mat_vec(&r, &x);
        assert!((dot(&y, &y) - 1.0).abs() < 1e-12);
        let inv = lorentz_inverse(&r);
        let back = mat_vec(&inv, &y);
        for k in 0..3 {
            assert!((back[k] - x[k]).abs() < 1e-12);
        }
    }

    #[test]
    fn disc_round_trip() {
        let z = Complex64::new(-0.31, 0.77);
        let w = to_disc(&from_disc(z));
        assert!((z - w).norm() < 1e-15);
    }
}
