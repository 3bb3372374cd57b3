//! Composite Gauss-Legendre quadrature and an upper half-plane evaluation of
//! the area of a collar around a geodesic segment.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};
#[allow(unused_imports)]
use num_traits::Float;


/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 0 { 1.0 } else { p1 };
            let pn1 = if n == 0 { 0.0 } else { p0 };
            dp = n as f64 * (x * pn - pn1) / (x * x - 1.0);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// `∫_a^b f` with `panels` equal panels of an `order`-point rule.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize, order: usize) -> f64 {
    let rule = gauss_legendre(order);
    let h = (b - a) / panels as f64;
    let mut sum = 0.0;
    for p in 0..panels {
        let mid = a + (p as f64 + 0.5) * h;
        for &(x, w) in &rule {
            sum += w * f(mid + 0.5 * h * x);
        }
    }
    0.5 * h * sum
}

/// Distance from `e^{i theta}` to the imaginary axis in the upper half-plane.
fn distance_to_imaginary_axis(theta: f64) -> f64 {
    (theta.cos() / theta.sin()).asinh()
}

/// The angle `theta` in `(0, pi/2]` whose ray lies at distance `width` from
/// the imaginary axis, by bisection.
fn boundary_angle(width: f64) -> f64 {
    let (mut lo, mut hi) = (1e-300, FRAC_PI_2);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if distance_to_imaginary_axis(mid) > width {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Area of the points within `width` of the segment of the imaginary axis
/// from `i` to `e^length i` on one side, bounded by the perpendiculars at
/// its ends: the integral of `dr dtheta / (r sin^2 theta)` in polar
/// coordinates.
pub fn collar_area_numeric(length: f64, width: f64) -> f64 {
    if length == 0.0 || width == 0.0 {
        return 0.0;
    }
    let theta0 = boundary_angle(width);
    let big_r = length.exp();
    let inner = |theta: f64| {
        let s = theta.sin();
        integrate(|r| 1.0 / (r * s * s), 1.0, big_r, 8, 10)
    };
    integrate(inner, theta0, FRAC_PI_2, 64, 10)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_rule_integrates_polynomials() {
        let rule = gauss_legendre(6);
        let w: f64 = rule.iter().map(|&(_, w)| w).sum();
        assert!((w - 2.0).abs() < 1e-14);
        let x10: f64 = rule.iter().map(|&(x, w)| w * x.powi(10)).sum();
        assert!((x10 - 2.0 / 11.0).abs() < 1e-14);
    }

    #[test]
    fn boundary_angle_inverts_distance() {
        for b in [0.1, 1.0, 3.0] {
            let t = boundary_angle(b);
            assert!((distance_to_imaginary_axis(t) - b).abs() < 1e-12);
        }
    }
}
