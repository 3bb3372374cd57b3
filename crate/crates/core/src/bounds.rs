//! Pentagon constants and index bounds in terms of geodesic lengths.
//!
//! Every calculator reports the value with exact coefficients next to the
//! value with the rounded coefficients quoted in the literature.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use thiserror::Error;
#[allow(unused_imports)]
use num_traits::Float;

pub mod quadrature;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum BoundsError {
    #[error("{name} must be non-negative and finite, got {value}")]
    Negative { name: &'static str, value: f64 },
    #[error("{name} must be positive and finite, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("rank must be at least {min}, got {n}")]
    Rank { n: u32, min: u32 },
    #[error("rank 1 needs exactly one boundary length, got {0}")]
    RankOneLengths(usize),
    #[error("at least one boundary length is required")]
    NoLengths,
    #[error("{0} tessellation flags for {1} boundary lengths")]
    FlagCount(usize, usize),
    #[error("the off-core bound needs the length of the excursion")]
    MissingExcursion,
    #[error("the in-core bound takes no excursion length")]
    UnexpectedExcursion,
}

/// Constants of the regular right-angled pentagon and the coefficients
/// derived from them.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PentagonConstants {
    /// Side length, `acosh(1 + 2 cos(2 pi / 5))`.
    pub side_length: f64,
    /// Distance between non-adjacent vertices, `acosh(cosh^2 side_length)`.
    pub diameter: f64,
    pub area: f64,
    /// Tiles per unit length in a convex hull: `4 sinh(2 diameter) / pi`.
    pub lift_coeff: f64,
    /// Same along a tessellation line: `4 sinh(diameter) / pi`.
    pub lift_coeff_tessline: f64,
    /// Per-boundary coefficient `2 sinh(2 diameter) / pi`.
    pub boundary_coeff: f64,
    /// Per-boundary coefficient along a tessellation line, `2 sinh(diameter) / pi`.
    pub boundary_coeff_tessline: f64,
}

pub fn constants() -> PentagonConstants {
    let c = 1.0 + 2.0 * (2.0 * PI / 5.0).cos();
    let side_length = c.acosh();
    let diameter = (c * c).acosh();
    PentagonConstants {
        side_length,
        diameter,
        area: PI * 3.0 - 5.0 * FRAC_PI_2,
        lift_coeff: 4.0 * (2.0 * diameter).sinh() / PI,
        lift_coeff_tessline: 4.0 * diameter.sinh() / PI,
        boundary_coeff: 2.0 * (2.0 * diameter).sinh() / PI,
        boundary_coeff_tessline: 2.0 * diameter.sinh() / PI,
    }
}

/// Published coefficients, rounded up.
pub mod caps {
    pub const LIFT: f64 = 16.2;
    pub const LIFT_TESSLINE: f64 = 3.1;
    pub const RF: f64 = 32.3;
    pub const RF_TESSLINE: f64 = 6.2;
    pub const BOUNDARY: f64 = 8.1;
    pub const BOUNDARY_TESSLINE: f64 = 1.6;
    /// The printed value of the diameter, which transposes two digits.
    pub const DIAMETER_MISPRINT: f64 = 1.167;
}

/// A bound evaluated with exact and with rounded coefficients.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bound {
    pub exact: f64,
    pub cap: f64,
}

fn non_negative(name: &'static str, value: f64) -> Result<f64, BoundsError> {
    if value >= 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(BoundsError::Negative { name, value })
    }
}

fn positive(name: &'static str, value: f64) -> Result<f64, BoundsError> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(BoundsError::NonPositive { name, value })
    }
}

/// Area of the region within `width` of a geodesic segment of length
/// `length`, on one side, cut off by the perpendiculars at its ends.
pub fn collar_area(length: f64, width: f64) -> Result<f64, BoundsError> {
    let length = non_negative("length", length)?;
    let width = non_negative("width", width)?;
    Ok(length * width.sinh())
}

/// Upper bound on the area of the pentagon hull of a closed geodesic of
/// length `ell`: the area of its collar of width twice the diameter.
pub fn hull_area_bound(ell: f64) -> Result<f64, BoundsError> {
    let ell = positive("ell", ell)?;
    Ok(2.0 * ell * (2.0 * constants().diameter).sinh())
}

/// Bound on the number of tiles in the hull, which is the index of the
/// cover in which the geodesic lifts to an embedded loop.
pub fn lift_index_bound(ell: f64, tessline: bool) -> Result<Bound, BoundsError> {
    let ell = positive("ell", ell)?;
    let c = constants();
    Ok(if tessline {
        Bound {
            exact: c.lift_coeff_tessline * ell,
            cap: caps::LIFT_TESSLINE * ell,
        }
    } else {
        Bound {
            exact: c.lift_coeff * ell,
            cap: caps::LIFT * ell,
        }
    })
}

/// Exact tile count of the hull of a geodesic running along tile edges.
pub fn tessline_count(ell: f64) -> Result<f64, BoundsError> {
    Ok(2.0 * positive("ell", ell)? / constants().side_length)
}

/// Bound on the index of a subgroup separating an element from the
/// identity: twice the lift bound.
pub fn rf_index_bound(ell: f64, tessline: bool) -> Result<Bound, BoundsError> {
    let b = lift_index_bound(ell, tessline)?;
    Ok(Bound {
        exact: 2.0 * b.exact,
        cap: if tessline {
            caps::RF_TESSLINE * ell
        } else {
            caps::RF * ell
        },
    })
}

/// Inputs of the subgroup-separability bound.
#[derive(Clone, Debug, PartialEq)]
pub struct LerfInput {
    /// Rank of the subgroup.
    pub rank: u32,
    /// Lengths of the boundary geodesics of the convex core.
    pub boundary_lengths: Vec<f64>,
    /// Length of the excursion outside the core; only for the off-core case.
    pub excursion: Option<f64>,
    /// Boundaries running along tessellation lines.
    pub tessline: Vec<bool>,
}

/// Which of the four cases produced a [`LerfBound`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LerfCase {
    /// Rank at least two, element inside the core.
    InCore,
    /// Rank at least two, element leaves the core.
    OffCore,
    /// Rank one, element on the core geodesic.
    RankOneInCore,
    /// Rank one, element leaves the core geodesic.
    RankOneOffCore,
}

impl LerfCase {
    pub fn id(self) -> &'static str {
        match self {
            LerfCase::InCore => "in_core",
            LerfCase::OffCore => "off_core",
            LerfCase::RankOneInCore => "rank_one_in_core",
            LerfCase::RankOneOffCore => "rank_one_off_core",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LerfBound {
    pub case: LerfCase,
    pub bound: Bound,
    /// Layers of tiles added around the hull in the off-core case.
    pub layers: Option<u32>,
}

/// Width multiplier `excursion / side_length + 2` of the enlarged collar.
fn excursion_coeff(excursion: f64) -> f64 {
    let c = constants();
    2.0 * ((excursion / c.side_length + 2.0) * c.diameter).sinh() / PI
}

pub fn lerf_bound(input: &LerfInput, in_core: bool) -> Result<LerfBound, BoundsError> {
    let m = input.boundary_lengths.len();
    if input.rank < 1 {
        return Err(BoundsError::Rank {
            n: input.rank,
            min: 1,
        });
    }
    if m == 0 {
        return Err(BoundsError::NoLengths);
    }
    if input.rank == 1 && m != 1 {
        return Err(BoundsError::RankOneLengths(m));
    }
    if !input.tessline.is_empty() && input.tessline.len() != m {
        return Err(BoundsError::FlagCount(input.tessline.len(), m));
    }
    for &l in &input.boundary_lengths {
        positive("boundary length", l)?;
    }
    let excursion = match (in_core, input.excursion) {
        (true, None) => None,
        (true, Some(_)) => return Err(BoundsError::UnexpectedExcursion),
        (false, None) => return Err(BoundsError::MissingExcursion),
        (false, Some(e)) => Some(positive("excursion", e)?),
    };
    let c = constants();
    let flag = |j: usize| input.tessline.get(j).copied().unwrap_or(false);
    let total: f64 = input.boundary_lengths.iter().sum();
    let rank_one = input.rank == 1;
    let (constant, mult) = if rank_one {
        (0.0, 2.0)
    } else {
        (4.0 * f64::from(input.rank) - 4.0, 1.0)
    };
    let (case, exact, rounded) = match excursion {
        None => {
            let mut exact = constant;
            let mut rounded = constant;
            for (j, &l) in input.boundary_lengths.iter().enumerate() {
                // The tessellation-line improvement applies to the rank >= 2 case.
                let (e, p) = if flag(j) && !rank_one {
                    (c.boundary_coeff_tessline, caps::BOUNDARY_TESSLINE)
                } else {
                    (c.boundary_coeff, caps::BOUNDARY)
                };
                exact += mult * e * l;
                rounded += mult * p * l;
            }
            let case = if rank_one {
                LerfCase::RankOneInCore
            } else {
                LerfCase::InCore
            };
            (case, exact, rounded)
        }
        Some(e) => {
            let v = constant + mult * excursion_coeff(e) * total;
            let case = if rank_one {
                LerfCase::RankOneOffCore
            } else {
                LerfCase::OffCore
            };
            (case, v, v)
        }
    };
    Ok(LerfBound {
        case,
        bound: Bound {
            exact,
            cap: rounded,
        },
        layers: excursion.map(layers_needed),
    })
}

/// Number of tile layers needed to cover an excursion of length `ell`: at
/// least one, and each layer adds at least one side length of clearance.
pub fn layers_needed(ell: f64) -> u32 {
    let q = ell / constants().side_length;
    // absorb rounding just above an integer
    let n = (q - 1e-12).ceil();
    if n < 1.0 {
        1
    } else {
        n as u32
    }
}

/// Area of the convex core of a surface with fundamental group of rank `n`.
pub fn core_area(n: u32) -> Result<f64, BoundsError> {
    if n < 2 {
        return Err(BoundsError::Rank { n, min: 2 });
    }
    Ok(2.0 * PI * f64::from(n - 1))
}
