//! Geometry and combinatorics of the right-angled pentagon tiling of the
//! hyperbolic plane.
//!
//! The crate is organised bottom-up:
//!
//! * [`hypgeo`]: points, geodesics and isometries of the Poincaré disc,
//!   plus the hyperbolic trigonometry used by the bounds.
//! * [`coxgroup`]: exact arithmetic in the right-angled Coxeter group
//!   generated by reflections in the five sides of the base pentagon.
//! * [`tiling`]: the tessellation itself, point location, geodesic tracing
//!   and the set of tiles met by a closed geodesic.
//! * [`convexify`]: boundary walks, good/bad corners and the pentagon-hull
//!   fill procedure.
//! * [`bounds`]: closed-form index bounds and a quadrature oracle.
//! * [`covers`]: lifted fundamental domains and their word-level
//!   certificates.
//!
//! Everything here is `no_std` and only needs `alloc`. Float functions come
//! from `num_traits::Float`, which goes unused whenever `std` is linked.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod convexify;
pub mod covers;
pub mod coxgroup;
pub mod hypgeo;
pub mod tiling;

mod lorentz;

pub use convexify::{BoundaryWalk, ConvexificationResult, Corner, CornerKind, CornerWord};
pub use coxgroup::{Generator, NormalForm, Word};
pub use hypgeo::{DiscPoint, Geodesic, Isometry, IsometryClass, Parity};
pub use tiling::{BasePentagon, QuotientTileSet, Tile, TileComplex};
