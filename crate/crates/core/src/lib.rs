//! Approximate minimum convex cover of polygons with holes, plus an
//! approximation for the rotten potato peeling problem.
//!
//! All geometry is generic over an exact [`Scalar`]; the aliases at the crate
//! root fix it to arbitrary-precision rationals.

pub mod arrangement;
pub mod cover;
pub mod error;
pub mod exact_geom;
pub mod oracle;
pub mod peel_dag;
pub mod rotten;
pub mod scalar;
pub mod visibility;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;
pub type Point = exact_geom::Point<Rational>;
pub type Segment = exact_geom::Segment<Rational>;
pub type PolygonWithHoles = exact_geom::PolygonWithHoles<Rational>;
pub type ConvexPolygon = exact_geom::ConvexPolygon<Rational>;
