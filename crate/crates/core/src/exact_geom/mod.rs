//! Exact rational geometry: predicates, constructions and polygon types.

mod convex;
mod intersect;
mod point;
mod polygon;

pub use convex::{
    clip_convex, clip_halfplane, clip_halfplane_right, convex_hull, simplify_ring, simplify_ring_keeping,
    ConvexPolygon,
};
pub(crate) use convex::vertex_average;
pub use intersect::{segment_intersection, IntersectionResult};
pub use point::{
    angle_cmp, line_param, on_segment, orientation, same_direction, strictly_inside_segment, Point, Segment, Turn,
};
pub use polygon::{
    point_location, ring_area, ring_is_simple, ring_location, rings_location, segment_in_polygon, segment_in_rings,
    twice_ring_area, Location, PolygonWithHoles, VertexId,
};
pub(crate) use polygon::{boundary_params, ring_edges};
