//! Largest-good-area convex polygon avoiding a set of rotten regions.

use rayon::prelude::*;

use crate::arrangement::Arrangement;
use crate::cover::triangulate;
use crate::error::{Error, Result};
use crate::exact_geom::{
    clip_convex, orientation, ring_location, segment_in_polygon, twice_ring_area, ConvexPolygon, Location, Point,
    PolygonWithHoles, Segment, Turn, VertexId,
};
use crate::peel_dag::{anchor_regions, build_dag, clip_and_orient, heaviest_maximal_path, path_polygon, subsegments};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RottenSet<T> {
    /// CCW rings.
    pub regions: Vec<Vec<Point<T>>>,
    pub triangulated: Vec<Vec<ConvexPolygon<T>>>,
}

impl<T: Scalar> RottenSet<T> {
    pub fn empty() -> Self {
        RottenSet { regions: Vec::new(), triangulated: Vec::new() }
    }

    /// Validates that every region is a simple polygon inside `poly` and that
    /// regions overlap in at most their boundaries. Clockwise rings are
    /// reversed.
    pub fn new(poly: &PolygonWithHoles<T>, regions: Vec<Vec<Point<T>>>) -> Result<Self> {
        let mut rings = Vec::with_capacity(regions.len());
        let mut triangulated = Vec::with_capacity(regions.len());
        for (i, mut ring) in regions.into_iter().enumerate() {
            if twice_ring_area(&ring).is_negative() {
                ring.reverse();
            }
            let simple = PolygonWithHoles::simple(ring.clone())
                .map_err(|e| Error::InvalidRotten(format!("region {i}: {e}")))?;
            if !region_inside(poly, &ring) {
                return Err(Error::InvalidRotten(format!("region {i} is not inside the polygon")));
            }
            triangulated.push(triangulate(&simple));
            rings.push(ring);
        }
        for i in 0..triangulated.len() {
            for j in i + 1..triangulated.len() {
                let overlap = triangulated[i]
                    .iter()
                    .any(|a| triangulated[j].iter().any(|b| clip_convex(a, b).is_some()));
                if overlap {
                    return Err(Error::InvalidRotten(format!("regions {i} and {j} overlap")));
                }
            }
        }
        Ok(RottenSet { regions: rings, triangulated })
    }

    /// Total vertex count `k`.
    pub fn vertex_count(&self) -> usize {
        self.regions.iter().map(Vec::len).sum()
    }

    pub fn area(&self) -> T {
        self.triangulated.iter().flatten().fold(T::zero(), |acc, t| acc + t.area())
    }
}

fn region_inside<T: Scalar>(poly: &PolygonWithHoles<T>, ring: &[Point<T>]) -> bool {
    let n = ring.len();
    let edges_inside =
        (0..n).all(|i| segment_in_polygon(&Segment { a: ring[i].clone(), b: ring[(i + 1) % n].clone() }, poly));
    edges_inside
        && poly.holes().iter().all(|h| {
            !h.iter().any(|p| ring_location(p, ring) == Location::Interior)
                && !h.iter().all(|p| ring_location(p, ring) != Location::Exterior)
        })
}

/// Area of `t` outside the rotten regions. Works for any convex polygon.
pub fn good_area_of_triangle<T: Scalar>(t: &ConvexPolygon<T>, rotten: &RottenSet<T>) -> T {
    rotten
        .triangulated
        .iter()
        .flatten()
        .filter_map(|r| clip_convex(t, r))
        .fold(t.area(), |acc, c| acc - c.area())
}

pub fn good_area<T: Scalar>(q: &ConvexPolygon<T>, rotten: &RottenSet<T>) -> T {
    good_area_of_triangle(q, rotten)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelSolution<T> {
    pub polygon: ConvexPolygon<T>,
    pub value: T,
    pub vertex: VertexId,
}

/// Heaviest anchored polygon over every vertex, with node weights equal to
/// the good area of the triangle each node spans with its anchor.
pub fn rotten_potato_peel<T: Scalar>(poly: &PolygonWithHoles<T>, rotten: &RottenSet<T>) -> Result<PeelSolution<T>> {
    let arr = Arrangement::new(poly);
    let per_vertex: Vec<Option<PeelSolution<T>>> = (0..poly.vertex_count())
        .into_par_iter()
        .map(|v| best_at_vertex(poly, &arr, rotten, v))
        .collect::<Result<_>>()?;
    let mut best: Option<PeelSolution<T>> = None;
    for s in per_vertex.into_iter().flatten() {
        if best.as_ref().is_none_or(|b| s.value > b.value) {
            best = Some(s);
        }
    }
    best.ok_or_else(|| Error::Internal("no anchored polygon found".into()))
}

fn best_at_vertex<T: Scalar>(
    poly: &PolygonWithHoles<T>,
    arr: &Arrangement<T>,
    rotten: &RottenSet<T>,
    v: VertexId,
) -> Result<Option<PeelSolution<T>>> {
    let mut best: Option<PeelSolution<T>> = None;
    for ring in anchor_regions(poly, v)? {
        let anchor = ring[0].clone();
        let clipped = clip_and_orient(&ring, arr)?;
        let mut dag = build_dag(anchor.clone(), subsegments(&clipped))?;
        let weights: Vec<T> = dag
            .nodes
            .iter()
            .map(|n| {
                if orientation(&anchor, &n.from, &n.to) == Turn::Collinear {
                    T::zero()
                } else {
                    let t = ConvexPolygon::new(vec![anchor.clone(), n.from.clone(), n.to.clone()])
                        .expect("non-collinear triangle");
                    good_area_of_triangle(&t, rotten)
                }
            })
            .collect();
        dag.set_weights(weights);
        let (path, _) = heaviest_maximal_path(&dag);
        let Ok(polygon) = path_polygon(&dag, &path) else { continue };
        let value = good_area(&polygon, rotten);
        if best.as_ref().is_none_or(|b| value > b.value) {
            best = Some(PeelSolution { polygon, value, vertex: v });
        }
    }
    Ok(best)
}
