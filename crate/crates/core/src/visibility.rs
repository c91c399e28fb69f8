//! Visibility polygons of polygon vertices, by exact angular sweep.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exact_geom::{
    angle_cmp, line_param, on_segment, simplify_ring_keeping, Location, Point, PolygonWithHoles, VertexId,
};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VisibilityPolygon<T> {
    pub anchor: Point<T>,
    /// Simple CCW ring starting at the anchor.
    pub ring: Vec<Point<T>>,
    /// Ring edges `(ring[i], ring[i + 1])` that cross the polygon interior.
    pub window_edges: Vec<usize>,
}

/// Visibility polygon of vertex `v`.
///
/// Points seen only along a single ray (zero-width spikes through boundary
/// contacts) are dropped: the result is the closure of the visible interior.
pub fn visibility_polygon<T: Scalar>(poly: &PolygonWithHoles<T>, v: VertexId) -> VisibilityPolygon<T> {
    let anchor = poly.vertex(v).clone();
    let (prev, next) = poly.neighbours(v);
    let ring = visible_in_cone(poly, &anchor, &next.sub(&anchor), &prev.sub(&anchor))
        .expect("a polygon vertex always sees a non-empty cone");
    let window_edges = (0..ring.len())
        .filter(|&i| {
            let mid = ring[i].midpoint(&ring[(i + 1) % ring.len()]);
            poly.point_location(&mid) != Location::Boundary
        })
        .collect();
    VisibilityPolygon { anchor, ring, window_edges }
}

/// Region of `poly` visible from `anchor` (on the boundary) within the closed
/// CCW cone from `start` to `end`, as a CCW ring starting at `anchor`.
pub fn visible_in_cone<T: Scalar>(
    poly: &PolygonWithHoles<T>,
    anchor: &Point<T>,
    start: &Point<T>,
    end: &Point<T>,
) -> Result<Vec<Point<T>>> {
    let in_cone = |d: &Point<T>| angle_cmp(start, d, end) != Ordering::Greater;
    let mut dirs: Vec<Point<T>> = vec![start.clone(), end.clone()];
    for w in poly.vertices() {
        if w != anchor {
            let d = w.sub(anchor);
            if in_cone(&d) {
                dirs.push(d);
            }
        }
    }
    dirs.sort_by(|a, b| angle_cmp(start, a, b));
    dirs.dedup_by(|a, b| angle_cmp(start, a, b) == Ordering::Equal);
    // Every gap must be under a half-turn for the sample direction below.
    let mut i = 0;
    while i + 1 < dirs.len() {
        if !dirs[i].cross(&dirs[i + 1]).is_positive() {
            let perp = Point::new(-dirs[i].y.clone(), dirs[i].x.clone());
            dirs.insert(i + 1, perp);
        } else {
            i += 1;
        }
    }

    let mut ring = vec![anchor.clone()];
    for w in dirs.windows(2) {
        let sample = w[0].add(&w[1]);
        let (p, q) = nearest_edge(poly, anchor, &sample)
            .ok_or_else(|| Error::Internal(format!("ray from {anchor} escapes the polygon")))?;
        let e = q.sub(p);
        for d in [&w[0], &w[1]] {
            let t = line_param(anchor, d, p, &e).expect("hit edge is not parallel to nearby rays");
            ring.push(anchor.add(&d.scale(&t)));
        }
    }
    let ring = simplify_ring_keeping(ring, Some(anchor));
    if ring.len() < 3 {
        return Err(Error::Degenerate);
    }
    Ok(ring)
}

/// First boundary edge hit by the open ray `anchor + t * dir`, `t > 0`.
fn nearest_edge<'a, T: Scalar>(
    poly: &'a PolygonWithHoles<T>,
    anchor: &Point<T>,
    dir: &Point<T>,
) -> Option<(&'a Point<T>, &'a Point<T>)> {
    let mut best: Option<(T, (&Point<T>, &Point<T>))> = None;
    for (p, q) in poly.edges() {
        let Some(t) = line_param(anchor, dir, p, &q.sub(p)) else { continue };
        if !t.is_positive() {
            continue;
        }
        let hit = anchor.add(&dir.scale(&t));
        if !on_segment(p, q, &hit) {
            continue;
        }
        if best.as_ref().is_none_or(|(bt, _)| t < *bt) {
            best = Some((t, (p, q)));
        }
    }
    best.map(|(_, e)| e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_geom::{ring_area, ring_location, Segment};
    use crate::Rational;

    fn pts(coords: &[(i64, i64)]) -> Vec<Point<Rational>> {
        coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn convex_polygon_sees_itself() {
        let sq = PolygonWithHoles::simple(pts(&[(0, 0), (4, 0), (4, 4), (0, 4)])).unwrap();
        for v in 0..4 {
            let vp = visibility_polygon(&sq, v);
            assert_eq!(ring_area(&vp.ring), rat(16, 1));
            assert_eq!(vp.ring[0], *sq.vertex(v));
            assert!(vp.window_edges.is_empty());
        }
    }

    #[test]
    fn l_shape_from_corner() {
        let l = PolygonWithHoles::simple(pts(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])).unwrap();
        let vp = visibility_polygon(&l, 0);
        assert_eq!(vp.ring, pts(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]));
    }

    #[test]
    fn hole_casts_a_shadow() {
        let p = PolygonWithHoles::new(
            pts(&[(0, 0), (4, 0), (4, 4), (0, 4)]),
            vec![pts(&[(1, 1), (1, 2), (2, 2), (2, 1)])],
        )
        .unwrap();
        let vp = visibility_polygon(&p, 0);
        // Shadow wedge between the rays through (2,1) and (1,2), behind the hole.
        let expected = pts(&[(0, 0), (4, 0), (4, 2), (2, 1), (1, 1), (1, 2), (2, 4), (0, 4)]);
        assert_eq!(vp.ring, expected);
        assert_eq!(vp.window_edges.len(), 2);
        // Angular-sweep oracle: sample directions densely and compare reach.
        for k in 1..40 {
            let d = Point::new(rat(40 - k, 40), rat(k, 40));
            let far = Point::new(d.x.clone() * rat(10, 1), d.y.clone() * rat(10, 1));
            let ray = Segment::new(Point::from_ints(0, 0), far).unwrap();
            for j in 1..20 {
                let q = ray.at(&rat(j, 40));
                if p.point_location(&q) == Location::Exterior {
                    continue;
                }
                let visible = p.contains_segment(&Segment::new(Point::from_ints(0, 0), q.clone()).unwrap());
                let inside_vp = ring_location(&q, &vp.ring) != Location::Exterior;
                assert_eq!(visible, inside_vp, "{q}");
            }
        }
    }
}
