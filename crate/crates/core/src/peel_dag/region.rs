use std::cmp::Ordering;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exact_geom::{
    angle_cmp, boundary_params, line_param, on_segment, orientation, ring_edges, rings_location, Point,
    PolygonWithHoles, Segment, Turn, VertexId,
};
use crate::scalar::Scalar;
use crate::visibility::visibility_polygon;

/// Position along a ring boundary: edge index, then fraction along that edge.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoundaryPos<T> {
    pub edge: usize,
    pub offset: T,
}

/// One connected component of an extension inside an anchor region, directed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClippedSegment<T> {
    /// Extension id in the arrangement.
    pub host: usize,
    /// Directed `a -> b`.
    pub seg: Segment<T>,
    pub boundary_order: (BoundaryPos<T>, BoundaryPos<T>),
    /// The segment lies on a line through the anchor.
    pub radial: bool,
    /// Arrangement vertices on the segment, from `a` to `b`.
    pub points: Vec<Point<T>>,
}

/// Splits a simple CCW ring at reflex vertex `ring[v]` along the extension of
/// the edge entering it. Both parts are CCW and start at the split vertex.
pub fn reflex_split<T: Scalar>(ring: &[Point<T>], v: usize) -> Result<(Vec<Point<T>>, Vec<Point<T>>)> {
    let n = ring.len();
    let ring: Vec<Point<T>> = ring[v..].iter().chain(&ring[..v]).cloned().collect();
    let anchor = &ring[0];
    if orientation(&ring[n - 1], anchor, &ring[1]) != Turn::Right {
        return Err(Error::PreconditionViolation(format!("{anchor} is not a reflex vertex")));
    }
    let dir = anchor.sub(&ring[n - 1]);
    let mut best: Option<(T, usize)> = None;
    for i in 1..n - 1 {
        let (p, q) = (&ring[i], &ring[i + 1]);
        let candidate = match line_param(anchor, &dir, p, &q.sub(p)) {
            Some(t) => {
                let hit = anchor.add(&dir.scale(&t));
                (t.is_positive() && on_segment(p, q, &hit)).then_some(t)
            }
            None if orientation(anchor, &anchor.add(&dir), p) == Turn::Collinear => {
                let d2 = dir.norm2();
                [p, q]
                    .iter()
                    .map(|x| x.sub(anchor).dot(&dir) / d2.clone())
                    .filter(|t| t.is_positive())
                    .min()
            }
            None => None,
        };
        if let Some(t) = candidate {
            if best.as_ref().is_none_or(|(bt, _)| t < *bt) {
                best = Some((t, i));
            }
        }
    }
    let (t, i) = best.ok_or_else(|| Error::Internal("split ray never meets the boundary".into()))?;
    let hit = anchor.add(&dir.scale(&t));
    let mut first: Vec<Point<T>> = ring[..=i].to_vec();
    if first.last() != Some(&hit) {
        first.push(hit.clone());
    }
    let tail = ring[i + 1..].iter().filter(|p| **p != hit).cloned();
    let second: Vec<Point<T>> = [anchor.clone(), hit.clone()].into_iter().chain(tail).collect();
    Ok((first, second))
}

/// Regions in which vertex `v` anchors a DAG: its visibility polygon, split in
/// two when `v` is reflex. Each ring starts at the anchor and spans at most a
/// half-turn there.
pub fn anchor_regions<T: Scalar>(poly: &PolygonWithHoles<T>, v: VertexId) -> Result<Vec<Vec<Point<T>>>> {
    let vp = visibility_polygon(poly, v);
    if poly.is_reflex(v) {
        let (a, b) = reflex_split(&vp.ring, 0)?;
        Ok(vec![a, b])
    } else {
        Ok(vec![vp.ring])
    }
}

pub(crate) fn boundary_position<T: Scalar>(ring: &[Point<T>], p: &Point<T>) -> Option<BoundaryPos<T>> {
    ring_edges(ring).enumerate().find_map(|(i, (a, b))| {
        on_segment(a, b, p).then(|| {
            let d = b.sub(a);
            BoundaryPos { edge: i, offset: p.sub(a).dot(&d) / d.norm2() }
        })
    })
}

/// Components of every extension inside `ring`, directed by boundary order
/// from the anchor `ring[0]`; components on a line through the anchor point
/// away from it (and are cut at the anchor if it lies inside them).
pub fn clip_and_orient<T: Scalar>(ring: &[Point<T>], arr: &Arrangement<T>) -> Result<Vec<ClippedSegment<T>>> {
    let anchor = &ring[0];
    let rings = [ring];
    let half = T::one() / T::two();
    let mut out = Vec::new();
    for ext in &arr.extensions {
        let seg = &ext.seg;
        let params = boundary_params(seg, &rings);
        let mut components: Vec<(T, T)> = Vec::new();
        for w in params.windows(2) {
            let mid = (w[0].clone() + w[1].clone()) * half.clone();
            if !rings_location(&seg.at(&mid), &rings).is_inside_closed() {
                continue;
            }
            match components.last_mut() {
                Some((_, hi)) if *hi == w[0] => *hi = w[1].clone(),
                _ => components.push((w[0].clone(), w[1].clone())),
            }
        }
        let ext_params = arr.params_on(ext.id);
        let ext_points: Vec<&Point<T>> = arr.points_on(ext.id).collect();
        for (lo, hi) in components {
            let (a, b) = (seg.at(&lo), seg.at(&hi));
            let inner: Vec<Point<T>> = ext_params
                .iter()
                .zip(&ext_points)
                .filter(|(t, _)| lo <= **t && **t <= hi)
                .map(|(_, p)| (*p).clone())
                .collect();
            let radial = orientation(&a, &b, anchor) == Turn::Collinear;
            let pieces: Vec<(Point<T>, Point<T>)> = if radial {
                if a != *anchor && b != *anchor && on_segment(&a, &b, anchor) {
                    vec![(anchor.clone(), a.clone()), (anchor.clone(), b.clone())]
                } else if a.dist2(anchor) <= b.dist2(anchor) {
                    vec![(a.clone(), b.clone())]
                } else {
                    vec![(b.clone(), a.clone())]
                }
            } else {
                let pa = boundary_position(ring, &a).ok_or_else(|| not_on_boundary(&a))?;
                let pb = boundary_position(ring, &b).ok_or_else(|| not_on_boundary(&b))?;
                if pa <= pb {
                    vec![(a.clone(), b.clone())]
                } else {
                    vec![(b.clone(), a.clone())]
                }
            };
            for (from, to) in pieces {
                let directed = Segment::new(from.clone(), to.clone())?;
                let mut points: Vec<Point<T>> = inner.iter().filter(|p| directed.contains(p)).cloned().collect();
                for end in [&from, &to] {
                    if !points.contains(end) {
                        points.push(end.clone());
                    }
                }
                points.sort_by_key(|p| from.dist2(p));
                let order = (
                    boundary_position(ring, &from).ok_or_else(|| not_on_boundary(&from))?,
                    boundary_position(ring, &to).ok_or_else(|| not_on_boundary(&to))?,
                );
                out.push(ClippedSegment { host: ext.id, seg: directed, boundary_order: order, radial, points });
            }
        }
    }
    Ok(out)
}

fn not_on_boundary<T: Scalar>(p: &Point<T>) -> Error {
    Error::Internal(format!("clipped endpoint {p} is not on the region boundary"))
}

/// Rays from the anchor through every arrangement vertex in the region,
/// sorted CCW from the first boundary edge, with coincident directions merged.
/// Each ray is returned as a direction and its maximal segment in the region.
pub fn visibility_rays<T: Scalar>(ring: &[Point<T>], arr: &Arrangement<T>) -> Vec<(Point<T>, Segment<T>)> {
    let anchor = &ring[0];
    let start = ring[1].sub(anchor);
    let rings = [ring];
    let mut dirs: Vec<Point<T>> = arr
        .vertices
        .iter()
        .filter(|p| *p != anchor && rings_location(p, &rings).is_inside_closed())
        .map(|p| p.sub(anchor))
        .collect();
    dirs.sort_by(|a, b| angle_cmp(&start, a, b).then_with(|| a.norm2().cmp(&b.norm2())));
    dirs.dedup_by(|a, b| angle_cmp(&start, a, b) == Ordering::Equal);
    dirs.into_iter()
        .map(|d| {
            let far = ray_reach(ring, anchor, &d);
            let seg = Segment { a: anchor.clone(), b: anchor.add(&d.scale(&far)) };
            (d, seg)
        })
        .collect()
}

/// Visibility extensions: the maximal segment from the anchor along each ray.
pub fn visibility_extensions<T: Scalar>(ring: &[Point<T>], arr: &Arrangement<T>) -> Vec<Segment<T>> {
    visibility_rays(ring, arr).into_iter().map(|(_, s)| s).collect()
}

/// Largest `t` with `anchor + t * dir` on the region boundary.
fn ray_reach<T: Scalar>(ring: &[Point<T>], anchor: &Point<T>, dir: &Point<T>) -> T {
    let mut far = T::zero();
    let d2 = dir.norm2();
    for (p, q) in ring_edges(ring) {
        match line_param(anchor, dir, p, &q.sub(p)) {
            Some(t) => {
                if on_segment(p, q, &anchor.add(&dir.scale(&t))) && t > far {
                    far = t;
                }
            }
            None => {
                if orientation(anchor, &anchor.add(dir), p) == Turn::Collinear {
                    for x in [p, q] {
                        let t = x.sub(anchor).dot(dir) / d2.clone();
                        if t > far {
                            far = t;
                        }
                    }
                }
            }
        }
    }
    far
}
