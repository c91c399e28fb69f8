use super::point::{orientation, Point, Turn};
use super::polygon::{ring_area, Location};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A strictly convex CCW polygon in canonical form: no repeated or collinear
/// vertices, starting at the lexicographically smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConvexPolygon<T> {
    ring: Vec<Point<T>>,
}

impl<T: Scalar> ConvexPolygon<T> {
    /// Accepts any CCW ring that becomes strictly convex once duplicate and
    /// collinear vertices are dropped.
    pub fn new(ring: Vec<Point<T>>) -> Result<Self> {
        let ring = simplify_ring(ring);
        if ring.len() < 3 {
            return Err(Error::Degenerate);
        }
        let n = ring.len();
        for i in 0..n {
            if orientation(&ring[i], &ring[(i + 1) % n], &ring[(i + 2) % n]) != Turn::Left {
                return Err(Error::NotConvex);
            }
        }
        // All left turns still admits rings that wind more than once.
        let start = (0..n).min_by(|&a, &b| ring[a].cmp(&ring[b])).unwrap();
        let ring: Vec<_> = ring[start..].iter().chain(&ring[..start]).cloned().collect();
        let winds_once = (1..n - 1).all(|i| orientation(&ring[0], &ring[i], &ring[i + 1]) == Turn::Left);
        if !winds_once {
            return Err(Error::NotConvex);
        }
        Ok(ConvexPolygon { ring })
    }

    pub fn ring(&self) -> &[Point<T>] {
        &self.ring
    }

    pub fn into_ring(self) -> Vec<Point<T>> {
        self.ring
    }

    pub fn area(&self) -> T {
        ring_area(&self.ring)
    }

    pub fn locate(&self, p: &Point<T>) -> Location {
        let n = self.ring.len();
        let mut on_edge = false;
        for i in 0..n {
            match orientation(&self.ring[i], &self.ring[(i + 1) % n], p) {
                Turn::Right => return Location::Exterior,
                Turn::Collinear => on_edge = true,
                Turn::Left => {}
            }
        }
        if on_edge {
            Location::Boundary
        } else {
            Location::Interior
        }
    }

    pub fn contains(&self, p: &Point<T>) -> bool {
        self.locate(p) != Location::Exterior
    }

    /// Average of the vertices, strictly interior.
    pub fn interior_point(&self) -> Point<T> {
        vertex_average(&self.ring)
    }
}

pub(crate) fn vertex_average<T: Scalar>(ring: &[Point<T>]) -> Point<T> {
    let n = T::from_count(ring.len());
    let (sx, sy) = ring
        .iter()
        .fold((T::zero(), T::zero()), |(sx, sy), p| (sx + p.x.clone(), sy + p.y.clone()));
    Point::new(sx / n.clone(), sy / n)
}

/// Drops consecutive duplicates and vertices lying on the segment between
/// their neighbours. Spikes (reversals) are also removed.
pub fn simplify_ring<T: Scalar>(ring: Vec<Point<T>>) -> Vec<Point<T>> {
    simplify_ring_keeping(ring, None)
}

/// Like [`simplify_ring`], but never removes the vertex equal to `keep`.
pub fn simplify_ring_keeping<T: Scalar>(ring: Vec<Point<T>>, keep: Option<&Point<T>>) -> Vec<Point<T>> {
    let mut out: Vec<Point<T>> = Vec::with_capacity(ring.len());
    for p in ring {
        if out.last() != Some(&p) {
            out.push(p);
        }
    }
    while out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    let mut changed = true;
    while changed && out.len() >= 3 {
        changed = false;
        let n = out.len();
        for i in 0..n {
            let prev = &out[(i + n - 1) % n];
            let next = &out[(i + 1) % n];
            let cur = &out[i];
            if Some(cur) != keep && (prev == next || orientation(prev, cur, next) == Turn::Collinear) {
                out.remove(i);
                changed = true;
                break;
            }
        }
    }
    out
}

/// Intersection of two convex polygons; `None` when it has zero area.
pub fn clip_convex<T: Scalar>(a: &ConvexPolygon<T>, b: &ConvexPolygon<T>) -> Option<ConvexPolygon<T>> {
    let mut current: Vec<Point<T>> = a.ring.clone();
    let n = b.ring.len();
    for i in 0..n {
        current = clip_halfplane(&current, &b.ring[i], &b.ring[(i + 1) % n]);
        if current.len() < 3 {
            return None;
        }
    }
    ConvexPolygon::new(current).ok()
}

/// Keeps the part of a convex ring on the closed left side of line `p -> q`.
pub fn clip_halfplane<T: Scalar>(ring: &[Point<T>], p: &Point<T>, q: &Point<T>) -> Vec<Point<T>> {
    let d = q.sub(p);
    let side = |x: &Point<T>| d.cross(&x.sub(p));
    let n = ring.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let cur = &ring[i];
        let next = &ring[(i + 1) % n];
        let sc = side(cur);
        let sn = side(next);
        if !sc.is_negative() {
            out.push(cur.clone());
        }
        if (sc.is_positive() && sn.is_negative()) || (sc.is_negative() && sn.is_positive()) {
            let t = sc.clone() / (sc - sn);
            out.push(cur.lerp(next, &t));
        }
    }
    out
}

/// Keeps the part on the closed right side of line `p -> q`.
pub fn clip_halfplane_right<T: Scalar>(ring: &[Point<T>], p: &Point<T>, q: &Point<T>) -> Vec<Point<T>> {
    clip_halfplane(ring, q, p)
}

/// Convex hull (Andrew's monotone chain), CCW without collinear points.
pub fn convex_hull<T: Scalar>(points: &[Point<T>]) -> Vec<Point<T>> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Point<T>> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && orientation(&lower[lower.len() - 2], &lower[lower.len() - 1], p) != Turn::Left {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point<T>> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && orientation(&upper[upper.len() - 2], &upper[upper.len() - 1], p) != Turn::Left {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}
