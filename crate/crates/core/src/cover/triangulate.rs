use crate::exact_geom::{
    orientation, segment_in_polygon, segment_intersection, strictly_inside_segment, ConvexPolygon, IntersectionResult,
    Point, PolygonWithHoles, Segment, Turn,
};
use crate::scalar::Scalar;

/// Triangulation of `poly` using only its vertices: `n + 2h - 2` triangles.
pub fn triangulate<T: Scalar>(poly: &PolygonWithHoles<T>) -> Vec<ConvexPolygon<T>> {
    let ring = bridge_holes(poly);
    clip_ears(ring)
}

/// Merges every hole into the outer ring through a bridge diagonal, giving a
/// weakly simple CCW ring where bridge endpoints appear twice.
fn bridge_holes<T: Scalar>(poly: &PolygonWithHoles<T>) -> Vec<Point<T>> {
    let mut ring = poly.outer().to_vec();
    let mut bridges: Vec<Segment<T>> = Vec::new();
    let mut holes: Vec<&Vec<Point<T>>> = poly.holes().iter().collect();
    holes.sort_by(|a, b| a.iter().min().cmp(&b.iter().min()));
    let mut pending = holes;
    while !pending.is_empty() {
        // Bridge any hole that can reach the current ring; the hole order only
        // breaks ties, since a hole may be hidden behind one not yet merged.
        let mut done = None;
        for (k, hole) in pending.iter().enumerate() {
            let hi = (0..hole.len()).min_by(|&a, &b| hole[a].cmp(&hole[b])).unwrap();
            if let Some((ri, seg)) = best_bridge(poly, &ring, &bridges, &hole[hi]) {
                let h = &hole[hi];
                let mut merged = ring[..=ri].to_vec();
                merged.extend(hole[hi..].iter().chain(&hole[..hi]).cloned());
                merged.push(h.clone());
                merged.extend(ring[ri..].iter().cloned());
                ring = merged;
                bridges.push(seg);
                done = Some(k);
                break;
            }
        }
        let k = done.expect("some hole always has a visible bridge");
        pending.remove(k);
    }
    ring
}

/// Closest ring vertex visible from hole vertex `h`, as the ring index of the
/// occurrence whose wedge contains the bridge.
fn best_bridge<T: Scalar>(
    poly: &PolygonWithHoles<T>,
    ring: &[Point<T>],
    bridges: &[Segment<T>],
    h: &Point<T>,
) -> Option<(usize, Segment<T>)> {
    let n = ring.len();
    let mut best: Option<(T, usize, Segment<T>)> = None;
    for i in 0..n {
        let r = &ring[i];
        let d2 = r.dist2(h);
        if best.as_ref().is_some_and(|(bd, bi, _)| d2 > *bd || (d2 == *bd && ring[*bi] <= *r)) {
            continue;
        }
        let seg = Segment { a: h.clone(), b: r.clone() };
        if !segment_in_polygon(&seg, poly) {
            continue;
        }
        if poly.vertices().any(|p| strictly_inside_segment(&seg.a, &seg.b, p)) {
            continue;
        }
        let crosses = bridges.iter().any(|b| match segment_intersection(&seg, b) {
            IntersectionResult::Empty => false,
            IntersectionResult::AtPoint(p) => p != *r || (b.a != *r && b.b != *r),
            IntersectionResult::Overlap(_) => true,
        });
        if crosses {
            continue;
        }
        let (prev, next) = (&ring[(i + n - 1) % n], &ring[(i + 1) % n]);
        if !in_wedge(r, prev, next, h) {
            continue;
        }
        best = Some((d2, i, seg));
    }
    best.map(|(_, i, s)| (i, s))
}

/// Whether direction `r -> x` points strictly into the interior wedge at `r`
/// between ring neighbours `prev` and `next`.
fn in_wedge<T: Scalar>(r: &Point<T>, prev: &Point<T>, next: &Point<T>, x: &Point<T>) -> bool {
    let (a, b, d) = (next.sub(r), prev.sub(r), x.sub(r));
    if a.cross(&b).is_positive() {
        a.cross(&d).is_positive() && d.cross(&b).is_positive()
    } else {
        // Reflex or straight wedge: anything not in the complementary cone.
        !(b.cross(&d) >= T::zero() && d.cross(&a) >= T::zero())
    }
}

fn clip_ears<T: Scalar>(mut ring: Vec<Point<T>>) -> Vec<ConvexPolygon<T>> {
    let mut out = Vec::with_capacity(ring.len().saturating_sub(2));
    while ring.len() > 3 {
        let n = ring.len();
        let ear = (0..n).find(|&i| is_ear(&ring, i)).unwrap_or_else(|| {
            // Only straight vertices remain clippable; drop one.
            (0..n)
                .find(|&i| orientation(&ring[(i + n - 1) % n], &ring[i], &ring[(i + 1) % n]) == Turn::Collinear)
                .expect("a weakly simple ring always has an ear")
        });
        let (a, b, c) = (&ring[(ear + n - 1) % n], &ring[ear], &ring[(ear + 1) % n]);
        if let Ok(t) = ConvexPolygon::new(vec![a.clone(), b.clone(), c.clone()]) {
            out.push(t);
        }
        ring.remove(ear);
    }
    if let Ok(t) = ConvexPolygon::new(ring) {
        out.push(t);
    }
    out
}

fn is_ear<T: Scalar>(ring: &[Point<T>], i: usize) -> bool {
    let n = ring.len();
    let (ia, ic) = ((i + n - 1) % n, (i + 1) % n);
    let (a, b, c) = (&ring[ia], &ring[i], &ring[ic]);
    if orientation(a, b, c) != Turn::Left {
        return false;
    }
    let corners = [a, b, c];
    for j in 0..n {
        if j == ia || j == i || j == ic {
            continue;
        }
        let p = &ring[j];
        if corners.contains(&p) {
            // Another occurrence of a corner: its edges must stay outside.
            let k = corners.iter().position(|q| *q == p).unwrap();
            let (u, w) = (corners[(k + 1) % 3], corners[(k + 2) % 3]);
            for q in [&ring[(j + n - 1) % n], &ring[(j + 1) % n]] {
                let d = q.sub(p);
                if u.sub(p).cross(&d).is_positive() && d.cross(&w.sub(p)).is_positive() {
                    return false;
                }
            }
            continue;
        }
        if orientation(a, b, p) != Turn::Right
            && orientation(b, c, p) != Turn::Right
            && orientation(c, a, p) != Turn::Right
        {
            return false;
        }
    }
    let diagonal = Segment { a: c.clone(), b: a.clone() };
    for j in 0..n {
        let (p, q) = (&ring[j], &ring[(j + 1) % n]);
        if let IntersectionResult::AtPoint(x) = segment_intersection(&diagonal, &Segment { a: p.clone(), b: q.clone() }) {
            if x != *a && x != *c {
                return false;
            }
        }
    }
    true
}
