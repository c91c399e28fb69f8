//! Diagonal extensions of a polygon and the planar arrangement they induce.
//!
//! The faces of the arrangement are the ground set of the cover problem. Every
//! reflex vertex has both incident edges extended into the polygon, so every
//! face is convex; several lookups below rely on that.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact_geom::{
    angle_cmp, line_param, orientation, ring_edges, segment_intersection, simplify_ring, ConvexPolygon,
    IntersectionResult, Location, Point, PolygonWithHoles, Segment, Turn, VertexId,
};
use crate::scalar::Scalar;

/// A maximal segment inside the polygon through two mutually visible vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalExtension<T> {
    pub id: usize,
    /// Endpoints in lexicographic order, both on the polygon boundary.
    pub seg: Segment<T>,
    /// Vertex pairs whose extension is this segment.
    pub generators: Vec<(VertexId, VertexId)>,
}

/// Maximal collinear segment in the closed polygon containing `uv`.
pub fn extend_within<T: Scalar>(poly: &PolygonWithHoles<T>, u: &Point<T>, v: &Point<T>) -> Result<Segment<T>> {
    let base = Segment::new(u.clone(), v.clone())?;
    if !poly.contains_segment(&base) {
        return Err(Error::PreconditionViolation(format!("segment {u}-{v} leaves the polygon")));
    }
    let dir = base.direction();
    let mut params = vec![T::zero(), T::one()];
    for (p, q) in poly.edges() {
        let e = q.sub(p);
        match line_param(u, &dir, p, &e) {
            Some(s) => {
                let hit = base.at(&s);
                if crate::exact_geom::on_segment(p, q, &hit) {
                    params.push(s);
                }
            }
            None => {
                if orientation(u, v, p) == Turn::Collinear {
                    params.push(base.param_of(p));
                    params.push(base.param_of(q));
                }
            }
        }
    }
    params.sort();
    params.dedup();
    let half = T::one() / T::two();
    let inside: Vec<bool> = params
        .windows(2)
        .map(|w| {
            let mid = (w[0].clone() + w[1].clone()) * half.clone();
            poly.point_location(&base.at(&mid)).is_inside_closed()
        })
        .collect();
    let mut lo = params.iter().position(|t| t.is_zero()).expect("0 is always a parameter");
    let mut hi = params.iter().position(|t| t.is_one()).expect("1 is always a parameter");
    while lo > 0 && inside[lo - 1] {
        lo -= 1;
    }
    while hi < inside.len() && inside[hi] {
        hi += 1;
    }
    Ok(Segment { a: base.at(&params[lo]), b: base.at(&params[hi]) }.canonical())
}

/// All diagonal extensions, coincident ones merged, sorted by segment.
pub fn diagonal_extensions<T: Scalar>(poly: &PolygonWithHoles<T>) -> Vec<DiagonalExtension<T>> {
    let n = poly.vertex_count();
    let mut merged: BTreeMap<Segment<T>, Vec<(VertexId, VertexId)>> = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let (u, v) = (poly.vertex(i), poly.vertex(j));
            if let Ok(seg) = extend_within(poly, u, v) {
                merged.entry(seg).or_default().push((i, j));
            }
        }
    }
    merged
        .into_iter()
        .enumerate()
        .map(|(id, (seg, generators))| DiagonalExtension { id, seg, generators })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face<T> {
    /// CCW boundary walk; includes every arrangement vertex on the boundary.
    pub ring: Vec<Point<T>>,
    /// Strictly interior point.
    pub rep: Point<T>,
    pub covered: bool,
    pub area: T,
}

#[derive(Clone, Debug)]
pub struct HalfEdge {
    pub origin: usize,
    pub target: usize,
    pub twin: usize,
    pub next: usize,
    /// Face to the left; `None` outside the polygon or inside a hole.
    pub face: Option<usize>,
    pub extension: usize,
    /// Index of the piece between consecutive arrangement vertices on the extension.
    pub piece: usize,
}

#[derive(Clone, Debug)]
pub struct Arrangement<T> {
    pub extensions: Vec<DiagonalExtension<T>>,
    /// Arrangement vertices in lexicographic order.
    pub vertices: Vec<Point<T>>,
    pub faces: Vec<Face<T>>,
    pub half_edges: Vec<HalfEdge>,
    vertex_ids: BTreeMap<Point<T>, usize>,
    /// Vertex ids along each extension, ordered from `seg.a` to `seg.b`.
    on_extension: Vec<Vec<usize>>,
    /// Parameters matching `on_extension`.
    params: Vec<Vec<T>>,
    /// First half-edge id of each extension; piece `k` forward is `base + 2k`.
    half_edge_base: Vec<usize>,
}

/// Planar subdivision of `poly` by all extensions.
pub fn build_arrangement<T: Scalar>(poly: &PolygonWithHoles<T>, extensions: Vec<DiagonalExtension<T>>) -> Arrangement<T> {
    let m = extensions.len();
    let mut points: Vec<Vec<Point<T>>> = extensions.iter().map(|e| vec![e.seg.a.clone(), e.seg.b.clone()]).collect();
    for i in 0..m {
        for j in i + 1..m {
            match segment_intersection(&extensions[i].seg, &extensions[j].seg) {
                IntersectionResult::Empty => {}
                IntersectionResult::AtPoint(p) => {
                    points[i].push(p.clone());
                    points[j].push(p);
                }
                IntersectionResult::Overlap(o) => {
                    // Distinct maximal segments cannot overlap; keep the
                    // subdivision consistent regardless.
                    for p in [o.a, o.b] {
                        points[i].push(p.clone());
                        points[j].push(p);
                    }
                }
            }
        }
    }
    let mut vertex_ids = BTreeMap::new();
    for p in points.iter().flatten() {
        vertex_ids.entry(p.clone()).or_insert(0);
    }
    let vertices: Vec<Point<T>> = vertex_ids.keys().cloned().collect();
    for (i, v) in vertex_ids.values_mut().enumerate() {
        *v = i;
    }

    let mut on_extension = Vec::with_capacity(m);
    let mut params = Vec::with_capacity(m);
    for (e, pts) in extensions.iter().zip(points) {
        let mut keyed: Vec<(T, usize)> = pts.iter().map(|p| (e.seg.param_of(p), vertex_ids[p])).collect();
        keyed.sort();
        keyed.dedup();
        params.push(keyed.iter().map(|(t, _)| t.clone()).collect::<Vec<_>>());
        on_extension.push(keyed.into_iter().map(|(_, v)| v).collect::<Vec<_>>());
    }

    let mut half_edges = Vec::new();
    let mut half_edge_base = Vec::with_capacity(m);
    for (e, ids) in on_extension.iter().enumerate() {
        half_edge_base.push(half_edges.len());
        for (k, w) in ids.windows(2).enumerate() {
            let id = half_edges.len();
            half_edges.push(HalfEdge { origin: w[0], target: w[1], twin: id + 1, next: usize::MAX, face: None, extension: e, piece: k });
            half_edges.push(HalfEdge { origin: w[1], target: w[0], twin: id, next: usize::MAX, face: None, extension: e, piece: k });
        }
    }

    // Outgoing half-edges around each vertex in CCW order.
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    for (id, he) in half_edges.iter().enumerate() {
        outgoing[he.origin].push(id);
    }
    let east = Point::from_ints(1, 0);
    for (v, list) in outgoing.iter_mut().enumerate() {
        let dir = |h: usize| vertices[half_edges[h].target].sub(&vertices[v]);
        list.sort_by(|&a, &b| angle_cmp(&east, &dir(a), &dir(b)));
    }
    for id in 0..half_edges.len() {
        let he = &half_edges[id];
        let around = &outgoing[he.target];
        let j = around.iter().position(|&h| h == he.twin).expect("twin leaves target");
        let next = around[(j + around.len() - 1) % around.len()];
        half_edges[id].next = next;
    }

    let mut faces = Vec::new();
    let mut visited = vec![false; half_edges.len()];
    for start in 0..half_edges.len() {
        if visited[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut h = start;
        while !visited[h] {
            visited[h] = true;
            cycle.push(h);
            h = half_edges[h].next;
        }
        let ring: Vec<Point<T>> = cycle.iter().map(|&h| vertices[half_edges[h].origin].clone()).collect();
        let area = crate::exact_geom::ring_area(&ring);
        if !area.is_positive() {
            continue;
        }
        let rep = face_representative(&ring);
        if poly.point_location(&rep) != Location::Interior {
            continue;
        }
        let face_id = faces.len();
        for &h in &cycle {
            half_edges[h].face = Some(face_id);
        }
        faces.push(Face { ring, rep, covered: false, area });
    }

    Arrangement { extensions, vertices, faces, half_edges, vertex_ids, on_extension, params, half_edge_base }
}

/// Centroid of the first fan triangle of the simplified ring.
fn face_representative<T: Scalar>(ring: &[Point<T>]) -> Point<T> {
    let simple = simplify_ring(ring.to_vec());
    let three = T::from_int(3);
    let sx = simple[0].x.clone() + simple[1].x.clone() + simple[2].x.clone();
    let sy = simple[0].y.clone() + simple[1].y.clone() + simple[2].y.clone();
    Point::new(sx / three.clone(), sy / three)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArrangementStats {
    pub extensions: usize,
    pub vertices: usize,
    pub faces: usize,
}

impl<T: Scalar> Arrangement<T> {
    pub fn new(poly: &PolygonWithHoles<T>) -> Self {
        build_arrangement(poly, diagonal_extensions(poly))
    }

    pub fn stats(&self) -> ArrangementStats {
        ArrangementStats { extensions: self.extensions.len(), vertices: self.vertices.len(), faces: self.faces.len() }
    }

    pub fn vertex_id(&self, p: &Point<T>) -> Option<usize> {
        self.vertex_ids.get(p).copied()
    }

    pub fn is_vertex(&self, p: &Point<T>) -> bool {
        self.vertex_ids.contains_key(p)
    }

    /// Arrangement vertices along an extension, from `seg.a` to `seg.b`.
    pub fn points_on(&self, extension: usize) -> impl Iterator<Item = &Point<T>> {
        self.on_extension[extension].iter().map(move |&v| &self.vertices[v])
    }

    pub fn params_on(&self, extension: usize) -> &[T] {
        &self.params[extension]
    }

    /// Piece of `extension` whose relative interior contains parameter `t`,
    /// or `None` if `t` is at a vertex or outside the segment.
    pub fn piece_at(&self, extension: usize, t: &T) -> Option<usize> {
        let params = &self.params[extension];
        match params.binary_search(t) {
            Ok(_) => None,
            Err(0) => None,
            Err(i) if i >= params.len() => None,
            Err(i) => Some(i - 1),
        }
    }

    /// Face adjacent to a piece of an extension on the side of `side_point`.
    pub fn face_beside(&self, extension: usize, piece: usize, side_point: &Point<T>) -> Option<usize> {
        let forward = self.half_edge_base[extension] + 2 * piece;
        let he = &self.half_edges[forward];
        match orientation(&self.vertices[he.origin], &self.vertices[he.target], side_point) {
            Turn::Left => he.face,
            Turn::Right => self.half_edges[he.twin].face,
            Turn::Collinear => None,
        }
    }

    /// Face whose closure contains `p` strictly inside, if any.
    pub fn face_containing(&self, p: &Point<T>) -> Option<usize> {
        self.faces.iter().position(|f| convex_ring_location(&f.ring, p) == Location::Interior)
    }

    pub fn uncovered_count(&self) -> usize {
        self.faces.iter().filter(|f| !f.covered).count()
    }

    pub fn all_covered(&self) -> bool {
        self.faces.iter().all(|f| f.covered)
    }

    pub fn reset_cover(&mut self) {
        for f in &mut self.faces {
            f.covered = false;
        }
    }

    /// Faces whose representative lies in `q`.
    pub fn faces_in(&self, q: &ConvexPolygon<T>) -> Vec<usize> {
        (0..self.faces.len()).filter(|&f| q.contains(&self.faces[f].rep)).collect()
    }

    pub fn mark_covered(&mut self, q: &ConvexPolygon<T>) -> usize {
        let mut flipped = 0;
        for f in &mut self.faces {
            if !f.covered && q.contains(&f.rep) {
                f.covered = true;
                flipped += 1;
            }
        }
        flipped
    }
}

pub fn mark_covered<T: Scalar>(arr: &mut Arrangement<T>, q: &ConvexPolygon<T>) -> usize {
    arr.mark_covered(q)
}

/// Location in a CCW convex ring that may contain collinear vertices.
pub(crate) fn convex_ring_location<T: Scalar>(ring: &[Point<T>], p: &Point<T>) -> Location {
    let mut boundary = false;
    for (a, b) in ring_edges(ring) {
        match orientation(a, b, p) {
            Turn::Right => return Location::Exterior,
            Turn::Collinear => boundary = true,
            Turn::Left => {}
        }
    }
    if boundary {
        Location::Boundary
    } else {
        Location::Interior
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn pts(coords: &[(i64, i64)]) -> Vec<Point<Rational>> {
        coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
    }

    fn p(x: i64, y: i64) -> Point<Rational> {
        Point::from_ints(x, y)
    }

    fn seg(a: (i64, i64), b: (i64, i64)) -> Segment<Rational> {
        Segment { a: p(a.0, a.1), b: p(b.0, b.1) }.canonical()
    }

    fn square() -> PolygonWithHoles<Rational> {
        PolygonWithHoles::simple(pts(&[(0, 0), (4, 0), (4, 4), (0, 4)])).unwrap()
    }

    fn l_shape() -> PolygonWithHoles<Rational> {
        PolygonWithHoles::simple(pts(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])).unwrap()
    }

    #[test]
    fn extend_examples() {
        assert_eq!(extend_within(&square(), &p(0, 0), &p(4, 4)).unwrap(), seg((0, 0), (4, 4)));
        assert_eq!(extend_within(&l_shape(), &p(2, 0), &p(1, 1)).unwrap(), seg((2, 0), (0, 2)));
        assert_eq!(extend_within(&l_shape(), &p(2, 1), &p(1, 1)).unwrap(), seg((2, 1), (0, 1)));
        assert!(matches!(
            extend_within(&l_shape(), &p(2, 1), &p(1, 2)),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn extension_counts() {
        let tri = PolygonWithHoles::simple(pts(&[(0, 0), (3, 0), (0, 3)])).unwrap();
        assert_eq!(diagonal_extensions(&tri).len(), 3);
        assert_eq!(diagonal_extensions(&square()).len(), 6);
        let l = diagonal_extensions(&l_shape());
        assert_eq!(l.len(), 10);
        let anti = l.iter().find(|e| e.seg == seg((2, 0), (0, 2))).unwrap();
        assert_eq!(anti.generators.len(), 3);
    }

    #[test]
    fn square_arrangement() {
        let arr = Arrangement::new(&square());
        assert_eq!(arr.stats(), ArrangementStats { extensions: 6, vertices: 5, faces: 4 });
        let total = arr.faces.iter().fold(Rational::from_integer(0.into()), |a, f| a + f.area.clone());
        assert_eq!(total, Rational::from_integer(16.into()));
    }

    #[test]
    fn mark_covered_examples() {
        let mut arr = Arrangement::new(&square());
        let whole = ConvexPolygon::new(pts(&[(0, 0), (4, 0), (4, 4), (0, 4)])).unwrap();
        assert_eq!(arr.mark_covered(&whole), 4);
        assert_eq!(arr.mark_covered(&whole), 0);
        arr.reset_cover();
        let one = ConvexPolygon::new(pts(&[(0, 0), (4, 0), (2, 2)])).unwrap();
        assert_eq!(arr.mark_covered(&one), 1);
    }

    #[test]
    fn triangle_arrangement() {
        let tri = PolygonWithHoles::simple(pts(&[(0, 0), (3, 0), (0, 3)])).unwrap();
        let arr = Arrangement::new(&tri);
        assert_eq!(arr.stats(), ArrangementStats { extensions: 3, vertices: 3, faces: 1 });
    }
}
