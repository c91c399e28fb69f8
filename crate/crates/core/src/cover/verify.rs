use crate::arrangement::Arrangement;
use crate::exact_geom::{
    clip_halfplane, clip_halfplane_right, ring_area, segment_in_polygon, ConvexPolygon, Location, Point,
    PolygonWithHoles, Segment,
};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation<T> {
    NotConvex { piece: usize },
    OutsidePolygon { piece: usize },
    UncoveredFace { face: usize, rep: Point<T> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport<T> {
    pub pieces: usize,
    pub faces: usize,
    pub violations: Vec<Violation<T>>,
}

impl<T> VerificationReport<T> {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every piece is convex and inside `poly` and that the pieces
/// cover every face of the arrangement, by exact subtraction. Together these
/// mean the union of the pieces is exactly `poly`.
pub fn verify_cover<T: Scalar>(
    poly: &PolygonWithHoles<T>,
    arr: &Arrangement<T>,
    pieces: &[Vec<Point<T>>],
) -> VerificationReport<T> {
    let mut violations = Vec::new();
    let mut convex = Vec::new();
    for (i, ring) in pieces.iter().enumerate() {
        match ConvexPolygon::new(ring.clone()) {
            Ok(q) => {
                if !piece_inside(poly, &q) {
                    violations.push(Violation::OutsidePolygon { piece: i });
                }
                convex.push(q);
            }
            Err(_) => violations.push(Violation::NotConvex { piece: i }),
        }
    }
    for (f, face) in arr.faces.iter().enumerate() {
        if !face_covered(&face.ring, &convex) {
            violations.push(Violation::UncoveredFace { face: f, rep: face.rep.clone() });
        }
    }
    VerificationReport { pieces: pieces.len(), faces: arr.faces.len(), violations }
}

/// Whether a convex piece lies inside `poly`, holes included.
pub fn piece_inside<T: Scalar>(poly: &PolygonWithHoles<T>, q: &ConvexPolygon<T>) -> bool {
    let ring = q.ring();
    let n = ring.len();
    let edges_inside = (0..n).all(|i| {
        let seg = Segment { a: ring[i].clone(), b: ring[(i + 1) % n].clone() };
        segment_in_polygon(&seg, poly)
    });
    // With all edges in P, a hole meets the piece's interior only if the
    // whole hole lies inside it.
    edges_inside
        && poly.holes().iter().all(|h| {
            !h.iter().any(|p| q.locate(p) == Location::Interior) && !h.iter().all(|p| q.contains(p))
        })
}

fn face_covered<T: Scalar>(face: &[Point<T>], pieces: &[ConvexPolygon<T>]) -> bool {
    if pieces.iter().any(|q| face.iter().all(|p| q.contains(p))) {
        return true;
    }
    let mut left: Vec<Vec<Point<T>>> = vec![face.to_vec()];
    for q in pieces {
        left = left.iter().flat_map(|f| subtract(f, q)).collect();
        if left.is_empty() {
            return true;
        }
    }
    false
}

/// `a` minus convex `b`, as convex fragments of positive area.
fn subtract<T: Scalar>(a: &[Point<T>], b: &ConvexPolygon<T>) -> Vec<Vec<Point<T>>> {
    let ring = b.ring();
    let n = ring.len();
    let mut out = Vec::new();
    let mut rest = a.to_vec();
    for i in 0..n {
        let (p, q) = (&ring[i], &ring[(i + 1) % n]);
        let outside = clip_halfplane_right(&rest, p, q);
        if outside.len() >= 3 && ring_area(&outside).is_positive() {
            out.push(outside);
        }
        rest = clip_halfplane(&rest, p, q);
        if rest.len() < 3 || !ring_area(&rest).is_positive() {
            break;
        }
    }
    out
}
