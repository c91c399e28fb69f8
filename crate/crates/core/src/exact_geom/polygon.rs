use super::intersect::{segment_intersection, IntersectionResult};
use super::point::{on_segment, orientation, Point, Segment, Turn};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Location {
    Interior,
    Boundary,
    Exterior,
}

impl Location {
    pub fn is_inside_closed(self) -> bool {
        self != Location::Exterior
    }
}

/// Signed shoelace area; positive for CCW rings.
pub fn ring_area<T: Scalar>(ring: &[Point<T>]) -> T {
    twice_ring_area(ring) / T::two()
}

pub fn twice_ring_area<T: Scalar>(ring: &[Point<T>]) -> T {
    let n = ring.len();
    let mut acc = T::zero();
    for i in 0..n {
        acc = acc + ring[i].cross(&ring[(i + 1) % n]);
    }
    acc
}

pub(crate) fn ring_edges<T>(ring: &[Point<T>]) -> impl Iterator<Item = (&Point<T>, &Point<T>)> {
    let n = ring.len();
    (0..n).map(move |i| (&ring[i], &ring[(i + 1) % n]))
}

/// Location of `p` relative to the closed region bounded by one simple ring
/// (of either orientation).
pub fn ring_location<T: Scalar>(p: &Point<T>, ring: &[Point<T>]) -> Location {
    let mut winding: i64 = 0;
    for (a, b) in ring_edges(ring) {
        if on_segment(a, b, p) {
            return Location::Boundary;
        }
        if a.y <= p.y {
            if b.y > p.y && orientation(a, b, p) == Turn::Left {
                winding += 1;
            }
        } else if b.y <= p.y && orientation(a, b, p) == Turn::Right {
            winding -= 1;
        }
    }
    if winding != 0 {
        Location::Interior
    } else {
        Location::Exterior
    }
}

/// Location relative to `rings[0]` minus the open interiors of `rings[1..]`.
pub fn rings_location<T: Scalar, R: AsRef<[Point<T>]>>(p: &Point<T>, rings: &[R]) -> Location {
    let mut rings = rings.iter();
    let outer = match rings.next() {
        Some(r) => r.as_ref(),
        None => return Location::Exterior,
    };
    match ring_location(p, outer) {
        Location::Exterior => Location::Exterior,
        Location::Boundary => Location::Boundary,
        Location::Interior => {
            for hole in rings {
                match ring_location(p, hole.as_ref()) {
                    Location::Interior => return Location::Exterior,
                    Location::Boundary => return Location::Boundary,
                    Location::Exterior => {}
                }
            }
            Location::Interior
        }
    }
}

/// Sorted, deduplicated parameters along `seg` where it meets the boundary of
/// `rings`, together with 0 and 1.
pub(crate) fn boundary_params<T: Scalar, R: AsRef<[Point<T>]>>(seg: &Segment<T>, rings: &[R]) -> Vec<T> {
    let mut params = vec![T::zero(), T::one()];
    for ring in rings {
        for (a, b) in ring_edges(ring.as_ref()) {
            let edge = Segment { a: a.clone(), b: b.clone() };
            match segment_intersection(seg, &edge) {
                IntersectionResult::Empty => {}
                IntersectionResult::AtPoint(q) => params.push(seg.param_of(&q)),
                IntersectionResult::Overlap(o) => {
                    params.push(seg.param_of(&o.a));
                    params.push(seg.param_of(&o.b));
                }
            }
        }
    }
    params.sort();
    params.dedup();
    params
}

/// True iff every point of `seg` lies in the closed region described by `rings`.
pub fn segment_in_rings<T: Scalar, R: AsRef<[Point<T>]>>(seg: &Segment<T>, rings: &[R]) -> bool {
    if !rings_location(&seg.a, rings).is_inside_closed() || !rings_location(&seg.b, rings).is_inside_closed() {
        return false;
    }
    let params = boundary_params(seg, rings);
    let half = T::one() / T::two();
    params.windows(2).all(|w| {
        let mid = (w[0].clone() + w[1].clone()) * half.clone();
        rings_location(&seg.at(&mid), rings).is_inside_closed()
    })
}

/// A polygon with holes: a CCW outer ring and CW hole rings, so the region
/// always lies to the left of every boundary edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonWithHoles<T> {
    rings: Vec<Vec<Point<T>>>,
}

/// Global vertex index: outer ring first, then each hole in order.
pub type VertexId = usize;

impl<T: Scalar> PolygonWithHoles<T> {
    pub fn new(outer: Vec<Point<T>>, holes: Vec<Vec<Point<T>>>) -> Result<Self> {
        let mut rings = Vec::with_capacity(holes.len() + 1);
        rings.push(outer);
        rings.extend(holes);
        let poly = PolygonWithHoles { rings };
        poly.validate()?;
        Ok(poly)
    }

    pub fn simple(outer: Vec<Point<T>>) -> Result<Self> {
        Self::new(outer, Vec::new())
    }

    pub fn outer(&self) -> &[Point<T>] {
        &self.rings[0]
    }

    pub fn holes(&self) -> &[Vec<Point<T>>] {
        &self.rings[1..]
    }

    pub fn rings(&self) -> &[Vec<Point<T>>] {
        &self.rings
    }

    pub fn hole_count(&self) -> usize {
        self.rings.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.rings.iter().map(Vec::len).sum()
    }

    /// (ring, index within ring) of a global vertex id.
    pub fn locate_vertex(&self, id: VertexId) -> (usize, usize) {
        let mut rest = id;
        for (r, ring) in self.rings.iter().enumerate() {
            if rest < ring.len() {
                return (r, rest);
            }
            rest -= ring.len();
        }
        panic!("vertex id {id} out of range");
    }

    pub fn vertex(&self, id: VertexId) -> &Point<T> {
        let (r, i) = self.locate_vertex(id);
        &self.rings[r][i]
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Point<T>> {
        self.rings.iter().flatten()
    }

    /// Neighbours of a vertex along its ring: (previous, next).
    pub fn neighbours(&self, id: VertexId) -> (&Point<T>, &Point<T>) {
        let (r, i) = self.locate_vertex(id);
        let ring = &self.rings[r];
        let n = ring.len();
        (&ring[(i + n - 1) % n], &ring[(i + 1) % n])
    }

    /// Interior angle greater than 180 degrees.
    pub fn is_reflex(&self, id: VertexId) -> bool {
        let (prev, next) = self.neighbours(id);
        orientation(prev, self.vertex(id), next) == Turn::Right
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point<T>, &Point<T>)> {
        self.rings.iter().flat_map(|r| ring_edges(r))
    }

    pub fn area(&self) -> T {
        self.rings.iter().fold(T::zero(), |acc, r| acc + ring_area(r))
    }

    pub fn is_convex(&self) -> bool {
        self.rings.len() == 1 && (0..self.vertex_count()).all(|v| !self.is_reflex(v))
    }

    fn validate(&self) -> Result<()> {
        let mut seen = std::collections::BTreeMap::new();
        for (r, ring) in self.rings.iter().enumerate() {
            if ring.len() < 3 {
                return Err(Error::TooFewVertices { ring: r });
            }
            for (i, p) in ring.iter().enumerate() {
                if seen.insert(p.clone(), r).is_some() {
                    return Err(Error::RepeatedVertex { ring: r, vertex: i });
                }
            }
            let n = ring.len();
            for i in 0..n {
                if orientation(&ring[(i + n - 1) % n], &ring[i], &ring[(i + 1) % n]) == Turn::Collinear {
                    return Err(Error::CollinearVertices { ring: r, vertex: i });
                }
            }
            if !ring_is_simple(ring) {
                return Err(Error::SelfIntersection { ring: r });
            }
            let area = ring_area(ring);
            if (r == 0) != area.is_positive() {
                return Err(Error::WrongOrientation { ring: r });
            }
        }
        for h in 1..self.rings.len() {
            let hole = &self.rings[h];
            if rings_cross(&self.rings[0], hole)
                || hole.iter().any(|p| ring_location(p, &self.rings[0]) != Location::Interior)
            {
                return Err(Error::HoleOutside { hole: h - 1 });
            }
            for g in 1..h {
                let other = &self.rings[g];
                if rings_cross(other, hole)
                    || hole.iter().any(|p| ring_location(p, other) != Location::Exterior)
                    || other.iter().any(|p| ring_location(p, hole) != Location::Exterior)
                {
                    return Err(Error::HolesOverlap { first: g - 1, second: h - 1 });
                }
            }
        }
        Ok(())
    }

    pub fn point_location(&self, p: &Point<T>) -> Location {
        rings_location(p, &self.rings)
    }

    pub fn contains_segment(&self, seg: &Segment<T>) -> bool {
        segment_in_rings(seg, &self.rings)
    }
}

pub fn point_location<T: Scalar>(p: &Point<T>, poly: &PolygonWithHoles<T>) -> Location {
    poly.point_location(p)
}

pub fn segment_in_polygon<T: Scalar>(s: &Segment<T>, poly: &PolygonWithHoles<T>) -> bool {
    poly.contains_segment(s)
}

/// No two edges of the ring meet except consecutive edges at their shared vertex.
pub fn ring_is_simple<T: Scalar>(ring: &[Point<T>]) -> bool {
    let n = ring.len();
    let edge = |i: usize| Segment { a: ring[i].clone(), b: ring[(i + 1) % n].clone() };
    for i in 0..n {
        if ring[i] == ring[(i + 1) % n] {
            return false;
        }
        for j in i + 1..n {
            let res = segment_intersection(&edge(i), &edge(j));
            let adjacent_shared = if j == i + 1 {
                Some(&ring[j])
            } else if i == 0 && j == n - 1 {
                Some(&ring[0])
            } else {
                None
            };
            match (res, adjacent_shared) {
                (IntersectionResult::Empty, _) => {}
                (IntersectionResult::AtPoint(q), Some(s)) if &q == s => {}
                _ => return false,
            }
        }
    }
    true
}

fn rings_cross<T: Scalar>(r1: &[Point<T>], r2: &[Point<T>]) -> bool {
    ring_edges(r1).any(|(a, b)| {
        let s1 = Segment { a: a.clone(), b: b.clone() };
        ring_edges(r2).any(|(c, d)| {
            let s2 = Segment { a: c.clone(), b: d.clone() };
            segment_intersection(&s1, &s2) != IntersectionResult::Empty
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn pts(coords: &[(i64, i64)]) -> Vec<Point<Rational>> {
        coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
    }

    fn l_shape() -> PolygonWithHoles<Rational> {
        PolygonWithHoles::simple(pts(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])).unwrap()
    }

    fn seg(a: (i64, i64), b: (i64, i64)) -> Segment<Rational> {
        Segment::new(Point::from_ints(a.0, a.1), Point::from_ints(b.0, b.1)).unwrap()
    }

    #[test]
    fn locations() {
        let sq = PolygonWithHoles::simple(pts(&[(0, 0), (4, 0), (4, 4), (0, 4)])).unwrap();
        assert_eq!(sq.point_location(&Point::from_ints(2, 2)), Location::Interior);
        assert_eq!(sq.point_location(&Point::from_ints(4, 2)), Location::Boundary);
        let half = Rational::new(3.into(), 2.into());
        let q = Point::new(half.clone(), half);
        assert_eq!(l_shape().point_location(&q), Location::Exterior);
    }

    #[test]
    fn hole_interior_is_exterior() {
        let p = PolygonWithHoles::new(
            pts(&[(0, 0), (4, 0), (4, 4), (0, 4)]),
            vec![pts(&[(1, 1), (1, 3), (3, 3), (3, 1)])],
        )
        .unwrap();
        assert_eq!(p.point_location(&Point::from_ints(2, 2)), Location::Exterior);
        assert_eq!(p.point_location(&Point::from_ints(1, 2)), Location::Boundary);
        assert_eq!(p.area(), Rational::from_integer(12.into()));
        assert!(p.is_reflex(5));
        assert!(!p.is_reflex(0));
    }

    #[test]
    fn areas() {
        assert_eq!(ring_area(&pts(&[(0, 0), (1, 0), (1, 1), (0, 1)])), Rational::from_integer(1.into()));
        let mut l = pts(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]);
        assert_eq!(ring_area(&l), Rational::from_integer(3.into()));
        l.reverse();
        assert_eq!(ring_area(&l), Rational::from_integer((-3).into()));
    }

    #[test]
    fn segment_containment() {
        let l = l_shape();
        assert!(segment_in_polygon(&seg((0, 0), (1, 2)), &l));
        assert!(!segment_in_polygon(&seg((2, 1), (1, 2)), &l));
        for (a, b) in l.edges() {
            assert!(segment_in_polygon(&Segment::new(a.clone(), b.clone()).unwrap(), &l));
        }
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            PolygonWithHoles::simple(pts(&[(0, 0), (0, 1), (1, 0)])),
            Err(Error::WrongOrientation { ring: 0 })
        );
        assert_eq!(
            PolygonWithHoles::simple(pts(&[(0, 0), (1, 0), (2, 0), (1, 1)])),
            Err(Error::CollinearVertices { ring: 0, vertex: 1 })
        );
        assert_eq!(
            PolygonWithHoles::simple(pts(&[(0, 0), (2, 0), (0, 2), (2, 2)])),
            Err(Error::SelfIntersection { ring: 0 })
        );
        assert_eq!(
            PolygonWithHoles::new(pts(&[(0, 0), (4, 0), (4, 4), (0, 4)]), vec![pts(&[(1, 1), (1, 5), (3, 1)])]),
            Err(Error::HoleOutside { hole: 0 })
        );
        assert!(matches!(
            PolygonWithHoles::new(pts(&[(0, 0), (4, 0), (4, 4), (0, 4)]), vec![pts(&[(1, 1), (3, 1), (3, 3)])]),
            Err(Error::WrongOrientation { ring: 1 })
        ));
    }
}
