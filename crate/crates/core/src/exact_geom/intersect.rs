use super::point::{Point, Segment};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntersectionResult<T> {
    Empty,
    AtPoint(Point<T>),
    /// Collinear overlap of positive length, endpoints in lexicographic order.
    Overlap(Segment<T>),
}

pub fn segment_intersection<T: Scalar>(s1: &Segment<T>, s2: &Segment<T>) -> IntersectionResult<T> {
    let r = s1.direction();
    let s = s2.direction();
    let w = s2.a.sub(&s1.a);
    let den = r.cross(&s);
    if !den.is_zero() {
        let t = w.cross(&s) / den.clone();
        let u = w.cross(&r) / den;
        let unit = T::zero()..=T::one();
        if unit.contains(&t) && unit.contains(&u) {
            return IntersectionResult::AtPoint(s1.at(&t));
        }
        return IntersectionResult::Empty;
    }
    if !w.cross(&r).is_zero() {
        return IntersectionResult::Empty;
    }
    // Collinear: project s2 onto s1's parameter line.
    let t0 = s1.param_of(&s2.a);
    let t1 = s1.param_of(&s2.b);
    let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
    let lo = lo.max(T::zero());
    let hi = hi.min(T::one());
    match lo.cmp(&hi) {
        std::cmp::Ordering::Greater => IntersectionResult::Empty,
        std::cmp::Ordering::Equal => IntersectionResult::AtPoint(s1.at(&lo)),
        std::cmp::Ordering::Less => {
            let seg = Segment { a: s1.at(&lo), b: s1.at(&hi) };
            IntersectionResult::Overlap(seg.canonical())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use proptest::prelude::*;

    fn seg(ax: i64, ay: i64, bx: i64, by: i64) -> Segment<Rational> {
        Segment::new(Point::from_ints(ax, ay), Point::from_ints(bx, by)).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            segment_intersection(&seg(0, 0, 2, 2), &seg(0, 2, 2, 0)),
            IntersectionResult::AtPoint(Point::from_ints(1, 1))
        );
        assert_eq!(segment_intersection(&seg(0, 0, 1, 0), &seg(0, 1, 1, 1)), IntersectionResult::Empty);
        assert_eq!(
            segment_intersection(&seg(0, 0, 2, 0), &seg(1, 0, 3, 0)),
            IntersectionResult::Overlap(seg(1, 0, 2, 0))
        );
    }

    #[test]
    fn touching_collinear_is_a_point() {
        assert_eq!(
            segment_intersection(&seg(0, 0, 1, 0), &seg(1, 0, 3, 0)),
            IntersectionResult::AtPoint(Point::from_ints(1, 0))
        );
    }

    proptest! {
        #[test]
        fn symmetric(a in -4i64..5, b in -4i64..5, c in -4i64..5, d in -4i64..5,
                     e in -4i64..5, f in -4i64..5, g in -4i64..5, h in -4i64..5) {
            prop_assume!((a, b) != (c, d) && (e, f) != (g, h));
            let s1 = seg(a, b, c, d);
            let s2 = seg(e, f, g, h);
            prop_assert_eq!(segment_intersection(&s1, &s2), segment_intersection(&s2, &s1));
        }
    }
}
