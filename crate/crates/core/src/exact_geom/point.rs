use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A point (or a free vector) with exact coordinates. Ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(T::from_int(x), T::from_int(y))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Point::new(self.x.clone() - other.x.clone(), self.y.clone() - other.y.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Point::new(self.x.clone() + other.x.clone(), self.y.clone() + other.y.clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        Point::new(self.x.clone() * k.clone(), self.y.clone() * k.clone())
    }

    pub fn cross(&self, other: &Self) -> T {
        self.x.clone() * other.y.clone() - self.y.clone() * other.x.clone()
    }

    pub fn dot(&self, other: &Self) -> T {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    pub fn norm2(&self) -> T {
        self.dot(self)
    }

    pub fn dist2(&self, other: &Self) -> T {
        self.sub(other).norm2()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// `self + t * (to - self)`.
    pub fn lerp(&self, to: &Self, t: &T) -> Self {
        self.add(&to.sub(self).scale(t))
    }

    pub fn midpoint(&self, other: &Self) -> Self {
        self.lerp(other, &(T::one() / T::two()))
    }
}

impl<T: fmt::Display> fmt::Display for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A closed segment with distinct endpoints.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment<T> {
    pub a: Point<T>,
    pub b: Point<T>,
}

impl<T: Scalar> Segment<T> {
    pub fn new(a: Point<T>, b: Point<T>) -> Result<Self> {
        if a == b {
            return Err(Error::PreconditionViolation(format!("zero-length segment at {a}")));
        }
        Ok(Segment { a, b })
    }

    pub fn direction(&self) -> Point<T> {
        self.b.sub(&self.a)
    }

    /// The same segment with lexicographically ordered endpoints.
    pub fn canonical(&self) -> Self {
        if self.a <= self.b {
            self.clone()
        } else {
            Segment { a: self.b.clone(), b: self.a.clone() }
        }
    }

    /// Parameter of a point on the supporting line, `a` at 0 and `b` at 1.
    pub fn param_of(&self, p: &Point<T>) -> T {
        let d = self.direction();
        p.sub(&self.a).dot(&d) / d.norm2()
    }

    pub fn at(&self, t: &T) -> Point<T> {
        self.a.lerp(&self.b, t)
    }

    pub fn contains(&self, p: &Point<T>) -> bool {
        on_segment(&self.a, &self.b, p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Turn {
    Left,
    Right,
    Collinear,
}

/// Sign of `(q - p) x (r - p)`.
pub fn orientation<T: Scalar>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> Turn {
    let c = q.sub(p).cross(&r.sub(p));
    if c.is_positive() {
        Turn::Left
    } else if c.is_negative() {
        Turn::Right
    } else {
        Turn::Collinear
    }
}

/// Closed containment of `p` in segment `ab` (`a` may equal `b`).
pub fn on_segment<T: Scalar>(a: &Point<T>, b: &Point<T>, p: &Point<T>) -> bool {
    if orientation(a, b, p) != Turn::Collinear {
        return false;
    }
    let lo_x = a.x.clone().min(b.x.clone());
    let hi_x = a.x.clone().max(b.x.clone());
    let lo_y = a.y.clone().min(b.y.clone());
    let hi_y = a.y.clone().max(b.y.clone());
    lo_x <= p.x && p.x <= hi_x && lo_y <= p.y && p.y <= hi_y
}

/// Strictly between `a` and `b` on segment `ab`.
pub fn strictly_inside_segment<T: Scalar>(a: &Point<T>, b: &Point<T>, p: &Point<T>) -> bool {
    p != a && p != b && on_segment(a, b, p)
}

/// Same direction (positive multiples of each other); both non-zero.
pub fn same_direction<T: Scalar>(a: &Point<T>, b: &Point<T>) -> bool {
    a.cross(b).is_zero() && a.dot(b).is_positive()
}

/// Compares the CCW angles of `a` and `b` measured from `reference`, each in `[0, 2pi)`.
pub fn angle_cmp<T: Scalar>(reference: &Point<T>, a: &Point<T>, b: &Point<T>) -> Ordering {
    let half = |d: &Point<T>| -> u8 {
        let c = reference.cross(d);
        if c.is_positive() || (c.is_zero() && reference.dot(d).is_positive()) {
            0
        } else {
            1
        }
    };
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha.cmp(&hb);
    }
    let c = a.cross(b);
    if c.is_positive() {
        Ordering::Less
    } else if c.is_negative() {
        Ordering::Greater
    } else {
        // Collinear within one half-turn means same direction unless one is
        // exactly at angle 0 and the other at pi, which land in different halves.
        Ordering::Equal
    }
}

/// Intersection of the lines `p1 + s*d1` and `p2 + t*d2`; returns `s`, or
/// `None` for parallel lines.
pub fn line_param<T: Scalar>(p1: &Point<T>, d1: &Point<T>, p2: &Point<T>, d2: &Point<T>) -> Option<T> {
    let den = d1.cross(d2);
    if den.is_zero() {
        return None;
    }
    Some(p2.sub(p1).cross(d2) / den)
}
