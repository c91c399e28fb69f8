use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring {ring} has fewer than 3 vertices")]
    TooFewVertices { ring: usize },
    #[error("ring {ring} repeats vertex {vertex}")]
    RepeatedVertex { ring: usize, vertex: usize },
    #[error("ring {ring} has three collinear consecutive vertices at {vertex}")]
    CollinearVertices { ring: usize, vertex: usize },
    #[error("ring {ring} is not simple")]
    SelfIntersection { ring: usize },
    #[error("ring {ring} has the wrong orientation (outer must be CCW, holes CW)")]
    WrongOrientation { ring: usize },
    #[error("hole {hole} is not strictly inside the outer ring")]
    HoleOutside { hole: usize },
    #[error("holes {first} and {second} overlap or touch")]
    HolesOverlap { first: usize, second: usize },
    #[error("polygon is degenerate")]
    Degenerate,
    #[error("polygon is not convex")]
    NotConvex,
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("peel graph contains a cycle")]
    CycleDetected,
    #[error("path does not close into a convex polygon")]
    NonConvexClosure,
    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("invalid rotten set: {0}")]
    InvalidRotten(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
