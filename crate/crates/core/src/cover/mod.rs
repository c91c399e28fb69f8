//! Greedy convex cover over arrangement faces, with a triangulation fallback
//! and an exact verifier.

mod triangulate;
mod verify;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exact_geom::{ConvexPolygon, PolygonWithHoles};
use crate::peel_dag::{best_restricted, vertex_pipelines};
use crate::scalar::Scalar;

pub use triangulate::triangulate;
pub use verify::{piece_inside, verify_cover, VerificationReport, Violation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSolution<T> {
    pub pieces: Vec<ConvexPolygon<T>>,
    pub iterations: usize,
    pub fallback_used: bool,
    pub per_iteration_gain: Vec<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CoverOptions {
    /// Rounds allowed before falling back to a triangulation; defaults to the
    /// vertex count.
    pub max_iters: Option<usize>,
}

pub fn greedy_cover<T: Scalar>(poly: &PolygonWithHoles<T>) -> Result<CoverSolution<T>> {
    greedy_cover_with(poly, CoverOptions::default())
}

pub fn greedy_cover_with<T: Scalar>(poly: &PolygonWithHoles<T>, options: CoverOptions) -> Result<CoverSolution<T>> {
    let mut arr = Arrangement::new(poly);
    greedy_cover_in(poly, &mut arr, options)
}

/// Runs the greedy loop on a fresh arrangement of `poly`, leaving it fully
/// covered.
pub fn greedy_cover_in<T: Scalar>(
    poly: &PolygonWithHoles<T>,
    arr: &mut Arrangement<T>,
    options: CoverOptions,
) -> Result<CoverSolution<T>> {
    let cap = options.max_iters.unwrap_or(poly.vertex_count());
    arr.reset_cover();
    let mut pipelines = vertex_pipelines(poly, arr)?;
    let mut pieces = Vec::new();
    let mut gains = Vec::new();
    while !arr.all_covered() {
        if gains.len() >= cap {
            return Ok(fallback(poly, arr, gains.len()));
        }
        let Some(sel) = best_restricted(&mut pipelines, arr)? else {
            return Err(Error::Internal("no restricted polygon covers an uncovered face".into()));
        };
        let gain: usize = sel.pieces.iter().map(|q| arr.mark_covered(q)).sum();
        if gain == 0 {
            return Err(Error::Internal("selected polygon covers no new face".into()));
        }
        pieces.extend(sel.pieces);
        gains.push(gain);
    }
    Ok(CoverSolution { pieces, iterations: gains.len(), fallback_used: false, per_iteration_gain: gains })
}

fn fallback<T: Scalar>(poly: &PolygonWithHoles<T>, arr: &mut Arrangement<T>, iterations: usize) -> CoverSolution<T> {
    let pieces = triangulate(poly);
    for t in &pieces {
        arr.mark_covered(t);
    }
    CoverSolution { pieces, iterations, fallback_used: true, per_iteration_gain: Vec::new() }
}
