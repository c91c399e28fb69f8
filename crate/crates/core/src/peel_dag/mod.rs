//! Per-vertex DAGs whose maximal paths bound the convex polygons a vertex
//! can anchor, with cell weights for the restricted peeling problem.

mod cells;
mod dag;
mod region;

use rayon::prelude::*;

use crate::arrangement::Arrangement;
use crate::error::Result;
use crate::exact_geom::{ConvexPolygon, Point, PolygonWithHoles, Segment, VertexId};
use crate::scalar::Scalar;

pub use cells::{cell_partition, Cell, CellPartition};
pub use dag::{build_dag, heaviest_maximal_path, path_polygon, subsegments, DagNode, PeelDag};
pub use region::{
    anchor_regions, clip_and_orient, reflex_split, visibility_extensions, visibility_rays, BoundaryPos,
    ClippedSegment,
};

/// Everything derived from one anchor region: clipped segments, rays, cells
/// and the DAG. Only the weights change as faces get covered.
#[derive(Clone, Debug)]
pub struct AnchorRegion<T> {
    pub ring: Vec<Point<T>>,
    pub clipped: Vec<ClippedSegment<T>>,
    pub rays: Vec<(Point<T>, Segment<T>)>,
    pub cells: CellPartition<T>,
    pub dag: PeelDag<T>,
}

impl<T: Scalar> AnchorRegion<T> {
    /// `ring` starts at the anchor.
    pub fn new(ring: Vec<Point<T>>, arr: &Arrangement<T>) -> Result<Self> {
        let clipped = clip_and_orient(&ring, arr)?;
        let rays = visibility_rays(&ring, arr);
        let cells = cell_partition(&ring, &clipped, &rays, arr)?;
        let dag = build_dag(ring[0].clone(), subsegments(&clipped))?;
        let mut region = AnchorRegion { ring, clipped, rays, cells, dag };
        region.apply_sst_weights();
        Ok(region)
    }

    pub fn anchor(&self) -> &Point<T> {
        &self.ring[0]
    }

    /// Recomputes cell and node weights against the current coverage.
    pub fn reweight(&mut self, arr: &Arrangement<T>) {
        self.cells.update_weights(arr);
        self.apply_sst_weights();
    }

    fn apply_sst_weights(&mut self) {
        let weights = self.cells.sst_weights(&self.clipped);
        self.dag.set_weights(weights.into_iter().flatten());
    }

    /// Heaviest polygon of this region, if any path has positive weight.
    pub fn best(&self) -> Result<Option<(ConvexPolygon<T>, T)>> {
        let (path, weight) = heaviest_maximal_path(&self.dag);
        if !weight.is_positive() {
            return Ok(None);
        }
        Ok(Some((path_polygon(&self.dag, &path)?, weight)))
    }
}

/// The one or two anchor regions of a polygon vertex.
#[derive(Clone, Debug)]
pub struct VertexPipeline<T> {
    pub vertex: VertexId,
    pub regions: Vec<AnchorRegion<T>>,
}

impl<T: Scalar> VertexPipeline<T> {
    pub fn new(poly: &PolygonWithHoles<T>, v: VertexId, arr: &Arrangement<T>) -> Result<Self> {
        let regions = anchor_regions(poly, v)?
            .into_iter()
            .map(|ring| AnchorRegion::new(ring, arr))
            .collect::<Result<_>>()?;
        Ok(VertexPipeline { vertex: v, regions })
    }

    /// Best selection for this vertex: one polygon, or one per half for a
    /// reflex vertex. Halves never share a face, so values add up.
    pub fn best(&self) -> Result<Option<Selection<T>>> {
        let mut pieces = Vec::new();
        let mut value = T::zero();
        for r in &self.regions {
            if let Some((q, w)) = r.best()? {
                pieces.push(q);
                value = value + w;
            }
        }
        if pieces.is_empty() {
            return Ok(None);
        }
        Ok(Some(Selection { vertex: self.vertex, pieces, value }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selection<T> {
    pub vertex: VertexId,
    pub pieces: Vec<ConvexPolygon<T>>,
    pub value: T,
}

/// Builds the pipelines of all vertices.
pub fn vertex_pipelines<T: Scalar>(
    poly: &PolygonWithHoles<T>,
    arr: &Arrangement<T>,
) -> Result<Vec<VertexPipeline<T>>> {
    (0..poly.vertex_count()).into_par_iter().map(|v| VertexPipeline::new(poly, v, arr)).collect()
}

/// Reweights every pipeline and returns the most valuable selection. Ties go
/// to fewer pieces, then to the lower vertex.
pub fn best_restricted<T: Scalar>(
    pipelines: &mut [VertexPipeline<T>],
    arr: &Arrangement<T>,
) -> Result<Option<Selection<T>>> {
    let found: Vec<Option<Selection<T>>> = pipelines
        .par_iter_mut()
        .map(|p| {
            for r in &mut p.regions {
                r.reweight(arr);
            }
            p.best()
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().reduce(|a, b| {
        let better = b.value > a.value || (b.value == a.value && b.pieces.len() < a.pieces.len());
        if better {
            b
        } else {
            a
        }
    }))
}
