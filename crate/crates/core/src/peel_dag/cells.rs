use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exact_geom::{angle_cmp, line_param, vertex_average, Point, Segment};
use crate::scalar::Scalar;

use super::region::ClippedSegment;

/// A piece of the anchor region between two consecutive rays and two
/// consecutive chords. Each cell lies in exactly one arrangement face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell<T> {
    pub ring: Vec<Point<T>>,
    pub rep: Point<T>,
    pub face: usize,
    pub weight: T,
}

#[derive(Clone, Debug)]
struct ChordLayout<T> {
    first_ray: usize,
    /// Rank of the chord within each cone it spans, nearest to the anchor first.
    ranks: Vec<usize>,
    /// Where the chord meets each ray from `first_ray` on.
    crossings: Vec<Point<T>>,
}

/// Partition of an anchor region by its rays and clipped segments.
#[derive(Clone, Debug)]
pub struct CellPartition<T> {
    pub cells: Vec<Cell<T>>,
    /// Cell ids per cone, ordered away from the anchor.
    cones: Vec<Vec<usize>>,
    /// Layout per clipped segment; `None` for radial ones.
    layouts: Vec<Option<ChordLayout<T>>>,
    /// Number of cells in each arrangement face.
    face_cells: Vec<usize>,
}

fn ray_index<T: Scalar>(rays: &[(Point<T>, Segment<T>)], start: &Point<T>, d: &Point<T>) -> Result<usize> {
    rays.binary_search_by(|(r, _)| angle_cmp(start, r, d))
        .map_err(|_| Error::Internal(format!("direction {d} is not a ray")))
}

/// Splits the region `ring` (anchor first) into cells.
pub fn cell_partition<T: Scalar>(
    ring: &[Point<T>],
    clipped: &[ClippedSegment<T>],
    rays: &[(Point<T>, Segment<T>)],
    arr: &Arrangement<T>,
) -> Result<CellPartition<T>> {
    let anchor = &ring[0];
    let start = ring[1].sub(anchor);
    let cone_count = rays.len().saturating_sub(1);
    let mut in_cone: Vec<Vec<(usize, T, T)>> = vec![Vec::new(); cone_count];
    let mut layouts: Vec<Option<ChordLayout<T>>> = Vec::with_capacity(clipped.len());
    for (ci, c) in clipped.iter().enumerate() {
        if c.radial {
            layouts.push(None);
            continue;
        }
        let ia = ray_index(rays, &start, &c.seg.a.sub(anchor))?;
        let ib = ray_index(rays, &start, &c.seg.b.sub(anchor))?;
        if ia >= ib {
            return Err(Error::Internal(format!("chord {} -> {} runs clockwise", c.seg.a, c.seg.b)));
        }
        let dir = c.seg.direction();
        let mut crossings = vec![c.seg.a.clone()];
        for (d, _) in &rays[ia + 1..ib] {
            let t = line_param(anchor, d, &c.seg.a, &dir).expect("chord is not radial");
            crossings.push(anchor.add(&d.scale(&t)));
        }
        crossings.push(c.seg.b.clone());
        for k in ia..ib {
            let (p, q) = (&crossings[k - ia], &crossings[k - ia + 1]);
            in_cone[k].push((ci, anchor.dist2(p), anchor.dist2(q)));
        }
        layouts.push(Some(ChordLayout { first_ray: ia, ranks: vec![0; ib - ia], crossings }));
    }

    let mut cells = Vec::new();
    let mut cones = Vec::with_capacity(cone_count);
    for (k, chords) in in_cone.iter_mut().enumerate() {
        chords.sort_by(|x, y| (&x.1, &x.2).cmp(&(&y.1, &y.2)));
        let mut near = (anchor.clone(), anchor.clone());
        let mut ids = Vec::with_capacity(chords.len());
        for (rank, (ci, _, _)) in chords.iter().enumerate() {
            let layout = layouts[*ci].as_mut().expect("chord layout");
            let off = k - layout.first_ray;
            layout.ranks[off] = rank;
            let far = (layout.crossings[off].clone(), layout.crossings[off + 1].clone());
            let mut ring = vec![near.0.clone(), far.0.clone(), far.1.clone(), near.1.clone()];
            ring.dedup();
            if ring.first() == ring.last() {
                ring.pop();
            }
            if ring.len() < 3 {
                return Err(Error::Internal("empty cell between chords".into()));
            }
            let host = clipped[*ci].host;
            let mid = far.0.midpoint(&far.1);
            let t = arr.extensions[host].seg.param_of(&mid);
            let face = arr
                .piece_at(host, &t)
                .and_then(|piece| arr.face_beside(host, piece, anchor))
                .ok_or_else(|| Error::Internal(format!("no face beside chord at {mid}")))?;
            ids.push(cells.len());
            cells.push(Cell { rep: vertex_average(&ring), ring, face, weight: T::zero() });
            near = far;
        }
        cones.push(ids);
    }

    let mut face_cells = vec![0; arr.faces.len()];
    for c in &cells {
        face_cells[c.face] += 1;
    }
    let mut partition = CellPartition { cells, cones, layouts, face_cells };
    partition.update_weights(arr);
    Ok(partition)
}

impl<T: Scalar> CellPartition<T> {
    /// Sets every cell to `1 / |cells of its face|` if the face is uncovered,
    /// else zero.
    pub fn update_weights(&mut self, arr: &Arrangement<T>) {
        for c in &mut self.cells {
            c.weight = if arr.faces[c.face].covered {
                T::zero()
            } else {
                T::one() / T::from_count(self.face_cells[c.face])
            };
        }
    }

    pub fn cone_count(&self) -> usize {
        self.cones.len()
    }

    /// Cells of cone `k`, nearest to the anchor first.
    pub fn cone(&self, k: usize) -> impl Iterator<Item = &Cell<T>> {
        self.cones[k].iter().map(move |&i| &self.cells[i])
    }

    /// Weight of the triangle spanned by the anchor and each node of each
    /// clipped segment, in node order. Radial segments weigh zero.
    pub fn sst_weights(&self, clipped: &[ClippedSegment<T>]) -> Vec<Vec<T>> {
        let prefix: Vec<Vec<T>> = self
            .cones
            .iter()
            .map(|ids| {
                let mut acc = T::zero();
                ids.iter()
                    .map(|&i| {
                        acc = acc.clone() + self.cells[i].weight.clone();
                        acc.clone()
                    })
                    .collect()
            })
            .collect();
        clipped
            .iter()
            .zip(&self.layouts)
            .map(|(c, layout)| {
                let nodes = c.points.len() - 1;
                let Some(layout) = layout else { return vec![T::zero(); nodes] };
                let mut out = Vec::with_capacity(nodes);
                let mut next = 1;
                let mut acc = T::zero();
                for (off, rank) in layout.ranks.iter().enumerate() {
                    acc = acc + prefix[layout.first_ray + off][*rank].clone();
                    if layout.crossings[off + 1] == c.points[next] {
                        out.push(std::mem::replace(&mut acc, T::zero()));
                        next += 1;
                    }
                }
                debug_assert_eq!(out.len(), nodes);
                out
            })
            .collect()
    }
}

