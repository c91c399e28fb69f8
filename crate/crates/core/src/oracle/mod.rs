//! Brute-force reference implementations for cross-checking the fast paths.
//! Every search carries an explicit cap and fails loudly past it.

mod random;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::Arrangement;
use crate::cover::piece_inside;
use crate::error::{Error, Result};
use crate::exact_geom::{angle_cmp, convex_hull, orientation, ConvexPolygon, Location, Point, PolygonWithHoles, Turn};
use crate::peel_dag::{path_polygon, vertex_pipelines, CellPartition, PeelDag};
use crate::scalar::Scalar;

pub use random::{random_holed_polygon, random_simple_polygon};

pub const DEFAULT_NODE_CAP: usize = 200;
pub const DEFAULT_PATH_CAP: usize = 100_000;

/// All source-to-sink paths of `dag`, by depth-first search.
pub fn enumerate_maximal_paths<T: Scalar>(dag: &PeelDag<T>, node_cap: usize) -> Result<Vec<Vec<usize>>> {
    enumerate_maximal_paths_capped(dag, node_cap, DEFAULT_PATH_CAP)
}

pub fn enumerate_maximal_paths_capped<T: Scalar>(
    dag: &PeelDag<T>,
    node_cap: usize,
    path_cap: usize,
) -> Result<Vec<Vec<usize>>> {
    if dag.nodes.len() > node_cap {
        return Err(Error::CapExceeded { what: "DAG nodes", cap: node_cap });
    }
    let mut out = Vec::new();
    for s in dag.sources() {
        let mut path = vec![s];
        // Stack of next-successor positions, parallel to `path`.
        let mut cursor = vec![0usize];
        while let Some(&last) = path.last() {
            let depth = path.len() - 1;
            if dag.is_sink(last) && cursor[depth] == 0 {
                out.push(path.clone());
                if out.len() > path_cap {
                    return Err(Error::CapExceeded { what: "maximal paths", cap: path_cap });
                }
            }
            match dag.succ[last].get(cursor[depth]) {
                Some(&next) => {
                    cursor[depth] += 1;
                    path.push(next);
                    cursor.push(0);
                }
                None => {
                    path.pop();
                    cursor.pop();
                }
            }
        }
    }
    Ok(out)
}

/// Number of source-to-sink paths, by memoised recursion. Used to check the
/// enumeration independently.
pub fn count_maximal_paths<T: Scalar>(dag: &PeelDag<T>) -> u128 {
    fn from<T: Scalar>(dag: &PeelDag<T>, i: usize, memo: &mut Vec<Option<u128>>) -> u128 {
        if let Some(c) = memo[i] {
            return c;
        }
        let c = if dag.is_sink(i) { 1 } else { dag.succ[i].iter().map(|&j| from(dag, j, memo)).sum() };
        memo[i] = Some(c);
        c
    }
    let mut memo = vec![None; dag.nodes.len()];
    dag.sources().map(|s| from(dag, s, &mut memo)).sum()
}

/// Weight of the heaviest path, by exhaustive enumeration.
pub fn exhaustive_heaviest<T: Scalar>(dag: &PeelDag<T>, node_cap: usize) -> Result<T> {
    let paths = enumerate_maximal_paths(dag, node_cap)?;
    Ok(paths.iter().map(|p| dag.path_weight(p)).max().unwrap_or_else(T::zero))
}

/// Fixed-size bitset over arrangement faces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceSet(Vec<u64>);

impl FaceSet {
    pub fn new(faces: usize) -> Self {
        FaceSet(vec![0; faces.div_ceil(64)])
    }

    pub fn insert(&mut self, f: usize) {
        self.0[f / 64] |= 1 << (f % 64);
    }

    pub fn contains(&self, f: usize) -> bool {
        self.0[f / 64] >> (f % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &FaceSet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &FaceSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    /// Members of `self` not in `covered`.
    pub fn count_new(&self, covered: &FaceSet) -> usize {
        self.0.iter().zip(&covered.0).map(|(a, b)| (a & !b).count_ones() as usize).sum()
    }
}

/// Every polygon bounded by a maximal path of some vertex DAG, deduplicated.
#[derive(Clone, Debug)]
pub struct CandidateFamily<T> {
    pub polygons: Vec<ConvexPolygon<T>>,
    pub coverage: Vec<FaceSet>,
    pub faces: usize,
}

impl<T: Scalar> CandidateFamily<T> {
    pub fn build(poly: &PolygonWithHoles<T>, arr: &Arrangement<T>, node_cap: usize) -> Result<Self> {
        let mut found: BTreeMap<ConvexPolygon<T>, FaceSet> = BTreeMap::new();
        for pipe in vertex_pipelines(poly, arr)? {
            for region in &pipe.regions {
                for path in enumerate_maximal_paths(&region.dag, node_cap)? {
                    let Ok(q) = path_polygon(&region.dag, &path) else { continue };
                    if found.contains_key(&q) {
                        continue;
                    }
                    let mut set = FaceSet::new(arr.faces.len());
                    for f in arr.faces_in(&q) {
                        set.insert(f);
                    }
                    found.insert(q, set);
                }
            }
        }
        let (polygons, coverage) = found.into_iter().unzip();
        Ok(CandidateFamily { polygons, coverage, faces: arr.faces.len() })
    }

    pub fn len(&self) -> usize {
        self.polygons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polygons.is_empty()
    }
}

/// Whether `q` is convex, inside `poly` and exactly a union of faces.
pub fn is_restricted<T: Scalar>(poly: &PolygonWithHoles<T>, arr: &Arrangement<T>, q: &ConvexPolygon<T>) -> bool {
    let faces_area = arr.faces_in(q).iter().fold(T::zero(), |acc, &f| acc + arr.faces[f].area.clone());
    piece_inside(poly, q) && faces_area == q.area()
}

pub const DEFAULT_SEARCH_CAP: usize = 2_000_000;

/// Fewest family members covering every face, by iterative deepening over
/// the non-dominated members.
pub fn exact_min_restricted_cover<T: Scalar>(family: &CandidateFamily<T>, size_cap: usize) -> Result<usize> {
    exact_min_cover_sets(&family.coverage, family.faces, size_cap, DEFAULT_SEARCH_CAP)
}

/// Minimum set cover of `0..faces` by `sets`, visiting at most `search_cap`
/// search nodes.
pub fn exact_min_cover_sets(sets: &[FaceSet], faces: usize, size_cap: usize, search_cap: usize) -> Result<usize> {
    let mut sets: Vec<FaceSet> = sets.to_vec();
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    sets.dedup();
    let mut kept: Vec<FaceSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    let mut by_face: Vec<Vec<usize>> = vec![Vec::new(); faces];
    for (i, set) in kept.iter().enumerate() {
        for (f, list) in by_face.iter_mut().enumerate() {
            if set.contains(f) {
                list.push(i);
            }
        }
    }
    if let Some(f) = by_face.iter().position(Vec::is_empty) {
        return Err(Error::Internal(format!("face {f} is in no candidate")));
    }
    let mut search = CoverSearch { faces, sets: &kept, by_face: &by_face, visited: 0, cap: search_cap };
    let empty = FaceSet::new(faces);
    for k in 0..=size_cap {
        if search.run(&empty, k)? {
            return Ok(k);
        }
    }
    Err(Error::CapExceeded { what: "cover size", cap: size_cap })
}

struct CoverSearch<'a> {
    faces: usize,
    sets: &'a [FaceSet],
    by_face: &'a [Vec<usize>],
    visited: usize,
    cap: usize,
}

impl CoverSearch<'_> {
    fn run(&mut self, covered: &FaceSet, budget: usize) -> Result<bool> {
        self.visited += 1;
        if self.visited > self.cap {
            return Err(Error::CapExceeded { what: "cover search nodes", cap: self.cap });
        }
        let missing = self.faces - covered.len();
        if missing == 0 {
            return Ok(true);
        }
        if budget == 0 || self.lower_bound(covered, missing, budget) > budget {
            return Ok(false);
        }
        // Branch on the uncovered face with the fewest candidates.
        let f = (0..self.faces)
            .filter(|&f| !covered.contains(f))
            .min_by_key(|&f| self.by_face[f].len())
            .expect("some face is missing");
        for &c in &self.by_face[f] {
            let mut next = covered.clone();
            next.union_with(&self.sets[c]);
            if self.run(&next, budget - 1)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Larger of two bounds on the sets still needed: uncovered faces no two
    /// of which share a set, and the fewest largest gains reaching `missing`.
    fn lower_bound(&self, covered: &FaceSet, missing: usize, budget: usize) -> usize {
        let mut order: Vec<usize> = (0..self.faces).filter(|&f| !covered.contains(f)).collect();
        order.sort_by_key(|&f| self.by_face[f].len());
        let mut blocked = vec![false; self.sets.len()];
        let mut witnesses = 0;
        for f in order {
            if self.by_face[f].iter().any(|&c| blocked[c]) {
                continue;
            }
            witnesses += 1;
            if witnesses > budget {
                return witnesses;
            }
            for &c in &self.by_face[f] {
                blocked[c] = true;
            }
        }
        let mut gains: Vec<usize> = self.sets.iter().map(|s| s.count_new(covered)).collect();
        gains.sort_unstable_by(|a, b| b.cmp(a));
        let (mut sum, mut needed) = (0, 0);
        for g in gains {
            if sum >= missing {
                break;
            }
            sum += g;
            needed += 1;
        }
        witnesses.max(needed)
    }
}

/// Sum of the weights of cells whose representative lies in the closed
/// triangle `anchor, a, b`.
pub fn naive_sst_weight<T: Scalar>(anchor: &Point<T>, a: &Point<T>, b: &Point<T>, partition: &CellPartition<T>) -> T {
    let Ok(tri) = ConvexPolygon::new(vec![anchor.clone(), a.clone(), b.clone()]) else { return T::zero() };
    partition
        .cells
        .iter()
        .filter(|c| tri.contains(&c.rep))
        .fold(T::zero(), |acc, c| acc + c.weight.clone())
}

/// [`naive_sst_weight`] for many triangles of one region at once. Cells are
/// sorted by angle around `anchor` from `reference` (the region's first
/// boundary direction), so each triangle only tests the cells in its wedge against its far side.
pub fn naive_sst_weights<T: Scalar>(
    anchor: &Point<T>,
    reference: &Point<T>,
    segments: &[(Point<T>, Point<T>)],
    partition: &CellPartition<T>,
) -> Vec<T> {
    let dirs: Vec<Point<T>> = partition.cells.iter().map(|c| c.rep.sub(anchor)).collect();
    let mut by_angle: Vec<usize> = (0..dirs.len()).collect();
    by_angle.sort_by(|&i, &j| angle_cmp(reference, &dirs[i], &dirs[j]));
    segments
        .iter()
        .map(|(a, b)| {
            if orientation(anchor, a, b) != Turn::Left {
                return T::zero();
            }
            let (da, db) = (a.sub(anchor), b.sub(anchor));
            let lo = by_angle.partition_point(|&i| angle_cmp(reference, &dirs[i], &da) == Ordering::Less);
            let hi = by_angle.partition_point(|&i| angle_cmp(reference, &dirs[i], &db) != Ordering::Greater);
            by_angle[lo..hi.max(lo)]
                .iter()
                .map(|&i| &partition.cells[i])
                .filter(|c| orientation(a, b, &c.rep) != Turn::Right)
                .fold(T::zero(), |acc, c| acc + c.weight.clone())
        })
        .collect()
}

/// Seeded random convex polygons inside `poly`: hulls of nearby interior
/// points, kept only if the hull fits.
pub fn sample_inscribed_convex<T: Scalar>(poly: &PolygonWithHoles<T>, seed: u64, count: usize) -> Vec<ConvexPolygon<T>> {
    const RES: i64 = 1 << 12;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let outer = poly.outer();
    let (mut lo, mut hi) = (outer[0].clone(), outer[0].clone());
    for p in outer {
        lo = Point::new(lo.x.min(p.x.clone()), lo.y.min(p.y.clone()));
        hi = Point::new(hi.x.max(p.x.clone()), hi.y.max(p.y.clone()));
    }
    let span = hi.sub(&lo);
    let res = T::from_int(RES);
    let at = |u: i64, v: i64| {
        Point::new(
            lo.x.clone() + span.x.clone() * T::from_int(u) / res.clone(),
            lo.y.clone() + span.y.clone() * T::from_int(v) / res.clone(),
        )
    };
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < count * 200 {
        attempts += 1;
        let (cu, cv) = (rng.gen_range(0..=RES), rng.gen_range(0..=RES));
        if poly.point_location(&at(cu, cv)) != Location::Interior {
            continue;
        }
        let radius = RES >> rng.gen_range(0..6);
        let k = rng.gen_range(3..=7);
        let mut points = vec![at(cu, cv)];
        for _ in 0..k * 4 {
            if points.len() > k {
                break;
            }
            let u = (cu + rng.gen_range(-radius..=radius)).clamp(0, RES);
            let v = (cv + rng.gen_range(-radius..=radius)).clamp(0, RES);
            let p = at(u, v);
            if poly.point_location(&p) == Location::Interior {
                points.push(p);
            }
        }
        let hull = convex_hull(&points);
        if hull.len() < 3 || orientation(&hull[0], &hull[1], &hull[2]) != Turn::Left {
            continue;
        }
        if let Ok(q) = ConvexPolygon::new(hull) {
            if piece_inside(poly, &q) {
                out.push(q);
            }
        }
    }
    out
}
