use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use crate::error::{Error, Result};
use crate::exact_geom::{orientation, ConvexPolygon, Point, Turn};
use crate::scalar::Scalar;

use super::region::ClippedSegment;

/// A directed piece of a clipped segment between consecutive arrangement
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DagNode<T> {
    /// Index of the clipped segment it came from.
    pub clipped: usize,
    pub from: Point<T>,
    pub to: Point<T>,
    pub weight: T,
}

#[derive(Clone, Debug)]
pub struct PeelDag<T> {
    pub anchor: Point<T>,
    pub nodes: Vec<DagNode<T>>,
    pub succ: Vec<Vec<usize>>,
    pub pred: Vec<Vec<usize>>,
    /// Topological order, smallest index first among ready nodes.
    pub order: Vec<usize>,
}

/// Nodes of all clipped segments, in segment order then along each segment.
pub fn subsegments<T: Scalar>(clipped: &[ClippedSegment<T>]) -> Vec<DagNode<T>> {
    clipped
        .iter()
        .enumerate()
        .flat_map(|(i, c)| {
            c.points.windows(2).map(move |w| DagNode {
                clipped: i,
                from: w[0].clone(),
                to: w[1].clone(),
                weight: T::zero(),
            })
        })
        .collect()
}

/// `s -> t` when `t` starts where `s` ends and turns left or runs straight on.
pub fn build_dag<T: Scalar>(anchor: Point<T>, nodes: Vec<DagNode<T>>) -> Result<PeelDag<T>> {
    let mut starting: BTreeMap<&Point<T>, Vec<usize>> = BTreeMap::new();
    for (i, n) in nodes.iter().enumerate() {
        starting.entry(&n.from).or_default().push(i);
    }
    let mut succ = vec![Vec::new(); nodes.len()];
    let mut pred = vec![Vec::new(); nodes.len()];
    for (i, s) in nodes.iter().enumerate() {
        let Some(cands) = starting.get(&s.to) else { continue };
        for &j in cands {
            let t = &nodes[j];
            let ok = match orientation(&s.from, &s.to, &t.to) {
                Turn::Left => true,
                Turn::Collinear => t.to.sub(&t.from).dot(&s.to.sub(&s.from)).is_positive(),
                Turn::Right => false,
            };
            if ok {
                succ[i].push(j);
                pred[j].push(i);
            }
        }
    }
    drop(starting);

    let mut indegree: Vec<usize> = pred.iter().map(Vec::len).collect();
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..nodes.len()).filter(|&i| indegree[i] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(nodes.len());
    while let Some(Reverse(i)) = ready.pop() {
        order.push(i);
        for &j in &succ[i] {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                ready.push(Reverse(j));
            }
        }
    }
    if order.len() != nodes.len() {
        return Err(Error::CycleDetected);
    }
    Ok(PeelDag { anchor, nodes, succ, pred, order })
}

impl<T: Scalar> PeelDag<T> {
    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ.iter().enumerate().flat_map(|(i, s)| s.iter().map(move |&j| (i, j)))
    }

    pub fn sources(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(|&i| self.pred[i].is_empty())
    }

    pub fn is_sink(&self, i: usize) -> bool {
        self.succ[i].is_empty()
    }

    pub fn set_weights(&mut self, weights: impl IntoIterator<Item = T>) {
        for (n, w) in self.nodes.iter_mut().zip(weights) {
            n.weight = w;
        }
    }

    pub fn path_weight(&self, path: &[usize]) -> T {
        path.iter().fold(T::zero(), |acc, &i| acc + self.nodes[i].weight.clone())
    }
}

/// Maximum-weight source-to-sink path. Ties go to the lowest node indices.
pub fn heaviest_maximal_path<T: Scalar>(dag: &PeelDag<T>) -> (Vec<usize>, T) {
    let n = dag.nodes.len();
    if n == 0 {
        return (Vec::new(), T::zero());
    }
    let mut best: Vec<T> = vec![T::zero(); n];
    let mut back: Vec<Option<usize>> = vec![None; n];
    for &i in &dag.order {
        let mut from: Option<usize> = None;
        for &p in &dag.pred[i] {
            let better = match from {
                None => true,
                Some(f) => best[p] > best[f] || (best[p] == best[f] && p < f),
            };
            if better {
                from = Some(p);
            }
        }
        let base = from.map_or(T::zero(), |f| best[f].clone());
        best[i] = base + dag.nodes[i].weight.clone();
        back[i] = from;
    }
    let mut end = 0;
    for i in 1..n {
        if best[i] > best[end] {
            end = i;
        }
    }
    let total = best[end].clone();
    let mut path = vec![end];
    while let Some(p) = back[*path.last().unwrap()] {
        path.push(p);
    }
    path.reverse();
    // Weights are non-negative, so running on to a sink adds nothing.
    let mut last = end;
    while let Some(&next) = dag.succ[last].iter().min() {
        path.push(next);
        last = next;
    }
    (path, total)
}

/// Convex polygon bounded by the anchor and the nodes of `path`.
pub fn path_polygon<T: Scalar>(dag: &PeelDag<T>, path: &[usize]) -> Result<ConvexPolygon<T>> {
    let mut ring = Vec::with_capacity(path.len() + 1);
    ring.push(dag.anchor.clone());
    for &i in path {
        let n = &dag.nodes[i];
        if *ring.last().unwrap() != n.from {
            ring.push(n.from.clone());
        }
        ring.push(n.to.clone());
    }
    if ring.len() > 1 && ring.last() == ring.first() {
        ring.pop();
    }
    ConvexPolygon::new(ring).map_err(|e| match e {
        Error::NotConvex => Error::NonConvexClosure,
        e => e,
    })
}
