use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact_geom::{orientation, segment_intersection, IntersectionResult, Point, PolygonWithHoles, Segment, Turn};
use crate::scalar::Scalar;

const GRID: i64 = 16;

/// Seeded simple polygon with `n` integer vertices in general position.
pub fn random_simple_polygon<T: Scalar>(seed: u64, n: usize) -> PolygonWithHoles<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let points = general_position(&mut rng, n, &[]);
        if let Some(ring) = untangle(points) {
            if let Ok(p) = PolygonWithHoles::simple(ring) {
                return p;
            }
        }
    }
}

/// Seeded polygon with `n` vertices in total: a simple outer ring and one
/// triangular hole strictly inside it.
pub fn random_holed_polygon<T: Scalar>(seed: u64, n: usize) -> PolygonWithHoles<T> {
    assert!(n >= 6, "need at least a triangle and a triangular hole");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let outer = random_simple_polygon::<T>(rng.gen(), n - 3);
        for _ in 0..50 {
            let mut hole = general_position(&mut rng, 3, outer.outer());
            let [a, b, c] = [&hole[0], &hole[1], &hole[2]];
            if orientation(a, b, c) == Turn::Left {
                hole.reverse();
            }
            if let Ok(p) = PolygonWithHoles::new(outer.outer().to_vec(), vec![hole]) {
                return p;
            }
        }
    }
}

/// `n` distinct grid points such that no three of them, or of them together
/// with `existing`, are collinear.
fn general_position<T: Scalar>(rng: &mut ChaCha8Rng, n: usize, existing: &[Point<T>]) -> Vec<Point<T>> {
    let mut all: Vec<Point<T>> = existing.to_vec();
    let mut fresh = Vec::with_capacity(n);
    while fresh.len() < n {
        let p = Point::from_ints(rng.gen_range(0..=GRID), rng.gen_range(0..=GRID));
        let collinear = all.contains(&p)
            || (0..all.len()).any(|i| {
                (i + 1..all.len()).any(|j| orientation(&all[i], &all[j], &p) == Turn::Collinear)
            });
        if !collinear {
            all.push(p.clone());
            fresh.push(p);
        }
    }
    fresh.shuffle(rng);
    fresh
}

/// 2-opt: reverses chains until no two edges cross. Total length drops at
/// every step, so this terminates. Returns a CCW ring.
fn untangle<T: Scalar>(mut ring: Vec<Point<T>>) -> Option<Vec<Point<T>>> {
    let n = ring.len();
    for _ in 0..10_000 {
        let mut crossed = None;
        'search: for i in 0..n {
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                let e1 = Segment { a: ring[i].clone(), b: ring[i + 1].clone() };
                let e2 = Segment { a: ring[j].clone(), b: ring[(j + 1) % n].clone() };
                if !matches!(segment_intersection(&e1, &e2), IntersectionResult::Empty) {
                    crossed = Some((i, j));
                    break 'search;
                }
            }
        }
        match crossed {
            Some((i, j)) => ring[i + 1..=j].reverse(),
            None => {
                if crate::exact_geom::twice_ring_area(&ring).is_negative() {
                    ring.reverse();
                }
                return Some(ring);
            }
        }
    }
    None
}
