use mcc_core::arrangement::Arrangement;
use mcc_core::cover::{greedy_cover, triangulate, verify_cover};
use mcc_core::exact_geom::{Point, PolygonWithHoles};
use mcc_core::oracle::{naive_sst_weight, random_holed_polygon, random_simple_polygon};
use mcc_core::peel_dag::{best_restricted, vertex_pipelines};
use mcc_core::rotten::{good_area, rotten_potato_peel, RottenSet};
use mcc_core::Rational;
use num_rational::Ratio;
use num_traits::Zero;
use proptest::prelude::*;

fn rings<T: mcc_core::Scalar>(pieces: &[mcc_core::exact_geom::ConvexPolygon<T>]) -> Vec<Vec<Point<T>>> {
    pieces.iter().map(|q| q.ring().to_vec()).collect()
}

fn simple(seed: u64, n: usize) -> PolygonWithHoles<Rational> {
    random_simple_polygon(seed, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn greedy_cover_is_valid(seed in 5000u64..6000, n in 4usize..9) {
        let p = simple(seed, n);
        let sol = greedy_cover(&p).unwrap();
        let arr = Arrangement::new(&p);
        let report = verify_cover(&p, &arr, &rings(&sol.pieces));
        prop_assert!(report.is_valid(), "{:?}", report.violations);
        prop_assert!(sol.pieces.len() <= n - 2);
        prop_assert_eq!(sol.per_iteration_gain.iter().sum::<usize>(), arr.faces.len());
    }

    #[test]
    fn sst_weights_match_naive(seed in 6000u64..7000, n in 4usize..8) {
        let p = simple(seed, n);
        let mut arr = Arrangement::new(&p);
        let mut pipelines = vertex_pipelines(&p, &arr).unwrap();
        // Initial weights, then the weights after one greedy round.
        for round in 0..2 {
            for r in pipelines.iter().flat_map(|pi| &pi.regions) {
                for node in &r.dag.nodes {
                    prop_assert_eq!(&naive_sst_weight(r.anchor(), &node.from, &node.to, &r.cells), &node.weight);
                }
            }
            if round == 0 {
                let sel = best_restricted(&mut pipelines, &arr).unwrap().unwrap();
                for q in &sel.pieces {
                    arr.mark_covered(q);
                }
                for r in pipelines.iter_mut().flat_map(|pi| &mut pi.regions) {
                    r.reweight(&arr);
                }
            }
        }
    }

    #[test]
    fn triangulation_tiles(seed in 7000u64..8000, n in 6usize..10) {
        let p: PolygonWithHoles<Rational> = random_holed_polygon(seed, n);
        let tris = triangulate(&p);
        prop_assert_eq!(tris.len(), n + 2 * p.hole_count() - 2);
        let area = tris.iter().fold(Rational::zero(), |a, t| a + t.area());
        prop_assert_eq!(area, p.area());
        let arr = Arrangement::new(&p);
        prop_assert!(verify_cover(&p, &arr, &rings(&tris)).is_valid());
    }

    #[test]
    fn peel_value_is_good_area(seed in 8000u64..9000, n in 4usize..8) {
        let p = simple(seed, n);
        let sol = rotten_potato_peel(&p, &RottenSet::empty()).unwrap();
        prop_assert_eq!(&sol.value, &sol.polygon.area());
        prop_assert_eq!(good_area(&sol.polygon, &RottenSet::empty()), sol.value);
    }
}

#[test]
fn machine_rationals_agree_on_small_instances() {
    type Small = Ratio<i64>;
    let pts = |c: &[(i64, i64)]| c.iter().map(|&(x, y)| Point::<Small>::from_ints(x, y)).collect::<Vec<_>>();
    let l = PolygonWithHoles::simple(pts(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])).unwrap();
    let holed =
        PolygonWithHoles::new(pts(&[(0, 0), (4, 0), (4, 4), (0, 4)]), vec![pts(&[(1, 1), (1, 3), (3, 3), (3, 1)])]).unwrap();
    for (p, pieces) in [(l, 2), (holed, 4)] {
        let sol = greedy_cover(&p).unwrap();
        assert_eq!(sol.pieces.len(), pieces);
        assert!(verify_cover(&p, &Arrangement::new(&p), &rings(&sol.pieces)).is_valid());
    }
}
