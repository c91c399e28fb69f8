//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use mcc_cli::io::{points_to_ring, read_json, to_json, InstanceFile};
use mcc_core::arrangement::Arrangement;
use mcc_core::cover::{greedy_cover, triangulate, verify_cover};
use mcc_core::exact_geom::{clip_convex, orientation, same_direction, Turn};
use mcc_core::oracle::{
    count_maximal_paths, exact_min_restricted_cover, exhaustive_heaviest, naive_sst_weights, random_holed_polygon,
    random_simple_polygon, sample_inscribed_convex, CandidateFamily, DEFAULT_NODE_CAP, DEFAULT_PATH_CAP,
};
use mcc_core::peel_dag::{heaviest_maximal_path, vertex_pipelines, PeelDag, VertexPipeline};
use mcc_core::rotten::{good_area, rotten_potato_peel, RottenSet};
use mcc_core::{ConvexPolygon, Error, Point, PolygonWithHoles, Rational};
use num_traits::{Signed, Zero};

const ORACLE_SIZE_CAP: usize = 8;
const SAMPLES: usize = 50;

fn data(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

fn instance(rel: &str) -> PolygonWithHoles {
    let file: InstanceFile = read_json(&data(rel)).expect("instance file");
    file.polygon().expect("valid instance")
}

/// 100 simple polygons with 4..=12 vertices and 20 one-hole polygons with
/// 6..=10 vertices in total.
fn corpus() -> Vec<(String, PolygonWithHoles)> {
    let simple = (0..100u64).map(|i| (format!("simple-{i}"), random_simple_polygon(i, 4 + i as usize % 9)));
    let holed = (0..20u64).map(|i| (format!("holed-{}", 1000 + i), random_holed_polygon(1000 + i, 6 + i as usize % 5)));
    simple.chain(holed).collect()
}

#[derive(Default)]
struct Report {
    lines: Vec<(u32, bool, String)>,
}

impl Report {
    fn line(&mut self, id: u32, ok: bool, text: String) {
        self.lines.push((id, ok, text));
    }

    /// Prints the lines in criterion order and returns the failure count.
    fn print(mut self) -> usize {
        self.lines.sort_by_key(|l| l.0);
        for (id, ok, text) in &self.lines {
            println!("[{}] C{id:<2} {text}", if *ok { "PASS" } else { "FAIL" });
        }
        self.lines.iter().filter(|l| !l.1).count()
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn c1_counts(r: &mut Report) {
    let mut ok = true;
    let mut notes = Vec::new();
    for (file, expected) in [("instances/square.json", (6, 5, 4)), ("instances/triangle.json", (3, 3, 1))] {
        let p = instance(file);
        let t = Instant::now();
        let s = Arrangement::new(&p).stats();
        let took = t.elapsed();
        let got = (s.extensions, s.vertices, s.faces);
        ok &= got == expected && took < Duration::from_secs(1);
        notes.push(format!("{file}: {got:?} in {}", secs(took)));
    }
    r.line(1, ok, format!("structural counts ({})", notes.join(", ")));
}

/// What the corpus pass gathers for criteria 2, 3, 5, 6 and 7.
#[derive(Default)]
struct CorpusTally {
    invalid: Vec<String>,
    cover_time: Duration,
    fallback_bound_violations: Vec<String>,
    ratio_checked: usize,
    ratio_skipped: usize,
    ratio_violations: Vec<String>,
    dags: usize,
    dag_failures: Vec<String>,
    sst_nodes: usize,
    sst_failures: Vec<String>,
    heaviest_checked: usize,
    heaviest_skipped: usize,
    heaviest_failures: Vec<String>,
}

fn dag_matches_predicate(dag: &PeelDag<Rational>) -> bool {
    let n = dag.nodes.len();
    let mut pos = vec![usize::MAX; n];
    for (k, &i) in dag.order.iter().enumerate() {
        pos[i] = k;
    }
    if dag.order.len() != n || pos.contains(&usize::MAX) {
        return false;
    }
    let actual: BTreeSet<(usize, usize)> = dag.edges().collect();
    if actual.iter().any(|&(s, t)| pos[s] >= pos[t]) {
        return false;
    }
    let mut expected = BTreeSet::new();
    for (i, s) in dag.nodes.iter().enumerate() {
        for (j, t) in dag.nodes.iter().enumerate() {
            if i == j || s.to != t.from {
                continue;
            }
            let edge = match orientation(&s.from, &s.to, &t.to) {
                Turn::Left => true,
                Turn::Collinear => same_direction(&s.to.sub(&s.from), &t.to.sub(&t.from)),
                Turn::Right => false,
            };
            if edge {
                expected.insert((i, j));
            }
        }
    }
    expected == actual
}

fn sst_mismatches(pipelines: &[VertexPipeline<Rational>]) -> (usize, usize) {
    let mut nodes = 0;
    let mut bad = 0;
    for region in pipelines.iter().flat_map(|p| &p.regions) {
        let segments: Vec<(Point, Point)> = region.dag.nodes.iter().map(|n| (n.from.clone(), n.to.clone())).collect();
        let reference = region.ring[1].sub(region.anchor());
        let naive = naive_sst_weights(region.anchor(), &reference, &segments, &region.cells);
        nodes += naive.len();
        bad += naive.iter().zip(&region.dag.nodes).filter(|(w, n)| **w != n.weight).count();
    }
    (nodes, bad)
}

fn corpus_pass(corpus: &[(String, PolygonWithHoles)]) -> CorpusTally {
    let mut tally = CorpusTally::default();
    for (name, p) in corpus {
        let t = Instant::now();
        let sol = match greedy_cover(p) {
            Ok(s) => s,
            Err(e) => {
                tally.invalid.push(format!("{name}: {e}"));
                continue;
            }
        };
        let arr = Arrangement::new(p);
        let rings: Vec<Vec<Point>> = sol.pieces.iter().map(|q| q.ring().to_vec()).collect();
        let report = verify_cover(p, &arr, &rings);
        tally.cover_time += t.elapsed();
        if !report.is_valid() || sol.fallback_used {
            tally.invalid.push(format!("{name}: {:?} fallback={}", report.violations, sol.fallback_used));
        }
        let n = p.vertex_count();
        let h = p.hole_count();
        if sol.pieces.len() > n + 2 * h - 2 {
            tally.fallback_bound_violations.push(format!("{name}: {} > {}", sol.pieces.len(), n + 2 * h - 2));
        }

        let pipelines = vertex_pipelines(p, &arr).expect("pipelines");
        let mut oracle_ok = true;
        for region in pipelines.iter().flat_map(|pi| &pi.regions) {
            tally.dags += 1;
            if !dag_matches_predicate(&region.dag) {
                tally.dag_failures.push(format!("{name} anchor {}", region.anchor()));
            }
            let too_many = region.dag.nodes.len() > DEFAULT_NODE_CAP
                || count_maximal_paths(&region.dag) > DEFAULT_PATH_CAP as u128;
            if too_many {
                tally.heaviest_skipped += 1;
                oracle_ok = false;
                continue;
            }
            tally.heaviest_checked += 1;
            let (path, w) = heaviest_maximal_path(&region.dag);
            let exhaustive = exhaustive_heaviest(&region.dag, DEFAULT_NODE_CAP).expect("within caps");
            if w != exhaustive || region.dag.path_weight(&path) != w {
                tally.heaviest_failures.push(format!("{name} anchor {}: {w} vs {exhaustive}", region.anchor()));
            }
        }

        let (nodes, bad) = sst_mismatches(&pipelines);
        tally.sst_nodes += nodes;
        if bad > 0 {
            tally.sst_failures.push(format!("{name}: {bad} of {nodes} nodes"));
        }
        if !oracle_ok {
            tally.ratio_skipped += 1;
            continue;
        }
        let opt = CandidateFamily::build(p, &arr, DEFAULT_NODE_CAP)
            .and_then(|family| exact_min_restricted_cover(&family, ORACLE_SIZE_CAP));
        match opt {
            Ok(opt) => {
                tally.ratio_checked += 1;
                let bound = ((arr.faces.len() as f64).ln() + 1.0) * opt as f64;
                if sol.pieces.len() as f64 > bound {
                    tally.ratio_violations.push(format!("{name}: {} > {bound:.3}", sol.pieces.len()));
                }
            }
            Err(Error::CapExceeded { .. }) => tally.ratio_skipped += 1,
            Err(e) => tally.ratio_violations.push(format!("{name}: oracle failed: {e}")),
        }
    }
    tally
}

fn first_few(v: &[String]) -> String {
    v.iter().take(3).cloned().collect::<Vec<_>>().join("; ")
}

fn report_corpus(r: &mut Report, total: usize, t: &CorpusTally) {
    let ok = t.invalid.is_empty() && t.cover_time <= Duration::from_secs(600);
    r.line(
        2,
        ok,
        format!(
            "cover validity: {}/{total} valid, greedy+verify {} (budget 600s) {}",
            total - t.invalid.len(),
            secs(t.cover_time),
            first_few(&t.invalid)
        ),
    );
    let ok = t.ratio_violations.is_empty() && t.fallback_bound_violations.is_empty() && t.ratio_checked > 0;
    r.line(
        3,
        ok,
        format!(
            "greedy ratio: {} instances within (ln|U|+1)*opt, {} beyond oracle caps; n+2h-2 bound held on {}/{total} {}",
            t.ratio_checked - t.ratio_violations.len().min(t.ratio_checked),
            t.ratio_skipped,
            total - t.fallback_bound_violations.len(),
            first_few(&[t.ratio_violations.clone(), t.fallback_bound_violations.clone()].concat())
        ),
    );
    r.line(
        5,
        t.dag_failures.is_empty(),
        format!("DAG invariants: {} DAGs acyclic with predicate-exact edges {}", t.dags - t.dag_failures.len(), first_few(&t.dag_failures)),
    );
    r.line(
        6,
        t.sst_failures.is_empty(),
        format!("SST weights: {} node weights equal the naive sum {}", t.sst_nodes, first_few(&t.sst_failures)),
    );
    r.line(
        7,
        t.heaviest_failures.is_empty() && t.heaviest_checked > 0,
        format!(
            "heaviest path: {} DAGs match exhaustive search, {} beyond caps {}",
            t.heaviest_checked,
            t.heaviest_skipped,
            first_few(&t.heaviest_failures)
        ),
    );
}

fn c4_canonical(r: &mut Report) {
    let mut ok = true;
    let mut notes = Vec::new();
    let cases = [
        ("instances/triangle.json", 1),
        ("instances/square.json", 1),
        ("instances/pentagon.json", 1),
        ("instances/l_shape.json", 2),
        ("instances/square_hole.json", 4),
    ];
    for (file, expected) in cases {
        let p = instance(file);
        let arr = Arrangement::new(&p);
        let opt = CandidateFamily::build(&p, &arr, DEFAULT_NODE_CAP)
            .and_then(|f| exact_min_restricted_cover(&f, ORACLE_SIZE_CAP));
        let greedy = greedy_cover(&p).map(|s| s.pieces.len());
        ok &= opt.as_ref().ok() == Some(&expected) && greedy.as_ref().ok() == Some(&expected);
        notes.push(format!("{file}: greedy {greedy:?} oracle {opt:?}"));
    }
    r.line(4, ok, format!("canonical optima ({})", notes.join(", ")));
}

/// The first triangle of a triangulation, shrunk halfway to its centroid.
fn shrunk_triangle(p: &PolygonWithHoles) -> Vec<Point> {
    let t = triangulate(p).remove(0);
    let ring = t.ring();
    let three = Rational::from_integer(3.into());
    let half = Rational::new(1.into(), 2.into());
    let c = ring.iter().fold(Point::new(Rational::zero(), Rational::zero()), |acc, q| acc.add(q)).scale(&(Rational::from_integer(1.into()) / three));
    ring.iter().map(|q| c.lerp(q, &half)).collect()
}

fn c8_rotten(r: &mut Report, corpus: &[(String, PolygonWithHoles)]) {
    let mut exact_checked = 0;
    let mut exact_bad = Vec::new();
    let mut samples = 0;
    let mut quarter_bad = Vec::new();

    let mut check = |name: &str, p: &PolygonWithHoles, rot: Vec<Vec<Point>>| {
        let rotten = RottenSet::new(p, rot.clone()).expect("valid rotten set");
        let sol = rotten_potato_peel(p, &rotten).expect("peel");
        // Independent recomputation: the rotten regions here are convex.
        let mut expect = sol.polygon.area();
        for region in &rot {
            let region = ConvexPolygon::new(region.clone()).expect("convex rotten region");
            if let Some(c) = clip_convex(&sol.polygon, &region) {
                expect -= c.area();
            }
        }
        exact_checked += 1;
        if sol.value != expect || good_area(&sol.polygon, &rotten) != sol.value {
            exact_bad.push(format!("{name}: {} vs {expect}", sol.value));
        }
        let four = Rational::from_integer(4.into());
        for (k, q) in sample_inscribed_convex(p, 0, SAMPLES).iter().enumerate() {
            samples += 1;
            let g = good_area(q, &rotten);
            if (sol.value.clone() * four.clone() - g).is_negative() {
                quarter_bad.push(format!("{name} sample {k}"));
            }
        }
    };

    let square = instance("instances/square.json");
    let corner: mcc_cli::io::RottenFile = read_json(&data("rotten/square_corner.json")).unwrap();
    check("square+corner", &square, corner.regions.iter().map(mcc_cli::io::ring_to_points).collect());
    for (name, p) in corpus {
        check(name, p, Vec::new());
        check(&format!("{name}+rot"), p, vec![shrunk_triangle(p)]);
    }

    let l = instance("instances/l_shape.json");
    let l_value = rotten_potato_peel(&l, &RottenSet::empty()).map(|s| s.value);
    let l_ok = l_value.as_ref().ok() == Some(&Rational::from_integer(2.into()));

    let ok = exact_bad.is_empty() && quarter_bad.is_empty() && l_ok;
    r.line(
        8,
        ok,
        format!(
            "rotten peel: (a) {exact_checked} values exact, (b) L-shape value {:?}, (c) {samples} samples, {} quarter-bound violations {}",
            l_value.map(|v| v.to_string()),
            quarter_bad.len(),
            first_few(&[exact_bad, quarter_bad].concat())
        ),
    );
}

/// A triangulation using only the polygon's vertices always has n+2h-2
/// triangles, which is 8 for the square with a square hole (n=8, h=1).
fn c9_triangulation(r: &mut Report) {
    let mut ok = true;
    let mut notes = Vec::new();
    for (file, expected) in [("instances/triangle.json", 1), ("instances/l_shape.json", 4), ("instances/square_hole.json", 8)] {
        let p = instance(file);
        let formula = p.vertex_count() + 2 * p.hole_count() - 2;
        let tris = triangulate(&p);
        let area = tris.iter().fold(Rational::zero(), |acc, t| acc + t.area());
        ok &= tris.len() == expected && tris.len() == formula && area == p.area() && tris.iter().all(|t| t.ring().len() == 3);
        notes.push(format!("{file}: {} triangles (n+2h-2 = {formula}), area {area}", tris.len()));
    }
    r.line(9, ok, format!("triangulation ({})", notes.join(", ")));
}

fn c10_determinism(r: &mut Report, corpus: &[(String, PolygonWithHoles)]) {
    let dir = tempfile::tempdir().unwrap();
    let mut files: Vec<PathBuf> = std::fs::read_dir(data("instances")).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    for (name, p) in corpus.iter().step_by(10) {
        let inst = InstanceFile {
            name: name.clone(),
            outer: points_to_ring(p.outer()),
            holes: p.holes().iter().map(|h| points_to_ring(h)).collect(),
        };
        let path = dir.path().join(format!("{name}.json"));
        std::fs::write(&path, to_json(&inst)).unwrap();
        files.push(path);
    }
    let corner = data("rotten/square_corner.json");
    let run = |args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_mcc")).args(args).output().expect("run mcc");
        (out.status.code(), out.stdout, out.stderr)
    };
    let mut runs = 0;
    let mut differing = Vec::new();
    for f in &files {
        let f = f.to_str().unwrap();
        let stem = Path::new(f).file_stem().unwrap().to_str().unwrap();
        let cover = dir.path().join(format!("{stem}.cover.json"));
        let peel = dir.path().join(format!("{stem}.peel.json"));
        let (cover, peel) = (cover.to_str().unwrap(), peel.to_str().unwrap());
        run(&["cover", f, "-o", cover]);
        run(&["peel", f, "-o", peel]);
        let mut commands: Vec<Vec<&str>> = vec![
            vec!["cover", f],
            vec!["cover", f, "--max-iters", "1"],
            vec!["peel", f],
            vec!["stats", f],
            vec!["verify", f, cover, "--oracle"],
            vec!["verify", f, peel, "--oracle"],
            vec!["render", f, "--solution", cover, "--show-arrangement"],
        ];
        if stem == "square" {
            commands.push(vec!["peel", f, "--rotten", corner.to_str().unwrap()]);
        }
        for args in commands {
            runs += 1;
            if run(&args) != run(&args) {
                differing.push(args.join(" "));
            }
        }
    }
    r.line(
        10,
        differing.is_empty(),
        format!("determinism: {runs} commands on {} instances ran twice, {} differ {}", files.len(), differing.len(), first_few(&differing)),
    );
}

fn main() {
    let start = Instant::now();
    let mut r = Report::default();
    let corpus = corpus();
    c1_counts(&mut r);
    let tally = corpus_pass(&corpus);
    report_corpus(&mut r, corpus.len(), &tally);
    c4_canonical(&mut r);
    c8_rotten(&mut r, &corpus);
    c9_triangulation(&mut r);
    c10_determinism(&mut r, &corpus);
    let failed = r.print();
    println!("acceptance: {failed} of 10 criteria failed, {}", secs(start.elapsed()));
    if failed > 0 {
        std::process::exit(1);
    }
}
