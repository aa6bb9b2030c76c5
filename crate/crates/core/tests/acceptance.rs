//! Acceptance criteria, one test per criterion. Each test also prints a
//! `[PASS]`/`[FAIL]` line (visible with `--nocapture`).

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use fillperm::moves::sites;
use fillperm::search::{symmetry_elements, NAIVE_MAX_DEGREE};
use fillperm::verifier::{corner_rotation, CheckKind, FaceWord};
use fillperm::{
    canonical_form, enumerate, extend_to, faces_as_words, glue, min_intersection, naive_enumerate,
    validate, FillingInstance, Permutation, SearchQuery,
};

const G2_SIGMA: &str = "(1,2,19,14)(3,8,15,16,9,4,17,18,5,10,11,12)(6,13,20,7)";

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn report(id: u32, title: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) => println!("[PASS] AC{id:02} {title}: {detail}"),
        Err(why) => {
            println!("[FAIL] AC{id:02} {title}: {why}");
            panic!("AC{id:02} failed: {why}");
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn word(s: &str) -> FaceWord {
    FaceWord(s.split_whitespace().map(|t| t.parse().unwrap()).collect())
}

#[test]
fn ac01_genus_two_certificate_verifies() {
    report(
        1,
        "genus-two certificate verifies",
        (|| {
            let inst = FillingInstance::new(perm(G2_SIGMA), 2, 3).map_err(|e| e.to_string())?;
            let r = validate(&inst);
            ensure!(r.n == 5, "n = {}", r.n);
            ensure!(r.checks.len() == 9, "{} checks", r.checks.len());
            for kind in CheckKind::ALL {
                ensure!(
                    r.check(kind).passed,
                    "{} failed: {:?}",
                    kind.name(),
                    r.check(kind).witness
                );
            }
            // warm up, then time a single run
            let _ = validate(&inst);
            let t = Instant::now();
            let again = validate(&inst);
            let elapsed = t.elapsed();
            ensure!(again.is_valid(), "second run invalid");
            ensure!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
            Ok(format!("9/9 checks, n=5, {elapsed:?}"))
        })(),
    );
}

#[test]
fn ac02_genus_two_polygons_reproduced() {
    report(
        2,
        "genus-two polygons reproduced",
        (|| {
            let faces = faces_as_words(&perm(G2_SIGMA)).map_err(|e| e.to_string())?;
            let want = [
                word("a1 b1 a5' b2'"),
                word("a2 b4 a3' b3' a5 b2 a4' b4' a3 b5 a1' b1'"),
                word("b3 a2' b5' a4"),
            ];
            ensure!(faces.len() == 3, "{} faces", faces.len());
            for w in &want {
                ensure!(
                    faces.iter().filter(|f| f.is_rotation_of(w)).count() == 1,
                    "missing face {w}"
                );
            }
            Ok(faces
                .iter()
                .map(|f| format!("[{f}]"))
                .collect::<Vec<_>>()
                .join(" "))
        })(),
    );
}

#[test]
fn ac03_euler_bookkeeping() {
    report(
        3,
        "euler bookkeeping",
        (|| {
            let s = glue(&perm(G2_SIGMA), 3).map_err(|e| e.to_string())?;
            ensure!(s.vertex_count() == 5, "V = {}", s.vertex_count());
            ensure!(s.edge_count() == 10, "E = {}", s.edge_count());
            ensure!(s.face_count() == 3, "F = {}", s.face_count());
            ensure!(
                s.euler_characteristic() == -2,
                "chi = {}",
                s.euler_characteristic()
            );
            ensure!(s.genus() == 2, "genus = {}", s.genus());
            ensure!(s.is_connected(), "not connected");
            ensure!(
                s.vertex_classes().iter().all(|c| c.len() == 4),
                "class sizes {:?}",
                s.vertex_classes().iter().map(Vec::len).collect::<Vec<_>>()
            );
            Ok(s.summary_line())
        })(),
    );
}

#[test]
fn ac04_odd_punctures_on_genus_two() {
    report(
        4,
        "double-bigon extension to p = 5..13",
        (|| {
            let mut current =
                FillingInstance::new(perm(G2_SIGMA), 2, 3).map_err(|e| e.to_string())?;
            let mut worst = Duration::ZERO;
            for p in [5, 7, 9, 11, 13] {
                let t = Instant::now();
                let next = extend_to(&current, p).map_err(|e| e.to_string())?;
                let elapsed = t.elapsed();
                worst = worst.max(elapsed);
                ensure!(
                    elapsed < Duration::from_millis(10),
                    "step to p={p} took {elapsed:?}"
                );
                let g = next.genus;
                ensure!(validate(&next).is_valid(), "p={p} invalid");
                ensure!(next.n() == 2 * g + p - 2, "p={p}: n = {}", next.n());
                // one more crossing would leave fewer faces than punctures
                let faces_below = (next.n() - 1) as i64 + 2 - 2 * g as i64;
                ensure!(faces_below < p as i64, "p={p}: n-1 still feasible");
                ensure!(
                    min_intersection(2, p).unwrap() == next.n(),
                    "table disagrees at p={p}"
                );
                current = next;
            }
            Ok(format!("n = 7, 9, 11, 13, 15; slowest step {worst:?}"))
        })(),
    );
}

#[test]
fn ac05_genus_two_closed_needs_four() {
    report(
        5,
        "enumerate(g=2, p=0, n=3) is empty",
        (|| {
            let t = Instant::now();
            let r = enumerate(&SearchQuery::new(2, 0, 3)).map_err(|e| e.to_string())?;
            let elapsed = t.elapsed();
            ensure!(
                r.solutions.is_empty() && !r.vacuous,
                "{} solutions",
                r.solutions.len()
            );
            ensure!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
            Ok(format!(
                "empty after {} nodes, {elapsed:?}",
                r.nodes_explored
            ))
        })(),
    );
}

#[test]
fn ac06_sphere_parity() {
    report(
        6,
        "sphere parity",
        (|| {
            for p in 0..=5 {
                let r = enumerate(&SearchQuery::new(0, p, 3)).map_err(|e| e.to_string())?;
                ensure!(
                    r.solutions.is_empty(),
                    "(0,{p},3) has {} solutions",
                    r.solutions.len()
                );
            }
            let target = perm("(1,2)(3,6)(4,5)(7,8)");
            let r = enumerate(&SearchQuery::new(0, 4, 2)).map_err(|e| e.to_string())?;
            ensure!(!r.solutions.is_empty(), "(0,4,2) empty");
            ensure!(r.solutions.contains(&target), "missing {target}");
            ensure!(target.two_cycle_count() == 4, "not all bigons");
            let oracle = naive_enumerate(&SearchQuery::new(0, 4, 2)).map_err(|e| e.to_string())?;
            ensure!(oracle.solutions.contains(&target), "oracle misses {target}");
            Ok(format!(
                "n=3 empty for p<=5; n=2, p=4 has {} solutions",
                r.raw_count
            ))
        })(),
    );
}

#[test]
fn ac07_torus_base_case() {
    report(
        7,
        "torus base case",
        (|| {
            let r = enumerate(&SearchQuery::new(1, 0, 1)).map_err(|e| e.to_string())?;
            let want = vec![perm("(1,2,3,4)"), perm("(1,4,3,2)")];
            ensure!(r.solutions == want, "got {:?}", r.solutions);
            let oracle = naive_enumerate(&SearchQuery::new(1, 0, 1)).map_err(|e| e.to_string())?;
            ensure!(
                oracle.solutions == want,
                "oracle got {:?}",
                oracle.solutions
            );
            for s in &want {
                let g = glue(s, 0).map_err(|e| e.to_string())?;
                ensure!(
                    g.face_count() == 1 && g.faces()[0].len() == 4,
                    "{s}: not one square"
                );
                ensure!(
                    g.vertex_count() == 1 && g.genus() == 1,
                    "{s}: {}",
                    g.summary_line()
                );
            }
            Ok("{(1,2,3,4), (1,4,3,2)}".into())
        })(),
    );
}

#[test]
fn ac08_oracle_equivalence() {
    report(
        8,
        "enumerate matches brute force for 4n <= 8",
        (|| {
            let mut compared = 0;
            for n in 1..=NAIVE_MAX_DEGREE / 4 {
                for g in 0..=n.div_ceil(2) {
                    for p in 0..=n + 3 {
                        let q = SearchQuery::new(g, p, n);
                        let fast = enumerate(&q).map_err(|e| e.to_string())?;
                        let slow = naive_enumerate(&q).map_err(|e| e.to_string())?;
                        ensure!(
                            fast.solutions == slow.solutions,
                            "({g},{p},{n}): {} vs {}",
                            fast.raw_count,
                            slow.raw_count
                        );
                        compared += 1;
                    }
                }
            }
            Ok(format!("{compared} queries agree"))
        })(),
    );
}

#[test]
fn ac09_search_finds_genus_two_certificate() {
    report(
        9,
        "enumerate(g=2, p=3, n=5) contains the certificate",
        (|| {
            let t = Instant::now();
            let r = enumerate(&SearchQuery::new(2, 3, 5)).map_err(|e| e.to_string())?;
            let elapsed = t.elapsed();
            ensure!(!r.solutions.is_empty(), "empty");
            ensure!(r.solutions.contains(&perm(G2_SIGMA)), "certificate missing");
            ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
            Ok(format!(
                "{} raw, {} up to symmetry, {elapsed:?}",
                r.raw_count, r.dedup_count
            ))
        })(),
    );
}

#[test]
fn ac10_table_fidelity() {
    report(
        10,
        "closed-form table",
        (|| {
            for ((g, p), want) in [
                ((1, 0), 1),
                ((3, 0), 5),
                ((3, 2), 6),
                ((0, 4), 2),
                ((0, 5), 4),
                ((0, 6), 4),
                ((2, 0), 4),
                ((2, 2), 4),
                ((2, 3), 5),
                ((2, 4), 6),
            ] {
                let got = min_intersection(g, p).map_err(|e| e.to_string())?;
                ensure!(got == want, "({g},{p}) -> {got}, want {want}");
            }
            let overlap = fillperm::tables::applicable_branches(2, 2);
            ensure!(
                overlap.len() == 2,
                "(2,2) matched {} branches",
                overlap.len()
            );
            ensure!(
                overlap.iter().all(|&(_, v)| v == 4),
                "(2,2) branches {overlap:?}"
            );
            Ok("10 spot values, (2,2) branches agree".into())
        })(),
    );
}

/// Every `(g, p, n)` with `4n ≤ 20` that has solutions, with the solutions.
fn solution_sets() -> Vec<((usize, usize, usize), Vec<Permutation>)> {
    let mut out = Vec::new();
    for n in 1usize..=5 {
        for g in 0..=n.div_ceil(2) {
            let faces = n + 2 - 2 * g;
            // the largest admissible p gives the widest set
            let r = enumerate(&SearchQuery::new(g, faces, n)).unwrap();
            if !r.solutions.is_empty() {
                out.push(((g, faces, n), r.solutions));
            }
        }
    }
    out
}

#[test]
fn ac11_property_suites() {
    report(
        11,
        "property suites",
        (|| {
            let t = Instant::now();
            let sets = solution_sets();
            let mut checked = 0usize;
            for ((g, p, n), sols) in &sets {
                let set: BTreeSet<&Permutation> = sols.iter().collect();
                let group = symmetry_elements(*n);
                for s in sols {
                    // symmetry closure
                    for pi in &group {
                        let c = Permutation::compose(
                            pi,
                            &Permutation::compose(s, &pi.inverse()).unwrap(),
                        )
                        .unwrap();
                        ensure!(set.contains(&c), "({g},{p},{n}): conjugate of {s} missing");
                    }
                    ensure!(
                        set.contains(&canonical_form(s)),
                        "canonical form of {s} missing"
                    );
                    // corner rotation has order 4 with no short orbits
                    let r = corner_rotation(s).unwrap();
                    ensure!(r.pow(4).is_identity(), "{s}: r^4 != id");
                    ensure!(
                        r.cycle_lengths().iter().all(|&l| l == 4),
                        "{s}: r orbits {:?}",
                        r.cycle_lengths()
                    );
                    // faces round trip
                    let surface = glue(s, *p).unwrap();
                    ensure!(surface.sigma() == *s, "{s}: faces do not round trip");
                    ensure!(surface.is_connected(), "{s}: disconnected");
                    // parity forces even faces
                    ensure!(s.is_parity_reversing().unwrap(), "{s}: parity");
                    ensure!(
                        s.cycle_lengths().iter().all(|l| l % 2 == 0),
                        "{s}: odd face"
                    );
                    checked += 1;
                }
            }
            let elapsed = t.elapsed();
            ensure!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
            Ok(format!(
                "{checked} solutions over {} queries, {elapsed:?}",
                sets.len()
            ))
        })(),
    );
}

#[test]
fn ac11_moves_at_every_site() {
    report(
        11,
        "double-bigon invariants at every site",
        (|| {
            let base = FillingInstance::new(perm(G2_SIGMA), 2, 3).unwrap();
            for site in sites(&base.sigma).unwrap() {
                let out = fillperm::double_bigon(&base, site).map_err(|e| e.to_string())?;
                let before = glue(&base.sigma, base.punctures).unwrap();
                let after = glue(&out.sigma, out.punctures).unwrap();
                ensure!(after.vertex_count() == before.vertex_count() + 2, "V");
                ensure!(after.edge_count() == before.edge_count() + 4, "E");
                ensure!(after.face_count() == before.face_count() + 2, "F");
                ensure!(after.genus() == before.genus(), "genus");
            }
            Ok("5 sites".into())
        })(),
    );
}
