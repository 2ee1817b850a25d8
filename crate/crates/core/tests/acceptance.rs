//! Acceptance criteria. Each test prints one PASS or FAIL line to stderr.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::sync::{Mutex, MutexGuard, OnceLock};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use interlace::census::{self, classify_orbits, generate_graphs, Census, Family};
use interlace::circle::{circle_graph_atlas, is_circle_graph};
use interlace::codes::{self, bordered_paley, q4_upper_bound};
use interlace::interlace::{coefficients_unimodal, odd_quotient_check};
use interlace::orbits::{orbit, DEFAULT_ORBIT_BUDGET};
use interlace::{canonical_form, interlace_q, interlace_upper_q, Graph, OrbitKind};

type Outcome = Result<(), String>;

fn census() -> MutexGuard<'static, Census> {
    static CENSUS: OnceLock<Mutex<Census>> = OnceLock::new();
    CENSUS.get_or_init(|| Mutex::new(Census::new())).lock().unwrap_or_else(|e| e.into_inner())
}

/// Runs one criterion and reports it on stderr outside the test harness capture.
fn criterion(id: &str, title: &str, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(body));
    let secs = start.elapsed().as_secs_f64();
    let line = match &result {
        Ok(Ok(())) => format!("PASS criterion {id}: {title} ({secs:.1}s)\n"),
        Ok(Err(msg)) => format!("FAIL criterion {id}: {title}: {msg}\n"),
        Err(_) => format!("FAIL criterion {id}: {title}: panicked\n"),
    };
    let _ = std::io::stderr().write_all(line.as_bytes());
    match result {
        Ok(Ok(())) => {}
        Ok(Err(msg)) => panic!("criterion {id}: {msg}"),
        Err(p) => resume_unwind(p),
    }
}

fn same<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn column(table: &census::CountsTable, name: &str) -> Vec<u64> {
    table.column_counts(name).unwrap_or_else(|| panic!("column {name}"))
}

#[test]
fn criterion_01_orbit_counts() {
    criterion("1", "LC and ELC orbit counts, n <= 9", || {
        let c_l = vec![1, 1, 1, 2, 4, 11, 26, 101, 440];
        let t_l = vec![1, 2, 3, 6, 11, 26, 59, 182, 675];
        let c_e = vec![1, 1, 2, 4, 10, 35, 134, 777, 6702];
        let t_e = vec![1, 2, 4, 9, 21, 64, 218, 1068, 8038];
        let table = census::orbit_counts_table(&mut census(), 1..=9).map_err(|e| e.to_string())?;
        same("c_L", column(&table, "c_L"), c_l.clone())?;
        same("c_E", column(&table, "c_E"), c_e.clone())?;
        same("Euler transform of c_L", census::euler_transform(&c_l).unwrap(), t_l.clone())?;
        same("Euler transform of c_E", census::euler_transform(&c_e).unwrap(), t_e.clone())?;
        same("t_L", column(&table, "t_L"), t_l)?;
        same("t_E", column(&table, "t_E"), t_e)
    });
}

#[test]
#[ignore = "classifies all 11.7 million connected graphs of order 10"]
fn criterion_01_extended_lc_orbits_order_10() {
    criterion("1 (extended)", "3132 LC orbits of connected graphs at n = 10", || {
        let c = classify_orbits(10, OrbitKind::Lc, true, DEFAULT_ORBIT_BUDGET).map_err(|e| e.to_string())?;
        same("c_L at n = 10", c.orbit_count(), 3132)
    });
}

#[test]
fn criterion_02_polynomial_counts() {
    criterion("2", "distinct interlace polynomial counts, n <= 9", || {
        let table = census::polynomial_counts_table(&mut census(), 1..=9).map_err(|e| e.to_string())?;
        same("c_q", column(&table, "c_q"), vec![1, 1, 2, 4, 9, 24, 71, 257, 1186])?;
        same("c_Q", column(&table, "c_Q"), vec![1, 1, 1, 2, 4, 10, 23, 84, 337])?;
        same("t_q", column(&table, "t_q"), vec![1, 2, 4, 8, 17, 41, 112, 369, 1555])?;
        same("t_Q", column(&table, "t_Q"), vec![1, 2, 3, 6, 11, 24, 52, 152, 521])
    });
}

#[test]
fn criterion_03_circle_graphs() {
    criterion("3", "circle graph counts n <= 8 and chord-diagram oracle n <= 7", || {
        let table = census::circle_counts_table(&mut census(), 1..=8).map_err(|e| e.to_string())?;
        same("c_c", column(&table, "c_c"), vec![1, 1, 2, 6, 21, 110, 789, 8336])?;
        same("t_c", column(&table, "t_c"), vec![1, 2, 4, 11, 34, 154, 978, 9497])?;
        same("c'", column(&table, "c'"), vec![1, 1, 1, 2, 4, 10, 23, 81])?;
        same("t'", column(&table, "t'"), vec![1, 2, 3, 6, 11, 25, 55, 157])?;
        for n in 1..=7 {
            let atlas = circle_graph_atlas(n).unwrap();
            for g in generate_graphs(n, true).unwrap() {
                let oracle = atlas.contains_key(&canonical_form(&g));
                same(&format!("circle status of {g}"), is_circle_graph(&g).unwrap(), oracle)?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_04_unimodality() {
    criterion("4", "no non-unimodal q for n <= 9; the order-10 example", || {
        let report = census::unimodality_scan(9).map_err(|e| e.to_string())?;
        same("non-unimodal q, n <= 9", report.lower_q.len(), 0)?;

        let g = g6("I?????^wo");
        let q = interlace_q(&g);
        same("q of the order-10 example", coefficient_vec(&q), vec![0, 2, 7, 6, 7, 4, 3, 2, 1])?;
        same("unimodal", coefficients_unimodal(&q), false)?;
        let o = orbit(&g, OrbitKind::Elc, DEFAULT_ORBIT_BUDGET).unwrap();
        same("ELC orbit size", o.len(), 2)?;
        for m in o.graphs() {
            same("q constant on the orbit", interlace_q(&m), q.clone())?;
        }
        for v in (0..10).filter(|&v| g.degree(v) == 1) {
            let dup = g.duplicate_vertex(v).unwrap();
            same(
                &format!("q after duplicating vertex {v}"),
                coefficient_vec(&interlace_q(&dup)),
                vec![0, 2, 7, 6, 7, 6, 4, 3, 2, 1],
            )?;
        }
        Ok(())
    });
}

#[test]
#[ignore = "evaluates q on every connected graph of order 10"]
fn criterion_04_extended_order_10_scan() {
    criterion("4 (extended)", "exactly one non-unimodal q at n = 10", || {
        let report = census::unimodality_scan(10).map_err(|e| e.to_string())?;
        same("non-unimodal q count", report.lower_q.len(), 1)?;
        let hit = &report.lower_q[0];
        let want: Vec<String> = [2, 7, 6, 7, 4, 3, 2, 1, 0, 0].iter().map(u32::to_string).collect();
        same("coefficients", hit.coefficients.clone(), want)?;
        same("graphs", hit.graphs, 2)?;
        same("ELC orbits", hit.orbits, 1)
    });
}

#[test]
fn criterion_05_identity_suite() {
    criterion("5", "interlace identities on 500 random connected graphs, n <= 9", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1a7e_51ac);
        for i in 0..500 {
            let n = rng.gen_range(1..=9);
            let density = rng.gen_range(0.05..0.8);
            let g = random_connected(&mut rng, n, density);
            let m = rng.gen_range(1..=4);
            let h = random_connected(&mut rng, m, 0.5);
            let bad = identity_failures(&g, &h, &mut rng);
            if !bad.is_empty() {
                return Err(format!("sample {i}: {}", bad.join("; ")));
            }
        }
        Ok(())
    });
}

#[test]
#[ignore = "fails as stated: q(P4) = 3x^2 + 2x has q(1) = 5 and q(3) = 33"]
fn criterion_05_quotient_over_q_at_one_as_stated() {
    criterion("5 (as stated)", "q(3)/q(1) an odd integer", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1a7e_51ac);
        for _ in 0..500 {
            let n = rng.gen_range(1..=9);
            let density = rng.gen_range(0.05..0.8);
            let g = random_connected(&mut rng, n, density);
            odd_quotient_check(&g).map_err(|e| format!("{g}: {e}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_06_hexacode_orbit() {
    criterion("6", "the order-6 LC orbit with delta = 3", || {
        let mut c = census();
        let lc = c.classification(6, OrbitKind::Lc).map_err(|e| e.to_string())?;
        let best: Vec<_> = lc.orbits.iter().filter(|r| r.min_degree == 3).collect();
        same("orbits with delta = 3", best.len(), 1)?;
        let r = best[0];
        same("orbit size", r.size, 2)?;
        same("Q", coefficient_vec(&r.polynomial), vec![0, 108, 45])?;
        let rep = r.representative_graph();
        same("q", coefficient_vec(&interlace_q(&rep)), vec![0, 12, 10])?;
        same("Q(G,4)/2^6", r.polynomial.evaluate_i64(4) / 64, BigInt::from(18))?;
        let o = orbit(&rep, OrbitKind::Lc, DEFAULT_ORBIT_BUDGET).unwrap();
        same("bordered Paley(5) in the orbit", o.contains(&canonical_form(&bordered_paley(5).unwrap())), true)
    });
}

#[test]
fn criterion_07_gamma_bound() {
    criterion("7", "Q(G,4) within the gamma bound for every connected graph, n <= 9", || {
        let k2 = g6("A_");
        let tight = q4_upper_bound(2, 1).unwrap();
        same("bound at K2", tight.floor.clone(), BigInt::from(12))?;
        same("Q(K2,4)", interlace_upper_q(&k2).evaluate_i64(4), BigInt::from(12))?;
        let mut c = census();
        // the bound needs delta >= 1, which excludes only the single vertex
        for n in 2..=9 {
            // Q and delta are constant on an LC orbit, so one check per orbit covers every member
            for r in &c.classification(n, OrbitKind::Lc).map_err(|e| e.to_string())?.orbits {
                let bound = q4_upper_bound(n, r.min_degree).map_err(|e| e.to_string())?;
                if r.polynomial.evaluate_i64(4) > bound.floor {
                    return Err(format!("{} exceeds {}", r.representative, bound.exact));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_08_delta_tables() {
    criterion("8", "deg Q, Q(G,4)/2^n and delta grids, n <= 9", || {
        let mut c = census();
        let (deg, q4) = census::degq_q4_ranges(&mut c, 2..=9).map_err(|e| e.to_string())?;
        same(
            "deg Q ranges",
            deg.to_csv(),
            "delta,2,3,4,5,6,7,8,9\n\
             1,1,2,2-3,3-4,3-5,3-6,3-7,4-8\n\
             2,,,,2,3,3-4,3-4,3-5\n\
             3,,,,,2,,3-4,3-4\n"
                .to_string(),
        )?;
        same(
            "Q(G,4)/2^n ranges",
            q4.to_csv(),
            "delta,2,3,4,5,6,7,8,9\n\
             1,3,5,8-9,13-17,20-33,30-65,47-129,73-257\n\
             2,,,,12,19,29-30,45-48,69-80\n\
             3,,,,,18,,44-45,68-69\n"
                .to_string(),
        )?;
        let grid = |c: &mut Census, f| census::delta_table(c, 2..=9, f).map(|t| t.to_csv()).map_err(|e| e.to_string());
        same(
            "bipartite grid",
            grid(&mut c, Family::Bipartite)?,
            "delta,2,3,4,5,6,7,8,9\n\
             1,1,1,2,3,7,14,40,106\n\
             2,,,,,1,1,2,4\n\
             3,,,,,,,1,\n\
             All,1,1,2,3,8,15,43,110\n"
                .to_string(),
        )?;
        same(
            "circle grid",
            grid(&mut c, Family::Circle)?,
            "delta,2,3,4,5,6,7,8,9\n\
             1,1,1,2,3,9,21,75,277\n\
             2,,,,1,1,2,5,16\n\
             3,,,,,,,1,\n\
             All,1,1,2,4,10,23,81,293\n"
                .to_string(),
        )?;
        same(
            "all-graphs grid",
            grid(&mut c, Family::All)?,
            "delta,2,3,4,5,6,7,8,9\n\
             1,1,1,2,3,9,22,85,363\n\
             2,,,,1,1,4,11,69\n\
             3,,,,,1,,5,8\n\
             All,1,1,2,4,11,26,101,440\n"
                .to_string(),
        )
    });
}

#[test]
fn criterion_09_order_13_codes() {
    criterion("9", "order-13 rows of the best-code table", || {
        for (file, delta, deg_q, q4) in [("gamma13_1.txt", 4, 4, 361), ("gamma13_2.txt", 4, 5, 360)] {
            let g = codes::parse_adjacency_matrix(&data_file(file)).map_err(|e| e.to_string())?;
            let m = codes::metrics(&g).map_err(|e| e.to_string())?;
            same(&format!("{file} delta"), m.delta, Some(delta))?;
            same(&format!("{file} deg Q"), m.deg_q, deg_q)?;
            same(&format!("{file} Q(G,4)/2^13"), m.q4_norm, BigInt::from(q4))?;
        }
        Ok(())
    });
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        (vec(any::<usize>(), n - 1), vec(any::<bool>(), n * (n - 1) / 2))
            .prop_map(move |(parents, pairs)| connected_from_bits(n, &parents, &pairs))
    })
}

fn run_property<F>(cases: u32, max_n: usize, check: F) -> Outcome
where
    F: Fn(&Graph, u64) -> Vec<String>,
{
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner
        .run(&(connected(max_n), any::<u64>()), |(g, seed)| {
            let bad = check(&g, seed);
            prop_assert!(bad.is_empty(), "{}", bad.join("; "));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

#[test]
fn criterion_10_property_suite() {
    criterion("10", "property suite: identities, gamma bound, circle closure, metrics invariance", || {
        let start = Instant::now();
        run_property(200, 9, |g, seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let h = random_connected(&mut rng, 3, 0.5);
            identity_failures(g, &h, &mut rng)
        })?;
        run_property(100, 8, |g, _| metrics_failures(g))?;
        run_property(40, 7, |g, _| circle_closure_failures(g))?;
        let spent = start.elapsed();
        if spent > Duration::from_secs(15 * 60) {
            return Err(format!("took {spent:?}"));
        }
        Ok(())
    });
}
