//! Shared helpers for the integration tests.
#![allow(dead_code)]

use std::path::Path;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use interlace::circle::{is_circle_graph, realize_as_chords, CHORD_ORACLE_MAX};
use interlace::codes::{self, q4_upper_bound};
use interlace::interlace::{
    count_induced_eulerian, count_odd_pm_subgraphs, duplication_identity, interlace_with_pivots,
    odd_quotient_check_minus_one, rank_corank_check,
};
use interlace::{interlace_q, interlace_upper_q, parse_graph6, Graph, InterlaceCache, PolyKind, Polynomial};

pub fn g6(text: &str) -> Graph {
    parse_graph6(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn pow(base: u32, e: usize) -> BigInt {
    BigInt::from(base).pow(e as u32)
}

/// Connected graph on `n` vertices: a random spanning tree plus each other pair
/// with probability `density`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, density: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        edges.push((order[i], order[rng.gen_range(0..i)]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup_by(|a, b| (a.0.min(a.1), a.0.max(a.1)) == (b.0.min(b.1), b.0.max(b.1)));
    Graph::from_edges(n, &edges).expect("valid edges")
}

/// Connected graph from raw parent choices and pair bits, for property tests.
pub fn connected_from_bits(n: usize, parents: &[usize], pairs: &[bool]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (parents[v - 1] % v, v)).collect();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if pairs[k] && !edges.contains(&(u, v)) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

/// Every identity of the identity suite that fails on `g`; `other` is a second
/// graph used for the product rule.
pub fn identity_failures<R: Rng>(g: &Graph, other: &Graph, rng: &mut R) -> Vec<String> {
    let n = g.order();
    let mut bad = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            bad.push(format!("{what} fails on {g}"));
        }
    };
    let cache = InterlaceCache::new();
    let q = cache.q(g);
    let upper = cache.upper_q(g);

    check(q.evaluate_i64(2) == pow(2, n), "q(2) = 2^n");
    check(upper.evaluate_i64(3) == pow(3, n), "Q(3) = 3^n");
    check(rank_corank_check(g).holds(n), "|q(-1)| = 2^(n - rank)");
    let eulerian = count_induced_eulerian(g).unwrap();
    check(upper.evaluate_i64(4) == pow(2, n) * eulerian, "Q(4) = 2^n * induced Eulerian count");
    check(q.evaluate_i64(1) == BigInt::from(count_odd_pm_subgraphs(g).unwrap()), "q(1) = odd matching count");
    check(odd_quotient_check_minus_one(g).is_ok(), "q(3)/q(-1) odd integer");

    for (u, v) in g.edges().collect::<Vec<_>>() {
        let h = g.edge_local_complement(u, v).unwrap();
        check(cache.q(&h) == q, "q invariant under ELC");
        check(h.edge_local_complement(u, v).unwrap() == *g, "(g^uv)^uv = g");
        let luvu = g.local_complement(u).unwrap().local_complement(v).unwrap().local_complement(u).unwrap();
        check(h == luvu, "g^uv = g*u*v*u");
    }
    for v in 0..n {
        let h = g.local_complement(v).unwrap();
        check(cache.upper_q(&h) == upper, "Q invariant under LC");
        check(h.local_complement(v).unwrap() == *g, "(g*v)*v = g");
        let (lhs, rhs) = duplication_identity(g, v).unwrap();
        check(lhs == rhs, "duplication identity");
    }

    let union = g.disjoint_union(other).unwrap();
    check(cache.q(&union) == &q * &cache.q(other), "q multiplicative");
    check(cache.upper_q(&union) == &upper * &cache.upper_q(other), "Q multiplicative");

    for kind in [PolyKind::LowerQ, PolyKind::UpperQ] {
        let mut random_edge = |h: &Graph| {
            let e: Vec<_> = h.edges().collect();
            let (a, b) = e[rng.gen_range(0..e.len())];
            if rng.gen_bool(0.5) {
                (a, b)
            } else {
                (b, a)
            }
        };
        let direct = interlace_with_pivots(g, kind, &mut random_edge).unwrap();
        check(direct == cache.polynomial(g, kind), "edge-choice independence");
    }
    bad
}

/// Circle status agrees with the chord-diagram oracle and is constant along LC moves.
pub fn circle_closure_failures(g: &Graph) -> Vec<String> {
    let mut bad = Vec::new();
    let here = is_circle_graph(g).unwrap();
    if g.order() <= CHORD_ORACLE_MAX.min(6) && realize_as_chords(g).unwrap().is_some() != here {
        bad.push(format!("chord oracle disagrees on {g}"));
    }
    for v in 0..g.order() {
        if is_circle_graph(&g.local_complement(v).unwrap()).unwrap() != here {
            bad.push(format!("circle status changes under LC at {v} on {g}"));
        }
    }
    bad
}

/// Code metrics are the same for `g` and each of its local complements, and
/// Q(G,4) respects the gamma bound.
pub fn metrics_failures(g: &Graph) -> Vec<String> {
    let mut bad = Vec::new();
    let m = codes::metrics(g).unwrap();
    for v in 0..g.order() {
        let h = g.local_complement(v).unwrap();
        if codes::metrics(&h).unwrap() != m {
            bad.push(format!("metrics change under LC at {v} on {g}"));
        }
    }
    let delta = m.delta.expect("strict metrics compute delta");
    if delta == 0 {
        return bad;
    }
    let q4 = interlace_upper_q(g).evaluate_i64(4);
    let bound = q4_upper_bound(g.order(), delta).unwrap();
    if q4 > bound.floor {
        bad.push(format!("Q(G,4) above the gamma bound on {g}"));
    }
    bad
}

pub fn coefficient_vec(p: &Polynomial) -> Vec<i64> {
    p.coeffs().iter().map(|c| c.try_into().unwrap()).collect()
}

pub fn q_of(text: &str) -> Vec<i64> {
    coefficient_vec(&interlace_q(&g6(text)))
}

pub fn data_file(name: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name);
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}
