mod common;

use num_bigint::BigInt;

use common::*;
use interlace::census::all_graph_forms;
use interlace::codes::{self, CodeType};
use interlace::interlace::{rank_corank_check, substitution_identity};
use interlace::{interlace_upper_q, Graph, Rational};

#[test]
fn sign_of_q_at_minus_one_follows_the_rank() {
    let mut against_order_parity = 0;
    for n in 1..=7 {
        for f in all_graph_forms(n).unwrap() {
            let g = f.to_graph();
            let r = rank_corank_check(&g);
            assert!(r.holds(n), "{f}");
            let expected = if r.rank.is_multiple_of(2) { 1 } else { -1 } * (BigInt::from(1) << (n - r.rank));
            assert_eq!(r.value, expected, "{f}");
            if (r.value.sign() == num_bigint::Sign::Minus) != (n % 2 == 1) {
                against_order_parity += 1;
            }
        }
    }
    assert!(against_order_parity > 0);
}

#[test]
fn clique_substitution_scales_by_power_of_two() {
    let p4 = Graph::path(4).unwrap();
    for v in 0..4 {
        for m in 1..=4 {
            let (lhs, rhs) = substitution_identity(&p4, v, m).unwrap();
            assert_eq!(lhs, rhs, "v={v} m={m}");
        }
    }
}

#[test]
fn fourteen_vertex_circulant() {
    let g = codes::parse_circulant("(00001011101000)").unwrap();
    assert_eq!(g.order(), 14);
    let q = interlace_upper_q(&g);
    assert_eq!(q.degree(), Some(4));
    assert_eq!(codes::q4_norm(&q, 14).unwrap(), BigInt::from(549));
}

#[test]
fn order_13_rows_without_delta() {
    for (file, deg_q, q4) in [("gamma13_1.txt", 4, 361), ("gamma13_2.txt", 5, 360)] {
        let g = codes::parse_adjacency_matrix(&data_file(file)).unwrap();
        let q = interlace_upper_q(&g);
        assert_eq!(q.degree(), Some(deg_q), "{file}");
        assert_eq!(codes::q4_norm(&q, 13).unwrap(), BigInt::from(q4), "{file}");
    }
}

#[test]
fn twelve_vertex_three_clique_graph() {
    // three 4-cliques joined by a Hamiltonian cycle avoiding clique edges
    let g = g6("K@OysMhs^S]_");
    let q = interlace_upper_q(&g);
    assert_eq!(q.degree(), Some(4));
    assert_eq!(codes::q4_norm(&q, 12).unwrap(), BigInt::from(234));
    assert_eq!(codes::cmf(&q, 12).unwrap(), Rational::new(BigInt::from(59049), BigInt::from(47447)).unwrap());
    assert_eq!(CodeType::of(&g), CodeType::II);
    assert_eq!(codes::metrics(&g).unwrap().delta, Some(5));
}

#[test]
fn paley_thirteen_is_regular() {
    let g = codes::paley_graph(13).unwrap();
    assert!((0..13).all(|v| g.degree(v) == 6));
    let b = codes::bordered_paley(13).unwrap();
    assert_eq!(b.order(), 14);
    assert_eq!(b.degree(13), 13);
}
