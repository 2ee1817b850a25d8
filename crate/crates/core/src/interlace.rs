//! The interlace polynomials q (pivot recursion) and Q (three-term recursion),
//! brute-force oracles for their evaluations, and the vertex duplication and
//! clique substitution identities.

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, canonical_labeling, gf2_rank, Bits, CanonicalForm, Graph};
use crate::poly::Polynomial;

/// Which interlace polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PolyKind {
    /// `q`, invariant under ELC.
    #[serde(rename = "q")]
    LowerQ,
    /// `Q`, invariant under LC.
    #[serde(rename = "Q")]
    UpperQ,
}

impl fmt::Display for PolyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolyKind::LowerQ => "q",
            PolyKind::UpperQ => "Q",
        })
    }
}

/// Coefficients of q and Q are non-negative and bounded by `3^n`, so they fit
/// in `u64` for every order up to 32.
type Coeffs = Vec<u64>;

fn add_into(acc: &mut Coeffs, other: &[u64]) {
    if acc.len() < other.len() {
        acc.resize(other.len(), 0);
    }
    for (a, b) in acc.iter_mut().zip(other) {
        *a = a.checked_add(*b).expect("interlace coefficient overflow");
    }
}

fn mul(a: &[u64], b: &[u64]) -> Coeffs {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j].checked_add(x * y).expect("interlace coefficient overflow");
        }
    }
    out
}

fn x_pow(k: usize) -> Coeffs {
    let mut c = vec![0; k + 1];
    c[k] = 1;
    c
}

pub(crate) fn to_polynomial(c: &[u64]) -> Polynomial {
    Polynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
}

/// Memo table for q and Q keyed by the canonical form of each subproblem.
/// Safe to share between threads.
pub struct InterlaceCache {
    lower: RwLock<HashMap<CanonicalForm, Coeffs>>,
    upper: RwLock<HashMap<CanonicalForm, Coeffs>>,
    max_memo_order: usize,
}

impl Default for InterlaceCache {
    fn default() -> Self {
        Self::with_memo_limit(crate::graph::MAX_VERTICES)
    }
}

impl InterlaceCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Only subproblems of order at most `max_order` are remembered, which
    /// bounds memory when evaluating very many graphs of one larger order.
    pub fn with_memo_limit(max_order: usize) -> Self {
        InterlaceCache { lower: RwLock::default(), upper: RwLock::default(), max_memo_order: max_order }
    }

    /// Coefficients as machine integers, index = power.
    pub fn coefficients(&self, g: &Graph, kind: PolyKind) -> Vec<u64> {
        self.coeffs(g, kind)
    }

    pub fn polynomial(&self, g: &Graph, kind: PolyKind) -> Polynomial {
        to_polynomial(&self.coeffs(g, kind))
    }

    pub fn q(&self, g: &Graph) -> Polynomial {
        self.polynomial(g, PolyKind::LowerQ)
    }

    pub fn upper_q(&self, g: &Graph) -> Polynomial {
        self.polynomial(g, PolyKind::UpperQ)
    }

    /// Number of memoized subproblems of each kind.
    pub fn len(&self) -> (usize, usize) {
        (self.lower.read().unwrap().len(), self.upper.read().unwrap().len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == (0, 0)
    }

    fn table(&self, kind: PolyKind) -> &RwLock<HashMap<CanonicalForm, Coeffs>> {
        match kind {
            PolyKind::LowerQ => &self.lower,
            PolyKind::UpperQ => &self.upper,
        }
    }

    fn coeffs(&self, g: &Graph, kind: PolyKind) -> Coeffs {
        let n = g.order();
        if n == 0 {
            return vec![1];
        }
        let isolated = g.rows().iter().filter(|&&r| r == 0).count();
        if isolated == n {
            return x_pow(n);
        }
        if isolated > 0 {
            let keep = g.rows().iter().enumerate().filter(|(_, &r)| r != 0).fold(0, |m, (v, _)| m | bit(v));
            let mut rest = self.coeffs(&g.induced_subgraph(keep), kind);
            rest.splice(0..0, std::iter::repeat_n(0, isolated));
            return rest;
        }
        let comps = g.components();
        if comps.len() > 1 {
            return comps
                .iter()
                .map(|&c| self.coeffs(&g.induced_subgraph(c), kind))
                .reduce(|a, b| mul(&a, &b))
                .unwrap();
        }
        let c = canonical_labeling(g).graph;
        let key = CanonicalForm::from_canonical_graph(&c);
        if let Some(hit) = self.table(kind).read().unwrap().get(&key) {
            return hit.clone();
        }
        // no isolated vertices, so vertex 0 has a neighbour
        let u = 0;
        let v = c.neighbors(u).trailing_zeros() as usize;
        let mut acc = self.coeffs(&c.delete_vertex_unchecked(u), kind);
        let pivot = c.edge_local_complement_unchecked(u, v).delete_vertex_unchecked(u);
        add_into(&mut acc, &self.coeffs(&pivot, kind));
        if kind == PolyKind::UpperQ {
            let local = c.local_complement_unchecked(u).delete_vertex_unchecked(u);
            add_into(&mut acc, &self.coeffs(&local, kind));
        }
        if n <= self.max_memo_order {
            self.table(kind).write().unwrap().insert(key, acc.clone());
        }
        acc
    }
}

/// `q(g)` with a private memo table.
pub fn interlace_q(g: &Graph) -> Polynomial {
    InterlaceCache::new().q(g)
}

/// `Q(g)` with a private memo table.
pub fn interlace_upper_q(g: &Graph) -> Polynomial {
    InterlaceCache::new().upper_q(g)
}

pub fn interlace(g: &Graph, kind: PolyKind) -> Polynomial {
    InterlaceCache::new().polynomial(g, kind)
}

/// Direct unmemoized recursion. `pick` returns the edge `(u, v)` to expand on,
/// `u` being the vertex removed; it is only called on graphs with edges.
pub fn interlace_with_pivots<F>(g: &Graph, kind: PolyKind, pick: &mut F) -> Result<Polynomial>
where
    F: FnMut(&Graph) -> (usize, usize),
{
    if g.is_edgeless() {
        return Ok(Polynomial::x_pow(g.order()));
    }
    let (u, v) = pick(g);
    let mut acc = interlace_with_pivots(&g.delete_vertex(u)?, kind, pick)?;
    let pivot = g.edge_local_complement(u, v)?.delete_vertex_unchecked(u);
    acc = &acc + &interlace_with_pivots(&pivot, kind, pick)?;
    if kind == PolyKind::UpperQ {
        let local = g.local_complement_unchecked(u).delete_vertex_unchecked(u);
        acc = &acc + &interlace_with_pivots(&local, kind, pick)?;
    }
    Ok(acc)
}

/// `a_i <= a_{i+1}` up to some index and `a_i >= a_{i+1}` after it.
pub fn is_unimodal<T: Ord>(seq: &[T]) -> bool {
    let peak = seq.windows(2).position(|w| w[0] > w[1]);
    match peak {
        None => true,
        Some(k) => seq[k..].windows(2).all(|w| w[0] >= w[1]),
    }
}

/// Unimodality of `a_1, ..., a_d`; the constant term is ignored.
pub fn coefficients_unimodal(p: &Polynomial) -> bool {
    p.coeffs().get(1..).is_none_or(is_unimodal)
}

/// `x * q(x + 1)`.
pub fn shifted_q(q: &Polynomial) -> Polynomial {
    q.shift_argument_by_one().shift(1)
}

/// Largest order accepted by [`count_induced_eulerian`].
pub const EULERIAN_ORACLE_MAX: usize = 16;
/// Largest order accepted by [`count_odd_pm_subgraphs`].
pub const MATCHING_ORACLE_MAX: usize = 12;

/// Number of vertex subsets (including the empty set) inducing a subgraph with
/// all degrees even.
pub fn count_induced_eulerian(g: &Graph) -> Result<u64> {
    let n = g.order();
    if n > EULERIAN_ORACLE_MAX {
        return Err(Error::OracleTooLarge { order: n, limit: EULERIAN_ORACLE_MAX });
    }
    let rows = g.rows();
    let count = (0u32..1 << n).filter(|&s| Bits(s).all(|v| (rows[v] & s).count_ones().is_multiple_of(2))).count();
    Ok(count as u64)
}

/// Number of vertex subsets whose induced subgraph has an odd number of perfect
/// matchings; the empty set has exactly one (empty) matching.
pub fn count_odd_pm_subgraphs(g: &Graph) -> Result<u64> {
    let n = g.order();
    if n > MATCHING_ORACLE_MAX {
        return Err(Error::OracleTooLarge { order: n, limit: MATCHING_ORACLE_MAX });
    }
    let rows = g.rows();
    // matchings[s] = number of perfect matchings of the subgraph induced on s
    let mut matchings = vec![0u64; 1 << n];
    matchings[0] = 1;
    for s in 1u32..1 << n {
        if s.count_ones() % 2 == 1 {
            continue;
        }
        let v = s.trailing_zeros() as usize;
        let rest = s & !bit(v);
        matchings[s as usize] = Bits(rows[v] & rest).map(|w| matchings[(rest & !bit(w)) as usize]).sum();
    }
    Ok(matchings.iter().filter(|&&m| m % 2 == 1).count() as u64)
}

/// GF(2) rank of the adjacency matrix plus identity, together with `q(g, -1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCheck {
    pub rank: usize,
    pub value: BigInt,
}

impl RankCheck {
    /// `|q(g, -1)| == 2^(n - rank)`.
    pub fn holds(&self, n: usize) -> bool {
        self.value.abs() == BigInt::one() << (n - self.rank)
    }
}

pub fn rank_corank_check(g: &Graph) -> RankCheck {
    RankCheck { rank: gf2_rank(&g.adjacency_plus_identity()), value: interlace_q(g).evaluate_i64(-1) }
}

/// `q(g, 3) / q(g, 1)`, which must be an odd integer.
pub fn odd_quotient_check(g: &Graph) -> Result<BigInt> {
    odd_quotient(g, 1)
}

/// `q(g, 3) / q(g, -1)`, which must be an odd integer.
pub fn odd_quotient_check_minus_one(g: &Graph) -> Result<BigInt> {
    odd_quotient(g, -1)
}

fn odd_quotient(g: &Graph, at: i64) -> Result<BigInt> {
    let q = interlace_q(g);
    let (three, d) = (q.evaluate_i64(3), q.evaluate_i64(at));
    if d.is_zero() {
        return Err(Error::Contract(format!("q(G,{at}) is zero")));
    }
    let (quot, rem) = three.div_rem(&d);
    if !rem.is_zero() {
        return Err(Error::Contract(format!("q(G,{at}) = {d} does not divide q(G,3) = {three}")));
    }
    if quot.is_even() {
        return Err(Error::Contract(format!("q(G,3)/q(G,{at}) = {quot} is even")));
    }
    Ok(quot)
}

/// `(q(g'), (1 + x) q(g) - x q(g \ v))` where `g'` duplicates `v`.
pub fn duplication_identity(g: &Graph, v: usize) -> Result<(Polynomial, Polynomial)> {
    let dup = g.duplicate_vertex(v)?;
    let cache = InterlaceCache::new();
    let lhs = cache.q(&dup);
    let q = cache.q(g);
    let deleted = cache.q(&g.delete_vertex(v)?);
    let one_plus_x = Polynomial::from_i64s(&[1, 1]);
    let rhs = &(&one_plus_x * &q) - &deleted.shift(1);
    Ok((lhs, rhs))
}

/// `(q(g'), 2^(m-1) q(g))` where `g'` substitutes `v` by an `m`-clique.
///
/// The factor counts the `m - 1` vertices added next to `v`; an `m`-clique
/// substitution with `m = 1` leaves the graph unchanged.
pub fn substitution_identity(g: &Graph, v: usize, m: usize) -> Result<(Polynomial, Polynomial)> {
    let sub = g.substitute_clique(v, m)?;
    let cache = InterlaceCache::new();
    let lhs = cache.q(&sub);
    let rhs = cache.q(g).scale(&(BigInt::one() << (m - 1)));
    Ok((lhs, rhs))
}

/// Size of a maximum independent set.
pub fn independence_number(g: &Graph) -> usize {
    fn search(rows: &[u32], cand: u32, size: usize, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        // a vertex with at most one candidate neighbour can always be taken
        let mut pick = None;
        let mut branch = 0;
        let mut branch_deg = 0;
        for v in Bits(cand) {
            let d = (rows[v] & cand).count_ones();
            if d <= 1 {
                pick = Some(v);
                break;
            }
            if d > branch_deg {
                branch_deg = d;
                branch = v;
            }
        }
        if let Some(v) = pick {
            search(rows, cand & !bit(v) & !rows[v], size + 1, best);
            return;
        }
        search(rows, cand & !bit(branch) & !rows[branch], size + 1, best);
        search(rows, cand & !bit(branch), size, best);
    }
    let mut best = 0;
    search(g.rows(), g.vertex_mask(), 0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph6;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    fn wheel() -> Graph {
        Graph::wheel(5).unwrap()
    }

    #[test]
    fn q_examples() {
        for n in 1..6 {
            assert_eq!(interlace_q(&Graph::empty(n).unwrap()), Polynomial::x_pow(n));
        }
        assert_eq!(interlace_q(&Graph::complete(2).unwrap()), p(&[0, 2]));
        assert_eq!(interlace_q(&Graph::path(3).unwrap()), p(&[0, 2, 1]));
        assert_eq!(interlace_q(&Graph::complete(3).unwrap()), p(&[0, 4]));
        assert_eq!(interlace_q(&wheel()), p(&[0, 12, 10]));
    }

    #[test]
    fn upper_q_examples() {
        for n in 1..6 {
            assert_eq!(interlace_upper_q(&Graph::empty(n).unwrap()), Polynomial::x_pow(n));
        }
        assert_eq!(interlace_upper_q(&Graph::complete(2).unwrap()), p(&[0, 3]));
        assert_eq!(interlace_upper_q(&Graph::complete(3).unwrap()), p(&[0, 6, 1]));
        assert_eq!(interlace_upper_q(&wheel()), p(&[0, 108, 45]));
    }

    #[test]
    fn evaluations() {
        assert_eq!(interlace_q(&Graph::path(3).unwrap()).evaluate_i64(2), BigInt::from(8));
        assert_eq!(interlace_upper_q(&Graph::complete(3).unwrap()).evaluate_i64(3), BigInt::from(27));
        assert_eq!(interlace_upper_q(&wheel()).evaluate_i64(4), BigInt::from(1152));
    }

    #[test]
    fn unimodality() {
        assert!(!is_unimodal(&[2, 7, 6, 7, 4, 3, 2, 1, 0, 0]));
        assert!(!is_unimodal(&[2, 7, 6, 7, 6, 4, 3, 2, 1, 0, 0]));
        assert!(is_unimodal(&[1, 2, 2, 1]));
        assert!(is_unimodal(&[1]));
        assert!(is_unimodal::<i32>(&[]));
        assert!(is_unimodal(&[0, 0, 3, 5, 1, 0]));
        assert!(!is_unimodal(&[1, 0, 1]));
    }

    #[test]
    fn eulerian_oracle() {
        for n in 0..6 {
            assert_eq!(count_induced_eulerian(&Graph::empty(n).unwrap()).unwrap(), 1 << n);
        }
        assert_eq!(count_induced_eulerian(&Graph::complete(3).unwrap()).unwrap(), 5);
        assert_eq!(count_induced_eulerian(&wheel()).unwrap(), 18);
        assert!(count_induced_eulerian(&Graph::empty(17).unwrap()).is_err());
    }

    #[test]
    fn matching_oracle() {
        for n in 1..6 {
            assert_eq!(count_odd_pm_subgraphs(&Graph::empty(n).unwrap()).unwrap(), 1);
        }
        assert_eq!(count_odd_pm_subgraphs(&Graph::complete(2).unwrap()).unwrap(), 2);
        assert_eq!(count_odd_pm_subgraphs(&Graph::path(3).unwrap()).unwrap(), 3);
        assert!(count_odd_pm_subgraphs(&Graph::empty(13).unwrap()).is_err());
    }

    #[test]
    fn rank_checks() {
        for n in 1..6 {
            let r = rank_corank_check(&Graph::empty(n).unwrap());
            assert_eq!(r.rank, n);
            assert_eq!(r.value, BigInt::from(if n % 2 == 0 { 1 } else { -1 }));
            assert!(r.holds(n));
        }
        let k2 = rank_corank_check(&Graph::complete(2).unwrap());
        assert_eq!((k2.rank, k2.value.clone()), (1, BigInt::from(-2)));
        assert!(k2.holds(2));
        let p3 = rank_corank_check(&Graph::path(3).unwrap());
        assert_eq!((p3.rank, p3.value.clone()), (3, BigInt::from(-1)));
    }

    #[test]
    fn odd_quotients() {
        assert_eq!(odd_quotient_check(&Graph::path(3).unwrap()).unwrap(), BigInt::from(5));
        assert_eq!(odd_quotient_check(&Graph::complete(2).unwrap()).unwrap(), BigInt::from(3));
        assert_eq!(odd_quotient_check(&Graph::empty(4).unwrap()).unwrap(), BigInt::from(81));
        let p4 = Graph::path(4).unwrap();
        assert!(matches!(odd_quotient_check(&p4), Err(Error::Contract(_))));
        assert_eq!(odd_quotient_check_minus_one(&p4).unwrap(), BigInt::from(33));
        assert_eq!(odd_quotient_check_minus_one(&Graph::path(3).unwrap()).unwrap(), BigInt::from(-15));
    }

    #[test]
    fn duplication_examples() {
        let (l, r) = duplication_identity(&Graph::complete(2).unwrap(), 0).unwrap();
        assert_eq!(l, p(&[0, 2, 1]));
        assert_eq!(l, r);
        let (l, r) = duplication_identity(&Graph::empty(1).unwrap(), 0).unwrap();
        assert_eq!(l, p(&[0, 0, 1]));
        assert_eq!(l, r);
    }

    #[test]
    fn substitution_examples() {
        let e1 = Graph::empty(1).unwrap();
        let (l, r) = substitution_identity(&e1, 0, 3).unwrap();
        assert_eq!(l, p(&[0, 4]));
        assert_eq!(l, r);
        let (l, r) = substitution_identity(&wheel(), 2, 1).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&Graph::empty(7).unwrap()), 7);
        assert_eq!(independence_number(&Graph::complete(7).unwrap()), 1);
        assert_eq!(independence_number(&Graph::cycle(5).unwrap()), 2);
        assert_eq!(independence_number(&Graph::empty(0).unwrap()), 0);
        let petersen = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(independence_number(&petersen), 4);
    }

    #[test]
    fn pivot_recursion_matches_memo() {
        let g = parse_graph6("GhdGKC").unwrap();
        let mut first = |h: &Graph| h.edges().next().unwrap();
        let direct = interlace_with_pivots(&g, PolyKind::UpperQ, &mut first).unwrap();
        assert_eq!(direct, interlace_upper_q(&g));
    }
}
