//! Counting sequences derived from orbit classifications: the Euler transform,
//! distinct polynomial counts and the unimodality scan.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use std::collections::{HashMap, HashSet};

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::graph::{canonical_form, CanonicalForm, Graph};
use crate::interlace::{coefficients_unimodal, shifted_q, to_polynomial, InterlaceCache, PolyKind};
use crate::orbits::{orbit, OrbitKind, DEFAULT_ORBIT_BUDGET};
use crate::poly::Polynomial;

use super::classify::{form_str, Classification};
use super::generate::{canonical_codes, unpack, MAX_GENERATED_ORDER};

/// Counts of multisets of connected objects: `c[k]` is the number of connected
/// objects of size `k + 1`, and the result holds the totals for sizes `1..=c.len()`.
pub fn euler_transform(c: &[u64]) -> Result<Vec<u64>> {
    let len = c.len();
    let mut a = vec![0u128; len + 1];
    for (n, an) in a.iter_mut().enumerate().skip(1) {
        *an = (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| d as u128 * c[d - 1] as u128).sum();
    }
    let mut t = vec![0u128; len + 1];
    t[0] = 1;
    for n in 1..=len {
        let mut s = a[n];
        for k in 1..n {
            s += a[k] * t[n - k];
        }
        if !s.is_multiple_of(n as u128) {
            return Err(Error::Domain(format!("Euler transform is not integral at n={n}")));
        }
        t[n] = s / n as u128;
    }
    t[1..].iter().map(|&x| u64::try_from(x).map_err(|_| Error::Domain("Euler transform overflow".into()))).collect()
}

/// Distinct polynomials of one order, each with one canonical graph carrying it.
pub type PolynomialSet = BTreeMap<Polynomial, CanonicalForm>;

/// Distinct orbit polynomials of a classification of connected graphs.
pub fn distinct_polynomials(c: &Classification) -> PolynomialSet {
    let mut set = PolynomialSet::new();
    for r in &c.orbits {
        set.entry(r.polynomial.clone()).or_insert_with(|| r.representative.clone());
    }
    set
}

/// Given the distinct polynomials of connected graphs of orders `1..=N`
/// (`connected[k - 1]` for order `k`), the distinct polynomials of all graphs
/// of each order. Both polynomials are multiplicative over components.
pub fn product_closure(connected: &[PolynomialSet]) -> Vec<PolynomialSet> {
    let max = connected.len();
    let mut all: Vec<PolynomialSet> = Vec::with_capacity(max + 1);
    all.push(PolynomialSet::from([(
        Polynomial::one(),
        CanonicalForm::from_canonical_graph(&Graph::empty_unchecked(0)),
    )]));
    for n in 1..=max {
        let mut set = PolynomialSet::new();
        for k in 1..=n {
            for (p, pg) in &connected[k - 1] {
                for (r, rg) in &all[n - k] {
                    let prod = p * r;
                    if set.contains_key(&prod) {
                        continue;
                    }
                    let g = pg.to_graph().disjoint_union(&rg.to_graph()).expect("order within bounds");
                    set.insert(prod, canonical_form(&g));
                }
            }
        }
        all.push(set);
    }
    all.remove(0);
    all
}

/// A polynomial whose coefficients `a_1, a_2, ...` fail to be unimodal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonUnimodal {
    pub polynomial: Polynomial,
    /// `a_1, ..., a_n`, zero padded.
    pub coefficients: Vec<String>,
    /// Connected isomorphism classes carrying the polynomial; zero for
    /// polynomials that only occur on disconnected graphs.
    pub graphs: usize,
    /// Orbits (ELC for q and `x q(x+1)`, LC for Q) among those classes.
    pub orbits: usize,
    /// Least connected carrier, or a disconnected one when no connected graph carries it.
    #[serde(with = "form_str")]
    pub representative: CanonicalForm,
}

/// Non-unimodal q, Q and `x q(x+1)` among all graphs of one order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct UnimodalityReport {
    pub n: usize,
    pub lower_q: Vec<NonUnimodal>,
    pub upper_q: Vec<NonUnimodal>,
    pub shifted_q: Vec<NonUnimodal>,
    /// Distinct q and Q among connected graphs of order `n`.
    pub distinct_lower_q: usize,
    pub distinct_upper_q: usize,
}

impl UnimodalityReport {
    pub fn is_clean(&self) -> bool {
        self.lower_q.is_empty() && self.upper_q.is_empty() && self.shifted_q.is_empty()
    }
}

/// Graphs carrying one polynomial. `carriers` is only filled for flagged polynomials.
#[derive(Clone, Debug, Default)]
struct Tally {
    graphs: usize,
    least: Option<CanonicalForm>,
    carriers: Vec<CanonicalForm>,
}

impl Tally {
    fn add(&mut self, f: &CanonicalForm, keep: bool) {
        self.graphs += 1;
        if self.least.as_ref().is_none_or(|l| f < l) {
            self.least = Some(f.clone());
        }
        if keep {
            self.carriers.push(f.clone());
        }
    }

    fn merge(&mut self, other: Tally) {
        self.graphs += other.graphs;
        self.carriers.extend(other.carriers);
        if let Some(l) = other.least {
            if self.least.as_ref().is_none_or(|m| l < *m) {
                self.least = Some(l);
            }
        }
    }
}

type Tallies = HashMap<Vec<u64>, Tally>;

fn flagged(c: &[u64]) -> bool {
    let p = to_polynomial(c);
    !coefficients_unimodal(&p) || !coefficients_unimodal(&shifted_q(&p))
}

/// q and Q of every connected graph of order `n`, grouped by polynomial.
fn tally(n: usize, codes: &[u64], cache: &InterlaceCache) -> (Tallies, Tallies) {
    let merge = |mut a: Tallies, b: Tallies| {
        for (k, t) in b {
            a.entry(k).or_default().merge(t);
        }
        a
    };
    codes
        .par_iter()
        .fold(
            || (Tallies::new(), Tallies::new()),
            |(mut lo, mut up), &code| {
                let g = unpack(n, code);
                if !g.is_connected() {
                    return (lo, up);
                }
                let f = &CanonicalForm::from_canonical_graph(&g);
                for (kind, table) in [(PolyKind::LowerQ, &mut lo), (PolyKind::UpperQ, &mut up)] {
                    let c = cache.coefficients(&g, kind);
                    let keep = flagged(&c);
                    table.entry(c).or_default().add(f, keep);
                }
                (lo, up)
            },
        )
        .reduce(|| (Tallies::new(), Tallies::new()), |a, b| (merge(a.0, b.0), merge(a.1, b.1)))
}

fn polynomial_set(t: &Tallies) -> PolynomialSet {
    t.iter().map(|(c, t)| (to_polynomial(c), t.least.clone().expect("tallies are non-empty"))).collect()
}

/// Evaluate q and Q on every graph of orders `1..=n` and report the
/// non-unimodal ones of order `n`, including disconnected graphs through
/// products of connected polynomials.
pub fn unimodality_scan(n: usize) -> Result<UnimodalityReport> {
    unimodality_scan_with(n, DEFAULT_ORBIT_BUDGET)
}

pub fn unimodality_scan_with(n: usize, budget: usize) -> Result<UnimodalityReport> {
    if n == 0 || n > MAX_GENERATED_ORDER {
        return Err(Error::Domain(format!("unimodality scan needs 1 <= n <= {MAX_GENERATED_ORDER}")));
    }
    let cache = InterlaceCache::with_memo_limit(n - 1);
    let mut lower_sets = Vec::new();
    let mut upper_sets = Vec::new();
    let mut top = None;
    for k in 1..=n {
        let codes = canonical_codes(k)?;
        let (lo, up) = tally(k, &codes, &cache);
        lower_sets.push(polynomial_set(&lo));
        upper_sets.push(polynomial_set(&up));
        if k == n {
            top = Some((lo, up));
        }
    }
    let (lo, up) = top.expect("n >= 1");
    let lower_all = product_closure(&lower_sets);
    let upper_all = product_closure(&upper_sets);

    let mut report =
        UnimodalityReport { n, distinct_lower_q: lo.len(), distinct_upper_q: up.len(), ..Default::default() };
    for (p, rep) in &lower_all[n - 1] {
        if !coefficients_unimodal(p) {
            report.lower_q.push(entry(n, p.clone(), p, rep, &lo, OrbitKind::Elc, budget)?);
        }
        let s = shifted_q(p);
        if !coefficients_unimodal(&s) {
            report.shifted_q.push(entry(n, s, p, rep, &lo, OrbitKind::Elc, budget)?);
        }
    }
    for (p, rep) in &upper_all[n - 1] {
        if !coefficients_unimodal(p) {
            report.upper_q.push(entry(n, p.clone(), p, rep, &up, OrbitKind::Lc, budget)?);
        }
    }
    Ok(report)
}

fn entry(
    n: usize,
    shown: Polynomial,
    p: &Polynomial,
    product_rep: &CanonicalForm,
    connected: &Tallies,
    kind: OrbitKind,
    budget: usize,
) -> Result<NonUnimodal> {
    let key: Vec<u64> = p.coeffs().iter().map(|c| c.to_u64().expect("non-negative coefficient")).collect();
    let (graphs, orbits, representative) = match connected.get(&key) {
        Some(t) if !t.carriers.is_empty() => {
            let mut carriers = t.carriers.clone();
            carriers.sort_unstable();
            let mut seen: HashSet<CanonicalForm> = HashSet::new();
            let mut orbits = 0;
            for c in &carriers {
                if seen.contains(c) {
                    continue;
                }
                seen.extend(orbit(&c.to_graph(), kind, budget)?.members().iter().cloned());
                orbits += 1;
            }
            (t.graphs, orbits, carriers[0].clone())
        }
        // only products of smaller components carry it
        _ => (0, 0, product_rep.clone()),
    };
    Ok(NonUnimodal {
        coefficients: shown.padded_tail(n).iter().map(BigInt::to_string).collect(),
        polynomial: shown,
        graphs,
        orbits,
        representative,
    })
}

/// Check of `t_n = c_n + t_{n-1}` for `n >= 2`; entry `i` refers to order `i + 2`.
pub fn successor_identity(c: &[u64], t: &[u64]) -> Vec<bool> {
    (1..c.len().min(t.len())).map(|i| t[i] == c[i] + t[i - 1]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_transform_examples() {
        assert_eq!(euler_transform(&[1]).unwrap(), vec![1]);
        assert_eq!(euler_transform(&[1, 1]).unwrap(), vec![1, 2]);
        assert!(euler_transform(&[]).unwrap().is_empty());
    }

    #[test]
    fn euler_transform_counts_all_graphs() {
        // connected graphs to all graphs, independently enumerated
        let connected = [1, 1, 2, 6, 21, 112, 853];
        let all = [1, 2, 4, 11, 34, 156, 1044];
        assert_eq!(euler_transform(&connected).unwrap(), all);
    }
}
