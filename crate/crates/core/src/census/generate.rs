//! Non-isomorphic graph generation by vertex extension.
//!
//! Every graph on `n` vertices is some graph on `n - 1` vertices plus one vertex
//! with an arbitrary neighbourhood, so extending each class representative by
//! every neighbourhood and deduplicating by canonical form yields each class
//! exactly once.
//!
//! Classes are held as packed upper triangles: bit `k` from the top of an
//! `n(n-1)/2`-bit word is the `k`-th graph6 data bit, so numeric order on codes
//! of one order is graph6 order on canonical forms.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{bit, canonical_labeling, CanonicalForm, Graph};

/// Largest order generated without external input.
pub const MAX_GENERATED_ORDER: usize = 10;

/// Largest order whose upper triangle fits a `u64`.
pub(crate) const PACKED_MAX_ORDER: usize = 11;

fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Packed upper triangle of `g`, which must have at most [`PACKED_MAX_ORDER`] vertices.
pub(crate) fn pack(g: &Graph) -> u64 {
    let n = g.order();
    debug_assert!(n <= PACKED_MAX_ORDER);
    let mut code = 0u64;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            code = code << 1 | u64::from(col & bit(i) != 0);
        }
    }
    code
}

pub(crate) fn unpack(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty_unchecked(n);
    let mut k = pairs(n);
    for j in 1..n {
        for i in 0..j {
            k -= 1;
            if code >> k & 1 == 1 {
                *g.row_mut(i) |= bit(j);
                *g.row_mut(j) |= bit(i);
            }
        }
    }
    g
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("order must be at least 1".into()));
    }
    if n > MAX_GENERATED_ORDER {
        return Err(Error::Domain(format!(
            "built-in generation stops at order {MAX_GENERATED_ORDER}; supply graph6 input for order {n}"
        )));
    }
    Ok(())
}

/// Packed canonical graphs of order `n`, one per class, sorted.
pub(crate) fn canonical_codes(n: usize) -> Result<Vec<u64>> {
    check_order(n)?;
    let mut level = vec![0u64];
    for k in 2..=n {
        level = extend(&level, k);
    }
    Ok(level)
}

fn extend(prev: &[u64], k: usize) -> Vec<u64> {
    let new = k - 1;
    let all = prev
        .par_chunks(64)
        .fold(HashSet::new, |mut out, chunk| {
            for &code in chunk {
                let base = unpack(new, code);
                for mask in 0u32..1 << new {
                    let mut g = base;
                    g.set_order(k);
                    *g.row_mut(new) = mask;
                    for w in crate::graph::Bits(mask) {
                        *g.row_mut(w) |= bit(new);
                    }
                    out.insert(pack(&canonical_labeling(&g).graph));
                }
            }
            out
        })
        .reduce(HashSet::new, |a, b| if a.len() < b.len() { merge(b, a) } else { merge(a, b) });
    let mut v: Vec<u64> = all.into_iter().collect();
    v.par_sort_unstable();
    v
}

fn merge(mut a: HashSet<u64>, b: HashSet<u64>) -> HashSet<u64> {
    a.extend(b);
    a
}

/// Canonical forms of all graphs of order `n`, sorted.
pub fn all_graph_forms(n: usize) -> Result<Vec<CanonicalForm>> {
    Ok(canonical_codes(n)?.par_iter().map(|&c| CanonicalForm::from_canonical_graph(&unpack(n, c))).collect())
}

/// One canonically labelled graph per isomorphism class of order `n`, in
/// canonical-form order.
pub fn generate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    Ok(canonical_codes(n)?.iter().map(|&c| unpack(n, c)).filter(|g| !connected_only || g.is_connected()).collect())
}
