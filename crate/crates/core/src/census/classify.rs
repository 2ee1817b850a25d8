//! Partition of isomorphism classes into LC or ELC orbits, with per-orbit
//! invariants.

use std::collections::HashSet;
use std::hash::Hash;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::circle::{orbit_is_circle, ObstructionSet};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalForm, Graph};
use crate::interlace::{InterlaceCache, PolyKind};
use crate::orbits::{orbit, orbit_min_degree, OrbitKind};
use crate::poly::Polynomial;

use super::generate::{canonical_codes, pack, unpack};

/// Invariants of one orbit. `polynomial` is Q for LC orbits and q for ELC orbits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    #[serde(with = "form_str")]
    pub representative: CanonicalForm,
    pub size: usize,
    pub min_degree: usize,
    pub bipartite: bool,
    /// Only decided for LC orbits, which are closed under every circle-preserving move.
    pub circle: Option<bool>,
    pub polynomial: Polynomial,
}

impl OrbitRecord {
    pub fn representative_graph(&self) -> Graph {
        self.representative.to_graph()
    }

    /// Order of the member graphs.
    pub fn order(&self) -> usize {
        self.representative.order()
    }
}

pub(crate) mod form_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::graph::{canonical_form, parse_graph6, CanonicalForm};

    pub fn serialize<S: Serializer>(f: &CanonicalForm, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(f.as_str())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<CanonicalForm, D::Error> {
        let text = String::deserialize(d)?;
        let g = parse_graph6(&text).map_err(serde::de::Error::custom)?;
        Ok(canonical_form(&g))
    }
}

/// Orbits of one order, sorted by representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub n: usize,
    pub kind: OrbitKind,
    pub connected_only: bool,
    pub orbits: Vec<OrbitRecord>,
}

impl Classification {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    /// Number of isomorphism classes covered.
    pub fn class_count(&self) -> usize {
        self.orbits.iter().map(|o| o.size).sum()
    }

    pub fn polynomial_kind(&self) -> PolyKind {
        polynomial_kind(self.kind)
    }
}

pub(crate) fn polynomial_kind(kind: OrbitKind) -> PolyKind {
    match kind {
        OrbitKind::Lc => PolyKind::UpperQ,
        OrbitKind::Elc => PolyKind::LowerQ,
    }
}

/// Classify every graph of order `n` (connected ones only if asked).
pub fn classify_orbits(n: usize, kind: OrbitKind, connected_only: bool, budget: usize) -> Result<Classification> {
    let codes: Vec<u64> =
        canonical_codes(n)?.into_par_iter().filter(|&c| !connected_only || unpack(n, c).is_connected()).collect();
    let records =
        classify_seeds(codes, |f: &CanonicalForm| pack(&f.to_graph()), |&c: &u64| unpack(n, c), kind, budget)?;
    Ok(Classification { n, kind, connected_only, orbits: records })
}

/// Classify an arbitrary collection of graphs of one order.
pub fn classify_graphs<I>(graphs: I, kind: OrbitKind, budget: usize) -> Result<Classification>
where
    I: IntoIterator<Item = Graph>,
{
    let mut seeds: Vec<CanonicalForm> = graphs.into_iter().map(|g| canonical_form(&g)).collect();
    seeds.par_sort_unstable();
    seeds.dedup();
    let n = seeds.first().map_or(0, CanonicalForm::order);
    if seeds.iter().any(|s| s.order() != n) {
        return Err(Error::Domain("graphs of mixed orders cannot share a classification".into()));
    }
    let connected_only = seeds.iter().all(|s| s.to_graph().is_connected());
    let records = classify_seeds(seeds, CanonicalForm::clone, CanonicalForm::to_graph, kind, budget)?;
    Ok(Classification { n, kind, connected_only, orbits: records })
}

/// Seeds (sorted, distinct, canonical) are visited in order and skipped once an
/// earlier orbit has absorbed them. Orbits of a batch of seeds are expanded in
/// parallel and merged in seed order, so the result does not depend on the
/// number of workers.
fn classify_seeds<K, FK, FG>(
    seeds: Vec<K>,
    key_of: FK,
    graph_of: FG,
    kind: OrbitKind,
    budget: usize,
) -> Result<Vec<OrbitRecord>>
where
    K: Clone + Eq + Hash + Send + Sync,
    FK: Fn(&CanonicalForm) -> K + Sync,
    FG: Fn(&K) -> Graph + Sync,
{
    let obstructions = ObstructionSet::new();
    let batch = rayon::current_num_threads().max(1);
    let mut absorbed: HashSet<K> = HashSet::new();
    let mut records = Vec::new();
    let mut next = 0;
    while next < seeds.len() {
        let mut picked = Vec::with_capacity(batch);
        while next < seeds.len() && picked.len() < batch {
            if !absorbed.contains(&seeds[next]) {
                picked.push(&seeds[next]);
            }
            next += 1;
        }
        let results: Vec<Result<(OrbitRecord, Vec<K>)>> = picked
            .par_iter()
            .map(|s| {
                let o = orbit(&graph_of(s), kind, budget)?;
                let record = OrbitRecord {
                    representative: o.representative().clone(),
                    size: o.len(),
                    min_degree: orbit_min_degree(&o),
                    bipartite: o.graphs().any(|g| g.is_bipartite()),
                    circle: (kind == OrbitKind::Lc).then(|| orbit_is_circle(&o, &obstructions)),
                    polynomial: Polynomial::zero(),
                };
                Ok((record, o.members().iter().map(&key_of).collect()))
            })
            .collect();
        for (seed, r) in picked.into_iter().zip(results) {
            // a later seed in the batch may belong to an orbit merged just before it
            if absorbed.contains(seed) {
                continue;
            }
            let (record, members) = r?;
            absorbed.extend(members);
            records.push(record);
        }
    }

    let cache = InterlaceCache::new();
    let pk = polynomial_kind(kind);
    records.par_iter_mut().for_each(|r| r.polynomial = cache.polynomial(&r.representative_graph(), pk));
    records.sort_unstable_by(|a, b| a.representative.cmp(&b.representative));
    Ok(records)
}
