//! Local complementation (LC), edge local complementation (ELC) and their orbits.

use std::collections::HashSet;
use std::fmt;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, canonical_form, canonical_labeling, Bits, CanonicalForm, Graph};
use crate::interlace::independence_number;

/// Default cap on the number of canonical members an orbit may reach.
pub const DEFAULT_ORBIT_BUDGET: usize = 10_000_000;

impl Graph {
    /// `g * v`: complement the subgraph induced on the neighbourhood of `v`.
    pub fn local_complement(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.local_complement_unchecked(v))
    }

    pub(crate) fn local_complement_unchecked(&self, v: usize) -> Graph {
        let nv = self.neighbors(v);
        let mut out = *self;
        for x in Bits(nv) {
            *out.row_mut(x) ^= nv & !bit(x);
        }
        out
    }

    /// `g^(uv)`: toggle every pair drawn from two different classes among
    /// "adjacent to u only", "adjacent to v only" and "adjacent to both",
    /// then swap the labels of `u` and `v`.
    pub fn edge_local_complement(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        Ok(self.edge_local_complement_unchecked(u, v))
    }

    pub(crate) fn edge_local_complement_unchecked(&self, u: usize, v: usize) -> Graph {
        let nu = self.neighbors(u) & !bit(v);
        let nv = self.neighbors(v) & !bit(u);
        let a = nu & !nv;
        let b = nv & !nu;
        let c = nu & nv;
        let mut out = *self;
        for x in Bits(a) {
            *out.row_mut(x) ^= b | c;
        }
        for x in Bits(b) {
            *out.row_mut(x) ^= a | c;
        }
        for x in Bits(c) {
            *out.row_mut(x) ^= a | b;
        }
        out.swap_labels(u, v);
        out
    }

    fn swap_labels(&mut self, u: usize, v: usize) {
        let n = self.order();
        let (bu, bv) = (bit(u), bit(v));
        for x in 0..n {
            let r = self.row_mut(x);
            let hu = *r & bu != 0;
            let hv = *r & bv != 0;
            if hu != hv {
                *r ^= bu | bv;
            }
        }
        let ru = *self.row_mut(u);
        let rv = *self.row_mut(v);
        *self.row_mut(u) = rv;
        *self.row_mut(v) = ru;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrbitKind {
    #[serde(rename = "LC")]
    Lc,
    #[serde(rename = "ELC")]
    Elc,
}

impl fmt::Display for OrbitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrbitKind::Lc => "LC",
            OrbitKind::Elc => "ELC",
        })
    }
}

/// Every graph reachable from `g` by one move of the given kind.
pub fn neighbours(g: &Graph, kind: OrbitKind) -> Vec<Graph> {
    match kind {
        OrbitKind::Lc => (0..g.order()).filter(|&v| g.degree(v) > 1).map(|v| g.local_complement_unchecked(v)).collect(),
        OrbitKind::Elc => g.edges().map(|(u, v)| g.edge_local_complement_unchecked(u, v)).collect(),
    }
}

/// A set of unlabelled graphs closed under LC or ELC.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    kind: OrbitKind,
    /// Sorted, so `members[0]` is the representative.
    members: Vec<CanonicalForm>,
}

impl Orbit {
    pub fn kind(&self) -> OrbitKind {
        self.kind
    }

    pub fn members(&self) -> &[CanonicalForm] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn order(&self) -> usize {
        self.members[0].order()
    }

    /// Lexicographically least canonical member.
    pub fn representative(&self) -> &CanonicalForm {
        &self.members[0]
    }

    pub fn contains(&self, form: &CanonicalForm) -> bool {
        self.members.binary_search(form).is_ok()
    }

    /// Canonically labelled member graphs.
    pub fn graphs(&self) -> impl Iterator<Item = Graph> + '_ {
        self.members.iter().map(CanonicalForm::to_graph)
    }

    /// One canonical graph6 line per member, preceded by a header line.
    pub fn write_dump<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "# kind={} n={} size={}", self.kind, self.order(), self.len())?;
        for m in &self.members {
            writeln!(out, "{m}")?;
        }
        Ok(())
    }
}

/// Breadth-first enumeration of the orbit of `g`, deduplicated by canonical form.
pub fn orbit(g: &Graph, kind: OrbitKind, budget: usize) -> Result<Orbit> {
    if g.order() == 0 {
        return Err(Error::Domain("orbits need at least one vertex".into()));
    }
    let start = canonical_labeling(g).graph;
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    seen.insert(CanonicalForm::from_canonical_graph(&start));
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for m in neighbours(h, kind) {
                let c = canonical_labeling(&m).graph;
                if seen.insert(CanonicalForm::from_canonical_graph(&c)) {
                    if seen.len() > budget {
                        return Err(Error::OrbitBudget(budget));
                    }
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    let mut members: Vec<_> = seen.into_iter().collect();
    members.sort_unstable();
    Ok(Orbit { kind, members })
}

pub fn lc_orbit(g: &Graph) -> Result<Orbit> {
    orbit(g, OrbitKind::Lc, DEFAULT_ORBIT_BUDGET)
}

pub fn elc_orbit(g: &Graph) -> Result<Orbit> {
    orbit(g, OrbitKind::Elc, DEFAULT_ORBIT_BUDGET)
}

/// Minimum vertex degree over all members (δ).
pub fn orbit_min_degree(o: &Orbit) -> usize {
    o.graphs().map(|g| g.min_degree()).min().unwrap_or(0)
}

/// Maximum independence number over all members.
pub fn orbit_max_independence(o: &Orbit) -> usize {
    o.graphs().map(|g| independence_number(&g)).max().unwrap_or(0)
}

/// True when every move from every member stays inside the orbit.
pub fn is_closed(o: &Orbit) -> bool {
    o.graphs().all(|g| neighbours(&g, o.kind).iter().all(|h| o.contains(&canonical_form(h))))
}
