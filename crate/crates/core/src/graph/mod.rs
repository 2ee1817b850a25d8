//! Simple undirected graphs on at most 32 vertices, stored as adjacency bit rows.

mod canon;
mod gf2;
mod graph6;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use gf2::{gf2_rank, Gf2Matrix};
pub use graph6::{encode_graph6, parse_graph6, read_graph6_lines};

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order. Every adjacency row fits one `u32`.
pub const MAX_VERTICES: usize = 32;

/// A set of vertices as a bit mask.
pub type VertexSet = u32;

#[inline]
pub(crate) const fn bit(v: usize) -> u32 {
    1u32 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u32);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// Keep the bits of `row` selected by `mask`, packed down to the low end.
#[inline]
pub(crate) fn compress(row: u32, mask: u32) -> u32 {
    let mut out = 0u32;
    for (i, v) in Bits(mask).enumerate() {
        if row & bit(v) != 0 {
            out |= bit(i);
        }
    }
    out
}

/// Simple undirected graph. Row `v` of `adj` is the neighbourhood of `v`.
///
/// Rows at index `>= n` and bits at positions `>= n` are always zero, so the
/// derived equality and hash are those of the labelled graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph `E_n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Self::empty_unchecked(n))
    }

    pub(crate) const fn empty_unchecked(n: usize) -> Self {
        Graph { n: n as u8, adj: [0; MAX_VERTICES] }
    }

    /// Build from an edge list. Self-loops and out-of-range endpoints are rejected,
    /// repeated edges are harmless.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Adjacency(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Build from adjacency rows, validating symmetry and the zero diagonal.
    pub fn from_rows(rows: &[u32]) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut g = Self::empty_unchecked(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !low_mask(n) != 0 {
                return Err(Error::Adjacency(format!("row {u} has bits beyond column {n}")));
            }
            if row & bit(u) != 0 {
                return Err(Error::Adjacency(format!("nonzero diagonal at {u}")));
            }
            g.adj[u] = row;
        }
        for u in 0..n {
            for v in Bits(g.adj[u]) {
                if g.adj[v] & bit(u) == 0 {
                    return Err(Error::Adjacency(format!("asymmetric entry ({u}, {v})")));
                }
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    /// Cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    /// Wheel with a rim of length `rim`: hub is vertex 0, rim is `1..=rim`.
    pub fn wheel(rim: usize) -> Result<Self> {
        if rim < 3 {
            return Err(Error::Domain(format!("wheel rim must have at least 3 vertices, got {rim}")));
        }
        let mut edges: Vec<_> = (1..=rim).map(|v| (0, v)).collect();
        edges.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
        Self::from_edges(rim + 1, &edges)
    }

    /// Star `K_{1,leaves}` with the hub at vertex 0.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_edges(leaves + 1, &edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Adjacency rows, one per vertex.
    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n as usize]
    }

    /// Neighbourhood of `v` as a mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// All vertices as a mask.
    #[inline]
    pub fn vertex_mask(&self) -> VertexSet {
        low_mask(self.order())
    }

    pub fn is_edgeless(&self) -> bool {
        self.rows().iter().all(|&r| r == 0)
    }

    #[inline]
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    /// Grow to `n` vertices; new vertices are isolated.
    pub(crate) fn set_order(&mut self, n: usize) {
        debug_assert!(n >= self.order() && n <= MAX_VERTICES);
        self.n = n as u8;
    }

    #[inline]
    pub(crate) fn row_mut(&mut self, v: usize) -> &mut u32 {
        &mut self.adj[v]
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    /// Remove `v` and its edges. Survivors keep their relative order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.delete_vertex_unchecked(v))
    }

    pub(crate) fn delete_vertex_unchecked(&self, v: usize) -> Graph {
        let n = self.order();
        let below = low_mask(v);
        let squeeze = |r: u32| (r & below) | ((r >> 1) & !below);
        let mut out = Graph::empty_unchecked(n - 1);
        for u in 0..v {
            out.adj[u] = squeeze(self.adj[u]);
        }
        for u in v + 1..n {
            out.adj[u - 1] = squeeze(self.adj[u]);
        }
        out
    }

    /// Subgraph induced on `set`; vertices are renumbered in increasing order.
    /// Bits of `set` beyond the order are ignored.
    pub fn induced_subgraph(&self, set: VertexSet) -> Graph {
        let set = set & self.vertex_mask();
        let mut out = Graph::empty_unchecked(set.count_ones() as usize);
        for (i, v) in Bits(set).enumerate() {
            out.adj[i] = compress(self.adj[v], set);
        }
        out
    }

    /// Connected components as vertex masks, ordered by their lowest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let comp = self.reach(start);
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// Vertices reachable from `seed`.
    pub(crate) fn reach(&self, seed: VertexSet) -> VertexSet {
        let mut seen = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// The 0-vertex graph is treated as connected.
    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.reach(1) == self.vertex_mask()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut left = self.vertex_mask();
        while left != 0 {
            let start = left & left.wrapping_neg();
            // BFS layers alternate colours
            let mut colour = [0u32; 2];
            colour[0] = start;
            let mut frontier = start;
            let mut side = 0;
            let mut seen = start;
            while frontier != 0 {
                let mut next = 0;
                for v in Bits(frontier) {
                    if self.adj[v] & colour[side] != 0 {
                        return false;
                    }
                    next |= self.adj[v];
                }
                next &= !seen;
                side ^= 1;
                colour[side] |= next;
                seen |= next;
                frontier = next;
            }
            left &= !seen;
        }
        true
    }

    /// Every vertex has odd degree.
    pub fn is_anti_eulerian(&self) -> bool {
        self.rows().iter().all(|r| r.count_ones() % 2 == 1)
    }

    /// Every vertex has even degree.
    pub fn is_eulerian(&self) -> bool {
        self.rows().iter().all(|r| r.count_ones() % 2 == 0)
    }

    /// Relabel so that vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order());
        let mut out = Graph::empty_unchecked(self.order());
        for (v, &pv) in perm.iter().enumerate() {
            let mut row = 0;
            for w in Bits(self.adj[v]) {
                row |= bit(perm[w]);
            }
            out.adj[pv] = row;
        }
        out
    }

    /// Add a twin `v'` of `v` (same neighbourhood, not adjacent to `v`) as the new last vertex.
    pub fn duplicate_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let n = self.order();
        if n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(n + 1));
        }
        let mut out = *self;
        out.n += 1;
        let nv = self.adj[v];
        out.adj[n] = nv;
        for w in Bits(nv) {
            out.adj[w] |= bit(n);
        }
        Ok(out)
    }

    /// Replace `v` by an `m`-clique whose vertices all inherit the neighbourhood of `v`.
    /// Vertex `v` stays as one clique vertex; the other `m - 1` are appended.
    pub fn substitute_clique(&self, v: usize, m: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if m == 0 {
            return Err(Error::Domain("clique size must be at least 1".into()));
        }
        let n = self.order();
        if n + m - 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(n + m - 1));
        }
        let mut out = *self;
        out.n = (n + m - 1) as u8;
        let nv = self.adj[v];
        let clique = bit(v) | (low_mask(n + m - 1) & !low_mask(n));
        for c in Bits(clique) {
            out.adj[c] = nv | (clique & !bit(c));
            for w in Bits(nv) {
                out.adj[w] |= bit(c);
            }
        }
        Ok(out)
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order();
        let total = n + other.order();
        if total > MAX_VERTICES {
            return Err(Error::TooManyVertices(total));
        }
        let mut out = *self;
        out.n = total as u8;
        for (i, &r) in other.rows().iter().enumerate() {
            out.adj[n + i] = r << n;
        }
        Ok(out)
    }

    /// Adjacency matrix plus identity, as GF(2) rows.
    pub fn adjacency_plus_identity(&self) -> Gf2Matrix {
        let rows = self.rows().iter().enumerate().map(|(v, &r)| r | bit(v)).collect();
        Gf2Matrix::new(rows, self.order())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} ", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_graph6(self))
    }
}
