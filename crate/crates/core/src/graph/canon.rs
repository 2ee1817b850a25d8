//! Canonical labelling by partition refinement and backtracking.
//!
//! The search tree individualizes vertices of the first non-singleton cell of an
//! equitable ordered partition. Each discrete leaf induces a relabelled graph;
//! the canonical graph is the least one over all leaves. Subtrees are pruned with
//! automorphisms discovered when two leaves yield the same relabelled graph.

use std::fmt;

use smallvec::SmallVec;

use super::graph6::encode_graph6_bytes;
use super::{bit, parse_graph6, Bits, Graph, MAX_VERTICES};

/// Canonical graph6 encoding of a graph. Equal iff the graphs are isomorphic;
/// ordered lexicographically by bytes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(SmallVec<[u8; 24]>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        // graph6 bytes are ASCII
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    pub fn order(&self) -> usize {
        (self.0[0] - 63) as usize
    }

    /// The canonically labelled graph.
    pub fn to_graph(&self) -> Graph {
        parse_graph6(self.as_str()).expect("canonical form is valid graph6")
    }

    pub(crate) fn from_canonical_graph(g: &Graph) -> Self {
        let mut bytes = SmallVec::new();
        encode_graph6_bytes(g, &mut bytes);
        CanonicalForm(bytes)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of canonical labelling: `labels[v]` is the canonical index of `v`.
#[derive(Clone, Copy, Debug)]
pub struct Canonical {
    pub graph: Graph,
    pub labels: [u8; MAX_VERTICES],
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm::from_canonical_graph(&canonical_labeling(g).graph)
}

pub fn canonical_labeling(g: &Graph) -> Canonical {
    let n = g.order();
    let mut labels = [0u8; MAX_VERTICES];
    if n <= 1 {
        return Canonical { graph: *g, labels };
    }
    let mut root = Partition::unit(n);
    let mut queue = Queue::default();
    queue.push(g.vertex_mask());
    root.refine(g.rows(), &mut queue);

    let mut search = Search { adj: g.rows(), n, first: None, best: None, autos: Vec::new(), path: SmallVec::new() };
    search.dfs(&root);
    let best = search.best.expect("search visits at least one leaf");
    labels[..n].copy_from_slice(&best.labels[..n]);
    let mut graph = Graph::empty_unchecked(n);
    for (i, &r) in best.rows[..n].iter().enumerate() {
        *graph.row_mut(i) = r;
    }
    Canonical { graph, labels }
}

#[derive(Clone, Copy)]
struct Partition {
    cells: [u32; MAX_VERTICES],
    len: usize,
}

#[derive(Default)]
struct Queue {
    items: SmallVec<[u32; 64]>,
    head: usize,
}

impl Queue {
    fn push(&mut self, s: u32) {
        self.items.push(s);
    }

    fn pop(&mut self) -> Option<u32> {
        let s = self.items.get(self.head).copied();
        self.head += 1;
        s
    }
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut cells = [0; MAX_VERTICES];
        cells[0] = super::low_mask(n);
        Partition { cells, len: 1 }
    }

    fn is_discrete(&self, n: usize) -> bool {
        self.len == n
    }

    /// Split cells by neighbour counts into splitter sets until the queue drains.
    /// Fragments are ordered by increasing count, which keeps the procedure
    /// equivariant under relabelling.
    fn refine(&mut self, adj: &[u32], queue: &mut Queue) {
        let mut counts = [0u8; MAX_VERTICES];
        while let Some(s) = queue.pop() {
            let mut i = 0;
            while i < self.len {
                let c = self.cells[i];
                if c & (c - 1) == 0 {
                    i += 1;
                    continue;
                }
                let mut seen = 0u64;
                for v in Bits(c) {
                    let k = (adj[v] & s).count_ones() as u8;
                    counts[v] = k;
                    seen |= 1u64 << k;
                }
                if seen & (seen - 1) == 0 {
                    i += 1;
                    continue;
                }
                let pieces = seen.count_ones() as usize;
                // shift the tail to make room
                self.cells.copy_within(i + 1..self.len, i + pieces);
                let mut slot = i;
                let mut ks = seen;
                while ks != 0 {
                    let k = ks.trailing_zeros() as u8;
                    ks &= ks - 1;
                    let mut frag = 0;
                    for v in Bits(c) {
                        if counts[v] == k {
                            frag |= bit(v);
                        }
                    }
                    self.cells[slot] = frag;
                    queue.push(frag);
                    slot += 1;
                }
                self.len += pieces - 1;
                i += pieces;
            }
            if self.len == adj.len() {
                break;
            }
        }
    }

    fn individualize(&self, cell: usize, v: usize) -> Self {
        let mut p = *self;
        let c = p.cells[cell];
        p.cells.copy_within(cell + 1..p.len, cell + 2);
        p.cells[cell] = bit(v);
        p.cells[cell + 1] = c & !bit(v);
        p.len += 1;
        p
    }
}

struct Leaf {
    labels: [u8; MAX_VERTICES],
    rows: [u32; MAX_VERTICES],
    path: SmallVec<[u8; MAX_VERTICES]>,
}

struct Search<'a> {
    adj: &'a [u32],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<[u8; MAX_VERTICES]>,
    path: SmallVec<[u8; MAX_VERTICES]>,
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    /// Returns `Some(level)` when the caller chain should unwind to the node at depth `level`.
    fn dfs(&mut self, p: &Partition) -> Option<usize> {
        let depth = self.path.len();
        if p.is_discrete(self.n) {
            return self.leaf(p);
        }
        let target = (0..p.len).find(|&i| p.cells[i].count_ones() > 1).expect("partition not discrete");
        let cell = p.cells[target];
        let mut explored = 0u32;
        let mut orbits: Option<(usize, [u8; MAX_VERTICES])> = None;
        for w in Bits(cell) {
            if explored != 0 {
                if orbits.as_ref().map(|(k, _)| *k) != Some(self.autos.len()) {
                    orbits = Some((self.autos.len(), self.stabilizer_orbits()));
                }
                let (_, root) = orbits.as_ref().unwrap();
                if Bits(explored).any(|x| root[x] == root[w]) {
                    continue;
                }
            }
            explored |= bit(w);
            let mut child = p.individualize(target, w);
            let mut queue = Queue::default();
            queue.push(bit(w));
            child.refine(self.adj, &mut queue);
            self.path.push(w as u8);
            let jump = self.dfs(&child);
            self.path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    /// Orbit representatives of the group generated by known automorphisms fixing
    /// the current path pointwise.
    fn stabilizer_orbits(&self) -> [u8; MAX_VERTICES] {
        let mut parent = [0u8; MAX_VERTICES];
        for (v, p) in parent.iter_mut().enumerate().take(self.n) {
            *p = v as u8;
        }
        fn find(parent: &mut [u8; MAX_VERTICES], mut x: u8) -> u8 {
            while parent[x as usize] != x {
                let up = parent[parent[x as usize] as usize];
                parent[x as usize] = up;
                x = up;
            }
            x
        }
        for a in &self.autos {
            if self.path.iter().any(|&v| a[v as usize] != v) {
                continue;
            }
            for (v, &av) in a.iter().enumerate().take(self.n) {
                let (x, y) = (find(&mut parent, v as u8), find(&mut parent, av));
                if x != y {
                    let (lo, hi) = if x < y { (x, y) } else { (y, x) };
                    parent[hi as usize] = lo;
                }
            }
        }
        let mut root = [0u8; MAX_VERTICES];
        for (v, r) in root.iter_mut().enumerate().take(self.n) {
            *r = find(&mut parent, v as u8);
        }
        root
    }

    fn leaf(&mut self, p: &Partition) -> Option<usize> {
        let n = self.n;
        let mut labels = [0u8; MAX_VERTICES];
        for i in 0..n {
            labels[p.cells[i].trailing_zeros() as usize] = i as u8;
        }
        let mut rows = [0u32; MAX_VERTICES];
        for v in 0..n {
            let mut r = 0;
            for w in Bits(self.adj[v]) {
                r |= bit(labels[w] as usize);
            }
            rows[labels[v] as usize] = r;
        }
        let leaf = Leaf { labels, rows, path: self.path.clone() };
        let Some(first) = &self.first else {
            self.first = Some(Leaf { path: leaf.path.clone(), ..leaf });
            self.best = Some(leaf);
            return None;
        };
        if first.rows[..n] == leaf.rows[..n] {
            let auto = automorphism(&first.labels, &leaf.labels, n);
            self.autos.push(auto);
            return Some(common_prefix(&first.path, &leaf.path));
        }
        let best = self.best.as_ref().unwrap();
        match leaf.rows[..n].cmp(&best.rows[..n]) {
            std::cmp::Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Equal => {
                let auto = automorphism(&best.labels, &leaf.labels, n);
                let level = common_prefix(&best.path, &leaf.path);
                self.autos.push(auto);
                Some(level)
            }
            std::cmp::Ordering::Greater => None,
        }
    }
}

/// `v -> a^{-1}(b(v))` for two labellings yielding the same graph.
fn automorphism(a: &[u8; MAX_VERTICES], b: &[u8; MAX_VERTICES], n: usize) -> [u8; MAX_VERTICES] {
    let mut a_inv = [0u8; MAX_VERTICES];
    for v in 0..n {
        a_inv[a[v] as usize] = v as u8;
    }
    let mut out = [0u8; MAX_VERTICES];
    for v in 0..n {
        out[v] = a_inv[b[v] as usize];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph6;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        fn rec(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if left.is_empty() {
                out.push(prefix.clone());
                return;
            }
            for i in 0..left.len() {
                let x = left.remove(i);
                prefix.push(x);
                rec(prefix, left, out);
                prefix.pop();
                left.insert(i, x);
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut (0..n).collect(), &mut out);
        out
    }

    #[test]
    fn p3_labelings_agree() {
        let a = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (1, 2)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        let forms: std::collections::HashSet<_> =
            permutations(3).iter().map(|p| canonical_form(&a.permute(p))).collect();
        assert_eq!(forms.len(), 1);
        assert_ne!(canonical_form(&a), canonical_form(&Graph::complete(3).unwrap()));
    }

    #[test]
    fn labelling_maps_to_canonical_graph() {
        let g = parse_graph6("Ch").unwrap();
        let c = canonical_labeling(&g);
        let perm: Vec<usize> = (0..g.order()).map(|v| c.labels[v] as usize).collect();
        assert_eq!(g.permute(&perm), c.graph);
    }

    #[test]
    fn symmetric_graphs() {
        for n in [2, 5, 12, 20, 32] {
            let k = Graph::complete(n).unwrap();
            assert_eq!(canonical_labeling(&k).graph, k);
            let e = Graph::empty(n).unwrap();
            assert_eq!(canonical_labeling(&e).graph, e);
        }
        let c = Graph::cycle(24).unwrap();
        let shifted: Vec<usize> = (0..24).map(|v| (v * 5) % 24).collect();
        assert_eq!(canonical_form(&c), canonical_form(&c.permute(&shifted)));
    }
}
