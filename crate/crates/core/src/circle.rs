//! Circle graph recognition.
//!
//! A graph is a circle graph iff no member of its LC orbit contains one of the
//! three obstructions as an induced subgraph. An independent oracle enumerates
//! chord diagrams and compares interlacement graphs up to isomorphism.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, canonical_labeling, parse_graph6, Bits, CanonicalForm, Graph};
use crate::orbits::{orbit, Orbit, OrbitKind, DEFAULT_ORBIT_BUDGET};

/// True iff some vertex subset of `g` induces a graph isomorphic to `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    let k = h.order();
    let n = g.order();
    if k > n {
        return false;
    }
    let target = canonical_form(h);
    let edges = h.edge_count();
    let max_deg = (0..k).map(|v| h.degree(v)).max().unwrap_or(0);
    let found = subsets_of_size(n, k).any(|s| {
        // cheap filters before canonical comparison
        let rows = g.rows();
        let e: u32 = Bits(s).map(|v| (rows[v] & s).count_ones()).sum();
        if e as usize != 2 * edges {
            return false;
        }
        if Bits(s).map(|v| (rows[v] & s).count_ones() as usize).max().unwrap_or(0) != max_deg {
            return false;
        }
        canonical_form(&g.induced_subgraph(s)) == target
    });
    found
}

/// All `k`-subsets of `0..n` as masks, in increasing numeric order.
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit: u64 = 1u64 << n;
    let mut cur: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur as u32;
        if cur == 0 {
            done = true;
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
            if cur >= limit {
                done = true;
            }
        }
        Some(out)
    })
}

/// The three obstructions, as graph6 constants.
#[derive(Clone, Debug)]
pub struct ObstructionSet {
    graphs: [Graph; 3],
}

/// Wheel with a 5-cycle rim (order 6).
pub const W5_GRAPH6: &str = "E|fG";
/// 6-cycle with a hub joined to alternate cycle vertices (order 7).
pub const BW3_GRAPH6: &str = "FlEIG";
/// Wheel with a 7-cycle rim (order 8).
pub const W7_GRAPH6: &str = "G|eKMC";

impl ObstructionSet {
    pub fn new() -> Self {
        let parse = |s| parse_graph6(s).expect("obstruction constant is valid graph6");
        ObstructionSet { graphs: [parse(W5_GRAPH6), parse(BW3_GRAPH6), parse(W7_GRAPH6)] }
    }

    pub fn graphs(&self) -> &[Graph; 3] {
        &self.graphs
    }

    /// First obstruction contained in `g` as an induced subgraph.
    pub fn find_in(&self, g: &Graph) -> Option<&Graph> {
        self.graphs.iter().find(|h| contains_induced(g, h))
    }
}

impl Default for ObstructionSet {
    fn default() -> Self {
        Self::new()
    }
}

/// Circle verdict for an already enumerated LC orbit.
pub fn orbit_is_circle(o: &Orbit, obstructions: &ObstructionSet) -> bool {
    debug_assert_eq!(o.kind(), OrbitKind::Lc);
    o.graphs().all(|g| obstructions.find_in(&g).is_none())
}

/// Obstruction scan over the LC orbit of `g`.
pub fn is_circle_graph(g: &Graph) -> Result<bool> {
    is_circle_graph_with_budget(g, DEFAULT_ORBIT_BUDGET)
}

pub fn is_circle_graph_with_budget(g: &Graph, budget: usize) -> Result<bool> {
    let obstructions = ObstructionSet::new();
    // each component is handled separately: circle graphs are closed under
    // disjoint union and the obstructions are connected
    for comp in g.components() {
        let h = g.induced_subgraph(comp);
        if h.order() < 6 {
            continue;
        }
        let o = orbit(&h, OrbitKind::Lc, budget)?;
        if !orbit_is_circle(&o, &obstructions) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A double-occurrence word: every chord label appears exactly twice around the circle.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChordDiagram {
    word: Vec<u8>,
}

impl ChordDiagram {
    /// Labels are renumbered in order of first occurrence.
    pub fn new(word: &[u8]) -> Result<Self> {
        let mut map: HashMap<u8, u8> = HashMap::new();
        let mut counts: Vec<u8> = Vec::new();
        let mut out = Vec::with_capacity(word.len());
        for &c in word {
            let next = map.len() as u8;
            let id = *map.entry(c).or_insert(next);
            if id as usize == counts.len() {
                counts.push(0);
            }
            counts[id as usize] += 1;
            out.push(id);
        }
        if let Some(bad) = counts.iter().position(|&k| k != 2) {
            return Err(Error::ChordWord(format!("chord {bad} occurs {} times", counts[bad])));
        }
        if counts.len() > crate::graph::MAX_VERTICES {
            return Err(Error::TooManyVertices(counts.len()));
        }
        Ok(ChordDiagram { word: out })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(text.trim().as_bytes())
    }

    pub fn chords(&self) -> usize {
        self.word.len() / 2
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.word {
            write!(f, "{}", (b'a' + c) as char)?;
        }
        Ok(())
    }
}

impl fmt::Debug for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChordDiagram({self})")
    }
}

/// Chords are vertices; two are adjacent iff their endpoints alternate.
pub fn interlacement_graph(d: &ChordDiagram) -> Graph {
    interlacement_of_word(&d.word)
}

fn interlacement_of_word(word: &[u8]) -> Graph {
    let n = word.len() / 2;
    let mut first = [usize::MAX; 32];
    let mut ends = [(0usize, 0usize); 32];
    for (i, &c) in word.iter().enumerate() {
        let c = c as usize;
        if first[c] == usize::MAX {
            first[c] = i;
        } else {
            ends[c] = (first[c], i);
        }
    }
    let mut g = Graph::empty_unchecked(n);
    for (a, &(a0, a1)) in ends.iter().enumerate() {
        for (b, &(b0, b1)) in ends.iter().enumerate().skip(a + 1) {
            let inside = |x: usize| a0 < x && x < a1;
            if inside(b0) != inside(b1) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// Largest order accepted by the chord oracle.
pub const CHORD_ORACLE_MAX: usize = 8;

/// Relabel by first occurrence.
fn normalize(word: &mut [u8]) {
    let mut map = [u8::MAX; 32];
    let mut next = 0;
    for c in word.iter_mut() {
        if map[*c as usize] == u8::MAX {
            map[*c as usize] = next;
            next += 1;
        }
        *c = map[*c as usize];
    }
}

/// True when no rotation or reflection of the word, after relabelling,
/// is lexicographically smaller.
fn is_minimal_word(word: &[u8]) -> bool {
    let len = word.len();
    let mut buf = vec![0u8; len];
    for reflect in [false, true] {
        for r in 0..len {
            for (i, b) in buf.iter_mut().enumerate() {
                let j = if reflect { (len + r - i) % len } else { (r + i) % len };
                *b = word[j];
            }
            normalize(&mut buf);
            if buf.as_slice() < word {
                return false;
            }
        }
    }
    true
}

/// Visit every chord diagram on `n` chords up to rotation and reflection, in
/// lexicographic order of the normalized word. Stops early when `visit` returns false.
pub fn for_each_chord_diagram<F: FnMut(&[u8]) -> bool>(n: usize, mut visit: F) {
    fn rec<F: FnMut(&[u8]) -> bool>(word: &mut [u8], next: u8, visit: &mut F) -> bool {
        let Some(pos) = word.iter().position(|&c| c == u8::MAX) else {
            return if is_minimal_word(word) { visit(word) } else { true };
        };
        word[pos] = next;
        for partner in pos + 1..word.len() {
            if word[partner] != u8::MAX {
                continue;
            }
            word[partner] = next;
            let keep_going = rec(word, next + 1, visit);
            word[partner] = u8::MAX;
            if !keep_going {
                word[pos] = u8::MAX;
                return false;
            }
        }
        word[pos] = u8::MAX;
        true
    }
    let mut word = vec![u8::MAX; 2 * n];
    rec(&mut word, 0, &mut visit);
}

/// Search all chord diagrams on `g.order()` chords for one whose interlacement
/// graph is isomorphic to `g`.
pub fn realize_as_chords(g: &Graph) -> Result<Option<ChordDiagram>> {
    let n = g.order();
    if n > CHORD_ORACLE_MAX {
        return Err(Error::OracleTooLarge { order: n, limit: CHORD_ORACLE_MAX });
    }
    if n == 0 {
        return Ok(Some(ChordDiagram { word: Vec::new() }));
    }
    let target = canonical_form(g);
    let mut found = None;
    for_each_chord_diagram(n, |w| {
        if canonical_form(&interlacement_of_word(w)) == target {
            found = Some(ChordDiagram { word: w.to_vec() });
            false
        } else {
            true
        }
    });
    Ok(found)
}

/// Every circle graph of order `n` with one realizing diagram each, keyed by canonical form.
pub fn circle_graph_atlas(n: usize) -> Result<HashMap<CanonicalForm, ChordDiagram>> {
    if n > CHORD_ORACLE_MAX {
        return Err(Error::OracleTooLarge { order: n, limit: CHORD_ORACLE_MAX });
    }
    let mut atlas = HashMap::new();
    for_each_chord_diagram(n, |w| {
        let c = canonical_labeling(&interlacement_of_word(w)).graph;
        atlas.entry(CanonicalForm::from_canonical_graph(&c)).or_insert_with(|| ChordDiagram { word: w.to_vec() });
        true
    });
    Ok(atlas)
}

/// Whether the interlacement graph of `d` is isomorphic to `g`.
pub fn realizes(d: &ChordDiagram, g: &Graph) -> bool {
    canonical_form(&interlacement_graph(d)) == canonical_form(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::encode_graph6;

    fn obstruction_edges() -> [Vec<(usize, usize)>; 3] {
        let wheel = |rim: usize| {
            let mut e: Vec<_> = (1..=rim).map(|v| (0, v)).collect();
            e.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
            e
        };
        // hub 0; cycle 1..=6; hub joined to 1, 3, 5
        let mut bw3: Vec<_> = (0..6).map(|i| (1 + i, 1 + (i + 1) % 6)).collect();
        bw3.extend([(0, 1), (0, 3), (0, 5)]);
        [wheel(5), bw3, wheel(7)]
    }

    #[test]
    fn obstruction_constants_match_construction() {
        let built = obstruction_edges();
        let set = ObstructionSet::new();
        for (edges, g) in built.iter().zip(set.graphs()) {
            let n = g.order();
            let h = Graph::from_edges(n, edges).unwrap();
            assert_eq!(canonical_form(&h), canonical_form(g), "{}", encode_graph6(&h));
            assert!(g.is_connected());
        }
    }

    #[test]
    fn subsets_enumeration() {
        assert_eq!(subsets_of_size(5, 2).count(), 10);
        assert_eq!(subsets_of_size(4, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(subsets_of_size(3, 3).collect::<Vec<_>>(), vec![0b111]);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert_eq!(subsets_of_size(32, 31).count(), 32);
    }

    #[test]
    fn induced_containment() {
        let w5 = Graph::wheel(5).unwrap();
        assert!(contains_induced(&w5, &Graph::cycle(5).unwrap()));
        assert!(!contains_induced(&Graph::complete(4).unwrap(), &Graph::cycle(4).unwrap()));
        assert!(contains_induced(&w5, &w5));
        assert!(!contains_induced(&Graph::cycle(4).unwrap(), &w5));
    }

    #[test]
    fn interlacement_examples() {
        let g = |s: &str| interlacement_graph(&ChordDiagram::parse(s).unwrap());
        assert_eq!(g("aabb"), Graph::empty(2).unwrap());
        assert_eq!(g("abab"), Graph::complete(2).unwrap());
        assert_eq!(g("abcabc"), Graph::complete(3).unwrap());
        assert!(ChordDiagram::parse("aab").is_err());
        assert!(ChordDiagram::parse("abca").is_err());
    }

    #[test]
    fn chord_realization() {
        let d = realize_as_chords(&Graph::cycle(5).unwrap()).unwrap().unwrap();
        assert!(realizes(&d, &Graph::cycle(5).unwrap()));
        assert!(realize_as_chords(&Graph::wheel(5).unwrap()).unwrap().is_none());
        assert!(realize_as_chords(&Graph::empty(9).unwrap()).is_err());
    }

    #[test]
    fn obstructions_are_not_circle() {
        for h in ObstructionSet::new().graphs() {
            assert!(!is_circle_graph(h).unwrap());
        }
        for n in 1..8 {
            assert!(is_circle_graph(&Graph::empty(n).unwrap()).unwrap());
            assert!(is_circle_graph(&Graph::complete(n).unwrap()).unwrap());
        }
    }

    #[test]
    fn atlas_counts_small_orders() {
        // all graphs of order <= 5 are circle graphs
        assert_eq!(circle_graph_atlas(4).unwrap().len(), 11);
        assert_eq!(circle_graph_atlas(5).unwrap().len(), 34);
    }
}
