//! In-memory and on-disk reuse of connected-graph orbit classifications.
//!
//! Each classification is written as a sorted file of orbit representatives,
//! `<kind>-n<order>.g6`, next to a JSON sidecar with the per-orbit records.
//! A run interrupted between orders picks up from the last completed one.

use std::collections::HashMap;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::read_graph6_lines;
use crate::orbits::{OrbitKind, DEFAULT_ORBIT_BUDGET};

use super::classify::{classify_graphs, classify_orbits, Classification};
use super::generate::MAX_GENERATED_ORDER;

/// Source of connected-graph classifications, computed on first use.
pub struct Census {
    dir: Option<PathBuf>,
    budget: usize,
    inputs: HashMap<usize, PathBuf>,
    loaded: HashMap<(usize, OrbitKind), Classification>,
}

impl Default for Census {
    fn default() -> Self {
        Self::new()
    }
}

impl Census {
    /// Memory only.
    pub fn new() -> Self {
        Census { dir: None, budget: DEFAULT_ORBIT_BUDGET, inputs: HashMap::new(), loaded: HashMap::new() }
    }

    /// Persist results under `dir`, reusing any found there.
    pub fn with_store<P: AsRef<Path>>(dir: P) -> Result<Self> {
        fs::create_dir_all(dir.as_ref()).map_err(|e| io_error(dir.as_ref(), e))?;
        Ok(Census { dir: Some(dir.as_ref().to_path_buf()), ..Self::new() })
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    /// Use the connected graphs in a graph6 file for order `n` instead of
    /// generating them; needed above the built-in generation limit.
    pub fn with_input<P: AsRef<Path>>(mut self, n: usize, path: P) -> Self {
        self.inputs.insert(n, path.as_ref().to_path_buf());
        self
    }

    /// Connected-graph classification for order `n`.
    pub fn classification(&mut self, n: usize, kind: OrbitKind) -> Result<&Classification> {
        if !self.loaded.contains_key(&(n, kind)) {
            let c = match self.load(n, kind)? {
                Some(c) => c,
                None => {
                    let c = self.compute(n, kind)?;
                    self.save(&c)?;
                    c
                }
            };
            self.loaded.insert((n, kind), c);
        }
        Ok(&self.loaded[&(n, kind)])
    }

    /// Classifications for orders `1..=max`.
    pub fn classifications(&mut self, max: usize, kind: OrbitKind) -> Result<Vec<Classification>> {
        (1..=max).map(|n| self.classification(n, kind).cloned()).collect()
    }

    fn compute(&self, n: usize, kind: OrbitKind) -> Result<Classification> {
        if let Some(path) = self.inputs.get(&n) {
            let text = fs::read(path).map_err(|e| io_error(path, e))?;
            let mut graphs = Vec::new();
            for g in read_graph6_lines(text.as_slice()) {
                let g = g.map_err(|(line, e)| Error::Domain(format!("{}:{line}: {e}", path.display())))?;
                if g.order() != n {
                    return Err(Error::Domain(format!(
                        "{} holds a graph of order {}, expected {n}",
                        path.display(),
                        g.order()
                    )));
                }
                if g.is_connected() {
                    graphs.push(g);
                }
            }
            let mut c = classify_graphs(graphs, kind, self.budget)?;
            c.n = n;
            c.connected_only = true;
            return Ok(c);
        }
        if n > MAX_GENERATED_ORDER {
            return Err(Error::Domain(format!("order {n} needs a graph6 input file")));
        }
        classify_orbits(n, kind, true, self.budget)
    }

    fn paths(&self, n: usize, kind: OrbitKind) -> Option<(PathBuf, PathBuf)> {
        let dir = self.dir.as_ref()?;
        let stem = format!("{}-n{n}", kind.to_string().to_lowercase());
        Some((dir.join(format!("{stem}.g6")), dir.join(format!("{stem}.json"))))
    }

    fn load(&self, n: usize, kind: OrbitKind) -> Result<Option<Classification>> {
        let Some((g6, json)) = self.paths(n, kind) else {
            return Ok(None);
        };
        if !g6.exists() || !json.exists() {
            return Ok(None);
        }
        let text = fs::read_to_string(&json).map_err(|e| io_error(&json, e))?;
        let c: Classification =
            serde_json::from_str(&text).map_err(|e| Error::Domain(format!("{}: {e}", json.display())))?;
        let reps = fs::read_to_string(&g6).map_err(|e| io_error(&g6, e))?;
        let listed: Vec<&str> = reps.lines().filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
        let consistent = c.n == n
            && c.kind == kind
            && c.connected_only
            && listed.len() == c.orbits.len()
            && listed.iter().zip(&c.orbits).all(|(l, r)| *l == r.representative.as_str());
        if !consistent {
            return Err(Error::Domain(format!("{} and {} disagree", g6.display(), json.display())));
        }
        Ok(Some(c))
    }

    fn save(&self, c: &Classification) -> Result<()> {
        let Some((g6, json)) = self.paths(c.n, c.kind) else {
            return Ok(());
        };
        // representatives first; the sidecar marks the order as complete
        let mut out = BufWriter::new(fs::File::create(&g6).map_err(|e| io_error(&g6, e))?);
        let mut write = || -> std::io::Result<()> {
            writeln!(out, "# kind={} n={} orbits={}", c.kind, c.n, c.orbit_count())?;
            for r in &c.orbits {
                writeln!(out, "{}", r.representative)?;
            }
            out.flush()
        };
        write().map_err(|e| io_error(&g6, e))?;
        let tmp = json.with_extension("json.tmp");
        let body = serde_json::to_string(c).map_err(|e| Error::Domain(e.to_string()))?;
        fs::write(&tmp, body).map_err(|e| io_error(&tmp, e))?;
        fs::rename(&tmp, &json).map_err(|e| io_error(&json, e))?;
        Ok(())
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io(format!("{}: {e}", path.display()))
}
