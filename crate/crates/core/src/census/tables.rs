//! Census tables: orbit and polynomial counts by order, and grids of orbit
//! parameters by minimum degree and order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use num_traits::ToPrimitive;

use crate::codes::q4_norm;
use crate::error::{Error, Result};
use crate::orbits::OrbitKind;

use super::classify::Classification;
use super::sequences::{distinct_polynomials, euler_transform, product_closure};
use super::store::Census;

/// One table entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell {
    Empty,
    Count(u64),
    /// Inclusive minimum and maximum.
    Range(u64, u64),
}

impl Cell {
    fn add(self, v: u64) -> Cell {
        match self {
            Cell::Count(c) => Cell::Count(c + v),
            _ => Cell::Count(v),
        }
    }

    fn widen(self, v: u64) -> Cell {
        match self {
            Cell::Range(a, b) => Cell::Range(a.min(v), b.max(v)),
            _ => Cell::Range(v, v),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Empty => serde_json::Value::Null,
            Cell::Count(c) => (*c).into(),
            Cell::Range(a, b) => serde_json::json!([a, b]),
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Empty => Ok(()),
            Cell::Count(c) => write!(f, "{c}"),
            Cell::Range(a, b) if a == b => write!(f, "{a}"),
            Cell::Range(a, b) => write!(f, "{a}-{b}"),
        }
    }
}

/// Labelled grid of exact counts or ranges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountsTable {
    pub name: String,
    /// Heading of the label column.
    pub row_header: String,
    pub rows: Vec<String>,
    pub columns: Vec<String>,
    pub cells: Vec<Vec<Cell>>,
}

impl CountsTable {
    fn new(name: &str, row_header: &str, rows: Vec<String>, columns: Vec<String>) -> Self {
        let cells = vec![vec![Cell::Empty; columns.len()]; rows.len()];
        CountsTable { name: name.into(), row_header: row_header.into(), rows, columns, cells }
    }

    pub fn get(&self, row: &str, column: &str) -> Option<Cell> {
        let r = self.rows.iter().position(|x| x == row)?;
        let c = self.columns.iter().position(|x| x == column)?;
        Some(self.cells[r][c])
    }

    /// Column as counts, with empty cells as zero. Panics on range cells.
    pub fn column_counts(&self, column: &str) -> Option<Vec<u64>> {
        let c = self.columns.iter().position(|x| x == column)?;
        Some(
            self.cells
                .iter()
                .map(|r| match r[c] {
                    Cell::Empty => 0,
                    Cell::Count(v) => v,
                    Cell::Range(..) => panic!("column {column} holds ranges"),
                })
                .collect(),
        )
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.row_header);
        for c in &self.columns {
            out.push(',');
            out.push_str(c);
        }
        out.push('\n');
        for (label, row) in self.rows.iter().zip(&self.cells) {
            out.push_str(label);
            for cell in row {
                out.push(',');
                out.push_str(&cell.to_string());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "row_header": self.row_header,
            "rows": self.rows,
            "columns": self.columns,
            "cells": self.cells.iter().map(|r| r.iter().map(Cell::json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Right-aligned plain text.
impl fmt::Display for CountsTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<Vec<String>> = self.cells.iter().map(|r| r.iter().map(Cell::to_string).collect()).collect();
        let label_w = self.rows.iter().map(String::len).chain([self.row_header.len()]).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|c| text.iter().map(|r| r[c].len()).chain([self.columns[c].len()]).max().unwrap_or(0))
            .collect();
        writeln!(f, "{}", self.name)?;
        write!(f, "{:<label_w$}", self.row_header)?;
        for (c, w) in self.columns.iter().zip(&widths) {
            write!(f, "  {c:>w$}")?;
        }
        writeln!(f)?;
        for (label, row) in self.rows.iter().zip(&text) {
            write!(f, "{label:<label_w$}")?;
            for (cell, w) in row.iter().zip(&widths) {
                write!(f, "  {cell:>w$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn order_rows(ns: &RangeInclusive<usize>) -> Vec<String> {
    ns.clone().map(|n| n.to_string()).collect()
}

fn check_range(ns: &RangeInclusive<usize>) -> Result<()> {
    if ns.is_empty() || *ns.start() == 0 {
        return Err(Error::Domain("order range must be non-empty and start at 1 or more".into()));
    }
    Ok(())
}

/// Fill columns of a by-order table; `columns[i][n - 1]` is the value for order `n`.
fn by_order(name: &str, labels: &[&str], ns: &RangeInclusive<usize>, columns: &[Vec<u64>]) -> CountsTable {
    let mut t = CountsTable::new(name, "n", order_rows(ns), labels.iter().map(|s| s.to_string()).collect());
    for (r, n) in ns.clone().enumerate() {
        for (c, col) in columns.iter().enumerate() {
            t.cells[r][c] = Cell::Count(col[n - 1]);
        }
    }
    t
}

fn per_order<F>(census: &mut Census, kind: OrbitKind, max: usize, f: F) -> Result<Vec<u64>>
where
    F: Fn(&Classification) -> u64,
{
    (1..=max).map(|n| census.classification(n, kind).map(&f)).collect()
}

/// LC and ELC orbit counts: connected (`c`) and all (`t`) graphs.
pub fn orbit_counts_table(census: &mut Census, ns: RangeInclusive<usize>) -> Result<CountsTable> {
    check_range(&ns)?;
    let max = *ns.end();
    let c_l = per_order(census, OrbitKind::Lc, max, |c| c.orbit_count() as u64)?;
    let c_e = per_order(census, OrbitKind::Elc, max, |c| c.orbit_count() as u64)?;
    let cols = [c_l.clone(), euler_transform(&c_l)?, c_e.clone(), euler_transform(&c_e)?];
    Ok(by_order("LC and ELC orbits", &["c_L", "t_L", "c_E", "t_E"], &ns, &cols))
}

/// Distinct Q over LC orbits and distinct q over ELC orbits.
pub fn polynomial_counts_table(census: &mut Census, ns: RangeInclusive<usize>) -> Result<CountsTable> {
    check_range(&ns)?;
    let max = *ns.end();
    let mut cols = Vec::new();
    for kind in [OrbitKind::Lc, OrbitKind::Elc] {
        let sets: Vec<_> =
            (1..=max).map(|n| census.classification(n, kind).map(distinct_polynomials)).collect::<Result<_>>()?;
        cols.push(sets.iter().map(|s| s.len() as u64).collect());
        cols.push(product_closure(&sets).iter().map(|s| s.len() as u64).collect());
    }
    Ok(by_order("Distinct interlace polynomials", &["c_Q", "t_Q", "c_q", "t_q"], &ns, &cols))
}

/// Circle graphs (`c_c`, `t_c`) and their LC orbits (`c'`, `t'`).
pub fn circle_counts_table(census: &mut Census, ns: RangeInclusive<usize>) -> Result<CountsTable> {
    check_range(&ns)?;
    let max = *ns.end();
    fn circle(c: &Classification) -> impl Iterator<Item = &super::OrbitRecord> {
        c.orbits.iter().filter(|r| r.circle == Some(true))
    }
    let graphs = per_order(census, OrbitKind::Lc, max, |c| circle(c).map(|r| r.size as u64).sum())?;
    let orbits = per_order(census, OrbitKind::Lc, max, |c| circle(c).count() as u64)?;
    let cols = [graphs.clone(), euler_transform(&graphs)?, orbits.clone(), euler_transform(&orbits)?];
    Ok(by_order("Circle graphs and their LC orbits", &["c_c", "t_c", "c'", "t'"], &ns, &cols))
}

/// Graph families for the δ grids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    All,
    /// Orbits with at least one bipartite member.
    Bipartite,
    /// Orbits of circle graphs.
    Circle,
}

impl Family {
    fn admits(self, r: &super::OrbitRecord) -> bool {
        match self {
            Family::All => true,
            Family::Bipartite => r.bipartite,
            Family::Circle => r.circle == Some(true),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::All => "all",
            Family::Bipartite => "bipartite",
            Family::Circle => "circle",
        })
    }
}

/// Per-δ grid over connected LC orbits: rows are δ values, columns are orders.
fn delta_grid<F>(
    census: &mut Census,
    ns: &RangeInclusive<usize>,
    name: &str,
    combine: fn(Cell, u64) -> Cell,
    mut visit: F,
) -> Result<CountsTable>
where
    F: FnMut(&super::OrbitRecord) -> Option<u64>,
{
    check_range(ns)?;
    let mut found: BTreeMap<usize, BTreeMap<usize, Cell>> = BTreeMap::new();
    for n in ns.clone() {
        let c = census.classification(n, OrbitKind::Lc)?;
        for r in &c.orbits {
            if let Some(v) = visit(r) {
                let cell = found.entry(r.min_degree).or_default().entry(n).or_insert(Cell::Empty);
                *cell = combine(*cell, v);
            }
        }
    }
    let rows = found.keys().map(|d| d.to_string()).collect();
    let mut t = CountsTable::new(name, "delta", rows, order_rows(ns));
    for (r, by_n) in found.values().enumerate() {
        for (&n, &cell) in by_n {
            t.cells[r][n - ns.start()] = cell;
        }
    }
    Ok(t)
}

/// Number of connected LC orbits in `family` by δ and order, with an `All` row.
pub fn delta_table(census: &mut Census, ns: RangeInclusive<usize>, family: Family) -> Result<CountsTable> {
    let name = format!("LC orbits of connected graphs by delta and n ({family})");
    let mut t = delta_grid(census, &ns, &name, Cell::add, |r| family.admits(r).then_some(1))?;
    let totals: Vec<Cell> = (0..t.columns.len())
        .map(|c| {
            let s: u64 = t.cells.iter().map(|r| if let Cell::Count(v) = r[c] { v } else { 0 }).sum();
            Cell::Count(s)
        })
        .collect();
    t.rows.push("All".into());
    t.cells.push(totals);
    Ok(t)
}

/// Ranges of deg Q and of `Q(G,4) / 2^n` over connected LC orbits by δ and order.
pub fn degq_q4_ranges(census: &mut Census, ns: RangeInclusive<usize>) -> Result<(CountsTable, CountsTable)> {
    let deg = delta_grid(census, &ns, "Range of deg Q by delta and n", Cell::widen, |r| {
        r.polynomial.degree().map(|d| d as u64)
    })?;
    let mut err = None;
    let q4 = delta_grid(census, &ns, "Range of Q(G,4)/2^n by delta and n", Cell::widen, |r| {
        match q4_norm(&r.polynomial, r.order()).map(|v| v.to_u64()) {
            Ok(Some(v)) => Some(v),
            Ok(None) => {
                err.get_or_insert(Error::Domain("Q(G,4)/2^n exceeds 64 bits".into()));
                None
            }
            Err(e) => {
                err.get_or_insert(e);
                None
            }
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok((deg, q4)),
    }
}
