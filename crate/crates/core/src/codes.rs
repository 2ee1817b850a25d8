//! Self-dual code parameters of LC orbits and graph constructions used to
//! build good codes.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::interlace::InterlaceCache;
use crate::orbits::{orbit, orbit_min_degree, OrbitKind, DEFAULT_ORBIT_BUDGET};
use crate::poly::{Polynomial, Rational};

/// Type II codes come from anti-Eulerian graphs, Type I from all others.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CodeType {
    I,
    II,
}

impl CodeType {
    pub fn of(g: &Graph) -> CodeType {
        if g.is_anti_eulerian() {
            CodeType::II
        } else {
            CodeType::I
        }
    }
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeType::I => "I",
            CodeType::II => "II",
        })
    }
}

/// Parameters of the LC orbit of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeMetrics {
    pub n: usize,
    /// Minimum degree over the LC orbit; `None` when the orbit was too large to enumerate.
    pub delta: Option<usize>,
    pub deg_q: usize,
    /// `Q(G,4) / 2^n`.
    pub q4_norm: BigInt,
    pub cmf: Rational,
    pub code_type: CodeType,
}

pub const METRICS_CSV_HEADER: &str = "n,delta,degQ,q4norm,cmf_num,cmf_den,type";

impl CodeMetrics {
    /// One CSV line matching [`METRICS_CSV_HEADER`]; an unknown δ is left empty.
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.n,
            self.delta.map(|d| d.to_string()).unwrap_or_default(),
            self.deg_q,
            self.q4_norm,
            self.cmf.num(),
            self.cmf.den(),
            self.code_type
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "delta": self.delta,
            "degQ": self.deg_q,
            "q4norm": self.q4_norm.to_string(),
            "cmf": self.cmf.to_string(),
            "type": self.code_type.to_string(),
        })
    }
}

/// Metrics with the default orbit budget; fails if the orbit exceeds it.
pub fn metrics(g: &Graph) -> Result<CodeMetrics> {
    metrics_with(g, &InterlaceCache::new(), DEFAULT_ORBIT_BUDGET, true)
}

/// Metrics using a shared cache. With `require_delta` unset, an orbit over
/// `budget` leaves δ undetermined instead of failing.
pub fn metrics_with(g: &Graph, cache: &InterlaceCache, budget: usize, require_delta: bool) -> Result<CodeMetrics> {
    let n = g.order();
    if n == 0 || !g.is_connected() {
        return Err(Error::Domain("code metrics need a connected graph with at least one vertex".into()));
    }
    let upper = cache.upper_q(g);
    let delta = match orbit(g, OrbitKind::Lc, budget) {
        Ok(o) => Some(orbit_min_degree(&o)),
        Err(Error::OrbitBudget(_)) if !require_delta => None,
        Err(e) => return Err(e),
    };
    Ok(CodeMetrics {
        n,
        delta,
        deg_q: upper.degree().unwrap_or(0),
        q4_norm: q4_norm(&upper, n)?,
        cmf: cmf(&upper, n)?,
        code_type: CodeType::of(g),
    })
}

/// `Q(G,4) / 2^n`, which is always an integer.
pub fn q4_norm(upper_q: &Polynomial, n: usize) -> Result<BigInt> {
    let v = upper_q.evaluate_i64(4);
    let p = BigInt::one() << n;
    let (quot, rem) = v.div_rem(&p);
    if !rem.is_zero() {
        return Err(Error::Contract(format!("Q(G,4) = {v} is not divisible by 2^{n}")));
    }
    Ok(quot)
}

/// `6^n / (2^n Q(G,4) - 6^n)`, reduced.
pub fn cmf(upper_q: &Polynomial, n: usize) -> Result<Rational> {
    let six = BigInt::from(6).pow(n as u32);
    let den = (BigInt::one() << n) * upper_q.evaluate_i64(4) - &six;
    if !den.is_positive() {
        return Err(Error::Domain(format!("CMF denominator {den} is not positive")));
    }
    Ok(Rational::new(six, den).expect("positive denominator"))
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// `γ(d) = Σ_t C(n,t) 2^t Σ_{k = max(1, d+t-n)}^t C(t,k) 2^(n-k)`.
pub fn gamma(n: usize, d: usize) -> Result<BigInt> {
    if d == 0 || d > n + 1 {
        return Err(Error::Domain(format!("gamma needs 1 <= d <= n+1, got n={n}, d={d}")));
    }
    let mut total = BigInt::zero();
    for t in 0..=n {
        let lo = 1.max((d + t).saturating_sub(n));
        let mut inner = BigInt::zero();
        for k in lo..=t {
            inner += binomial(t, k) << (n - k);
        }
        total += (binomial(n, t) * inner) << t;
    }
    Ok(total)
}

/// The bound `(γ(δ+1) + 6^n) / 2^n` on `Q(G,4)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q4Bound {
    pub exact: Rational,
    pub floor: BigInt,
}

pub fn q4_upper_bound(n: usize, delta: usize) -> Result<Q4Bound> {
    if delta == 0 {
        return Err(Error::Domain("the bound needs delta >= 1".into()));
    }
    let num = gamma(n, delta + 1)? + BigInt::from(6).pow(n as u32);
    let exact = Rational::new(num, BigInt::one() << n).expect("non-zero power of two");
    let floor = exact.floor();
    Ok(Q4Bound { exact, floor })
}

/// Largest δ permitted for a code of length `n` and the given type.
pub fn delta_upper_bound(n: usize, ty: CodeType) -> Result<usize> {
    let base = 2 * (n / 6);
    match ty {
        CodeType::II if n % 2 == 1 => Err(Error::Domain(format!("Type II codes have even length, got {n}"))),
        CodeType::II => Ok(base + 1),
        CodeType::I => Ok(match n % 6 {
            0 => base,
            5 => base + 2,
            _ => base + 1,
        }),
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Graph on `Z_p` with `i ~ j` iff `i - j` is a non-zero square mod `p`.
pub fn paley_graph(p: usize) -> Result<Graph> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if p % 4 != 1 {
        return Err(Error::Domain(format!("{p} is not 1 mod 4")));
    }
    if p > MAX_VERTICES {
        return Err(Error::TooManyVertices(p));
    }
    let mut residue = vec![false; p];
    for x in 1..p {
        residue[x * x % p] = true;
    }
    let row: Vec<bool> = (0..p).map(|k| residue[k]).collect();
    circulant(&row)
}

/// Paley graph plus one vertex joined to all others.
pub fn bordered_paley(p: usize) -> Result<Graph> {
    if p + 1 > MAX_VERTICES {
        return Err(Error::TooManyVertices(p + 1));
    }
    let g = paley_graph(p)?;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend((0..p).map(|v| (v, p)));
    Graph::from_edges(p + 1, &edges)
}

fn circulant(row: &[bool]) -> Result<Graph> {
    let n = row.len();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    if row.first() == Some(&true) {
        return Err(Error::Adjacency("circulant first entry must be 0".into()));
    }
    if (1..n).any(|k| row[k] != row[n - k]) {
        return Err(Error::Adjacency("circulant row is not symmetric".into()));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if row[j - i] {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Circulant graph from its first row, e.g. `(00001011101000)`.
pub fn parse_circulant(text: &str) -> Result<Graph> {
    let t = text.trim();
    let t = t.strip_prefix('(').map_or(t, |s| s.strip_suffix(')').unwrap_or(s));
    if t.is_empty() {
        return Err(Error::Adjacency("empty circulant row".into()));
    }
    let row = t
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::Adjacency(format!("unexpected character {c:?} in circulant row"))),
        })
        .collect::<Result<Vec<_>>>()?;
    circulant(&row)
}

/// Symmetric 0/1 matrix with zero diagonal, one whitespace-separated row per
/// line. Rows of unseparated digits are also accepted.
pub fn parse_adjacency_matrix(text: &str) -> Result<Graph> {
    let rows: Vec<Vec<bool>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(Error::Adjacency(format!("unexpected character {c:?} in matrix"))),
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let n = rows.len();
    if n == 0 {
        return Err(Error::Adjacency("empty matrix".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::Adjacency(format!("row {i} has {} entries, expected {n}", r.len())));
    }
    let mut edges = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        if row[i] {
            return Err(Error::Adjacency(format!("non-zero diagonal entry at {i}")));
        }
        for (j, &x) in row.iter().enumerate().skip(i + 1) {
            if x != rows[j][i] {
                return Err(Error::Adjacency(format!("matrix is not symmetric at ({i}, {j})")));
            }
            if x {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges)
}
