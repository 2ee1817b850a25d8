//! Command-line front end.

mod args;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, BufRead, Read, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde_json::{json, Value};

use interlace::census::{self, Census, Family};
use interlace::circle::is_circle_graph_with_budget;
use interlace::codes::{self, CodeType, METRICS_CSV_HEADER};
use interlace::orbits::orbit;
use interlace::{parse_graph6, Error, Graph, InterlaceCache, OrbitKind, PolyKind, Polynomial};

pub use args::Cli;
use args::{Bound, Command, Construct, FamilyChoice, Format, Inputs, OrbitChoice, PolyChoice};

/// Failure with its process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

pub const EXIT_IO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_CONTRACT: i32 = 4;

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }

    fn io(path: &Path, e: io::Error) -> Self {
        Failure { code: EXIT_IO, message: format!("{}: {e}", path.display()) }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OrbitBudget(_) => EXIT_BUDGET,
            Error::Contract(_) => EXIT_CONTRACT,
            Error::Io(_) => EXIT_IO,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

pub fn run(cli: Cli) -> Outcome<()> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global()
            .map_err(|e| Failure::input(e.to_string()))?;
    }
    let out = execute(&cli)?;
    match &cli.output {
        Some(path) => fs::write(path, out).map_err(|e| Failure::io(path, e)),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).or_else(|e| {
                // a closed pipe downstream is not an error of ours
                if e.kind() == io::ErrorKind::BrokenPipe {
                    Ok(())
                } else {
                    Err(Failure::io(Path::new("<stdout>"), e))
                }
            })
        }
    }
}

fn execute(cli: &Cli) -> Outcome<String> {
    let fmt = cli.format;
    let budget = cli.budget_orbit;
    match &cli.command {
        Command::Poly { kind, inputs } => poly(fmt, poly_kind(*kind), inputs),
        Command::Eval { x, kind, inputs } => eval(fmt, *x, kind.map(poly_kind), inputs),
        Command::Orbit { kind, inputs } => orbits(fmt, orbit_kind(*kind), budget, inputs),
        Command::Metrics { allow_unknown_delta, inputs } => metrics(fmt, budget, *allow_unknown_delta, inputs),
        Command::Circle { invert, inputs } => circle(fmt, budget, *invert, inputs),
        Command::Census { table, n_max, n_min, family, store, order_inputs, connected_only: _ } => {
            census_table(fmt, budget, table, *n_min, *n_max, *family, store.as_deref(), order_inputs)
        }
        Command::Unimodal { n } => unimodal(fmt, budget, *n),
        Command::Euler { terms } => euler(fmt, terms),
        Command::Construct { what } => construct(fmt, what),
        Command::Bound { what } => bound(fmt, what),
    }
}

fn poly_kind(k: PolyChoice) -> PolyKind {
    match k {
        PolyChoice::Lower => PolyKind::LowerQ,
        PolyChoice::Upper => PolyKind::UpperQ,
    }
}

fn orbit_kind(k: OrbitChoice) -> OrbitKind {
    match k {
        OrbitChoice::Lc => OrbitKind::Lc,
        OrbitChoice::Elc => OrbitKind::Elc,
    }
}

/// One non-blank, non-comment input line split into whitespace tokens.
struct Line {
    origin: String,
    tokens: Vec<String>,
}

impl Line {
    fn graph(&self) -> Outcome<Graph> {
        parse_graph6(&self.tokens[0]).map_err(|e| Failure::input(format!("{}: {e}", self.origin)))
    }

    fn graph6(&self) -> &str {
        let t = &self.tokens[0];
        t.strip_prefix(">>graph6<<").unwrap_or(t)
    }
}

fn read_lines(inputs: &Inputs) -> Outcome<Vec<Line>> {
    let stdin = [PathBuf::from("-")];
    let paths = if inputs.inputs.is_empty() { &stdin[..] } else { &inputs.inputs[..] };
    let mut lines = Vec::new();
    for path in paths {
        let (name, reader): (String, Box<dyn BufRead>) = if path.as_os_str() == "-" {
            ("<stdin>".into(), Box::new(io::BufReader::new(io::stdin())))
        } else {
            let f = fs::File::open(path).map_err(|e| Failure::io(path, e))?;
            (path.display().to_string(), Box::new(io::BufReader::new(f)))
        };
        for (i, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| Failure::io(Path::new(&name), e))?;
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            lines.push(Line {
                origin: format!("{name}:{}", i + 1),
                tokens: t.split_whitespace().map(String::from).collect(),
            });
        }
    }
    Ok(lines)
}

fn coefficient_strings(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(BigInt::to_string).collect()
}

fn poly(fmt: Format, kind: PolyKind, inputs: &Inputs) -> Outcome<String> {
    let cache = InterlaceCache::new();
    let mut rows = Vec::new();
    for line in read_lines(inputs)? {
        let g = line.graph()?;
        rows.push((line.graph6().to_string(), cache.polynomial(&g, kind)));
    }
    Ok(match fmt {
        Format::Text => rows.iter().fold(String::new(), |mut s, (g, p)| {
            let _ = writeln!(s, "{g} {kind} {p}");
            s
        }),
        Format::Csv => rows.iter().fold("graph,kind,coefficients\n".to_string(), |mut s, (g, p)| {
            let _ = writeln!(s, "{g},{kind},{}", coefficient_strings(p).join(" "));
            s
        }),
        Format::Json => json_lines(rows.iter().map(
            |(g, p)| json!({"graph": g, "kind": kind.to_string(), "coefficients": p, "polynomial": p.to_string()}),
        )),
    })
}

fn eval(fmt: Format, x: i64, kind: Option<PolyKind>, inputs: &Inputs) -> Outcome<String> {
    let cache = InterlaceCache::new();
    let mut rows = Vec::new();
    for line in read_lines(inputs)? {
        let g = line.graph()?;
        let named = match line.tokens.get(1).map(String::as_str) {
            Some("q") => Some(PolyKind::LowerQ),
            Some("Q") => Some(PolyKind::UpperQ),
            _ => None,
        };
        let k = kind.or(named).unwrap_or(PolyKind::LowerQ);
        rows.push((line.graph6().to_string(), k, cache.polynomial(&g, k).evaluate_i64(x)));
    }
    Ok(match fmt {
        Format::Text => rows.iter().fold(String::new(), |mut s, (_, _, v)| {
            let _ = writeln!(s, "{v}");
            s
        }),
        Format::Csv => rows.iter().fold("graph,kind,x,value\n".to_string(), |mut s, (g, k, v)| {
            let _ = writeln!(s, "{g},{k},{x},{v}");
            s
        }),
        Format::Json => json_lines(
            rows.iter().map(|(g, k, v)| json!({"graph": g, "kind": k.to_string(), "x": x, "value": v.to_string()})),
        ),
    })
}

fn orbits(fmt: Format, kind: OrbitKind, budget: usize, inputs: &Inputs) -> Outcome<String> {
    let mut out = String::new();
    let mut docs = Vec::new();
    if fmt == Format::Csv {
        out.push_str("seed,kind,member\n");
    }
    for line in read_lines(inputs)? {
        let o = orbit(&line.graph()?, kind, budget)?;
        match fmt {
            Format::Text => {
                let mut buf = Vec::new();
                o.write_dump(&mut buf).expect("writing to memory");
                out.push_str(&String::from_utf8(buf).expect("graph6 is ASCII"));
            }
            Format::Csv => {
                for m in o.members() {
                    let _ = writeln!(out, "{},{kind},{m}", line.graph6());
                }
            }
            Format::Json => docs.push(json!({
                "seed": line.graph6(),
                "kind": kind.to_string(),
                "size": o.len(),
                "representative": o.representative().as_str(),
                "members": o.members().iter().map(|m| m.as_str()).collect::<Vec<_>>(),
            })),
        }
    }
    Ok(if fmt == Format::Json { json_lines(docs) } else { out })
}

fn metrics(fmt: Format, budget: usize, allow_unknown: bool, inputs: &Inputs) -> Outcome<String> {
    let cache = InterlaceCache::new();
    let mut out = String::new();
    let mut docs = Vec::new();
    if fmt == Format::Csv {
        out.push_str(METRICS_CSV_HEADER);
        out.push('\n');
    }
    for line in read_lines(inputs)? {
        let m = codes::metrics_with(&line.graph()?, &cache, budget, !allow_unknown)?;
        match fmt {
            Format::Csv => {
                out.push_str(&m.csv_row());
                out.push('\n');
            }
            Format::Text => {
                let delta = m.delta.map_or("?".to_string(), |d| d.to_string());
                let _ = writeln!(
                    out,
                    "{} n={} delta={delta} degQ={} q4norm={} cmf={} type={}",
                    line.graph6(),
                    m.n,
                    m.deg_q,
                    m.q4_norm,
                    m.cmf,
                    m.code_type
                );
            }
            Format::Json => {
                let mut v = m.to_json();
                v["graph"] = line.graph6().into();
                docs.push(v);
            }
        }
    }
    Ok(if fmt == Format::Json { json_lines(docs) } else { out })
}

fn circle(fmt: Format, budget: usize, invert: bool, inputs: &Inputs) -> Outcome<String> {
    let mut kept = Vec::new();
    for line in read_lines(inputs)? {
        if is_circle_graph_with_budget(&line.graph()?, budget)? != invert {
            kept.push(line.graph6().to_string());
        }
    }
    Ok(match fmt {
        Format::Json => json_lines(kept.into_iter().map(Value::from)),
        _ => kept.iter().map(|g| format!("{g}\n")).collect(),
    })
}

#[allow(clippy::too_many_arguments)]
fn census_table(
    fmt: Format,
    budget: usize,
    table: &str,
    n_min: Option<usize>,
    n_max: usize,
    family: Option<FamilyChoice>,
    store: Option<&Path>,
    order_inputs: &[(usize, PathBuf)],
) -> Outcome<String> {
    let grid = matches!(table, "4" | "5" | "7" | "8");
    let lo = n_min.unwrap_or(if grid { 2 } else { 1 });
    if lo == 0 || lo > n_max {
        return Err(Failure::input(format!("empty order range {lo}..={n_max}")));
    }
    let mut census = match store {
        Some(dir) => Census::with_store(dir)?,
        None => Census::new(),
    }
    .with_budget(budget);
    for (n, path) in order_inputs {
        census = census.with_input(*n, path);
    }
    // classify up front so progress reaches stderr as each order completes
    let first = if grid { lo } else { 1 };
    let kinds: &[OrbitKind] = match table {
        "1" | "2" => &[OrbitKind::Lc, OrbitKind::Elc],
        _ => &[OrbitKind::Lc],
    };
    for n in first..=n_max {
        for &k in kinds {
            let c = census.classification(n, k)?;
            eprintln!("n={n} {k}: {} orbits over {} graphs", c.orbit_count(), c.class_count());
        }
    }
    let range = lo..=n_max;
    let t = match table {
        "1" => census::orbit_counts_table(&mut census, range)?,
        "2" => census::polynomial_counts_table(&mut census, range)?,
        "3" => census::circle_counts_table(&mut census, range)?,
        "4" => census::degq_q4_ranges(&mut census, range)?.0,
        "5" => census::degq_q4_ranges(&mut census, range)?.1,
        _ => {
            let implied = if table == "7" { Family::Bipartite } else { Family::All };
            let fam = family.map_or(implied, |f| match f {
                FamilyChoice::All => Family::All,
                FamilyChoice::Bipartite => Family::Bipartite,
                FamilyChoice::Circle => Family::Circle,
            });
            census::delta_table(&mut census, range, fam)?
        }
    };
    Ok(match fmt {
        Format::Text => t.to_string(),
        Format::Csv => t.to_csv(),
        Format::Json => format!("{}\n", t.to_json()),
    })
}

fn unimodal(fmt: Format, budget: usize, n: usize) -> Outcome<String> {
    eprintln!("evaluating q and Q on all graphs of orders 1..={n}");
    let r = census::unimodality_scan_with(n, budget)?;
    let groups = [("q", &r.lower_q), ("Q", &r.upper_q), ("xq(x+1)", &r.shifted_q)];
    Ok(match fmt {
        Format::Json => format!("{}\n", serde_json::to_string(&r).expect("serializable report")),
        Format::Csv => {
            let mut s = "n,polynomial,coefficients,graphs,orbits,representative\n".to_string();
            for (name, list) in groups {
                for e in list {
                    let _ = writeln!(
                        s,
                        "{n},{name},{},{},{},{}",
                        e.coefficients.join(" "),
                        e.graphs,
                        e.orbits,
                        e.representative
                    );
                }
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "n={n}: {} distinct q, {} distinct Q over connected graphs\n",
                r.distinct_lower_q, r.distinct_upper_q
            );
            for (name, list) in groups {
                let _ = writeln!(s, "non-unimodal {name}: {}", list.len());
                for e in list {
                    let _ = writeln!(
                        s,
                        "  ({}) graphs={} orbits={} e.g. {}",
                        e.coefficients.join(","),
                        e.graphs,
                        e.orbits,
                        e.representative
                    );
                }
            }
            s
        }
    })
}

fn euler(fmt: Format, terms: &[String]) -> Outcome<String> {
    let c = terms
        .iter()
        .flat_map(|t| t.split(|ch: char| ch == ',' || ch.is_whitespace()))
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u64>().map_err(|e| Failure::input(format!("{t:?}: {e}"))))
        .collect::<Outcome<Vec<_>>>()?;
    let t = census::euler_transform(&c)?;
    Ok(match fmt {
        Format::Text => format!("{}\n", t.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")),
        Format::Csv => (0..c.len()).fold("n,c,t\n".to_string(), |mut s, i| {
            let _ = writeln!(s, "{},{},{}", i + 1, c[i], t[i]);
            s
        }),
        Format::Json => format!("{}\n", json!({"c": c, "t": t})),
    })
}

fn construct(fmt: Format, what: &Construct) -> Outcome<String> {
    let g = match what {
        Construct::Paley { p } => codes::paley_graph(*p)?,
        Construct::BorderedPaley { p } => codes::bordered_paley(*p)?,
        Construct::Circulant { row } => codes::parse_circulant(row)?,
        Construct::Matrix { path } => {
            let text = match path {
                Some(p) => fs::read_to_string(p).map_err(|e| Failure::io(p, e))?,
                None => {
                    let mut s = String::new();
                    io::stdin().read_to_string(&mut s).map_err(|e| Failure::io(Path::new("<stdin>"), e))?;
                    s
                }
            };
            codes::parse_adjacency_matrix(&text)?
        }
    };
    Ok(match fmt {
        Format::Json => format!("{}\n", json!({"graph6": g.to_string(), "order": g.order()})),
        _ => format!("{g}\n"),
    })
}

fn bound(fmt: Format, what: &Bound) -> Outcome<String> {
    let (name, exact, floor) = match what {
        Bound::Gamma { n, d } => {
            let v = codes::gamma(*n, *d)?;
            ("gamma", v.to_string(), v.to_string())
        }
        Bound::Q4 { n, delta } => {
            let b = codes::q4_upper_bound(*n, *delta)?;
            ("q4", b.exact.to_string(), b.floor.to_string())
        }
        Bound::Delta { n, ty } => {
            let ty = if ty == "II" { CodeType::II } else { CodeType::I };
            let v = codes::delta_upper_bound(*n, ty)?;
            ("delta", v.to_string(), v.to_string())
        }
    };
    Ok(match fmt {
        Format::Text if exact == floor => format!("{exact}\n"),
        Format::Text => format!("{floor} ({exact})\n"),
        Format::Csv => format!("bound,exact,floor\n{name},{exact},{floor}\n"),
        Format::Json => format!("{}\n", json!({"bound": name, "exact": exact, "floor": floor})),
    })
}

/// One JSON document per line.
fn json_lines<I: IntoIterator<Item = Value>>(docs: I) -> String {
    docs.into_iter().map(|d| format!("{d}\n")).collect()
}
