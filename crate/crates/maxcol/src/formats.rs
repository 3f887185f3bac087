//! Line-based file formats: WFF weighted forests, DIMACS-like source graphs,
//! witness colorings and Graphviz DOT export.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use maxcol_core::{Coloring, Error as CoreError, ScaledWeight, SourceGraph, WeightedForest};
use num_bigint::BigUint;

/// A malformed input, with the 1-based line it was found on (0 for whole-file problems).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// Non-empty lines with `#` comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let fields: Vec<&str> = l.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn field<T: FromStr>(fields: &[&str], idx: usize, line: usize, what: &str) -> Result<T, ParseError> {
    let raw = fields.get(idx).ok_or_else(|| err(line, format!("missing {what}")))?;
    raw.parse().map_err(|_| err(line, format!("bad {what} {raw:?}")))
}

fn expect_len(fields: &[&str], n: usize, line: usize) -> Result<(), ParseError> {
    if fields.len() != n {
        return Err(err(line, format!("expected {n} fields, found {}", fields.len())));
    }
    Ok(())
}

fn core_err(line: usize, e: CoreError) -> ParseError {
    err(line, e.to_string())
}

pub fn write_wff(forest: &WeightedForest) -> String {
    let mut out = String::new();
    writeln!(out, "wff {} {}", forest.vertex_count(), forest.denominator()).unwrap();
    for (v, w) in forest.weights().iter().enumerate() {
        writeln!(out, "v {v} {w}").unwrap();
    }
    for (u, v) in forest.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn parse_wff(text: &str) -> Result<WeightedForest, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| err(0, "empty file, expected a `wff` header"))?;
    if header[0] != "wff" {
        return Err(err(hl, "expected `wff <vertex_count> <denominator>`"));
    }
    expect_len(&header, 3, hl)?;
    let n: usize = field(&header, 1, hl, "vertex count")?;
    let den: BigUint = field(&header, 2, hl, "denominator")?;
    let mut forest = WeightedForest::new(den).map_err(|e| core_err(hl, e))?;
    let mut last = hl;
    for (line, f) in lines {
        last = line;
        match f[0] {
            "v" => {
                expect_len(&f, 3, line)?;
                let id: usize = field(&f, 1, line, "vertex id")?;
                if id != forest.vertex_count() {
                    return Err(err(line, format!("vertex {id} out of order, expected {}", forest.vertex_count())));
                }
                if id >= n {
                    return Err(err(line, format!("vertex {id} beyond the declared count {n}")));
                }
                let w: BigUint = field(&f, 2, line, "weight numerator")?;
                forest.add_vertex(ScaledWeight::new(w));
            }
            "e" => {
                expect_len(&f, 3, line)?;
                if forest.vertex_count() != n {
                    return Err(err(line, "edge before all vertices were declared"));
                }
                let u: usize = field(&f, 1, line, "endpoint")?;
                let v: usize = field(&f, 2, line, "endpoint")?;
                if u >= v {
                    return Err(err(line, "edge endpoints must satisfy u < v"));
                }
                forest.add_edge(u, v).map_err(|e| core_err(line, e))?;
            }
            other => return Err(err(line, format!("unknown record {other:?}"))),
        }
    }
    if forest.vertex_count() != n {
        return Err(err(last, format!("declared {n} vertices, found {}", forest.vertex_count())));
    }
    Ok(forest)
}

pub fn write_dimacs(graph: &SourceGraph) -> String {
    let mut out = format!("p edge {} {}\n", graph.vertex_count(), graph.edge_count());
    for (u, v) in graph.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// `p edge <n> <m>` then `e <u> <v>` with 1-based ids; `c` lines are comments.
pub fn parse_dimacs(text: &str) -> Result<SourceGraph, ParseError> {
    let mut graph: Option<(SourceGraph, usize)> = None;
    let mut last = 0;
    for (line, f) in content_lines(text) {
        last = line;
        match (f[0], &mut graph) {
            ("c", _) => {}
            ("p", None) => {
                expect_len(&f, 4, line)?;
                if f[1] != "edge" {
                    return Err(err(line, "expected `p edge <n> <m>`"));
                }
                let n: usize = field(&f, 2, line, "vertex count")?;
                let m: usize = field(&f, 3, line, "edge count")?;
                graph = Some((SourceGraph::new(n), m));
            }
            ("p", Some(_)) => return Err(err(line, "second problem line")),
            ("e", Some((g, _))) => {
                expect_len(&f, 3, line)?;
                let u: usize = field(&f, 1, line, "endpoint")?;
                let v: usize = field(&f, 2, line, "endpoint")?;
                if u == 0 || v == 0 {
                    return Err(err(line, "vertex ids are 1-based"));
                }
                g.add_edge(u - 1, v - 1).map_err(|e| core_err(line, e))?;
            }
            ("e", None) => return Err(err(line, "edge before the problem line")),
            (other, _) => return Err(err(line, format!("unknown record {other:?}"))),
        }
    }
    let (g, m) = graph.ok_or_else(|| err(0, "missing `p edge` line"))?;
    if g.edge_count() != m {
        return Err(err(last, format!("declared {m} edges, found {}", g.edge_count())));
    }
    Ok(g)
}

pub fn write_witness(coloring: &Coloring) -> String {
    let mut out = format!("col {} {}\n", coloring.len(), coloring.color_count());
    for (v, c) in coloring.assignment().iter().enumerate() {
        writeln!(out, "c {v} {c}").unwrap();
    }
    out
}

/// `col <vertex_count> <color_count>` then `c <vertex> <color>` for every vertex in order.
pub fn parse_witness(text: &str) -> Result<Coloring, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| err(0, "empty file, expected a `col` header"))?;
    if header[0] != "col" {
        return Err(err(hl, "expected `col <vertex_count> <color_count>`"));
    }
    expect_len(&header, 3, hl)?;
    let n: usize = field(&header, 1, hl, "vertex count")?;
    let r: usize = field(&header, 2, hl, "color count")?;
    let mut assignment = Vec::with_capacity(n);
    let mut last = hl;
    for (line, f) in lines {
        last = line;
        if f[0] != "c" {
            return Err(err(line, format!("unknown record {:?}", f[0])));
        }
        expect_len(&f, 3, line)?;
        let v: usize = field(&f, 1, line, "vertex")?;
        if v != assignment.len() {
            return Err(err(line, format!("vertex {v} out of order, expected {}", assignment.len())));
        }
        let c: usize = field(&f, 2, line, "color")?;
        if c >= r {
            return Err(err(line, format!("color {c} outside 0..{r}")));
        }
        assignment.push(c);
    }
    if assignment.len() != n {
        return Err(err(last, format!("declared {n} vertices, found {}", assignment.len())));
    }
    Coloring::new(assignment, r).map_err(|e| core_err(0, e))
}

/// Graphviz rendering with `id: numerator/denominator` labels.
pub fn write_dot(forest: &WeightedForest) -> String {
    let den = forest.denominator();
    let mut out = String::from("graph forest {\n");
    for (v, w) in forest.weights().iter().enumerate() {
        writeln!(out, "  {v} [label=\"{v}: {w}/{den}\"];").unwrap();
    }
    for (u, v) in forest.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// An exact fraction `p/q` as a numerator over `den`, if it is one.
pub fn parse_fraction(text: &str, den: &BigUint) -> Result<ScaledWeight, String> {
    let (p, q) = text.split_once('/').unwrap_or((text, "1"));
    let p: BigUint = p.trim().parse().map_err(|_| format!("bad numerator in {text:?}"))?;
    let q: BigUint = q.trim().parse().map_err(|_| format!("bad denominator in {text:?}"))?;
    if q == BigUint::from(0u32) {
        return Err(format!("zero denominator in {text:?}"));
    }
    let scaled = p * den;
    if &scaled % &q != BigUint::from(0u32) {
        return Err(format!("{text} is not a multiple of 1/{den}"));
    }
    Ok(ScaledWeight::new(scaled / q))
}
