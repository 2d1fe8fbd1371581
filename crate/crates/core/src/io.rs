//! Text formats: edge lists, ordering files, and certificate records.
//!
//! Edge list: the first non-comment line is `n m`, followed by `m` lines
//! `u v` with 0-based ids. Lines starting with `#` are ignored. The writer
//! emits each edge once with `u < v`, sorted.
//!
//! Ordering file: one line with `n`, then `n` lines of vertex ids, first
//! line = first vertex of the ordering.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::Path;

use thiserror::Error;

use crate::domination::DominationCertificate;
use crate::graph::{Graph, GraphError};
use crate::orderings::{OrderingError, VertexOrdering};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ordering(#[from] OrderingError),
}

fn parse_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        msg: msg.into(),
    }
}

// Yields (1-based line number, trimmed content) for non-comment, non-blank lines.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields<const N: usize>(line_no: usize, line: &str) -> Result<[usize; N], FormatError> {
    let mut out = [0usize; N];
    let mut it = line.split_ascii_whitespace();
    for slot in out.iter_mut() {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(line_no, format!("expected {N} fields")))?;
        *slot = tok
            .parse()
            .map_err(|_| parse_err(line_no, format!("bad integer `{tok}`")))?;
    }
    if it.next().is_some() {
        return Err(parse_err(line_no, format!("expected exactly {N} fields")));
    }
    Ok(out)
}

pub fn read_graph<R: Read>(reader: R) -> Result<Graph, FormatError> {
    let mut text = String::new();
    BufReader::new(reader).read_to_string(&mut text)?;
    let mut lines = content_lines(&text);
    let (no, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "empty graph file"))?;
    let [n, m] = parse_fields::<2>(no, header)?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (no, line) = lines
            .next()
            .ok_or_else(|| parse_err(0, format!("expected {m} edge lines")))?;
        let [u, v] = parse_fields::<2>(no, line)?;
        edges.push((u, v));
    }
    if let Some((no, _)) = lines.next() {
        return Err(parse_err(no, "trailing content after edge list"));
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn write_graph<W: Write>(writer: W, g: &Graph) -> io::Result<()> {
    let mut w = BufWriter::new(writer);
    writeln!(w, "{} {}", g.n(), g.m_edges())?;
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    w.flush()
}

pub fn read_graph_file(path: &Path) -> Result<Graph, FormatError> {
    read_graph(File::open(path)?)
}

pub fn write_graph_file(path: &Path, g: &Graph) -> io::Result<()> {
    write_graph(File::create(path)?, g)
}

pub fn read_ordering<R: Read>(reader: R) -> Result<VertexOrdering, FormatError> {
    let mut text = String::new();
    BufReader::new(reader).read_to_string(&mut text)?;
    let mut lines = content_lines(&text);
    let (no, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "empty ordering file"))?;
    let [n] = parse_fields::<1>(no, header)?;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let (no, line) = lines
            .next()
            .ok_or_else(|| parse_err(0, format!("expected {n} vertex lines")))?;
        let [v] = parse_fields::<1>(no, line)?;
        order.push(v);
    }
    if let Some((no, _)) = lines.next() {
        return Err(parse_err(no, "trailing content after ordering"));
    }
    Ok(VertexOrdering::from_order(order)?)
}

pub fn write_ordering<W: Write>(writer: W, ord: &VertexOrdering) -> io::Result<()> {
    let mut w = BufWriter::new(writer);
    writeln!(w, "{}", ord.n())?;
    for &v in ord.order() {
        writeln!(w, "{v}")?;
    }
    w.flush()
}

pub fn read_ordering_file(path: &Path) -> Result<VertexOrdering, FormatError> {
    read_ordering(File::open(path)?)
}

pub fn write_ordering_file(path: &Path, ord: &VertexOrdering) -> io::Result<()> {
    write_ordering(File::create(path)?, ord)
}

fn ids(list: &[usize]) -> String {
    list.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Multi-line certificate record with fixed field order.
pub fn certificate_to_text(cert: &DominationCertificate) -> String {
    let mut s = String::new();
    s.push_str("domcert 1\n");
    s.push_str(&format!("k {}\n", cert.k));
    s.push_str(&format!("m {}\n", cert.m));
    s.push_str(&format!("c {}\n", cert.c));
    s.push_str(&format!("colors {}\n", cert.colors_used));
    s.push_str(&format!("decreases {}\n", cert.label_decreases));
    s.push_str(&format!(
        "d {} {}\n",
        cert.dominating.len(),
        ids(&cert.dominating)
    ));
    s.push_str(&format!(
        "a_prime {} {}\n",
        cert.centers.len(),
        ids(&cert.centers)
    ));
    s.push_str(&format!(
        "a {} {}\n",
        cert.independent.len(),
        ids(&cert.independent)
    ));
    s.push_str(&format!(
        "chain {} <= dom_k <= {} <= {}\n",
        cert.independent.len(),
        cert.dominating.len(),
        cert.certified_bound()
    ));
    s
}

/// One-line machine-readable variant for benchmark tables.
pub fn certificate_record_line(name: &str, n: usize, cert: &DominationCertificate) -> String {
    format!(
        "instance={} n={} k={} m={} c={} d={} a_prime={} a={} colors={} decreases={}",
        name,
        n,
        cert.k,
        cert.m,
        cert.c,
        cert.dominating.len(),
        cert.centers.len(),
        cert.independent.len(),
        cert.colors_used,
        cert.label_decreases
    )
}

pub fn certificate_from_text(text: &str) -> Result<DominationCertificate, FormatError> {
    let mut lines = content_lines(text);
    let mut expect = |tag: &str| -> Result<(usize, String), FormatError> {
        let (no, line) = lines
            .next()
            .ok_or_else(|| parse_err(0, format!("missing `{tag}` line")))?;
        let rest = line
            .strip_prefix(tag)
            .ok_or_else(|| parse_err(no, format!("expected `{tag}` line, got `{line}`")))?;
        Ok((no, rest.trim().to_string()))
    };

    let (no, version) = expect("domcert")?;
    if version != "1" {
        return Err(parse_err(no, format!("unsupported version `{version}`")));
    }
    let parse_scalar = |(no, s): (usize, String)| -> Result<usize, FormatError> {
        s.parse()
            .map_err(|_| parse_err(no, format!("bad integer `{s}`")))
    };
    let k = parse_scalar(expect("k")?)?;
    let m = parse_scalar(expect("m")?)?;
    let c = parse_scalar(expect("c")?)?;
    let colors_used = parse_scalar(expect("colors")?)?;
    let (no, dec) = expect("decreases")?;
    let label_decreases: u64 = dec
        .parse()
        .map_err(|_| parse_err(no, format!("bad integer `{dec}`")))?;

    let parse_set = |(no, s): (usize, String)| -> Result<Vec<usize>, FormatError> {
        let mut it = s.split_ascii_whitespace();
        let count: usize = it
            .next()
            .ok_or_else(|| parse_err(no, "missing set size"))?
            .parse()
            .map_err(|_| parse_err(no, "bad set size"))?;
        let vals: Vec<usize> = it
            .map(|t| {
                t.parse()
                    .map_err(|_| parse_err(no, format!("bad id `{t}`")))
            })
            .collect::<Result<_, _>>()?;
        if vals.len() != count {
            return Err(parse_err(
                no,
                format!("set declares {count} ids but lists {}", vals.len()),
            ));
        }
        Ok(vals)
    };
    let dominating = parse_set(expect("d")?)?;
    let centers = parse_set(expect("a_prime")?)?;
    let independent = parse_set(expect("a")?)?;
    expect("chain")?; // informational; the verifier recomputes it

    Ok(DominationCertificate {
        k,
        m,
        c,
        dominating,
        centers,
        independent,
        colors_used,
        label_decreases,
    })
}
