use std::io::BufRead;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order accepted from untrusted input.
pub const MAX_ORDER: usize = 4096;

const HEADER: &str = ">>graph6<<";

/// Undirected simple graph on vertices `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    order: usize,
    adj: Vec<bool>,
}

impl SimpleGraph {
    pub fn empty(order: usize) -> Self {
        SimpleGraph {
            order,
            adj: vec![false; order * order],
        }
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::empty(order);
        for &(i, j) in edges {
            if i >= order || j >= order {
                return Err(Error::MalformedGraph(format!(
                    "edge ({i}, {j}) outside 0..{order}"
                )));
            }
            if i == j {
                return Err(Error::MalformedGraph(format!("loop at vertex {i}")));
            }
            g.set(i, j, true);
        }
        Ok(g)
    }

    /// Rejects asymmetric matrices and loops.
    pub fn from_adjacency(rows: &[Vec<bool>]) -> Result<Self> {
        let order = rows.len();
        let mut g = SimpleGraph::empty(order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::MalformedGraph(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            if row[i] {
                return Err(Error::MalformedGraph(format!("loop at vertex {i}")));
            }
            for (j, &v) in row.iter().enumerate() {
                if v != rows[j][i] {
                    return Err(Error::MalformedGraph(format!("asymmetric at ({i}, {j})")));
                }
                g.adj[i * order + j] = v;
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.order + j]
    }

    fn set(&mut self, i: usize, j: usize, v: bool) {
        self.adj[i * self.order + j] = v;
        self.adj[j * self.order + i] = v;
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&e| e).count() / 2
    }

    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        self.adj
            .chunks(self.order.max(1))
            .take(self.order)
            .map(<[bool]>::to_vec)
            .collect()
    }

    pub fn complement(&self) -> Self {
        let mut g = self.clone();
        for i in 0..self.order {
            for j in 0..self.order {
                g.adj[i * self.order + j] = i != j && !self.has_edge(i, j);
            }
        }
        g
    }

    /// Parses one graph6 record (no header, no trailing newline).
    pub fn from_graph6(s: &str) -> std::result::Result<Self, String> {
        let bytes = s.as_bytes();
        if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
            return Err(format!("byte {b} outside the printable range 63..=126"));
        }
        // the shortest header form is required, so records round-trip exactly
        let (order, body) = match bytes {
            [] => return Err("empty record".into()),
            [126, 126, rest @ ..] => match read_bits(rest, 6)? {
                n if n < 258_048 => return Err(format!("order {n} needs a shorter header")),
                n => (n, &rest[6..]),
            },
            [126, rest @ ..] => match read_bits(rest, 3)? {
                n if n < 63 => return Err(format!("order {n} needs a shorter header")),
                n => (n, &rest[3..]),
            },
            [first, rest @ ..] => ((first - 63) as usize, rest),
        };
        if order > MAX_ORDER {
            return Err(format!("order {order} exceeds the limit {MAX_ORDER}"));
        }
        let bits = order * order.saturating_sub(1) / 2;
        let expected = bits.div_ceil(6);
        if body.len() != expected {
            return Err(format!(
                "order {order} needs {expected} data bytes, found {}",
                body.len()
            ));
        }
        let mut g = SimpleGraph::empty(order);
        let mut k = 0;
        for j in 1..order {
            for i in 0..j {
                let byte = body[k / 6] - 63;
                if byte >> (5 - k % 6) & 1 == 1 {
                    g.set(i, j, true);
                }
                k += 1;
            }
        }
        if k % 6 != 0 && (body[k / 6] - 63) & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err("nonzero padding bits".into());
        }
        Ok(g)
    }

    pub fn to_graph6(&self) -> String {
        let n = self.order;
        let mut out: Vec<u8> = Vec::new();
        if n < 63 {
            out.push(n as u8 + 63);
        } else if n < 258_048 {
            out.push(126);
            out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
        } else {
            out.extend([126, 126]);
            out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
        }
        let mut acc = 0u8;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                acc = acc << 1 | self.has_edge(i, j) as u8;
                k += 1;
                if k % 6 == 0 {
                    out.push(acc + 63);
                    acc = 0;
                }
            }
        }
        if k % 6 != 0 {
            out.push((acc << (6 - k % 6)) + 63);
        }
        String::from_utf8(out).expect("graph6 is ASCII")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: GraphFile = serde_json::from_str(s)?;
        if raw.order > MAX_ORDER {
            return Err(Error::MalformedGraph(format!(
                "order {} exceeds {MAX_ORDER}",
                raw.order
            )));
        }
        let rows: Vec<Vec<bool>> = raw
            .adjacency
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| match v {
                        0 => Ok(false),
                        1 => Ok(true),
                        other => Err(Error::MalformedGraph(format!("entry {other} is not 0/1"))),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        if rows.len() != raw.order {
            return Err(Error::MalformedGraph(format!(
                "order {} but {} rows",
                raw.order,
                rows.len()
            )));
        }
        SimpleGraph::from_adjacency(&rows)
    }

    pub fn to_json_string(&self) -> String {
        let file = GraphFile {
            order: self.order,
            adjacency: self
                .adjacency()
                .iter()
                .map(|r| r.iter().map(|&b| b as u8).collect())
                .collect(),
        };
        serde_json::to_string(&file).expect("graph serializes")
    }
}

fn read_bits(bytes: &[u8], count: usize) -> std::result::Result<usize, String> {
    if bytes.len() < count {
        return Err("truncated order header".into());
    }
    Ok(bytes[..count]
        .iter()
        .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    order: usize,
    adjacency: Vec<Vec<u8>>,
}

/// Streams graphs from graph6 text, one per line. Blank lines are skipped
/// and a leading `>>graph6<<` header is allowed on any line. Errors carry the
/// 1-based line number.
pub struct Graph6Reader<R> {
    inner: R,
    line: usize,
    buf: String,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(inner: R) -> Self {
        Graph6Reader {
            inner,
            line: 0,
            buf: String::new(),
        }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<SimpleGraph>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            self.line += 1;
            let line = self.line;
            match self.inner.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => {
                    return Some(Err(Error::Graph6 {
                        line,
                        reason: e.to_string(),
                    }))
                }
            }
            let text = self.buf.trim_end_matches(['\n', '\r']);
            let text = text.strip_prefix(HEADER).unwrap_or(text);
            if text.is_empty() {
                continue;
            }
            return Some(
                SimpleGraph::from_graph6(text).map_err(|reason| Error::Graph6 { line, reason }),
            );
        }
    }
}

pub fn parse_graph6_lines(text: &str) -> Result<Vec<SimpleGraph>> {
    Graph6Reader::new(text.as_bytes()).collect()
}
