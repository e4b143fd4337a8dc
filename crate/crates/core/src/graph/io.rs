//! Graph file formats: edge list, graph6 and JSON.
//!
//! Edge list: a header line `n m` followed by `m` lines `u v` (0-based,
//! whitespace separated, any endpoint order). Output always writes `u < v`
//! with edges sorted, so re-emitting a loaded file is byte-stable.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{input, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = match lines.next() {
        Some(h) => h,
        None => return input("edge list is empty"),
    };
    let (n, m) = parse_pair(header, "header")?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        edges.push(parse_pair(line, "edge")?);
    }
    if edges.len() != m {
        return input(format!("header declares {m} edges, found {}", edges.len()));
    }
    Graph::from_edges(n, edges)
}

fn parse_pair(line: &str, what: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => input(format!("malformed {what} line: {line:?}")),
    }
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return input("empty graph6 string");
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return input(format!("invalid graph6 byte {b:#x}"));
    }
    let (n, rest) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        (decode_n(&bytes[1..4]), &bytes[4..])
    } else if bytes.len() >= 8 {
        (decode_n(&bytes[2..8]), &bytes[8..])
    } else {
        return input("truncated graph6 size field");
    };
    let needed_bits = n * n.saturating_sub(1) / 2;
    let needed_bytes = needed_bits.div_ceil(6);
    if rest.len() != needed_bytes {
        return input(format!(
            "graph6 body has {} bytes, expected {needed_bytes} for n={n}",
            rest.len()
        ));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn decode_n(b: &[u8]) -> usize {
    b.iter()
        .fold(0usize, |acc, &x| (acc << 6) | (x - 63) as usize)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let j: GraphJson =
        serde_json::from_str(text).map_err(|e| crate::Error::Input(format!("graph JSON: {e}")))?;
    let g = Graph::from_edges(j.n, j.edges.iter().map(|e| (e[0], e[1])))?;
    match j.labels {
        Some(l) => g.with_labels(l),
        None => Ok(g),
    }
}

pub fn to_json(g: &Graph) -> String {
    let j = GraphJson {
        n: g.n(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        labels: g.labels().map(<[String]>::to_vec),
    };
    serde_json::to_string(&j).expect("graph serializes")
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: self.labels().map(<[String]>::to_vec),
        }
        .serialize(s)
    }
}
