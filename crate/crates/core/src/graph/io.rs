//! Edge-list and graph6 serialization.
//!
//! Edge lists: a header line `n m`, then `m` lines `u v` (0-indexed). Lines
//! whose first non-blank character is `#` are ignored. Graph6 is the standard
//! short form, restricted to `n <= 62`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

const GRAPH6_MAX_N: usize = 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    EdgeList,
    Graph6,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edge-list" | "el" => Ok(Format::EdgeList),
            "graph6" | "g6" => Ok(Format::Graph6),
            other => Err(Error::Parse {
                line: 0,
                msg: format!("unknown format {other:?}"),
            }),
        }
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text),
    }
}

impl Graph {
    pub fn serialize(&self, format: Format) -> String {
        match format {
            Format::EdgeList => self.to_edge_list(),
            Format::Graph6 => self.to_graph6().expect("graph6 requires n <= 62"),
        }
    }

    /// Canonical edge list: header then edges in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for e in self.edges() {
            let _ = writeln!(out, "{} {}", e.0, e.1);
        }
        out
    }

    pub fn to_graph6(&self) -> Result<String> {
        let n = self.n();
        if n > GRAPH6_MAX_N {
            return Err(Error::Graph6TooLarge(n));
        }
        let mut out = String::new();
        out.push((n as u8 + 63) as char);
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.has_edge(i, j));
                filled += 1;
                if filled == 6 {
                    out.push((acc + 63) as char);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(((acc << (6 - filled)) + 63) as char);
        }
        Ok(out)
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = nums.as_slice() else {
        return Err(parse_err(hline, "header must be `n m`"));
    };
    let n: usize = n
        .parse()
        .map_err(|_| parse_err(hline, "bad vertex count"))?;
    let m: usize = m.parse().map_err(|_| parse_err(hline, "bad edge count"))?;

    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        let [u, v] = toks.as_slice() else {
            return Err(parse_err(line, "edge line must be `u v`"));
        };
        let u: usize = u.parse().map_err(|_| parse_err(line, "bad endpoint"))?;
        let v: usize = v.parse().map_err(|_| parse_err(line, "bad endpoint"))?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text.trim();
    let body = body.strip_prefix(">>graph6<<").unwrap_or(body);
    let bytes = body.as_bytes();
    let first = *bytes
        .first()
        .ok_or_else(|| parse_err(1, "empty graph6 string"))?;
    if !(63..=126).contains(&first) {
        return Err(parse_err(1, "invalid graph6 size byte"));
    }
    if first == 126 {
        // long-form header; only the short form is supported
        let n = decode_long_n(bytes).unwrap_or(usize::MAX);
        return Err(Error::Graph6TooLarge(n));
    }
    let n = (first - 63) as usize;
    let payload = &bytes[1..];
    let needed_bits = n * n.saturating_sub(1) / 2;
    if payload.len() != needed_bits.div_ceil(6) {
        return Err(parse_err(
            1,
            format!(
                "graph6 body has {} bytes, expected {}",
                payload.len(),
                needed_bits.div_ceil(6)
            ),
        ));
    }
    let mut bits = Vec::with_capacity(payload.len() * 6);
    for &b in payload {
        if !(63..=126).contains(&b) {
            return Err(parse_err(1, "invalid graph6 data byte"));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push((v >> k) & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

fn decode_long_n(bytes: &[u8]) -> Option<usize> {
    if bytes.len() >= 4 && bytes[1] != 126 {
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b.checked_sub(63)? as usize);
        }
        Some(n)
    } else {
        None
    }
}
