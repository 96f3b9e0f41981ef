//! graph6 encoding (nauty convention) for graphs with at most 62 vertices.
//!
//! Layout: one size byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column order `(0,1),(0,2),(1,2),(0,3),...`, six bits per byte,
//! most significant bit first, zero padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    out
}

pub fn decode(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&first, body) = bytes.split_first().ok_or_else(|| Error::Graph6("empty string".into()))?;
    if first == b'~' {
        return Err(Error::Graph6(format!(
            "multi-byte size prefix; only graphs with at most {MAX_VERTICES} vertices are supported"
        )));
    }
    if !(63..=126).contains(&first) {
        return Err(Error::Graph6(format!("invalid size byte {first:#x}")));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!("expected {expected} data bytes for {n} vertices, found {}", body.len())));
    }
    let mut data = Vec::with_capacity(body.len());
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("invalid data byte {b:#x}")));
        }
        data.push(b - 63);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (data[k / 6] >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let pad = 6 - nbits % 6;
        if data[data.len() - 1] & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("non-zero padding bits".into()));
        }
    }
    Graph::new(n, edges)
}
