//! graph6 codec for graphs on at most 62 vertices.
//!
//! The first byte is `63 + n`. The upper triangle of the adjacency matrix is
//! read column by column, `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits
//! per byte (most significant first, offset 63) and zero-padded.

use thiserror::Error;

use super::DenseGraph;

/// Largest order with a single-byte size prefix.
pub const MAX_ORDER: usize = 62;

/// Optional header line emitted by some generators.
pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    MalformedByte { offset: usize, byte: u8 },
    #[error("graphs with more than {MAX_ORDER} vertices are not supported")]
    TooLarge,
    #[error("graph with no vertices")]
    NoVertices,
    #[error("expected {expected} payload bytes for n = {n}, found {found}")]
    PayloadLength { n: usize, expected: usize, found: usize },
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn decode(line: &str) -> Result<DenseGraph, Graph6Error> {
    let bytes = line.as_bytes();
    let (&first, payload) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::MalformedByte { offset, byte });
        }
    }
    if first == 126 {
        return Err(Graph6Error::TooLarge);
    }
    let n = usize::from(first - 63);
    if n == 0 {
        return Err(Graph6Error::NoVertices);
    }
    let expected = payload_len(n);
    if payload.len() != expected {
        return Err(Graph6Error::PayloadLength {
            n,
            expected,
            found: payload.len(),
        });
    }

    let mut g = DenseGraph::empty(n);
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = payload[bit / 6] - 63;
            if byte & (0b10_0000 >> (bit % 6)) != 0 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Panics if the graph has more than [`MAX_ORDER`] or zero vertices.
pub fn encode(g: &DenseGraph) -> String {
    let n = g.order();
    assert!((1..=MAX_ORDER).contains(&n), "graph6 order {n} unsupported");
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(63 + n as u8);
    let mut current = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            current = (current << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + current);
                current = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (current << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
