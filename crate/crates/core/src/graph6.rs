//! graph6 encoding and decoding.
//!
//! The format stores the vertex count followed by the upper-triangle
//! adjacency bits in column-major order x(0,1), x(0,2), x(1,2), x(0,3), ...,
//! packed big-endian into 6-bit groups and offset by 63 into printable
//! ASCII. Orders <= 62 use a single header byte; larger orders use '~' plus
//! three bytes (18 bits) or '~~' plus six bytes (36 bits).

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const LONG_MARKER: u8 = 126; // '~'

/// Largest order this decoder will materialize (the adjacency is dense).
const MAX_DECODED_ORDER: u64 = 10_000;

fn graph6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn check_byte(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        None => Err(graph6_err(bytes.len(), "input ends before expected data")),
        Some(&b) if !(OFFSET..=LONG_MARKER).contains(&b) => Err(graph6_err(
            offset,
            format!("byte 0x{b:02x} outside the printable graph6 range 63..=126"),
        )),
        Some(&b) => Ok(b),
    }
}

/// Decode the order header; returns (order, bytes consumed).
fn decode_order(bytes: &[u8]) -> Result<(u64, usize)> {
    let b0 = check_byte(bytes, 0)?;
    if b0 != LONG_MARKER {
        return Ok((u64::from(b0 - OFFSET), 1));
    }
    let b1 = check_byte(bytes, 1)?;
    if b1 != LONG_MARKER {
        let mut n: u64 = 0;
        for i in 1..4 {
            n = (n << 6) | u64::from(check_byte(bytes, i)? - OFFSET);
        }
        return Ok((n, 4));
    }
    let mut n: u64 = 0;
    for i in 2..8 {
        n = (n << 6) | u64::from(check_byte(bytes, i)? - OFFSET);
    }
    Ok((n, 8))
}

/// Encode an order as its graph6 header bytes.
fn encode_order(n: u64) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + OFFSET]
    } else if n <= 258_047 {
        let mut out = vec![LONG_MARKER];
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
        out
    } else {
        let mut out = vec![LONG_MARKER, LONG_MARKER];
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
        out
    }
}

/// Parse a graph6 string into a graph. Errors carry the byte offset of the
/// first offending byte.
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    let (n, header_len) = decode_order(bytes)?;
    if n > MAX_DECODED_ORDER {
        return Err(graph6_err(
            0,
            format!("order {n} exceeds the supported maximum {MAX_DECODED_ORDER}"),
        ));
    }
    let n = n as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let data_len = bit_count.div_ceil(6);
    let expected = header_len + data_len;
    if bytes.len() > expected {
        return Err(graph6_err(expected, "trailing data after adjacency bits"));
    }
    let mut g = Graph::new(n);
    let mut bit_index = 0usize;
    let mut pairs = Vec::with_capacity(bit_count);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    for byte_idx in 0..data_len {
        let b = check_byte(bytes, header_len + byte_idx)? - OFFSET;
        for shift in (0..6).rev() {
            let bit = (b >> shift) & 1;
            if bit_index < bit_count {
                if bit == 1 {
                    let (u, v) = pairs[bit_index];
                    g.add_edge(u, v);
                }
            } else if bit == 1 {
                return Err(graph6_err(
                    header_len + byte_idx,
                    "nonzero padding bits after the last adjacency bit",
                ));
            }
            bit_index += 1;
        }
    }
    Ok(g)
}

/// Encode a graph; the adjacency is emitted as stored (no relabeling), so
/// the output is canonical for the given labeling.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = encode_order(n as u64);
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
