//! graph6 reader and writer.
//!
//! Encoding: vertex count `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order `(0,1),(0,2),(1,2),(0,3),…`, packed six
//! bits per byte, most significant bit first, each byte offset by 63.

use thiserror::Error;

use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const MAX_N: usize = (1 << 36) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    OutOfRange { offset: usize, byte: u8 },
    #[error("malformed size header at offset {offset}")]
    BadHeader { offset: usize },
    #[error("truncated edge bits: expected {expected} bytes after offset {offset}, found {found}")]
    Truncated {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("unexpected trailing data at offset {offset}")]
    Trailing { offset: usize },
    #[error("non-zero padding bits in final byte at offset {offset}")]
    Padding { offset: usize },
}

/// Parses one graph6 line. A trailing newline and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (base, line) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::OutOfRange {
                offset: base + i,
                byte: b,
            });
        }
    }

    let (n, body) = decode_size(bytes).ok_or(Graph6Error::BadHeader { offset: base })?;
    let body_offset = base + (bytes.len() - body.len());
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(Graph6Error::Truncated {
            offset: body_offset,
            expected: need,
            found: body.len(),
        });
    }
    if body.len() > need {
        return Err(Graph6Error::Trailing {
            offset: body_offset + need,
        });
    }

    let mut g = Graph::new(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.add_edge(u, v).expect("in-range distinct endpoints");
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[need - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::Padding {
                offset: body_offset + need - 1,
            });
        }
    }
    Ok(g)
}

fn decode_size(bytes: &[u8]) -> Option<(usize, &[u8])> {
    let value = |chunk: &[u8]| chunk.iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
    if bytes[0] != 126 {
        return Some((usize::from(bytes[0] - 63), &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        let chunk = bytes.get(2..8)?;
        let n = value(chunk);
        (n > 258_047).then_some((n, &bytes[8..]))
    } else {
        let chunk = bytes.get(1..4)?;
        let n = value(chunk);
        (n > 62).then_some((n, &bytes[4..]))
    }
}

/// Encodes `g` as a graph6 line without header or newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_N, "graph too large for graph6");
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc <<= 1;
            if g.has_edge(u, v) {
                acc |= 1;
            }
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
    String::from_utf8(out).expect("graph6 is printable ASCII")
}
