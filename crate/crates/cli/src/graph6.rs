//! The graph6 text format: 6-bit groups offset by 63, upper-triangle bits in
//! column order. Sizes up to 62 use the one-byte header; larger graphs (up to
//! 258047) use the `~`-prefixed three-byte form.

use std::fmt;

use hrg_core::Graph;

const OFFSET: u8 = 63;
const LONG_MARKER: u8 = 126;
const MAX_LONG_N: usize = 258_047;
const HEADER: &str = ">>graph6<<";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    /// A byte outside the printable graph6 range 63..=126.
    InvalidByte { offset: usize, byte: u8 },
    /// Fewer adjacency bytes than the vertex count requires.
    Truncated { expected: usize, found: usize },
    /// More adjacency bytes than the vertex count requires.
    TrailingData { offset: usize },
    /// Padding bits past the last adjacency bit must be zero.
    InvalidPadding { offset: usize },
    TooLarge { n: usize },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 input"),
            Graph6Error::InvalidByte { offset, byte } => {
                write!(f, "invalid graph6 byte 0x{byte:02x} at offset {offset}")
            }
            Graph6Error::Truncated { expected, found } => {
                write!(f, "truncated graph6 data: expected {expected} bytes, found {found}")
            }
            Graph6Error::TrailingData { offset } => {
                write!(f, "unexpected trailing data at offset {offset}")
            }
            Graph6Error::InvalidPadding { offset } => {
                write!(f, "nonzero padding bits in final byte at offset {offset}")
            }
            Graph6Error::TooLarge { n } => {
                write!(f, "graph of order {n} exceeds the supported graph6 range")
            }
        }
    }
}

impl std::error::Error for Graph6Error {}

/// Decodes a single graph6 line (an optional `>>graph6<<` header is allowed).
pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=LONG_MARKER).contains(&b) {
            return Err(Graph6Error::InvalidByte { offset, byte: b });
        }
    }

    let (n, data_start) = if bytes[0] == LONG_MARKER {
        if bytes.len() >= 2 && bytes[1] == LONG_MARKER {
            return Err(Graph6Error::TooLarge { n: usize::MAX });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected: 4,
                found: bytes.len(),
            });
        }
        let n = (((bytes[1] - OFFSET) as usize) << 12)
            | (((bytes[2] - OFFSET) as usize) << 6)
            | ((bytes[3] - OFFSET) as usize);
        (n, 4)
    } else {
        ((bytes[0] - OFFSET) as usize, 1)
    };

    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    let found = bytes.len() - data_start;
    if found < byte_count {
        return Err(Graph6Error::Truncated {
            expected: data_start + byte_count,
            found: bytes.len(),
        });
    }
    if found > byte_count {
        return Err(Graph6Error::TrailingData {
            offset: data_start + byte_count,
        });
    }

    let bit = |k: usize| -> bool {
        let b = bytes[data_start + k / 6] - OFFSET;
        (b >> (5 - k % 6)) & 1 == 1
    };
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // Trailing pad bits must be zero.
    for pad in bit_count..byte_count * 6 {
        if bit(pad) {
            return Err(Graph6Error::InvalidPadding {
                offset: data_start + pad / 6,
            });
        }
    }
    Ok(Graph::from_edge_list(n, edges).expect("decoded edges are in range and loop-free"))
}

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else if n <= MAX_LONG_N {
        out.push(LONG_MARKER);
        out.push(OFFSET + ((n >> 12) & 0x3f) as u8);
        out.push(OFFSET + ((n >> 6) & 0x3f) as u8);
        out.push(OFFSET + (n & 0x3f) as u8);
    } else {
        return Err(Graph6Error::TooLarge { n });
    }

    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push(OFFSET + group);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
