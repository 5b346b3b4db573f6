//! graph6 encoding (bias-63 printable bytes, upper triangle column by column,
//! zero padded to a multiple of six bits).
//!
//! Orders up to 62 use the one-byte size field and orders up to 258047 the
//! four-byte form. sparse6 and digraph6 lines are rejected with their own error.

use thiserror::Error;

use crate::graph::{choose2, Graph};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
const MAX_SMALL: usize = 62;
const MAX_MEDIUM: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {offset}: value {byte} outside the printable range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("byte {offset}: graph6 order field must describe n >= 1")]
    ZeroOrder { offset: usize },
    #[error("byte {offset}: order {n} needs the 8-byte size form, which is not supported")]
    OrderTooLarge { offset: usize, n: usize },
    #[error("byte {offset}: truncated order field")]
    TruncatedOrder { offset: usize },
    #[error("byte {offset}: expected {expected} payload bytes for n = {n}, found {found}")]
    Length { offset: usize, n: usize, expected: usize, found: usize },
    #[error("byte {offset}: padding bits beyond the edge payload are set")]
    Padding { offset: usize },
    #[error("byte {offset}: {format} input is not supported, expected graph6")]
    OtherFormat { offset: usize, format: &'static str },
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let trimmed = line.trim_end_matches(['\n', '\r']);
    let (start, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    match body.first() {
        None => return Err(Graph6Error::Empty),
        Some(b':') => return Err(Graph6Error::OtherFormat { offset: start, format: "sparse6" }),
        Some(b'&') => return Err(Graph6Error::OtherFormat { offset: start, format: "digraph6" }),
        _ => {}
    }
    if let Some(pos) = body.iter().position(|&b| !(BIAS..=126).contains(&b)) {
        return Err(Graph6Error::BadByte { offset: start + pos, byte: body[pos] });
    }

    let (n, header_len) = if body[0] != 126 {
        ((body[0] - BIAS) as usize, 1)
    } else {
        if body.len() >= 2 && body[1] == 126 {
            let n = read_sixes(body.get(2..8).ok_or(Graph6Error::TruncatedOrder { offset: start })?);
            return Err(Graph6Error::OrderTooLarge { offset: start, n });
        }
        let field = body.get(1..4).ok_or(Graph6Error::TruncatedOrder { offset: start })?;
        (read_sixes(field), 4)
    };
    if n == 0 {
        return Err(Graph6Error::ZeroOrder { offset: start });
    }

    let pairs = choose2(n);
    let expected = pairs.div_ceil(6);
    let payload = &body[header_len..];
    if payload.len() != expected {
        return Err(Graph6Error::Length { offset: start + header_len, n, expected, found: payload.len() });
    }

    let mut bits = vec![0u64; pairs.div_ceil(64)];
    for (bi, &byte) in payload.iter().enumerate() {
        let x = byte - BIAS;
        for k in 0..6 {
            if x >> (5 - k) & 1 == 1 {
                let idx = bi * 6 + k;
                if idx >= pairs {
                    return Err(Graph6Error::Padding { offset: start + header_len + bi });
                }
                bits[idx / 64] |= 1 << (idx % 64);
            }
        }
    }
    Ok(Graph::from_pair_bits(n, bits))
}

fn read_sixes(bytes: &[u8]) -> usize {
    bytes.iter().fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize)
}

/// Canonical graph6 encoding without header or newline.
///
/// # Panics
/// If the order exceeds 258047, beyond the supported size forms.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_MEDIUM, "graph6 size forms support n <= {MAX_MEDIUM}");
    let pairs = choose2(n);
    let mut out = Vec::with_capacity(4 + pairs.div_ceil(6));
    if n <= MAX_SMALL {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let bits = g.pair_bits();
    for chunk in 0..pairs.div_ceil(6) {
        let mut x = 0u8;
        for k in 0..6 {
            let idx = chunk * 6 + k;
            x <<= 1;
            if idx < pairs && bits[idx / 64] >> (idx % 64) & 1 == 1 {
                x |= 1;
            }
        }
        out.push(x + BIAS);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}
