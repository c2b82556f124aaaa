//! graph6 text interchange for graphs of order at most 64.
//!
//! The encoding is the standard one: an order prefix (byte `order + 63`
//! for orders up to 62, or `'~'` followed by three bytes holding an
//! 18-bit big-endian order for 63 and 64), then the upper-triangle bits
//! in column order `(0,1),(0,2),(1,2),(0,3),...`, packed six bits per
//! byte MSB-first, each byte offset by 63, zero-padded.

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("malformed graph6: {0}")]
pub struct MalformedGraph6(pub String);

/// Encodes a graph as a single graph6 line (no trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // 18-bit long form covers orders 63..=64 here.
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut used = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line; trailing newline or surrounding spaces are ignored.
pub fn decode(line: &str) -> Result<Graph, MalformedGraph6> {
    let bytes = line.trim().as_bytes();
    if bytes.is_empty() {
        return Err(MalformedGraph6("empty line".into()));
    }
    let (n, rest) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(MalformedGraph6("truncated order prefix".into()));
        }
        if bytes[1] == b'~' {
            return Err(MalformedGraph6(
                "orders above 64 are not supported".into(),
            ));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | decode_byte(b)? as usize;
        }
        (n, &bytes[4..])
    } else {
        (decode_byte(bytes[0])? as usize, &bytes[1..])
    };
    if n > MAX_ORDER {
        return Err(MalformedGraph6(format!(
            "order {n} exceeds the supported maximum of {MAX_ORDER}"
        )));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if rest.len() != expected {
        return Err(MalformedGraph6(format!(
            "expected {expected} body bytes for order {n}, got {}",
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = decode_byte(rest[idx / 6])?;
            if (byte >> (5 - idx % 6)) & 1 == 1 {
                edges.push((u, v));
            }
            idx += 1;
            if idx >= nbits {
                break 'outer;
            }
        }
    }
    // Padding bits past the triangle must be zero.
    if nbits % 6 != 0 {
        let last = decode_byte(rest[expected - 1])?;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(MalformedGraph6("nonzero padding bits".into()));
        }
    }
    Graph::from_edges(n, &edges).map_err(|e| MalformedGraph6(e.to_string()))
}

/// Decodes a whole text blob, one graph per non-empty line.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>, MalformedGraph6> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(decode)
        .collect()
}

#[inline]
fn decode_byte(b: u8) -> Result<u8, MalformedGraph6> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(MalformedGraph6(format!("byte {b} outside graph6 range")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        assert_eq!(encode(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(encode(&Graph::complete(3).unwrap()), "Bw");
    }

    #[test]
    fn petgraph_vector() {
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4 encode as "DQc".
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn roundtrip_various() {
        for g in [
            Graph::empty(0).unwrap(),
            Graph::empty(1).unwrap(),
            Graph::cycle(7).unwrap(),
            Graph::complete_bipartite(3, 4).unwrap(),
            Graph::complete_minus_pm(10).unwrap(),
            Graph::complete(13).unwrap(),
        ] {
            assert_eq!(decode(&encode(&g)).unwrap(), g);
        }
    }

    #[test]
    fn long_form_orders() {
        for n in [63, 64] {
            let g = Graph::cycle(n).unwrap();
            let line = encode(&g);
            assert!(line.starts_with('~'));
            assert_eq!(decode(&line).unwrap(), g);
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!(decode("").is_err());
        assert!(decode("B").is_err()); // missing body byte
        assert!(decode("Bw_").is_err()); // extra body byte
        assert!(decode("B\x1f").is_err()); // byte below range
        assert!(decode("A`").is_err()); // nonzero padding for order 2
        assert!(decode("~~~~~~").is_err()); // huge-order form
    }
}
