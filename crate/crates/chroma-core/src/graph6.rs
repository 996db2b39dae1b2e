//! graph6 codec.
//!
//! The format stores an order header N(n) followed by the upper triangle of
//! the adjacency matrix in column-major order (bit x_{ij} for i < j, ordered
//! by j then i), packed into 6-bit groups, each offset by 63 into printable
//! ASCII. Round-trips are bit-exact; the short one-byte header covers
//! n <= 62, the `~`-prefixed four-byte header covers n <= 258047.

use crate::error::Error;
use crate::graph::Graph;
use crate::Result;

const OFFSET: u8 = 63;
const MAX_LONG_N: usize = 258_047;

/// Encodes a graph as a graph6 record (no trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + OFFSET);
    } else {
        assert!(n <= MAX_LONG_N, "graph6 long form caps at {MAX_LONG_N}");
        bytes.push(b'~');
        bytes.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        bytes.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        bytes.push((n & 0x3f) as u8 + OFFSET);
    }
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                bytes.push(acc + OFFSET);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push((acc << (6 - nbits)) + OFFSET);
    }
    String::from_utf8(bytes).unwrap()
}

/// Decodes one graph6 record. Leading `>>graph6<<` headers are not handled;
/// trailing whitespace is rejected so corpus lines must be trimmed first.
pub fn decode(record: &str) -> Result<Graph> {
    let bytes = record.as_bytes();
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset,
        reason: reason.to_string(),
    };
    if bytes.is_empty() {
        return Err(err(0, "empty record"));
    }
    let sixbit = |b: u8, off: usize| -> Result<u64> {
        if !(OFFSET..=126).contains(&b) {
            return Err(err(off, "byte out of graph6 range 63..=126"));
        }
        Ok((b - OFFSET) as u64)
    };
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(err(1, "graphs beyond 258047 vertices are unsupported"));
        }
        if bytes.len() < 4 {
            return Err(err(bytes.len(), "truncated long-form order header"));
        }
        let n = (sixbit(bytes[1], 1)? << 12) | (sixbit(bytes[2], 2)? << 6) | sixbit(bytes[3], 3)?;
        (n as usize, 4)
    } else {
        (sixbit(bytes[0], 0)? as usize, 1)
    };
    let nbits_needed = n * (n - 1) / 2 * usize::from(n > 0);
    let nbytes_needed = nbits_needed.div_ceil(6);
    if bytes.len() - pos < nbytes_needed {
        return Err(err(bytes.len(), "record too short for adjacency bits"));
    }
    if bytes.len() - pos > nbytes_needed {
        return Err(err(pos + nbytes_needed, "trailing bytes after adjacency"));
    }
    let mut g = Graph::empty(n);
    let mut t = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = pos + t / 6;
            let group = sixbit(bytes[byte], byte)?;
            if group >> (5 - t % 6) & 1 == 1 {
                g.add_edge_mut(i, j);
            }
            t += 1;
        }
    }
    // padding bits must be zero for a canonical record
    if t % 6 != 0 {
        let byte = pos + t / 6;
        let group = sixbit(bytes[byte], byte)?;
        if group & ((1 << (6 - t % 6)) - 1) != 0 {
            return Err(err(byte, "nonzero padding bits"));
        }
    }
    pos += nbytes_needed;
    let _ = pos;
    Ok(g)
}

/// Decodes a newline-delimited stream, skipping blank lines. Errors carry
/// the 1-based line number.
pub fn decode_lines(input: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = decode(line).map_err(|e| match e {
            Error::Graph6 { offset, reason } => Error::Graph6 {
                offset,
                reason: format!("line {}: {}", i + 1, reason),
            },
            other => other,
        })?;
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn known_encodings() {
        // nauty's own examples: K2 = "A_", K3 = "Bw".
        assert_eq!(encode(&Graph::complete(2)), "A_");
        assert_eq!(encode(&Graph::complete(3)), "Bw");
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(decode("A_").unwrap(), Graph::complete(2));
        assert_eq!(decode("Bw").unwrap(), Graph::complete(3));
    }

    #[test]
    fn roundtrip_small() {
        for g in [
            Graph::empty(0),
            Graph::empty(5),
            Graph::cycle(5),
            Graph::complete(7),
            Graph::path(62),
        ] {
            assert_eq!(decode(&encode(&g)).unwrap(), g);
        }
    }

    #[test]
    fn roundtrip_long_form() {
        let g = Graph::cycle(70);
        let enc = encode(&g);
        assert!(enc.starts_with('~'));
        assert_eq!(decode(&enc).unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match decode("") {
            Err(Error::Graph6 { offset: 0, .. }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        // n=5 needs 2 payload bytes; give 3.
        match decode("DQcW") {
            Err(Error::Graph6 { offset: 3, .. }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        // byte below offset 63
        match decode("D\x20c") {
            Err(Error::Graph6 { offset: 1, .. }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }
}
