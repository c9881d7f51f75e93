//! graph6 interchange: the bit-packed upper-triangle text format, one graph
//! per line.
//!
//! Parsing is strict: the header must be minimal-length for the order, every
//! byte must be a printable graph6 character, the byte count must match the
//! order exactly, and padding bits must be zero. This makes
//! `serialize(parse(x)) == x` and `parse(serialize(g)) == g` hold on the
//! full valid domains.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const LONG: u8 = 126; // '~'

/// Decode one graph6 line (without the trailing newline).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(OFFSET..=LONG).contains(&b)) {
        return Err(Error::MalformedGraph6(format!("invalid character 0x{b:02x}")));
    }
    let (n, header_len) = parse_order(bytes)?;
    let m = n.saturating_sub(1) * n / 2;
    let body_len = m.div_ceil(6);
    if bytes.len() != header_len + body_len {
        return Err(Error::MalformedGraph6(format!(
            "expected {} bytes for order {n}, got {}",
            header_len + body_len,
            bytes.len()
        )));
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[header_len + bit / 6] - OFFSET;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    // Padding bits beyond the triangle must be zero.
    if body_len > 0 {
        let last = bytes[header_len + body_len - 1] - OFFSET;
        let used = if m % 6 == 0 { 6 } else { m % 6 };
        if last & ((1 << (6 - used)) - 1) != 0 {
            return Err(Error::MalformedGraph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

fn parse_order(bytes: &[u8]) -> Result<(usize, usize)> {
    if bytes[0] != LONG {
        return Ok(((bytes[0] - OFFSET) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] == LONG {
        if bytes.len() < 8 {
            return Err(Error::MalformedGraph6("truncated 8-byte order header".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = n << 6 | (b - OFFSET) as usize;
        }
        if n < 258_048 {
            return Err(Error::MalformedGraph6("non-canonical order header".into()));
        }
        Ok((n, 8))
    } else {
        if bytes.len() < 4 {
            return Err(Error::MalformedGraph6("truncated 4-byte order header".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = n << 6 | (b - OFFSET) as usize;
        }
        if n < 63 {
            return Err(Error::MalformedGraph6("non-canonical order header".into()));
        }
        Ok((n, 4))
    }
}

/// Encode a graph canonically (minimal-length header, zero padding).
pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else if n <= 258_047 {
        out.push(LONG);
        for shift in [12, 6, 0] {
            out.push(OFFSET + ((n >> shift) & 63) as u8);
        }
    } else {
        out.push(LONG);
        out.push(LONG);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(OFFSET + ((n >> shift) & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            used += 1;
            if used == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(OFFSET + (acc << (6 - used)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn k4_is_c_tilde() {
        let k4 = Graph::complete(4);
        assert_eq!(serialize_graph6(&k4), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), k4);
    }

    #[test]
    fn empty_graphs() {
        assert_eq!(parse_graph6("D??").unwrap(), Graph::empty(5));
        assert_eq!(serialize_graph6(&Graph::empty(1)), "@");
        assert_eq!(serialize_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_graph6("C"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6(""), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6("C~~"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6("C\x1f?"), Err(Error::MalformedGraph6(_))));
        // Padding bits set: C5 body uses 10 bits, 2 pad bits.
        let mut s = serialize_graph6(&Graph::cycle(5).unwrap()).into_bytes();
        let last = s.last_mut().unwrap();
        *last = ((*last - 63) | 1) + 63;
        assert!(matches!(
            parse_graph6(std::str::from_utf8(&s).unwrap()),
            Err(Error::MalformedGraph6(_))
        ));
        // Non-canonical long header for a small order.
        assert!(matches!(parse_graph6("~??A"), Err(Error::MalformedGraph6(_))));
    }

    #[test]
    fn long_format_round_trip() {
        let g = Graph::path(70);
        let s = serialize_graph6(&g);
        assert_eq!(s.as_bytes()[0], b'~');
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    proptest! {
        #[test]
        fn round_trip_random(n in 0usize..20, seed in 0u64..1000) {
            let g = crate::generators::random_graph(n, (seed % 101) as usize, seed);
            let s = serialize_graph6(&g);
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
