//! graph6 encoding and decoding.
//!
//! Layout: a size header `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order (`(0,1), (0,2), (1,2), (0,3), ..`),
//! packed big-endian into 6-bit groups offset by 63.

use crate::bits::{Bits, CAPACITY};
use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.row(j);
        for i in 0..j {
            acc = (acc << 1) | row.contains(i) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!(
            "byte {b:#04x} outside 63..=126"
        )));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::MalformedGraph6("empty input".into())),
        [126, 126, ..] => {
            // Eight-byte form; only reachable for n >= 258048.
            if bytes.len() < 8 {
                return Err(Error::MalformedGraph6("truncated size header".into()));
            }
            let n = bytes[2..8]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
            (n, &bytes[8..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::MalformedGraph6("truncated size header".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
            (n, &rest[3..])
        }
        [b, rest @ ..] => ((b - OFFSET) as usize, rest),
    };
    if n > CAPACITY {
        return Err(Error::CapacityExceeded(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut adj = vec![Bits::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - OFFSET;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    let pad = expected * 6 - nbits;
    if pad > 0 {
        let last = body[expected - 1] - OFFSET;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::MalformedGraph6("nonzero padding bits".into()));
        }
    }
    Ok(Graph::from_rows(adj))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference strings produced by an independent graph6 encoder.
    const P70: &str = "~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G?????????@??????????C??????????G??????????G??????????C??????????@???????????G";

    #[test]
    fn known_encodings() {
        assert_eq!(to_graph6(&Graph::complete(5)), "D~{");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::cycle(5)), "Dhc");
        assert_eq!(to_graph6(&Graph::path(4)), "Ch");
        assert_eq!(to_graph6(&Graph::path(70)), P70);
    }

    #[test]
    fn known_decodings() {
        assert_eq!(parse_graph6("D~{").unwrap(), Graph::complete(5));
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6("Dhc\n").unwrap(), Graph::cycle(5));
        assert_eq!(parse_graph6(">>graph6<<Ch").unwrap(), Graph::path(4));
        assert_eq!(parse_graph6(P70).unwrap(), Graph::path(70));
    }

    #[test]
    fn petersen_in_reference_labeling() {
        // networkx labeling: outer cycle 0..4, spokes i -- i+5, inner 5-7-9-6-8.
        let g = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!((g.n(), g.edge_count()), (10, 15));
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_graph6(""), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6("D~"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(
            parse_graph6("D~{{"),
            Err(Error::MalformedGraph6(_))
        ));
        assert!(matches!(
            parse_graph6("D~ {"),
            Err(Error::MalformedGraph6(_))
        ));
        assert!(matches!(parse_graph6("~?"), Err(Error::MalformedGraph6(_))));
        // K2 followed by a padding bit set.
        assert!(matches!(parse_graph6("A`"), Err(Error::MalformedGraph6(_))));
    }

    #[test]
    fn rejects_oversized() {
        // n = 513 header with no body: capacity is checked before length.
        let header: String = [126u8, 63, 63 + 8, 63 + 1]
            .iter()
            .map(|&b| b as char)
            .collect();
        assert_eq!(parse_graph6(&header), Err(Error::CapacityExceeded(513)));
    }

    #[test]
    fn round_trip_at_capacity() {
        let g = Graph::cycle(512);
        assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }
}
