//! graph6 encoding, restricted to graphs on at most 64 vertices.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

impl serde::Serialize for Graph {
    /// Graphs serialize as their graph6 string.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&encode(self))
    }
}

/// Encode `g` as a graph6 string (no header, no trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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

/// Decode one graph6 string. A leading `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn decode(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s).as_bytes();
    let bad = |msg: &str| Error::Graph6(format!("{msg} in {:?}", text.trim()));
    if s.is_empty() {
        return Err(bad("empty string"));
    }
    if let Some(&c) = s.iter().find(|&&c| !(63..=126).contains(&c)) {
        return Err(bad(&format!("byte {c:#04x} outside 63..=126")));
    }
    let (n, body) = if s[0] != 126 {
        ((s[0] - 63) as usize, &s[1..])
    } else if s.len() >= 4 && s[1] != 126 {
        let n = s[1..4]
            .iter()
            .fold(0usize, |a, &c| a << 6 | (c - 63) as usize);
        (n, &s[4..])
    } else {
        return Err(bad("unsupported size prefix"));
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(bad(&format!(
            "expected {needed} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Decode every non-empty line of `text`.
pub fn decode_all(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(decode)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(decode("B?").unwrap(), Graph::empty(3));
        assert_eq!(decode("Bw").unwrap(), Graph::complete(3));
        assert_eq!(encode(&Graph::complete(3)), "Bw");
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(decode(">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn known_strings() {
        // petersen graph and C5 as printed by nauty's geng/showg
        let petersen = decode("IheA@GUAo").unwrap();
        assert_eq!(petersen.order(), 10);
        assert_eq!(petersen.edge_count(), 15);
        assert!((0..10).all(|v| petersen.degree(v) == 3));
        assert_eq!(encode(&Graph::cycle(5)), "Dhc");
    }

    #[test]
    fn round_trips() {
        for g in [
            Graph::cycle(7),
            Graph::matching(6, 1),
            Graph::complete(63),
            Graph::star(63),
            Graph::path(64),
        ] {
            let s = encode(&g);
            assert_eq!(decode(&s).unwrap(), g);
            assert_eq!(encode(&decode(&s).unwrap()), s);
        }
    }

    #[test]
    fn malformed() {
        assert!(matches!(decode(""), Err(Error::Graph6(_))));
        assert!(matches!(decode("Bww"), Err(Error::Graph6(_))));
        assert!(matches!(decode("C"), Err(Error::Graph6(_))));
        assert!(matches!(decode("B\u{1}"), Err(Error::Graph6(_))));
        assert!(matches!(decode("~?@@"), Err(Error::TooManyVertices(65))));
    }
}
