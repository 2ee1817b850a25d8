//! graph6 encoding for graphs of order at most 32.
//!
//! The first byte is `n + 63`; the upper triangle follows in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per byte, most significant
//! bit first, each group stored as `value + 63`.

use std::io::BufRead;

use super::{bit, Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parse one graph6 line. Surrounding whitespace and an optional `>>graph6<<`
/// header are stripped.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Error::Graph6Char { byte, offset });
        }
    }
    let (&first, data) = bytes.split_first().ok_or(Error::Graph6Empty)?;
    if first == 126 {
        // n >= 63: either 3 or 6 more size bytes follow
        let n = if data.first() == Some(&126) {
            data.get(1..7).map(|b| b.iter().fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize))
        } else {
            data.get(..3).map(|b| b.iter().fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize))
        };
        return Err(match n {
            Some(n) => Error::TooManyVertices(n),
            None => Error::Graph6Length { expected: 3, found: data.len() },
        });
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let expected = data_len(n);
    if data.len() != expected {
        return Err(Error::Graph6Length { expected, found: data.len() });
    }
    let mut g = Graph::empty_unchecked(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encode as graph6 bytes (without newline).
pub fn encode_graph6_bytes(g: &Graph, out: &mut impl Extend<u8>) {
    let n = g.order();
    out.extend(std::iter::once(n as u8 + 63));
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            acc <<= 1;
            if col & bit(i) != 0 {
                acc |= 1;
            }
            k += 1;
            if k.is_multiple_of(6) {
                out.extend(std::iter::once(acc + 63));
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        acc <<= 6 - k % 6;
        out.extend(std::iter::once(acc + 63));
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let mut bytes = Vec::with_capacity(1 + data_len(g.order()));
    encode_graph6_bytes(g, &mut bytes);
    // every byte is in 63..=126
    String::from_utf8(bytes).expect("graph6 is ASCII")
}

/// Read graph6 lines from a reader, skipping blank lines and `#` comments.
/// Each item carries the 1-based line number on failure.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> impl Iterator<Item = std::result::Result<Graph, (usize, Error)>> {
    reader.lines().enumerate().filter_map(|(i, line)| match line {
        Err(e) => Some(Err((i + 1, Error::Domain(e.to_string())))),
        Ok(line) => {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                None
            } else {
                Some(parse_graph6(t).map_err(|e| (i + 1, e)))
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2).unwrap());
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(encode_graph6(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(encode_graph6(&Graph::path(3).unwrap()), "Bg");
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()), "@");
    }

    #[test]
    fn header_and_whitespace() {
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(parse_graph6("  A_ ").unwrap(), Graph::complete(2).unwrap());
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6Empty)));
        assert!(matches!(parse_graph6("B!"), Err(Error::Graph6Char { .. })));
        assert!(matches!(parse_graph6("A\x7f"), Err(Error::Graph6Char { .. })));
        assert!(parse_graph6("C?").is_ok());
        assert!(matches!(parse_graph6("D?"), Err(Error::Graph6Length { expected: 2, found: 1 })));
        assert!(matches!(parse_graph6("A__"), Err(Error::Graph6Length { .. })));
        // 33 vertices
        let mut s = String::from("`");
        s.push_str(&"?".repeat(88));
        assert!(matches!(parse_graph6(&s), Err(Error::TooManyVertices(33))));
        assert!(matches!(parse_graph6("~?@~"), Err(Error::TooManyVertices(_))));
    }

    #[test]
    fn order_32_round_trip() {
        let g = Graph::complete(32).unwrap();
        assert_eq!(parse_graph6(&encode_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn reader_skips_comments() {
        let input = "# kind=LC n=2 size=1\nA_\n\nBw\n";
        let got: Vec<_> = read_graph6_lines(input.as_bytes()).map(|r| r.unwrap()).collect();
        assert_eq!(got.len(), 2);
    }
}
