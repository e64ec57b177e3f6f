//! graph6, short form only (at most 62 vertices).
//!
//! A line is the byte `n + 63` followed by the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six bits
//! per byte (most significant first), zero padded, each byte offset by 63.

use super::{Graph, MAX_ORDER};
use crate::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph> {
    parse_graph6_with_cap(text, MAX_ORDER)
}

/// Like [`parse_graph6`] but rejects graphs with more than `cap` vertices.
pub fn parse_graph6_with_cap(text: &str, cap: usize) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, body) = bytes.split_first().ok_or_else(|| Error::MalformedGraph6("empty line".into()))?;
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!("byte {b} outside 63..=126")));
    }
    if first == 126 {
        return Err(Error::MalformedGraph6("long-form size prefix is not supported".into()));
    }
    let n = (first - 63) as usize;
    let cap = cap.min(MAX_ORDER);
    if n == 0 || n > cap {
        return Err(Error::UnsupportedSize { n, cap });
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(Error::MalformedGraph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Error::UnsupportedSize { n, cap: MAX_ORDER });
    }
    let nbits = n * (n - 1) / 2;
    let mut data = vec![0u8; nbits.div_ceil(6)];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(data.len() + 1);
    out.push((n as u8 + 63) as char);
    out.extend(data.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

/// Parses one graph per non-blank line, pairing each result with its
/// 1-based line number.
pub fn parse_graph6_lines(text: &str) -> impl Iterator<Item = (usize, Result<Graph>)> + '_ {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, parse_graph6(l.trim())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4).unwrap());
        let k4e = parse_graph6("C}").unwrap();
        assert_eq!(k4e.edges(), &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        assert_eq!(encode_graph6(&Graph::complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(encode_graph6(&k1).unwrap(), "@");
        assert_eq!(encode_graph6(&Graph::path(4).unwrap()).unwrap(), "Ch");
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2).unwrap());
    }

    #[test]
    fn header_and_newline_tolerated() {
        assert_eq!(parse_graph6(">>graph6<<Ch\n").unwrap(), Graph::path(4).unwrap());
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["", "C", "C~~", "C\x7f", "C ", "~??", "Bx"] {
            assert!(matches!(parse_graph6(bad), Err(Error::MalformedGraph6(_))), "{bad:?}");
        }
        assert!(matches!(parse_graph6("?"), Err(Error::UnsupportedSize { n: 0, .. })));
        assert_eq!(parse_graph6_with_cap("C~", 3), Err(Error::UnsupportedSize { n: 4, cap: 3 }));
    }

    #[test]
    fn line_numbers() {
        let lines: Vec<_> = parse_graph6_lines(">>graph6<<C~\n\nC!\n@\n").collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[1].0, 3);
        assert!(lines[1].1.is_err());
        assert!(lines[2].1.is_ok());
    }
}
