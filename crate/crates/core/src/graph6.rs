//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix in column order (0,1),(0,2),(1,2),(0,3),..., packed
//! big-endian six bits per printable character (value + 63).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

fn sextet(byte: u8, pos: usize) -> Result<u8> {
    if (OFFSET..=126).contains(&byte) {
        Ok(byte - OFFSET)
    } else {
        Err(malformed(format!(
            "invalid character {:?} at offset {pos}",
            byte as char
        )))
    }
}

/// Reads the vertex count; returns it with the number of bytes consumed.
fn parse_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let wide = |start: usize, len: usize| -> Result<usize> {
        let chunk = bytes
            .get(start..start + len)
            .ok_or_else(|| malformed("truncated size prefix"))?;
        chunk.iter().enumerate().try_fold(0usize, |acc, (i, &b)| {
            Ok((acc << 6) | sextet(b, start + i)? as usize)
        })
    };
    match bytes {
        [] => Err(malformed("empty line")),
        [126, 126, ..] => Ok((wide(2, 6)?, 8)),
        [126, ..] => Ok((wide(1, 3)?, 4)),
        [b, ..] => Ok((sextet(*b, 0)? as usize, 1)),
    }
}

fn push_size(out: &mut String, n: usize) {
    let push_wide = |out: &mut String, groups: u32| {
        for k in (0..groups).rev() {
            out.push((((n >> (6 * k)) & 0x3f) as u8 + OFFSET) as char);
        }
    };
    if n <= 62 {
        out.push((n as u8 + OFFSET) as char);
    } else if n <= 258_047 {
        out.push('~');
        push_wide(out, 3);
    } else {
        out.push_str("~~");
        push_wide(out, 6);
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` header and trailing
/// whitespace are accepted. The encoded graph must satisfy the [`Graph`]
/// invariants; a valid encoding with an isolated vertex yields
/// [`Error::IsolatedVertex`].
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (n, consumed) = parse_size(bytes)?;
    let body = &bytes[consumed..];
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} data characters for n = {n}, found {}",
            body.len()
        )));
    }
    let mut adj = vec![VertexSet::empty(n); n];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let value = sextet(body[bit / 6], consumed + bit / 6)?;
            if value & (0x20 >> (bit % 6)) != 0 {
                adj[i].insert(j)?;
                adj[j].insert(i)?;
            }
            bit += 1;
        }
    }
    // padding bits must be zero
    if !bit.is_multiple_of(6) {
        let last = sextet(body[bit / 6], consumed + bit / 6)?;
        if last & ((1u8 << (6 - bit % 6)) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Graph::from_adjacency(adj)
}

/// Encodes `g` without relabeling its vertices.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(8 + (n * n) / 12);
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + OFFSET) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + OFFSET) as char);
    }
    out
}

/// One parsed line of a graph6 stream. Blank lines are skipped by
/// [`read_graph6_lines`]; line numbers are 1-based.
#[derive(Debug, Clone)]
pub struct Graph6Line {
    pub line_no: usize,
    pub text: String,
    pub graph: Result<Graph>,
}

/// Parses every non-blank line of a graph6 stream, keeping failures in place
/// so callers can report them with their line number and carry on.
pub fn read_graph6_lines(text: &str) -> Vec<Graph6Line> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let text = l.trim().to_string();
            Graph6Line {
                line_no: i + 1,
                graph: parse_graph6(&text),
                text,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn parses_small_graphs() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2, complete(2));
        assert_eq!(k2.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(parse_graph6("Bw").unwrap(), complete(3));
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), complete(3));
    }

    #[test]
    fn emits_small_graphs() {
        assert_eq!(to_graph6(&complete(2)), "A_");
        assert_eq!(to_graph6(&complete(3)), "Bw");
    }

    #[test]
    fn isolated_vertex_is_its_own_error() {
        assert_eq!(parse_graph6("A?"), Err(Error::IsolatedVertex { vertex: 0 }));
        assert_eq!(parse_graph6("@"), Err(Error::IsolatedVertex { vertex: 0 }));
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["", "A", "A__", "A\u{7f}", "B ", "~", "~??", "Ax"] {
            match parse_graph6(bad) {
                Err(Error::MalformedGraph6(_)) => {}
                other => panic!("{bad:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn long_size_prefix() {
        let g = path(70);
        let text = to_graph6(&g);
        assert!(text.starts_with("~?@E"));
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn stream_keeps_line_numbers() {
        let lines = read_graph6_lines("A_\n\nA?\nBw\n");
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[1].line_no, 3);
        assert!(lines[1].graph.is_err());
        assert_eq!(lines[2].line_no, 4);
    }
}
