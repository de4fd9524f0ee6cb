//! graph6 and plain edge-list text formats.

use thiserror::Error;

use super::DenseGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("byte {0:#x} outside the graph6 range 63..=126")]
    BadByte(u8),
    #[error("graph6 data truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after graph6 body")]
    Trailing,
    #[error("line {line}: {msg}")]
    Text { line: usize, msg: String },
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// graph6 encoding without the optional `>>graph6<<` header or newline.
pub fn to_graph6(g: &DenseGraph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(s: &str) -> Result<DenseGraph, FormatError> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(FormatError::BadByte(b));
        }
    }
    let take = |range: std::ops::Range<usize>| -> Result<usize, FormatError> {
        if bytes.len() < range.end {
            return Err(FormatError::Truncated {
                expected: range.end,
                found: bytes.len(),
            });
        }
        Ok(bytes[range].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, body) = match bytes.first() {
        None => {
            return Err(FormatError::Truncated {
                expected: 1,
                found: 0,
            })
        }
        Some(126) if bytes.get(1) == Some(&126) => (take(2..8)?, 8),
        Some(126) => (take(1..4)?, 4),
        Some(&b) => ((b - 63) as usize, 1),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = body + nbits.div_ceil(6);
    if bytes.len() < expected {
        return Err(FormatError::Truncated {
            expected,
            found: bytes.len(),
        });
    }
    if bytes.len() > expected {
        return Err(FormatError::Trailing);
    }
    let mut g = DenseGraph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[body + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// `n` on the first line, then one `u v` line per edge with `u < v`.
pub fn to_adjacency_list(g: &DenseGraph) -> String {
    let mut s = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn from_adjacency_list(s: &str) -> Result<DenseGraph, FormatError> {
    let mut lines = s
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, first) = lines.next().ok_or(FormatError::Text {
        line: 1,
        msg: "missing vertex count".into(),
    })?;
    let n: usize = first.parse().map_err(|_| FormatError::Text {
        line,
        msg: format!("bad vertex count {first:?}"),
    })?;
    let mut g = DenseGraph::empty(n);
    for (line, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let parse = |t: &str| -> Result<usize, FormatError> {
            let v: usize = t.parse().map_err(|_| FormatError::Text {
                line,
                msg: format!("bad vertex {t:?}"),
            })?;
            if v >= n {
                return Err(FormatError::Text {
                    line,
                    msg: format!("vertex {v} out of range"),
                });
            }
            Ok(v)
        };
        match parts.as_slice() {
            [a, b] => {
                let (u, v) = (parse(a)?, parse(b)?);
                if u == v {
                    return Err(FormatError::Text {
                        line,
                        msg: "self-loop".into(),
                    });
                }
                g.add_edge(u, v);
            }
            _ => {
                return Err(FormatError::Text {
                    line,
                    msg: "expected two vertices".into(),
                })
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_graph6_strings() {
        // Reference strings as produced by nauty's geng/showg.
        let c5 = DenseGraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5)));
        assert_eq!(to_graph6(&c5), "Dhc");
        let k4 = DenseGraph::complete(4);
        assert_eq!(to_graph6(&k4), "C~");
        assert_eq!(to_graph6(&DenseGraph::empty(0)), "?");
        assert_eq!(from_graph6("Dhc").unwrap(), c5);
        assert_eq!(from_graph6(">>graph6<<C~\n").unwrap(), k4);
    }

    #[test]
    fn long_size_prefix() {
        let mut g = DenseGraph::empty(100);
        g.add_edge(0, 99);
        g.add_edge(17, 42);
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63 + 36]);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_graph6() {
        assert!(matches!(from_graph6("D"), Err(FormatError::Truncated { .. })));
        assert!(matches!(from_graph6("Dhcc"), Err(FormatError::Trailing)));
        assert!(matches!(from_graph6("D h"), Err(FormatError::BadByte(b' '))));
    }

    #[test]
    fn adjacency_list_text() {
        let g = DenseGraph::from_edges(4, [(0, 1), (2, 3), (1, 3)]);
        let s = to_adjacency_list(&g);
        assert_eq!(s, "4\n0 1\n1 3\n2 3\n");
        assert_eq!(from_adjacency_list(&s).unwrap(), g);
        assert!(from_adjacency_list("3\n0 3\n").is_err());
        assert!(from_adjacency_list("3\n1 1\n").is_err());
    }
}
