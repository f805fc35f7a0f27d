//! Edge-list text format: a header line `n m`, then `m` lines `u v` (0-indexed).

use std::fmt::Write as _;

use super::{Graph, DEFAULT_VERTEX_CAP};
use crate::{Error, Result};

/// Writes the header and every edge as `u v` with `u < v`, one per line.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    parse_edge_list_with_cap(text, DEFAULT_VERTEX_CAP)
}

/// Blank lines are skipped. Edges may be given in either orientation but
/// must not repeat.
pub fn parse_edge_list_with_cap(text: &str, cap: usize) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
    let (n, m) = parse_pair(hline, header)?;
    if n == 0 {
        return Err(Error::parse(hline, "vertex count must be positive"));
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut g = Graph::empty_with_cap(n, cap)?;
    let mut seen = 0usize;
    for (lineno, line) in lines {
        let (u, v) = parse_pair(lineno, line)?;
        if u >= n || v >= n {
            return Err(Error::parse(lineno, format!("vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(Error::parse(lineno, "self-loop"));
        }
        if g.has_edge(u, v) {
            return Err(Error::parse(lineno, format!("duplicate edge {u} {v}")));
        }
        g.insert_edge(u, v)?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(hline, format!("header declares {m} edges, found {seen}")));
    }
    Ok(g)
}

fn parse_pair(lineno: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::parse(lineno, "expected two integers"))?;
        tok.parse()
            .map_err(|_| Error::parse(lineno, format!("not a non-negative integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::parse(lineno, "trailing tokens"));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_basic, BasicKind};
    use proptest::prelude::*;

    #[test]
    fn writes_canonical_format() {
        let p3 = build_basic(BasicKind::Path, 3).unwrap();
        assert_eq!(to_edge_list(&p3), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn parses_reversed_edges_and_blank_lines() {
        let g = parse_edge_list("\n3 2\n1 0\n\n2 1\n").unwrap();
        assert_eq!(g, build_basic(BasicKind::Path, 3).unwrap());
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "",
            "3",
            "0 0",
            "3 1\n0 3",
            "3 1\n1 1",
            "3 2\n0 1\n1 0",
            "3 2\n0 1",
            "3 1\n0 1 2",
            "3 1\n-1 2",
            "600 0",
        ] {
            assert!(parse_edge_list(bad).is_err(), "accepted {bad:?}");
        }
    }

    proptest! {
        #[test]
        fn roundtrip(n in 1usize..20, bits in proptest::collection::vec(any::<bool>(), 190)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        }
    }
}
