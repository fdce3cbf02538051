//! DIMACS `.col` reader and writer.
//!
//! Accepted input: `c …` comment lines, blank lines, exactly one
//! `p edge <n> <m>` header (`p col` is accepted as a synonym) before any
//! edge, then `e <u> <v>` lines with 1-indexed endpoints. The number of `e`
//! lines must equal the declared `m`.
//!
//! Output is canonical: the header, then every edge once as `e u v` with
//! `u < v`, lexicographically sorted, each line terminated by `\n`.

use std::fmt::Write as _;

use crate::graph::{Graph, GraphError};

pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        let mut fields = line.split_whitespace();
        match fields.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(GraphError::MalformedHeader(format!(
                        "second header on line {line_no}"
                    )));
                }
                let rest: Vec<&str> = fields.collect();
                let parsed = match rest.as_slice() {
                    [kind, n, m] if *kind == "edge" || *kind == "col" => {
                        n.parse::<usize>().ok().zip(m.parse::<usize>().ok())
                    }
                    _ => None,
                };
                match parsed {
                    Some(nm) => header = Some(nm),
                    None => return Err(GraphError::MalformedHeader(line.to_string())),
                }
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(GraphError::MalformedHeader(
                        "edge line before `p edge` header".to_string(),
                    ));
                };
                let malformed = || GraphError::MalformedLine {
                    line: line_no,
                    text: line.to_string(),
                };
                let ends: Vec<usize> = fields
                    .map(|f| f.parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| malformed())?;
                let [u, v] = ends.as_slice() else {
                    return Err(malformed());
                };
                for &x in [u, v] {
                    if x == 0 || x > n {
                        return Err(GraphError::VertexOutOfRange(x.saturating_sub(1)));
                    }
                }
                edges.push((u - 1, v - 1));
            }
            Some(_) => {
                return Err(GraphError::MalformedLine {
                    line: line_no,
                    text: line.to_string(),
                })
            }
        }
    }

    let (n, m) =
        header.ok_or_else(|| GraphError::MalformedHeader("missing `p edge` header".into()))?;
    if edges.len() != m {
        return Err(GraphError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Graph::from_edges(n, &edges)
}

pub fn emit_dimacs(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.m());
    writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
