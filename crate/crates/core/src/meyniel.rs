//! Exhaustive Meyniel recognition: a graph is Meyniel when every odd cycle
//! of length at least five has at least two chords.
//!
//! The checker walks simple paths from every start vertex `s`, visiting only
//! vertices greater than `s`, and closes a cycle whenever the path end is
//! adjacent to `s`. A cycle `s, p1, …, pk` is reported only when `p1 < pk`,
//! so each simple cycle is seen once and already in canonical form.
//!
//! Chords of a path prefix stay chords of every cycle that extends it, so
//! once a prefix is forced to at least two chords its subtree cannot hold a
//! violation and is skipped. The verdict and witness are the same as with a
//! full enumeration; only the amount of work changes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::BitSet;
use crate::graph::{Graph, Vertex};
use crate::BudgetExceeded;

/// An odd cycle of length at least five with at most one chord.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    /// Cycle order, starting at its smallest vertex, with the second vertex
    /// smaller than the last.
    pub vertices: Vec<Vertex>,
    pub chord_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MeynielVerdict {
    Meyniel,
    NotMeyniel(CycleWitness),
}

impl MeynielVerdict {
    pub fn is_meyniel(&self) -> bool {
        matches!(self, MeynielVerdict::Meyniel)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a simple cycle of the graph: {0}")]
pub struct NotACycle(pub String);

/// Number of graph edges joining two vertices that are not cyclically
/// consecutive on `cycle`.
pub fn chord_count(g: &Graph, cycle: &[Vertex]) -> Result<usize, NotACycle> {
    let k = cycle.len();
    if k < 3 {
        return Err(NotACycle(format!("length {k} is below 3")));
    }
    let mut seen = vec![false; g.n()];
    for &v in cycle {
        if v >= g.n() {
            return Err(NotACycle(format!("vertex {v} out of range")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(NotACycle(format!("vertex {v} repeated")));
        }
    }
    for i in 0..k {
        let (u, v) = (cycle[i], cycle[(i + 1) % k]);
        if !g.has_edge(u, v) {
            return Err(NotACycle(format!("{u} and {v} are not adjacent")));
        }
    }
    let mut chords = 0;
    for i in 0..k {
        for j in i + 2..k {
            if i == 0 && j == k - 1 {
                continue;
            }
            if g.has_edge(cycle[i], cycle[j]) {
                chords += 1;
            }
        }
    }
    Ok(chords)
}

/// Decides whether `g` is Meyniel. `budget` caps the number of search steps
/// (path extensions); exceeding it is an error rather than a guess.
pub fn is_meyniel(g: &Graph, budget: u64) -> Result<MeynielVerdict, BudgetExceeded> {
    if g.bipartition().is_some() {
        return Ok(MeynielVerdict::Meyniel);
    }
    let rows: Vec<BitSet> = g
        .vertices()
        .map(|v| {
            let mut row = BitSet::new(g.n());
            for &w in g.neighbors(v) {
                row.insert(w);
            }
            row
        })
        .collect();
    let mut search = CycleSearch {
        g,
        rows,
        path: Vec::with_capacity(g.n()),
        on_path: vec![false; g.n()],
        steps: 0,
        budget,
    };
    for s in g.vertices() {
        search.path.clear();
        search.path.push(s);
        search.on_path[s] = true;
        let found = search.extend(0)?;
        search.on_path[s] = false;
        if let Some(witness) = found {
            return Ok(MeynielVerdict::NotMeyniel(witness));
        }
    }
    Ok(MeynielVerdict::Meyniel)
}

struct CycleSearch<'a> {
    g: &'a Graph,
    rows: Vec<BitSet>,
    path: Vec<Vertex>,
    on_path: Vec<bool>,
    steps: u64,
    budget: u64,
}

impl CycleSearch<'_> {
    /// `chords` counts edges between non-consecutive path vertices, except
    /// an edge between the two path ends (that one would close the cycle).
    fn extend(&mut self, chords: usize) -> Result<Option<CycleWitness>, BudgetExceeded> {
        let k = self.path.len() - 1;
        let start = self.path[0];
        let end = self.path[k];
        let closes = k >= 2 && self.rows[end].contains(start);

        if closes && self.path[1] < end {
            let len = k + 1;
            if len >= 5 && len % 2 == 1 && chords <= 1 {
                return Ok(Some(CycleWitness {
                    vertices: self.path.clone(),
                    chord_count: chords,
                }));
            }
        }

        // Extending turns a closing edge into a chord.
        let base = chords + usize::from(closes);
        if base >= 2 {
            return Ok(None);
        }

        for idx in 0..self.g.degree(end) {
            let w = self.g.neighbors(end)[idx];
            if w <= start || self.on_path[w] {
                continue;
            }
            self.steps += 1;
            if self.steps > self.budget {
                return Err(BudgetExceeded {
                    budget: self.budget,
                });
            }
            let added = if k >= 1 {
                self.path[1..k]
                    .iter()
                    .filter(|&&p| self.rows[w].contains(p))
                    .count()
            } else {
                0
            };
            // Every cycle through this prefix already has two chords.
            if base + added >= 2 {
                continue;
            }
            self.path.push(w);
            self.on_path[w] = true;
            let found = self.extend(base + added)?;
            self.on_path[w] = false;
            self.path.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{counterexample_graph, counterexample_vertex, COUNTEREXAMPLE_EDGES};
    use crate::DEFAULT_BUDGET;

    fn names(s: &str) -> Vec<Vertex> {
        s.chars()
            .map(|c| counterexample_vertex(c).unwrap())
            .collect()
    }

    #[test]
    fn chord_count_examples() {
        assert_eq!(chord_count(&Graph::cycle(5), &[0, 1, 2, 3, 4]), Ok(0));
        assert_eq!(chord_count(&Graph::complete(5), &[0, 1, 2, 3, 4]), Ok(5));
        assert_eq!(chord_count(&Graph::complete(3), &[0, 1, 2]), Ok(0));
    }

    #[test]
    fn chord_count_of_counterexample_hexagon() {
        let cycle = names("dejhgc");
        // Oracle: every non-consecutive pair checked against the raw name list.
        let adjacent = |a: char, b: char| {
            COUNTEREXAMPLE_EDGES
                .iter()
                .any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
        };
        let letters: Vec<char> = "dejhgc".chars().collect();
        let mut expected = 0;
        for i in 0..6 {
            for j in i + 2..6 {
                if !(i == 0 && j == 5) && adjacent(letters[i], letters[j]) {
                    expected += 1;
                }
            }
        }
        assert_eq!(expected, 0);
        assert_eq!(chord_count(&counterexample_graph(), &cycle), Ok(expected));
    }

    #[test]
    fn chord_count_rejects_non_cycles() {
        let g = Graph::cycle(5);
        assert!(chord_count(&g, &[0, 1]).is_err());
        assert!(chord_count(&g, &[0, 1, 3, 4]).is_err());
        assert!(chord_count(&g, &[0, 1, 2, 1, 0]).is_err());
        assert!(chord_count(&g, &[0, 1, 9]).is_err());
    }

    #[test]
    fn c5_is_not_meyniel() {
        let verdict = is_meyniel(&Graph::cycle(5), DEFAULT_BUDGET).unwrap();
        assert_eq!(
            verdict,
            MeynielVerdict::NotMeyniel(CycleWitness {
                vertices: vec![0, 1, 2, 3, 4],
                chord_count: 0
            })
        );
    }

    #[test]
    fn c5_with_one_chord_is_not_meyniel() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        match is_meyniel(&g, DEFAULT_BUDGET).unwrap() {
            MeynielVerdict::NotMeyniel(w) => {
                assert_eq!(w.vertices.len(), 5);
                assert_eq!(w.chord_count, 1);
                assert_eq!(chord_count(&g, &w.vertices), Ok(1));
            }
            MeynielVerdict::Meyniel => panic!("C5 plus one chord is not Meyniel"),
        }
    }

    #[test]
    fn c5_with_two_chords_is_meyniel() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)])
            .unwrap();
        assert!(is_meyniel(&g, DEFAULT_BUDGET).unwrap().is_meyniel());
    }

    #[test]
    fn long_odd_hole() {
        match is_meyniel(&Graph::cycle(9), DEFAULT_BUDGET).unwrap() {
            MeynielVerdict::NotMeyniel(w) => assert_eq!(w.vertices, (0..9).collect::<Vec<_>>()),
            MeynielVerdict::Meyniel => panic!("C9 is an odd hole"),
        }
    }

    #[test]
    fn bipartite_and_complete() {
        assert!(is_meyniel(&Graph::cycle(8), 1).unwrap().is_meyniel());
        assert!(is_meyniel(&Graph::empty(4), 1).unwrap().is_meyniel());
        assert!(is_meyniel(&Graph::complete(7), DEFAULT_BUDGET)
            .unwrap()
            .is_meyniel());
    }

    #[test]
    fn counterexample_is_meyniel() {
        assert!(is_meyniel(&counterexample_graph(), DEFAULT_BUDGET)
            .unwrap()
            .is_meyniel());
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::complete(8);
        assert_eq!(is_meyniel(&g, 3), Err(BudgetExceeded { budget: 3 }));
    }
}
