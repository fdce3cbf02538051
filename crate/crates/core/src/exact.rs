//! Exact, exponential-time oracles for small graphs: chromatic number,
//! maximal cliques, clique number and strong stable sets.
//!
//! Every search counts its nodes against a caller-supplied budget and fails
//! with [`BudgetExceeded`] instead of returning an unproven answer.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::graph::{Graph, Vertex};
use crate::greedy::{mccolor, TieBreakPolicy};
use crate::BudgetExceeded;

/// All maximal cliques, each sorted, in lexicographic order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueSet {
    pub cliques: Vec<Vec<Vertex>>,
}

impl CliqueSet {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }
}

/// A set of pairwise non-adjacent vertices, kept sorted and duplicate-free.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StableSet(Vec<Vertex>);

impl StableSet {
    pub fn new(mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        StableSet(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrongStableSearch {
    Found(StableSet),
    NoneExists,
}

fn adjacency_rows(g: &Graph) -> Vec<BitSet> {
    g.vertices()
        .map(|v| {
            let mut row = BitSet::new(g.n());
            for &w in g.neighbors(v) {
                row.insert(w);
            }
            row
        })
        .collect()
}

/// Maximal cliques by Bron–Kerbosch with Tomita pivoting (pivot maximizes
/// `|P ∩ N(u)|` over `P ∪ X`). Unbounded; see [`maximal_cliques_capped`].
pub fn maximal_cliques(g: &Graph) -> CliqueSet {
    maximal_cliques_capped(g, u64::MAX).expect("unbounded enumeration")
}

/// As [`maximal_cliques`], failing once more than `cap` cliques are found.
pub fn maximal_cliques_capped(g: &Graph, cap: u64) -> Result<CliqueSet, BudgetExceeded> {
    let rows = adjacency_rows(g);
    let mut out = Vec::new();
    let mut current = Vec::new();
    bron_kerbosch(
        &rows,
        &mut current,
        BitSet::full(g.n()),
        BitSet::new(g.n()),
        &mut out,
        cap,
    )?;
    // n = 0 has the empty clique only formally; report none.
    if g.n() == 0 {
        out.clear();
    }
    for clique in &mut out {
        clique.sort_unstable();
    }
    out.sort();
    Ok(CliqueSet { cliques: out })
}

fn bron_kerbosch(
    rows: &[BitSet],
    current: &mut Vec<Vertex>,
    mut candidates: BitSet,
    mut excluded: BitSet,
    out: &mut Vec<Vec<Vertex>>,
    cap: u64,
) -> Result<(), BudgetExceeded> {
    if candidates.is_empty() {
        if excluded.is_empty() {
            if out.len() as u64 >= cap {
                return Err(BudgetExceeded { budget: cap });
            }
            out.push(current.clone());
        }
        return Ok(());
    }
    let pivot = candidates
        .union(&excluded)
        .iter()
        .max_by_key(|&u| {
            (
                candidates.intersection_count(&rows[u]),
                std::cmp::Reverse(u),
            )
        })
        .expect("candidates is non-empty");
    let branch: Vec<Vertex> = candidates.difference(&rows[pivot]).iter().collect();
    for v in branch {
        current.push(v);
        bron_kerbosch(
            rows,
            current,
            candidates.intersection(&rows[v]),
            excluded.intersection(&rows[v]),
            out,
            cap,
        )?;
        current.pop();
        candidates.remove(v);
        excluded.insert(v);
    }
    Ok(())
}

/// Size of a largest clique; 0 for the graph without vertices.
pub fn clique_number(g: &Graph) -> usize {
    let rows = adjacency_rows(g);
    let mut best = 0;
    max_clique(&rows, 0, BitSet::full(g.n()), &mut best);
    best
}

fn max_clique(rows: &[BitSet], size: usize, mut candidates: BitSet, best: &mut usize) {
    if candidates.is_empty() {
        *best = (*best).max(size);
        return;
    }
    loop {
        let Some(v) = candidates.iter().next() else {
            break;
        };
        if size + candidates.count() <= *best {
            return;
        }
        max_clique(rows, size + 1, candidates.intersection(&rows[v]), best);
        candidates.remove(v);
    }
}

/// Exact chromatic number by DSATUR-ordered branch and bound.
///
/// Starts from the MCColor bound (minimum-index ties) and the clique number,
/// branches on a vertex of maximum saturation (ties: most uncolored
/// neighbors, then smallest id), and only ever opens one new color beyond
/// the largest in use. `budget` caps the number of search nodes.
pub fn chromatic_number(g: &Graph, budget: u64) -> Result<usize, BudgetExceeded> {
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let lower = clique_number(g);
    let (greedy, _) = mccolor(g, &TieBreakPolicy::MinIndex).expect("min-index policy is valid");
    let upper = greedy.num_colors();
    if lower == upper {
        return Ok(upper);
    }
    let mut search = ColoringSearch {
        g,
        color: vec![0; n],
        // counts[v * width + c]: neighbors of v holding color c.
        counts: vec![0; n * (upper + 1)],
        width: upper + 1,
        saturation: vec![0; n],
        uncolored_degree: (0..n).map(|v| g.degree(v)).collect(),
        best: upper,
        lower,
        nodes: 0,
        budget,
    };
    search.branch(0, 0)?;
    Ok(search.best)
}

struct ColoringSearch<'a> {
    g: &'a Graph,
    color: Vec<usize>,
    counts: Vec<u32>,
    width: usize,
    saturation: Vec<usize>,
    uncolored_degree: Vec<usize>,
    best: usize,
    lower: usize,
    nodes: u64,
    budget: u64,
}

impl ColoringSearch<'_> {
    fn branch(&mut self, colored: usize, used: usize) -> Result<(), BudgetExceeded> {
        if colored == self.g.n() {
            self.best = used;
            return Ok(());
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(BudgetExceeded {
                budget: self.budget,
            });
        }
        let v = self
            .g
            .vertices()
            .filter(|&v| self.color[v] == 0)
            .max_by_key(|&v| {
                (
                    self.saturation[v],
                    self.uncolored_degree[v],
                    std::cmp::Reverse(v),
                )
            })
            .expect("some vertex is uncolored");
        let limit = (used + 1).min(self.best - 1);
        for c in 1..=limit {
            if self.counts[v * self.width + c] != 0 {
                continue;
            }
            self.assign(v, c);
            self.branch(colored + 1, used.max(c))?;
            self.unassign(v, c);
            if self.best == self.lower {
                break;
            }
            // A cheaper coloring may have been found; stop above it.
            if c + 1 >= self.best {
                break;
            }
        }
        Ok(())
    }

    fn assign(&mut self, v: Vertex, c: usize) {
        self.color[v] = c;
        for &w in self.g.neighbors(v) {
            self.uncolored_degree[w] -= 1;
            let slot = &mut self.counts[w * self.width + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: Vertex, c: usize) {
        self.color[v] = 0;
        for &w in self.g.neighbors(v) {
            self.uncolored_degree[w] += 1;
            let slot = &mut self.counts[w * self.width + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }
}

/// True iff `set` is stable and meets every maximal clique of `g`.
pub fn is_strong_stable_set(g: &Graph, set: &[Vertex]) -> bool {
    if !g.is_stable_set(set) {
        return false;
    }
    let mut member = vec![false; g.n()];
    for &v in set {
        member[v] = true;
    }
    maximal_cliques(g)
        .cliques
        .iter()
        .all(|k| k.iter().any(|&v| member[v]))
}

/// Backtracking search for a stable set meeting every maximal clique.
///
/// Repeatedly takes the first clique (in canonical order) not yet met and
/// branches on its vertices, ascending, that are not adjacent to anything
/// chosen so far. The first set found is returned, so the answer is
/// deterministic. `budget` caps both the clique count and search nodes.
pub fn find_strong_stable_set(
    g: &Graph,
    budget: u64,
) -> Result<StrongStableSearch, BudgetExceeded> {
    let cliques = maximal_cliques_capped(g, budget)?.cliques;
    let mut cliques_of: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (k, clique) in cliques.iter().enumerate() {
        for &v in clique {
            cliques_of[v].push(k);
        }
    }
    let mut search = HittingSearch {
        g,
        cliques: &cliques,
        cliques_of,
        hits: vec![0; cliques.len()],
        blocked: vec![0; g.n()],
        chosen: Vec::new(),
        nodes: 0,
        budget,
    };
    if search.run()? {
        Ok(StrongStableSearch::Found(StableSet::new(search.chosen)))
    } else {
        Ok(StrongStableSearch::NoneExists)
    }
}

struct HittingSearch<'a> {
    g: &'a Graph,
    cliques: &'a [Vec<Vertex>],
    cliques_of: Vec<Vec<usize>>,
    hits: Vec<u32>,
    /// Chosen vertices in the closed neighborhood of each vertex.
    blocked: Vec<u32>,
    chosen: Vec<Vertex>,
    nodes: u64,
    budget: u64,
}

impl HittingSearch<'_> {
    fn run(&mut self) -> Result<bool, BudgetExceeded> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(BudgetExceeded {
                budget: self.budget,
            });
        }
        let Some(open) = self.hits.iter().position(|&h| h == 0) else {
            return Ok(true);
        };
        for &v in &self.cliques[open] {
            if self.blocked[v] != 0 {
                continue;
            }
            self.toggle(v, true);
            if self.run()? {
                return Ok(true);
            }
            self.toggle(v, false);
        }
        Ok(false)
    }

    fn toggle(&mut self, v: Vertex, on: bool) {
        let apply = |x: &mut u32| if on { *x += 1 } else { *x -= 1 };
        for &k in &self.cliques_of[v] {
            apply(&mut self.hits[k]);
        }
        apply(&mut self.blocked[v]);
        for &w in self.g.neighbors(v) {
            apply(&mut self.blocked[w]);
        }
        if on {
            self.chosen.push(v);
        } else {
            self.chosen.pop();
        }
    }
}
