//! Greedy coloring engine.
//!
//! Keys (saturation or colored-neighbor count) only ever grow, one unit at
//! a time, so uncolored vertices live in a bucket queue indexed by key. A
//! key increase pushes a fresh entry into the next bucket and leaves the old
//! one behind; stale entries are recognised on pop (vertex already colored
//! or its key moved on) and dropped. Total pushes are at most `n + 2m`.
//!
//! Distinct neighbor colors are tracked per vertex in a flat table covering
//! colors `1..=deg(v)+1`, with a hash set for the rare larger colors, so
//! each membership test is O(1). The color given to a chosen vertex is the
//! smallest one missing among its colored neighbors, found by an O(deg)
//! scan. Overall work is `O(n + m)` plus the cost of the in-bucket choice:
//! O(1) amortized for [`TieBreakPolicy::Seeded`], a binary-heap operation
//! for the rank-based policies.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use super::{Coloring, PolicyError, SelectionRule, TieBreakPolicy, Trace, TraceStep};
use crate::graph::{Graph, Vertex};
use crate::rng::SplitMix64;

/// MCColor: repeatedly color an uncolored vertex of maximum saturation with
/// the smallest color absent from its neighborhood.
pub fn mccolor(g: &Graph, policy: &TieBreakPolicy) -> Result<(Coloring, Trace), PolicyError> {
    run_greedy(g, policy, SelectionRule::Saturation)
}

/// MCS+Color: the same loop, choosing by number of colored neighbors.
pub fn mcs_color(g: &Graph, policy: &TieBreakPolicy) -> Result<(Coloring, Trace), PolicyError> {
    run_greedy(g, policy, SelectionRule::ColoredNeighbors)
}

pub fn run_greedy(
    g: &Graph,
    policy: &TieBreakPolicy,
    rule: SelectionRule,
) -> Result<(Coloring, Trace), PolicyError> {
    let n = g.n();
    let mut queue = match (policy.ranks(n)?, policy) {
        (Some(rank), _) => KeyQueue::Ranked {
            rank,
            buckets: vec![BinaryHeap::new()],
        },
        (None, TieBreakPolicy::Seeded(seed)) => KeyQueue::Seeded {
            rng: SplitMix64::new(*seed),
            buckets: vec![Vec::new()],
        },
        (None, _) => unreachable!("only the seeded policy has no ranks"),
    };
    for v in g.vertices() {
        queue.push(v, 0);
    }

    let mut key = vec![0usize; n];
    let mut coloring = Coloring::uncolored(n);
    let mut seen = match rule {
        SelectionRule::Saturation => Some(NeighborColors::new(g)),
        SelectionRule::ColoredNeighbors => None,
    };
    let mut mark = vec![usize::MAX; g.max_degree() + 2];
    let mut steps = Vec::with_capacity(n);
    let mut top = 0usize;

    while steps.len() < n {
        let v = loop {
            let candidate = queue
                .pop(&mut top)
                .expect("an uncolored vertex always has a live entry");
            if coloring.color(candidate.0) == 0 && key[candidate.0] == candidate.1 {
                break candidate.0;
            }
        };

        let step = steps.len();
        let limit = g.degree(v) + 1;
        for &w in g.neighbors(v) {
            let c = coloring.color(w);
            if c != 0 && c <= limit {
                mark[c] = step;
            }
        }
        let color = (1..=limit).find(|&c| mark[c] != step).unwrap();
        coloring.set(v, color);
        steps.push(TraceStep {
            vertex: v,
            saturation: key[v],
            color,
        });

        for &w in g.neighbors(v) {
            if coloring.color(w) != 0 {
                continue;
            }
            let grows = match seen.as_mut() {
                Some(seen) => seen.insert(w, color),
                None => true,
            };
            if grows {
                key[w] += 1;
                queue.push(w, key[w]);
                top = top.max(key[w]);
            }
        }
    }

    Ok((coloring, Trace { steps }))
}

/// Bucket queue of `(vertex, key)` entries with lazy invalidation.
enum KeyQueue {
    Ranked {
        rank: Vec<usize>,
        buckets: Vec<BinaryHeap<Reverse<(usize, Vertex)>>>,
    },
    Seeded {
        rng: SplitMix64,
        buckets: Vec<Vec<Vertex>>,
    },
}

impl KeyQueue {
    fn push(&mut self, v: Vertex, key: usize) {
        match self {
            KeyQueue::Ranked { rank, buckets } => {
                if buckets.len() <= key {
                    buckets.resize_with(key + 1, BinaryHeap::new);
                }
                buckets[key].push(Reverse((rank[v], v)));
            }
            KeyQueue::Seeded { buckets, .. } => {
                if buckets.len() <= key {
                    buckets.resize_with(key + 1, Vec::new);
                }
                buckets[key].push(v);
            }
        }
    }

    /// Pops some entry from the highest non-empty bucket at or below `top`,
    /// lowering `top` past empty buckets. The entry may be stale.
    fn pop(&mut self, top: &mut usize) -> Option<(Vertex, usize)> {
        loop {
            let popped = match self {
                KeyQueue::Ranked { buckets, .. } => buckets[*top].pop().map(|Reverse((_, v))| v),
                KeyQueue::Seeded { rng, buckets } => {
                    let bucket = &mut buckets[*top];
                    if bucket.is_empty() {
                        None
                    } else {
                        let i = rng.below(bucket.len());
                        Some(bucket.swap_remove(i))
                    }
                }
            };
            match popped {
                Some(v) => return Some((v, *top)),
                None if *top == 0 => return None,
                None => *top -= 1,
            }
        }
    }
}

/// Set of distinct colors seen around each vertex.
struct NeighborColors {
    offset: Vec<usize>,
    low: Vec<bool>,
    high: HashSet<(Vertex, usize)>,
}

impl NeighborColors {
    fn new(g: &Graph) -> Self {
        let mut offset = Vec::with_capacity(g.n() + 1);
        let mut total = 0;
        for v in g.vertices() {
            offset.push(total);
            total += g.degree(v) + 1;
        }
        offset.push(total);
        NeighborColors {
            offset,
            low: vec![false; total],
            high: HashSet::new(),
        }
    }

    /// Records `color` next to `v`; true if it was new there.
    fn insert(&mut self, v: Vertex, color: usize) -> bool {
        let slots = self.offset[v + 1] - self.offset[v];
        if color <= slots {
            let slot = &mut self.low[self.offset[v] + color - 1];
            !std::mem::replace(slot, true)
        } else {
            self.high.insert((v, color))
        }
    }
}
