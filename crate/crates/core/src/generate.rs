//! Seeded instance generators. Both draw from [`SplitMix64`] only, so the
//! documented generator equations plus the procedures below reproduce every
//! instance.

use crate::graph::{Graph, Vertex};
use crate::rng::SplitMix64;

/// Erdős–Rényi `G(n, p)`.
///
/// Uses geometric skipping over the pairs `(u, v)`, `u < v`, enumerated with
/// `v` ascending and `u` ascending within each `v`:
///
/// ```text
/// v = 1, w = -1
/// loop:
///     r = next_f64()
///     w = w + 1 + floor(ln(1 - r) / ln(1 - p))
///     while w >= v and v < n: w -= v; v += 1
///     if v >= n: stop
///     add edge (w, v)
/// ```
///
/// `p == 0` gives the empty graph and `p == 1` the complete graph without
/// consuming any randomness. Work is `O(n + m)`.
///
/// # Panics
///
/// If `p` is not within `[0, 1]`.
pub fn gen_random(seed: u64, n: usize, p: f64) -> Graph {
    assert!(
        (0.0..=1.0).contains(&p),
        "edge probability {p} outside [0, 1]"
    );
    if p == 0.0 || n < 2 {
        return Graph::empty(n);
    }
    if p == 1.0 {
        return Graph::complete(n);
    }
    let mut rng = SplitMix64::new(seed);
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let log_q = (1.0 - p).ln();
    let mut v: usize = 1;
    let mut w: i64 = -1;
    loop {
        let r = rng.next_f64();
        // Clamped so a vanishing p cannot overflow the counter.
        let skip = ((1.0 - r).ln() / log_q).floor().min(1e15);
        w += 1 + skip as i64;
        while v < n && w >= v as i64 {
            w -= v as i64;
            v += 1;
        }
        if v >= n {
            break;
        }
        let u = w as usize;
        adj[u].push(v);
        adj[v].push(u);
    }
    Graph::from_sorted_adjacency(adj)
}

/// Random chordal graph.
///
/// Vertex 0 starts alone. Each later vertex `v` picks `x = below(v)`, then
/// shuffles the neighbors of `x` (all earlier than `v`) and scans them in
/// that order, adding each one adjacent to everything chosen so far, until
/// the clique holds `max_back_clique` vertices or the scan ends. `v` is
/// joined to the whole clique. `max_back_clique == 0` yields isolated
/// vertices, `1` yields random trees, and a cap of at least `n - 1` yields
/// `K_n`.
///
/// Every vertex is simplicial when it is added, so the reverse insertion
/// order is a perfect elimination ordering.
pub fn gen_chordal(seed: u64, n: usize, max_back_clique: usize) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for v in 1..n {
        if max_back_clique == 0 {
            continue;
        }
        let x = rng.below(v);
        let mut clique = vec![x];
        let mut candidates = adj[x].clone();
        rng.shuffle(&mut candidates);
        for c in candidates {
            if clique.len() >= max_back_clique {
                break;
            }
            if clique.iter().all(|&k| adj[c].binary_search(&k).is_ok()) {
                clique.push(c);
            }
        }
        clique.sort_unstable();
        for &u in &clique {
            adj[u].push(v);
        }
        adj[v] = clique;
    }
    Graph::from_sorted_adjacency(adj)
}
