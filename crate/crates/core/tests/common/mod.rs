//! Brute-force oracles for tests. They only use `Graph::n` and
//! `Graph::has_edge`, never the library's own algorithms.

#![allow(dead_code)]

use std::collections::BTreeSet;

use meyniel_core::Graph;

/// Smallest `k` with a proper `k`-coloring, by trying every assignment.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let edges = g.edges();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
            // Odometer increment in base k.
            let mut i = 0;
            while i < n && colors[i] == k - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    unreachable!("n colors always suffice")
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask & (1 << v) != 0).collect()
}

fn is_clique(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

fn is_stable(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

/// Every maximal clique, by checking all non-empty vertex subsets.
pub fn brute_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    assert!(n <= 20, "subset enumeration is for tiny graphs");
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        let set = members(mask, n);
        if !is_clique(g, &set) {
            continue;
        }
        let extendable = (0..n)
            .filter(|v| mask & (1 << v) == 0)
            .any(|v| set.iter().all(|&u| g.has_edge(u, v)));
        if !extendable {
            out.insert(set);
        }
    }
    out.into_iter().collect()
}

pub fn brute_clique_number(g: &Graph) -> usize {
    brute_maximal_cliques(g)
        .iter()
        .map(Vec::len)
        .max()
        .unwrap_or(0)
}

/// Every stable set (including the empty one) meeting all maximal cliques.
pub fn brute_strong_stable_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let cliques = brute_maximal_cliques(g);
    (0u32..(1 << n))
        .map(|mask| members(mask, n))
        .filter(|set| is_stable(g, set))
        .filter(|set| cliques.iter().all(|k| k.iter().any(|v| set.contains(v))))
        .collect()
}

pub fn brute_stable_sets(g: &Graph) -> usize {
    (0u32..(1 << g.n()))
        .filter(|&mask| is_stable(g, &members(mask, g.n())))
        .count()
}

/// Color counts reachable by MCColor under every possible tie-break,
/// explored by straightforward recursion over all maximum-saturation choices.
pub fn all_mccolor_outcomes(g: &Graph) -> BTreeSet<usize> {
    fn go(g: &Graph, colors: &mut Vec<usize>, out: &mut BTreeSet<usize>) {
        let n = g.n();
        let saturation = |v: usize, colors: &Vec<usize>| {
            (0..n)
                .filter(|&w| g.has_edge(v, w) && colors[w] != 0)
                .map(|w| colors[w])
                .collect::<BTreeSet<_>>()
                .len()
        };
        let uncolored: Vec<usize> = (0..n).filter(|&v| colors[v] == 0).collect();
        if uncolored.is_empty() {
            out.insert(colors.iter().copied().max().unwrap_or(0));
            return;
        }
        let best = uncolored
            .iter()
            .map(|&v| saturation(v, colors))
            .max()
            .unwrap();
        for &v in &uncolored {
            if saturation(v, colors) != best {
                continue;
            }
            let used: BTreeSet<usize> = (0..n)
                .filter(|&w| g.has_edge(v, w))
                .map(|w| colors[w])
                .collect();
            let c = (1..).find(|c| !used.contains(c)).unwrap();
            colors[v] = c;
            go(g, colors, out);
            colors[v] = 0;
        }
    }
    let mut out = BTreeSet::new();
    go(g, &mut vec![0; g.n()], &mut out);
    out
}

/// Deterministic small random graph for sweep tests.
pub fn small_graph(seed: u64, max_n: usize) -> Graph {
    let mut rng = meyniel_core::rng::SplitMix64::new(seed);
    let n = 1 + rng.below(max_n);
    let p = [0.15, 0.3, 0.5, 0.7, 0.9][rng.below(5)];
    meyniel_core::generate::gen_random(rng.next_u64(), n, p)
}
