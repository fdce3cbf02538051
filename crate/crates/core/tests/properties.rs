mod common;

use common::*;
use proptest::prelude::*;

use meyniel_core::dimacs::{emit_dimacs, parse_dimacs};
use meyniel_core::exact::{
    chromatic_number, clique_number, find_strong_stable_set, is_strong_stable_set, maximal_cliques,
    StrongStableSearch,
};
use meyniel_core::generate::{gen_chordal, gen_random};
use meyniel_core::greedy::{
    mccolor, mcs_color, replay_order, verify_trace, verify_trace_for, SelectionRule,
};
use meyniel_core::meyniel::{chord_count, is_meyniel, MeynielVerdict};
use meyniel_core::meyniel_color::{optimal_color_meyniel, Mode};
use meyniel_core::{Graph, TieBreakPolicy, DEFAULT_BUDGET};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 0..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_policy(n: usize) -> impl Strategy<Value = TieBreakPolicy> {
    prop_oneof![
        Just(TieBreakPolicy::MinIndex),
        Just(TieBreakPolicy::MaxIndex),
        any::<u64>().prop_map(TieBreakPolicy::Seeded),
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(TieBreakPolicy::ExplicitPriority),
    ]
}

fn graph_and_policy(max_n: usize) -> impl Strategy<Value = (Graph, TieBreakPolicy)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), arb_policy(n))
    })
}

fn assert_well_formed(g: &Graph) {
    let mut total = 0;
    for v in g.vertices() {
        let nb = g.neighbors(v);
        total += nb.len();
        assert!(nb.windows(2).all(|w| w[0] < w[1]));
        for &w in nb {
            assert_ne!(v, w);
            assert!(g.neighbors(w).contains(&v));
        }
    }
    assert_eq!(total, 2 * g.m());
}

proptest! {
    #[test]
    fn generators_are_well_formed(seed in any::<u64>(), n in 0usize..40, p in 0.0f64..=1.0, cap in 0usize..6) {
        assert_well_formed(&gen_random(seed, n, p));
        assert_well_formed(&gen_chordal(seed, n, cap));
    }

    #[test]
    fn dimacs_round_trip(g in arb_graph(14)) {
        let text = emit_dimacs(&g);
        let back = parse_dimacs(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(emit_dimacs(&back), text);
    }

    #[test]
    fn induced_on_everything_is_identity(g in arb_graph(12)) {
        let all: Vec<_> = g.vertices().collect();
        let sub = g.induced_subgraph(&all).unwrap();
        prop_assert_eq!(sub.graph, g);
    }

    #[test]
    fn meyniel_is_hereditary(g in arb_graph(9), mask in any::<u16>()) {
        if is_meyniel(&g, DEFAULT_BUDGET).unwrap().is_meyniel() {
            let keep: Vec<_> = g.vertices().filter(|v| mask & (1 << v) != 0).collect();
            let sub = g.induced_subgraph(&keep).unwrap();
            prop_assert!(is_meyniel(&sub.graph, DEFAULT_BUDGET).unwrap().is_meyniel());
        }
    }

    #[test]
    fn witnesses_reverify(g in arb_graph(10)) {
        let verdict = is_meyniel(&g, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(&verdict, &is_meyniel(&g, DEFAULT_BUDGET).unwrap());
        if let MeynielVerdict::NotMeyniel(w) = verdict {
            let k = w.vertices.len();
            prop_assert!(k >= 5 && k % 2 == 1);
            prop_assert!(w.chord_count <= 1);
            prop_assert_eq!(chord_count(&g, &w.vertices), Ok(w.chord_count));
            let min = *w.vertices.iter().min().unwrap();
            prop_assert_eq!(w.vertices[0], min);
            prop_assert!(w.vertices[1] < w.vertices[k - 1]);
        }
    }

    #[test]
    fn greedy_runs_are_sound((g, policy) in graph_and_policy(12)) {
        for (rule, run) in [
            (SelectionRule::Saturation, mccolor(&g, &policy).unwrap()),
            (SelectionRule::ColoredNeighbors, mcs_color(&g, &policy).unwrap()),
        ] {
            let (coloring, trace) = run;
            prop_assert!(coloring.is_proper(&g));
            prop_assert!(coloring.num_colors() <= g.max_degree() + 1);
            prop_assert!(coloring.num_colors() >= clique_number(&g));
            prop_assert!(verify_trace_for(&g, &trace, rule).unwrap().is_valid());
            let again = match rule {
                SelectionRule::Saturation => mccolor(&g, &policy).unwrap(),
                SelectionRule::ColoredNeighbors => mcs_color(&g, &policy).unwrap(),
            };
            prop_assert_eq!(&again.1, &trace);
        }
    }

    #[test]
    fn replay_reproduces_runs((g, policy) in graph_and_policy(14)) {
        let (coloring, trace) = mccolor(&g, &policy).unwrap();
        prop_assert!(verify_trace(&g, &trace).unwrap().is_valid());
        let (replayed, retrace) = replay_order(&g, &trace.order()).unwrap();
        prop_assert_eq!(replayed, coloring);
        prop_assert_eq!(retrace, trace);
    }

    #[test]
    fn bounds_chain(g in arb_graph(9), policy_seed in any::<u64>()) {
        let omega = clique_number(&g);
        let chi = chromatic_number(&g, DEFAULT_BUDGET).unwrap();
        let (coloring, _) = mccolor(&g, &TieBreakPolicy::Seeded(policy_seed)).unwrap();
        prop_assert!(omega <= chi && chi <= coloring.num_colors());
    }

    #[test]
    fn cliques_are_maximal_and_cover_edges(g in arb_graph(11)) {
        let cliques = maximal_cliques(&g).cliques;
        for k in &cliques {
            prop_assert!(g.is_clique(k));
            prop_assert!(!g.vertices().any(|v| !k.contains(&v) && k.iter().all(|&u| g.has_edge(u, v))));
        }
        for (u, v) in g.edges() {
            prop_assert!(cliques.iter().any(|k| k.contains(&u) && k.contains(&v)));
        }
        let mut sorted = cliques.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted, cliques);
    }

    #[test]
    fn strong_stable_removal_drops_omega(g in arb_graph(10)) {
        if let StrongStableSearch::Found(s) = find_strong_stable_set(&g, DEFAULT_BUDGET).unwrap() {
            prop_assert!(is_strong_stable_set(&g, s.vertices()));
            let rest: Vec<_> = g.vertices().filter(|v| !s.vertices().contains(v)).collect();
            let sub = g.induced_subgraph(&rest).unwrap();
            prop_assert_eq!(clique_number(&sub.graph) + 1, clique_number(&g).max(1));
        }
    }

    #[test]
    fn iterated_coloring_partitions(g in arb_graph(10), policy_seed in any::<u64>()) {
        let policy = TieBreakPolicy::Seeded(policy_seed);
        let report = optimal_color_meyniel(&g, &policy, Mode::Heuristic, DEFAULT_BUDGET).unwrap();
        let mut seen = vec![0; g.n()];
        for (k, round) in report.rounds.iter().enumerate() {
            prop_assert!(g.is_stable_set(&round.stable_set));
            for &v in &round.stable_set {
                seen[v] += 1;
                prop_assert_eq!(report.coloring.color(v), k + 1);
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
        prop_assert!(report.coloring.is_proper(&g));
    }
}

#[test]
fn chordal_graphs_are_meyniel() {
    for seed in 0..150u64 {
        let n = 1 + (seed as usize % 12);
        let cap = 1 + (seed as usize % 5);
        let g = gen_chordal(seed, n, cap);
        assert!(
            is_meyniel(&g, DEFAULT_BUDGET).unwrap().is_meyniel(),
            "seed {seed}"
        );
    }
}

#[test]
fn meyniel_inputs_color_optimally() {
    for seed in 0..80u64 {
        let g = gen_chordal(seed, 11, 1 + (seed as usize % 4));
        let report = optimal_color_meyniel(
            &g,
            &TieBreakPolicy::Seeded(seed),
            Mode::Verified,
            DEFAULT_BUDGET,
        )
        .unwrap();
        // Every residual is an induced subgraph, so it stays Meyniel.
        let mut remaining: Vec<usize> = g.vertices().collect();
        for round in &report.rounds {
            let sub = g.induced_subgraph(&remaining).unwrap();
            assert!(is_meyniel(&sub.graph, DEFAULT_BUDGET).unwrap().is_meyniel());
            remaining.retain(|v| !round.stable_set.contains(v));
        }
        assert_eq!(report.coloring.num_colors(), clique_number(&g));
        assert_eq!(report.coloring.num_colors(), brute_chromatic(&g));
    }
}
