//! Coloring by repeated removal of strong stable sets.
//!
//! Removing a stable set that meets every maximal clique lowers the clique
//! number by exactly one. Repeating this until the graph is empty, giving
//! the `k`-th removed set color `k`, therefore uses exactly `ω(G)` colors,
//! which is optimal.
//!
//! Each round takes color class 1 of an MCColor run on the residual graph
//! as its candidate set. In [`Mode::Verified`] the candidate is checked
//! against the clique oracle and replaced by an exact search when it fails;
//! [`Mode::Heuristic`] trusts it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{find_strong_stable_set, is_strong_stable_set, StableSet, StrongStableSearch};
use crate::graph::{Graph, Vertex};
use crate::greedy::{mccolor, Coloring, TieBreakPolicy};
use crate::BudgetExceeded;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Heuristic,
    Verified,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Heuristic => "heuristic",
            Mode::Verified => "verified",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "heuristic" => Ok(Mode::Heuristic),
            "verified" => Ok(Mode::Verified),
            other => Err(format!("unknown mode `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetSource {
    Heuristic,
    ExactFallback,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round {
    /// Vertices of the input graph removed in this round, ascending.
    pub stable_set: Vec<Vertex>,
    pub source: SetSource,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IteratedColoringReport {
    pub coloring: Coloring,
    /// Round `k` (1-based) received color `k`.
    pub rounds: Vec<Round>,
    pub fallback_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OptimalColorError {
    #[error("round {round}: residual graph has no strong stable set")]
    NotStronglyColorable { round: usize },
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error(transparent)]
    Policy(#[from] crate::greedy::PolicyError),
}

/// Color class 1 of `mccolor(g, policy)`: always a maximal stable set.
pub fn strong_stable_from_mccolor(
    g: &Graph,
    policy: &TieBreakPolicy,
) -> Result<StableSet, crate::greedy::PolicyError> {
    let (coloring, _) = mccolor(g, policy)?;
    Ok(StableSet::new(coloring.class(1)))
}

/// Colors `g` round by round with strong stable sets.
///
/// The policy is carried to every residual graph through
/// [`TieBreakPolicy::restrict`]. `budget` bounds each oracle call in
/// verified mode.
pub fn optimal_color_meyniel(
    g: &Graph,
    policy: &TieBreakPolicy,
    mode: Mode,
    budget: u64,
) -> Result<IteratedColoringReport, OptimalColorError> {
    // Fail on a bad priority before doing any work.
    policy.ranks(g.n())?;

    let mut coloring = Coloring::uncolored(g.n());
    let mut rounds = Vec::new();
    let mut fallback_count = 0;
    let mut remaining: Vec<Vertex> = g.vertices().collect();

    while !remaining.is_empty() {
        let round = rounds.len() + 1;
        let residual = g
            .induced_subgraph(&remaining)
            .expect("residual ids are in range");
        let local_policy = policy.restrict(&residual.to_old);
        let candidate = strong_stable_from_mccolor(&residual.graph, &local_policy)?;

        let (set, source) = match mode {
            Mode::Heuristic => (candidate, SetSource::Heuristic),
            Mode::Verified if is_strong_stable_set(&residual.graph, candidate.vertices()) => {
                (candidate, SetSource::Heuristic)
            }
            Mode::Verified => {
                fallback_count += 1;
                match find_strong_stable_set(&residual.graph, budget)? {
                    StrongStableSearch::Found(set) => (set, SetSource::ExactFallback),
                    StrongStableSearch::NoneExists => {
                        return Err(OptimalColorError::NotStronglyColorable { round })
                    }
                }
            }
        };

        let mut removed: Vec<Vertex> = set.vertices().iter().map(|&v| residual.to_old[v]).collect();
        removed.sort_unstable();
        for &v in &removed {
            coloring.set(v, round);
        }
        remaining.retain(|&v| coloring.color(v) == 0);
        rounds.push(Round {
            stable_set: removed,
            source,
        });
    }

    Ok(IteratedColoringReport {
        coloring,
        rounds,
        fallback_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{chromatic_number, clique_number};
    use crate::graph::{counterexample_graph, COUNTEREXAMPLE_ORDER};
    use crate::DEFAULT_BUDGET;

    fn alphabetical_policy() -> TieBreakPolicy {
        TieBreakPolicy::ExplicitPriority(COUNTEREXAMPLE_ORDER.to_vec())
    }

    #[test]
    fn class_one_of_the_alphabetical_run() {
        let g = counterexample_graph();
        let set = strong_stable_from_mccolor(&g, &alphabetical_policy()).unwrap();
        assert_eq!(set.vertices(), &[0, 3, 5, 8]);
        assert!(is_strong_stable_set(&g, set.vertices()));
    }

    #[test]
    fn class_one_small_cases() {
        let set =
            strong_stable_from_mccolor(&Graph::complete(5), &TieBreakPolicy::MaxIndex).unwrap();
        assert_eq!(set.vertices(), &[4]);
        let set = strong_stable_from_mccolor(&Graph::empty(4), &TieBreakPolicy::MinIndex).unwrap();
        assert_eq!(set.vertices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn counterexample_needs_three_colors() {
        let g = counterexample_graph();
        let report =
            optimal_color_meyniel(&g, &alphabetical_policy(), Mode::Verified, DEFAULT_BUDGET)
                .unwrap();
        assert!(report.coloring.is_proper(&g));
        assert_eq!(report.coloring.num_colors(), 3);
        assert_eq!(report.rounds.len(), 3);
        assert_eq!(report.rounds[0].stable_set, vec![0, 3, 5, 8]);
        assert_eq!(chromatic_number(&g, DEFAULT_BUDGET), Ok(3));
    }

    #[test]
    fn complete_graph_rounds() {
        let g = Graph::complete(4);
        for mode in [Mode::Heuristic, Mode::Verified] {
            let report =
                optimal_color_meyniel(&g, &TieBreakPolicy::MinIndex, mode, DEFAULT_BUDGET).unwrap();
            assert_eq!(report.rounds.len(), 4);
            assert!(report.rounds.iter().all(|r| r.stable_set.len() == 1));
            assert_eq!(report.coloring.num_colors(), 4);
        }
    }

    #[test]
    fn bipartite_gets_two_colors() {
        let g = Graph::cycle(8);
        let report = optimal_color_meyniel(
            &g,
            &TieBreakPolicy::Seeded(3),
            Mode::Verified,
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert_eq!(report.coloring.num_colors(), 2);
        assert_eq!(clique_number(&g), 2);
    }

    #[test]
    fn five_cycle_is_not_strongly_colorable() {
        let err = optimal_color_meyniel(
            &Graph::cycle(5),
            &TieBreakPolicy::MinIndex,
            Mode::Verified,
            DEFAULT_BUDGET,
        );
        assert_eq!(
            err,
            Err(OptimalColorError::NotStronglyColorable { round: 1 })
        );
        // Heuristic mode trusts class 1 and still yields a proper coloring.
        let report = optimal_color_meyniel(
            &Graph::cycle(5),
            &TieBreakPolicy::MinIndex,
            Mode::Heuristic,
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert!(report.coloring.is_proper(&Graph::cycle(5)));
    }

    #[test]
    fn empty_input() {
        let report = optimal_color_meyniel(
            &Graph::empty(0),
            &TieBreakPolicy::MinIndex,
            Mode::Verified,
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert!(report.rounds.is_empty());
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("verified".parse(), Ok(Mode::Verified));
        assert_eq!(Mode::Heuristic.to_string(), "heuristic");
        assert!("fast".parse::<Mode>().is_err());
    }
}
