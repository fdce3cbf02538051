//! End-to-end check of the built-in counterexample: the graph is Meyniel,
//! the alphabetical order is a legal MCColor run that needs four colors,
//! and yet three colors suffice.

use serde::Serialize;

use crate::exact::{chromatic_number, is_strong_stable_set};
use crate::graph::{Graph, COUNTEREXAMPLE_COLORS, COUNTEREXAMPLE_ORDER};
use crate::greedy::{replay_order, TieBreakPolicy};
use crate::meyniel::{is_meyniel, MeynielVerdict};
use crate::meyniel_color::{optimal_color_meyniel, Mode};

/// Stable set `{a, d, f, i}`: color class 1 of the four-color run.
pub const COUNTEREXAMPLE_STRONG_STABLE: [usize; 4] = [0, 3, 5, 8];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub checks: Vec<Check>,
}

impl CounterexampleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Runs the six checks against `g` (normally [`crate::graph::counterexample_graph`]).
/// Every check runs even after an earlier one fails.
pub fn verify_counterexample(g: &Graph, budget: u64) -> CounterexampleReport {
    let mut checks = Vec::new();

    let (passed, detail) = match is_meyniel(g, budget) {
        Ok(MeynielVerdict::Meyniel) => (
            true,
            "no odd cycle of length >= 5 has fewer than two chords".to_string(),
        ),
        Ok(MeynielVerdict::NotMeyniel(w)) => (
            false,
            format!("cycle {:?} has {} chord(s)", w.vertices, w.chord_count),
        ),
        Err(e) => (false, e.to_string()),
    };
    checks.push(Check {
        name: "graph is Meyniel",
        passed,
        detail,
    });

    let replay = replay_order(g, &COUNTEREXAMPLE_ORDER);
    let (passed, detail, used) = match &replay {
        Ok((coloring, trace)) => {
            let colors = trace.colors();
            (
                colors == COUNTEREXAMPLE_COLORS,
                format!("order a b c d e f g h i j colors {}", join(&colors)),
                Some(coloring.num_colors()),
            )
        }
        Err(e) => (false, e.to_string(), None),
    };
    checks.push(Check {
        name: "order a..j is a valid MCColor run with colors 1 2 3 1 2 1 2 3 1 4",
        passed,
        detail,
    });

    checks.push(Check {
        name: "MCColor run uses 4 colors",
        passed: used == Some(4),
        detail: match used {
            Some(k) => format!("colors used: {k}"),
            None => "no valid run".to_string(),
        },
    });

    let chi = chromatic_number(g, budget);
    checks.push(Check {
        name: "chromatic number is 3",
        passed: chi == Ok(3),
        detail: match chi {
            Ok(k) => format!("chromatic number: {k}"),
            Err(e) => e.to_string(),
        },
    });

    let strong = g.n() == 10 && is_strong_stable_set(g, &COUNTEREXAMPLE_STRONG_STABLE);
    checks.push(Check {
        name: "{a, d, f, i} is a strong stable set",
        passed: strong,
        detail: format!("stable and meets every maximal clique: {strong}"),
    });

    let policy = TieBreakPolicy::ExplicitPriority(COUNTEREXAMPLE_ORDER.to_vec());
    let optimal = optimal_color_meyniel(g, &policy, Mode::Verified, budget);
    let (passed, detail) = match optimal {
        Ok(report) => (
            report.coloring.is_proper(g) && report.coloring.num_colors() == 3,
            format!(
                "colors used: {} (fallbacks: {})",
                report.coloring.num_colors(),
                report.fallback_count
            ),
        ),
        Err(e) => (false, e.to_string()),
    };
    checks.push(Check {
        name: "verified iterated coloring uses 3 colors",
        passed,
        detail,
    });

    CounterexampleReport { checks }
}
