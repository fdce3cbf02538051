//! Greedy and exact coloring tools around MCColor and Meyniel graphs.
//!
//! * [`graph`], [`dimacs`], [`generate`]: graphs, I/O and seeded instances.
//! * [`meyniel`]: exhaustive Meyniel recognition with cycle witnesses.
//! * [`greedy`]: MCColor and MCS+Color with traces and trace verification.
//! * [`exact`]: chromatic number, maximal cliques and strong stable sets.
//! * [`meyniel_color`]: coloring by repeated strong-stable-set removal.
//! * [`search`]: seeded hunt for instances where MCColor is not optimal.
//! * [`counterexample`]: end-to-end check of the built-in ten-vertex instance.

mod bitset;
pub mod counterexample;
pub mod dimacs;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod greedy;
pub mod meyniel;
pub mod meyniel_color;
pub mod rng;
pub mod search;

use thiserror::Error;

pub use graph::{Graph, GraphError, Vertex};
pub use greedy::{Coloring, TieBreakPolicy, Trace};

/// Default work cap for the exponential oracles.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// An exhaustive oracle ran past its work cap. Never a silent wrong answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget of {budget} exceeded")]
pub struct BudgetExceeded {
    pub budget: u64,
}
