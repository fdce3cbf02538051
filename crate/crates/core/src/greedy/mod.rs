//! Saturation-greedy coloring (MCColor), its maximum-cardinality-search
//! companion (MCS+Color), execution traces and trace verification.
//!
//! Colors are `1, 2, …`; `0` marks an uncolored vertex.

mod engine;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub use engine::{mccolor, mcs_color, run_greedy};
pub use verify::{
    replay_order, replay_order_for, verify_trace, verify_trace_for, InvalidReason, NotAPermutation,
    ReplayError, TraceVerdict,
};

/// How the next vertex is ranked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SelectionRule {
    /// Number of distinct colors among colored neighbors (MCColor).
    Saturation,
    /// Number of colored neighbors, with multiplicity (MCS+Color).
    ColoredNeighbors,
}

/// Per-vertex color assignment.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(Vec<usize>);

impl Coloring {
    pub fn uncolored(n: usize) -> Self {
        Coloring(vec![0; n])
    }

    pub fn from_colors(colors: Vec<usize>) -> Self {
        Coloring(colors)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn color(&self, v: Vertex) -> usize {
        self.0[v]
    }

    pub(crate) fn set(&mut self, v: Vertex, color: usize) {
        self.0[v] = color;
    }

    pub fn colors(&self) -> &[usize] {
        &self.0
    }

    pub fn is_complete(&self) -> bool {
        self.0.iter().all(|&c| c != 0)
    }

    /// Largest assigned color; `0` for an empty or uncolored assignment.
    pub fn num_colors(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Complete, sized for `g`, and no edge joins two equal colors.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.0.len() == g.n()
            && self.is_complete()
            && g.edges().iter().all(|&(u, v)| self.0[u] != self.0[v])
    }

    /// Vertices holding `color`, ascending.
    pub fn class(&self, color: usize) -> Vec<Vertex> {
        (0..self.0.len()).filter(|&v| self.0[v] == color).collect()
    }
}

/// Resolves the choice among uncolored vertices of equal key.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TieBreakPolicy {
    MinIndex,
    MaxIndex,
    /// Uniform choice among the tied vertices, driven by SplitMix64.
    Seeded(u64),
    /// `order[k]` has rank `k`; the lowest rank wins.
    ExplicitPriority(Vec<Vertex>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolicyError {
    #[error("priority order has {got} entries for a graph with {n} vertices")]
    WrongLength { got: usize, n: usize },
    #[error("priority order is not a permutation: vertex {0} repeated or out of range")]
    NotAPermutation(Vertex),
    #[error("cannot parse tie-break policy `{0}`")]
    Parse(String),
}

impl TieBreakPolicy {
    /// Rank of every vertex (lower wins) for the deterministic policies, or
    /// `None` for [`TieBreakPolicy::Seeded`].
    pub fn ranks(&self, n: usize) -> Result<Option<Vec<usize>>, PolicyError> {
        match self {
            TieBreakPolicy::MinIndex => Ok(Some((0..n).collect())),
            TieBreakPolicy::MaxIndex => Ok(Some((0..n).rev().collect())),
            TieBreakPolicy::Seeded(_) => Ok(None),
            TieBreakPolicy::ExplicitPriority(order) => {
                if order.len() != n {
                    return Err(PolicyError::WrongLength {
                        got: order.len(),
                        n,
                    });
                }
                let mut rank = vec![usize::MAX; n];
                for (k, &v) in order.iter().enumerate() {
                    if v >= n || rank[v] != usize::MAX {
                        return Err(PolicyError::NotAPermutation(v));
                    }
                    rank[v] = k;
                }
                Ok(Some(rank))
            }
        }
    }

    /// The same policy expressed on an induced subgraph whose vertex `i` was
    /// `to_old[i]` (ascending), preserving relative priorities.
    pub fn restrict(&self, to_old: &[Vertex]) -> TieBreakPolicy {
        match self {
            TieBreakPolicy::ExplicitPriority(order) => {
                let mut to_new = std::collections::HashMap::with_capacity(to_old.len());
                for (new, &old) in to_old.iter().enumerate() {
                    to_new.insert(old, new);
                }
                TieBreakPolicy::ExplicitPriority(
                    order
                        .iter()
                        .filter_map(|v| to_new.get(v).copied())
                        .collect(),
                )
            }
            other => other.clone(),
        }
    }
}

/// `min`, `max`, `seeded:<u64>` or `priority:<v>,<v>,…` (0-indexed ids).
impl fmt::Display for TieBreakPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TieBreakPolicy::MinIndex => f.write_str("min"),
            TieBreakPolicy::MaxIndex => f.write_str("max"),
            TieBreakPolicy::Seeded(seed) => write!(f, "seeded:{seed}"),
            TieBreakPolicy::ExplicitPriority(order) => {
                f.write_str("priority:")?;
                for (i, v) in order.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for TieBreakPolicy {
    type Err = PolicyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PolicyError::Parse(s.to_string());
        match s {
            "min" => return Ok(TieBreakPolicy::MinIndex),
            "max" => return Ok(TieBreakPolicy::MaxIndex),
            _ => {}
        }
        if let Some(seed) = s.strip_prefix("seeded:") {
            return seed.parse().map(TieBreakPolicy::Seeded).map_err(|_| bad());
        }
        if let Some(list) = s.strip_prefix("priority:") {
            if list.is_empty() {
                return Ok(TieBreakPolicy::ExplicitPriority(Vec::new()));
            }
            return list
                .split(',')
                .map(|x| x.trim().parse::<Vertex>())
                .collect::<Result<Vec<_>, _>>()
                .map(TieBreakPolicy::ExplicitPriority)
                .map_err(|_| bad());
        }
        Err(bad())
    }
}

/// One greedy step: the chosen vertex, its key when chosen (saturation for
/// MCColor, colored-neighbor count for MCS+Color) and the color it got.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TraceStep {
    pub vertex: Vertex,
    pub saturation: usize,
    pub color: usize,
}

/// Serialized form of a [`TraceStep`]; `step` counts from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub step: usize,
    pub vertex: Vertex,
    pub saturation: usize,
    pub color: usize,
}

/// Ordered record of a greedy run.
///
/// JSON form: an array of `{"step", "vertex", "saturation", "color"}`
/// objects with `step` running `1, 2, …`. Text form: one line per step,
/// `<step> <vertex> <saturation> <color>`, space separated.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<TraceRecord>", try_from = "Vec<TraceRecord>")]
pub struct Trace {
    pub steps: Vec<TraceStep>,
}

impl Trace {
    pub fn order(&self) -> Vec<Vertex> {
        self.steps.iter().map(|s| s.vertex).collect()
    }

    pub fn colors(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.color).collect()
    }

    pub fn records(&self) -> Vec<TraceRecord> {
        self.steps
            .iter()
            .enumerate()
            .map(|(i, s)| TraceRecord {
                step: i + 1,
                vertex: s.vertex,
                saturation: s.saturation,
                color: s.color,
            })
            .collect()
    }

    /// Text form with vertices rendered by `label`.
    pub fn to_text_with(&self, label: impl Fn(Vertex) -> String) -> String {
        let mut out = String::new();
        for r in self.records() {
            out.push_str(&format!(
                "{} {} {} {}\n",
                r.step,
                label(r.vertex),
                r.saturation,
                r.color
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        self.to_text_with(|v| v.to_string())
    }

    pub fn from_text(text: &str) -> Result<Trace, String> {
        let mut records = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<usize> = line
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<_, _>>()
                .map_err(|e| format!("line {}: {e}", i + 1))?;
            let [step, vertex, saturation, color] = fields[..] else {
                return Err(format!("line {}: expected four fields", i + 1));
            };
            records.push(TraceRecord {
                step,
                vertex,
                saturation,
                color,
            });
        }
        Trace::try_from(records)
    }
}

impl From<Trace> for Vec<TraceRecord> {
    fn from(trace: Trace) -> Self {
        trace.records()
    }
}

impl TryFrom<Vec<TraceRecord>> for Trace {
    type Error = String;

    fn try_from(records: Vec<TraceRecord>) -> Result<Self, Self::Error> {
        let mut steps = Vec::with_capacity(records.len());
        for (i, r) in records.into_iter().enumerate() {
            if r.step != i + 1 {
                return Err(format!("record {} has step {}", i + 1, r.step));
            }
            steps.push(TraceStep {
                vertex: r.vertex,
                saturation: r.saturation,
                color: r.color,
            });
        }
        Ok(Trace { steps })
    }
}
