//! Replays a claimed greedy order step by step, independently of the
//! engine, and checks every choice against the selection rule.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use super::{Coloring, SelectionRule, Trace, TraceStep};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("sequence is not a permutation of the {n} vertices")]
pub struct NotAPermutation {
    pub n: usize,
}

/// Why a step of a trace is rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvalidReason {
    SaturationMismatch { recorded: usize, actual: usize },
    NotMaximum { saturation: usize, max: usize },
    WrongColor { recorded: usize, expected: usize },
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvalidReason::SaturationMismatch { recorded, actual } => {
                write!(f, "recorded saturation {recorded} but actual {actual}")
            }
            InvalidReason::NotMaximum { saturation, max } => {
                write!(f, "saturation {saturation} < max {max}")
            }
            InvalidReason::WrongColor { recorded, expected } => {
                write!(
                    f,
                    "recorded color {recorded} but smallest free color is {expected}"
                )
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceVerdict {
    Valid,
    /// `step` counts from 1.
    Invalid {
        step: usize,
        reason: InvalidReason,
    },
}

impl TraceVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, TraceVerdict::Valid)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error(transparent)]
    NotAPermutation(#[from] NotAPermutation),
    #[error("invalid at step {step}: {reason}")]
    InvalidAtStep { step: usize, reason: InvalidReason },
}

/// Checks an MCColor trace: at every step the recorded saturation is the
/// true one, it is the maximum over uncolored vertices, and the recorded
/// color is the smallest one free. Any tie-break is accepted.
pub fn verify_trace(g: &Graph, trace: &Trace) -> Result<TraceVerdict, NotAPermutation> {
    verify_trace_for(g, trace, SelectionRule::Saturation)
}

pub fn verify_trace_for(
    g: &Graph,
    trace: &Trace,
    rule: SelectionRule,
) -> Result<TraceVerdict, NotAPermutation> {
    check_permutation(g.n(), trace.steps.iter().map(|s| s.vertex))?;
    let mut sim = Simulator::new(g, rule);
    for (i, step) in trace.steps.iter().enumerate() {
        let actual = sim.key[step.vertex];
        let reason = if step.saturation != actual {
            Some(InvalidReason::SaturationMismatch {
                recorded: step.saturation,
                actual,
            })
        } else if actual < sim.max {
            Some(InvalidReason::NotMaximum {
                saturation: actual,
                max: sim.max,
            })
        } else {
            let expected = sim.smallest_free(step.vertex);
            (step.color != expected).then_some(InvalidReason::WrongColor {
                recorded: step.color,
                expected,
            })
        };
        if let Some(reason) = reason {
            return Ok(TraceVerdict::Invalid {
                step: i + 1,
                reason,
            });
        }
        sim.color(step.vertex, step.color);
    }
    Ok(TraceVerdict::Valid)
}

/// Runs MCColor forced to take `order[k]` at step `k + 1`.
pub fn replay_order(g: &Graph, order: &[Vertex]) -> Result<(Coloring, Trace), ReplayError> {
    replay_order_for(g, order, SelectionRule::Saturation)
}

pub fn replay_order_for(
    g: &Graph,
    order: &[Vertex],
    rule: SelectionRule,
) -> Result<(Coloring, Trace), ReplayError> {
    check_permutation(g.n(), order.iter().copied())?;
    let mut sim = Simulator::new(g, rule);
    let mut steps = Vec::with_capacity(order.len());
    for (i, &v) in order.iter().enumerate() {
        let key = sim.key[v];
        if key < sim.max {
            return Err(ReplayError::InvalidAtStep {
                step: i + 1,
                reason: InvalidReason::NotMaximum {
                    saturation: key,
                    max: sim.max,
                },
            });
        }
        let color = sim.smallest_free(v);
        sim.color(v, color);
        steps.push(TraceStep {
            vertex: v,
            saturation: key,
            color,
        });
    }
    Ok((sim.coloring, Trace { steps }))
}

fn check_permutation(
    n: usize,
    seq: impl ExactSizeIterator<Item = Vertex>,
) -> Result<(), NotAPermutation> {
    if seq.len() != n {
        return Err(NotAPermutation { n });
    }
    let mut seen = vec![false; n];
    for v in seq {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(NotAPermutation { n });
        }
    }
    Ok(())
}

struct Simulator<'a> {
    g: &'a Graph,
    rule: SelectionRule,
    coloring: Coloring,
    key: Vec<usize>,
    /// Distinct neighbor colors, only for the saturation rule.
    around: Vec<HashSet<usize>>,
    /// Number of uncolored vertices at each key.
    at_key: Vec<usize>,
    max: usize,
}

impl<'a> Simulator<'a> {
    fn new(g: &'a Graph, rule: SelectionRule) -> Self {
        let mut at_key = vec![0; g.max_degree() + 2];
        at_key[0] = g.n();
        Simulator {
            g,
            rule,
            coloring: Coloring::uncolored(g.n()),
            key: vec![0; g.n()],
            around: vec![HashSet::new(); g.n()],
            at_key,
            max: 0,
        }
    }

    fn smallest_free(&self, v: Vertex) -> usize {
        let used: HashSet<usize> = self
            .g
            .neighbors(v)
            .iter()
            .map(|&w| self.coloring.color(w))
            .collect();
        (1..).find(|c| !used.contains(c)).unwrap()
    }

    fn color(&mut self, v: Vertex, color: usize) {
        self.coloring.set(v, color);
        self.at_key[self.key[v]] -= 1;
        for &w in self.g.neighbors(v) {
            if self.coloring.color(w) != 0 {
                continue;
            }
            let grows = match self.rule {
                SelectionRule::Saturation => self.around[w].insert(color),
                SelectionRule::ColoredNeighbors => true,
            };
            if grows {
                self.at_key[self.key[w]] -= 1;
                self.key[w] += 1;
                self.at_key[self.key[w]] += 1;
                self.max = self.max.max(self.key[w]);
            }
        }
        while self.max > 0 && self.at_key[self.max] == 0 {
            self.max -= 1;
        }
    }
}
