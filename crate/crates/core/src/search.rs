//! Seeded search for Meyniel graphs on which a greedy run uses more colors
//! than the chromatic number.
//!
//! Candidate `i` (0-based) draws its own generator seeded with
//! `derive_seed(seed, i)`. Even candidates are `gen_random(next_u64(), n, p)`,
//! odd candidates are `gen_chordal(next_u64(), n, 1 + below(4))`. Every
//! candidate must pass the exhaustive Meyniel check. Policy `j` of a
//! candidate is `min` for `j = 0`, `max` for `j = 1`, then alternately a
//! shuffled priority order (even `j`) and `seeded:<next_u64()>` (odd `j`),
//! all drawn from the candidate's generator after the graph.
//!
//! Candidates run in parallel; results are merged in candidate order, so
//! the output depends only on the configuration.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dimacs::{emit_dimacs, parse_dimacs};
use crate::exact::{chromatic_number, clique_number};
use crate::generate::{gen_chordal, gen_random};
use crate::graph::{counterexample_graph, Graph, COUNTEREXAMPLE_ORDER};
use crate::greedy::{run_greedy, verify_trace_for, SelectionRule, TieBreakPolicy, Trace};
use crate::meyniel::{is_meyniel, MeynielVerdict};
use crate::rng::{derive_seed, SplitMix64};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub seed: u64,
    pub instances: usize,
    pub n: usize,
    pub p: f64,
    pub policies_per_instance: usize,
    /// Budget for each oracle call.
    pub budget: u64,
    /// Put the built-in counterexample, with the alphabetical priority as
    /// its first policy, ahead of the generated candidates.
    pub include_builtin: bool,
    /// Also run MCS+Color with every policy.
    pub include_mcs: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 0,
            instances: 100,
            n: 10,
            p: 0.3,
            policies_per_instance: 4,
            budget: crate::DEFAULT_BUDGET,
            include_builtin: false,
            include_mcs: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CandidateSource {
    Builtin,
    Random,
    Chordal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Mccolor,
    Mcs,
}

impl Algorithm {
    pub fn rule(self) -> SelectionRule {
        match self {
            Algorithm::Mccolor => SelectionRule::Saturation,
            Algorithm::Mcs => SelectionRule::ColoredNeighbors,
        }
    }
}

/// One greedy run that used more colors than necessary. Serialized as a
/// single JSON object per line; field order is fixed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    /// Generated-candidate index; the built-in candidate has none.
    pub instance: Option<usize>,
    pub source: CandidateSource,
    pub algorithm: Algorithm,
    /// Policy in its text form (see [`TieBreakPolicy`]'s `Display`).
    pub policy: String,
    pub dimacs: String,
    pub trace: Trace,
    pub colors_used: usize,
    pub chi: usize,
    pub omega: usize,
}

impl Finding {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("findings always serialize")
    }

    pub fn from_json_line(line: &str) -> Result<Finding, serde_json::Error> {
        serde_json::from_str(line)
    }

    pub fn gap(&self) -> usize {
        self.colors_used - self.chi
    }

    /// Rebuilds everything from the serialized fields alone and checks
    /// that the finding holds.
    pub fn reverify(&self, budget: u64) -> Result<(), String> {
        let g = parse_dimacs(&self.dimacs).map_err(|e| e.to_string())?;
        let policy: TieBreakPolicy = self
            .policy
            .parse()
            .map_err(|e: crate::greedy::PolicyError| e.to_string())?;
        match is_meyniel(&g, budget).map_err(|e| e.to_string())? {
            MeynielVerdict::Meyniel => {}
            MeynielVerdict::NotMeyniel(w) => {
                return Err(format!("graph is not Meyniel: {:?}", w.vertices))
            }
        }
        let (coloring, trace) =
            run_greedy(&g, &policy, self.algorithm.rule()).map_err(|e| e.to_string())?;
        if trace != self.trace {
            return Err("rerun produced a different trace".into());
        }
        let verdict =
            verify_trace_for(&g, &trace, self.algorithm.rule()).map_err(|e| e.to_string())?;
        if !verdict.is_valid() {
            return Err(format!("trace rejected: {verdict:?}"));
        }
        if !coloring.is_proper(&g) || coloring.num_colors() != self.colors_used {
            return Err("color count does not match".into());
        }
        let chi = chromatic_number(&g, budget).map_err(|e| e.to_string())?;
        if chi != self.chi || clique_number(&g) != self.omega {
            return Err("chromatic or clique number does not match".into());
        }
        if self.colors_used <= chi {
            return Err("no gap".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub candidates: usize,
    pub meyniel: usize,
    pub not_meyniel: usize,
    pub skipped_budget: usize,
    pub runs: usize,
    pub findings: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub summary: SearchSummary,
    pub findings: Vec<Finding>,
}

impl SearchReport {
    /// Findings file contents: one JSON object per line.
    pub fn findings_jsonl(&self) -> String {
        self.findings
            .iter()
            .map(|f| f.to_json_line() + "\n")
            .collect()
    }
}

struct Candidate {
    instance: Option<usize>,
    source: CandidateSource,
    graph: Graph,
    policies: Vec<TieBreakPolicy>,
}

fn draw_policies(
    rng: &mut SplitMix64,
    n: usize,
    count: usize,
    first: Option<TieBreakPolicy>,
) -> Vec<TieBreakPolicy> {
    let mut out: Vec<TieBreakPolicy> = first.into_iter().collect();
    for j in 0..count {
        if out.len() >= count {
            break;
        }
        let policy = match j {
            0 => TieBreakPolicy::MinIndex,
            1 => TieBreakPolicy::MaxIndex,
            j if j % 2 == 0 => {
                let mut order: Vec<usize> = (0..n).collect();
                rng.shuffle(&mut order);
                TieBreakPolicy::ExplicitPriority(order)
            }
            _ => TieBreakPolicy::Seeded(rng.next_u64()),
        };
        out.push(policy);
    }
    out
}

fn candidate(config: &SearchConfig, index: usize) -> Candidate {
    let mut rng = SplitMix64::new(derive_seed(config.seed, index as u64));
    let (source, graph) = if index.is_multiple_of(2) {
        (
            CandidateSource::Random,
            gen_random(rng.next_u64(), config.n, config.p),
        )
    } else {
        let graph_seed = rng.next_u64();
        let cap = 1 + rng.below(4);
        (
            CandidateSource::Chordal,
            gen_chordal(graph_seed, config.n, cap),
        )
    };
    let policies = draw_policies(&mut rng, graph.n(), config.policies_per_instance, None);
    Candidate {
        instance: Some(index),
        source,
        graph,
        policies,
    }
}

fn builtin_candidate(config: &SearchConfig) -> Candidate {
    let graph = counterexample_graph();
    let mut rng = SplitMix64::new(derive_seed(config.seed, u64::MAX));
    let alphabetical = TieBreakPolicy::ExplicitPriority(COUNTEREXAMPLE_ORDER.to_vec());
    let policies = draw_policies(
        &mut rng,
        graph.n(),
        config.policies_per_instance.max(1),
        Some(alphabetical),
    );
    Candidate {
        instance: None,
        source: CandidateSource::Builtin,
        graph,
        policies,
    }
}

#[derive(Default)]
struct Outcome {
    summary: SearchSummary,
    findings: Vec<Finding>,
}

fn examine(config: &SearchConfig, cand: Candidate) -> Outcome {
    let mut out = Outcome::default();
    out.summary.candidates = 1;
    let label = cand
        .instance
        .map_or_else(|| "builtin".to_string(), |i| i.to_string());
    match is_meyniel(&cand.graph, config.budget) {
        Err(e) => {
            log::warn!("candidate {label}: Meyniel check skipped: {e}");
            out.summary.skipped_budget = 1;
            return out;
        }
        Ok(MeynielVerdict::NotMeyniel(_)) => {
            out.summary.not_meyniel = 1;
            return out;
        }
        Ok(MeynielVerdict::Meyniel) => out.summary.meyniel = 1,
    }
    let chi = match chromatic_number(&cand.graph, config.budget) {
        Ok(chi) => chi,
        Err(e) => {
            log::warn!("candidate {label}: chromatic number skipped: {e}");
            out.summary.skipped_budget = 1;
            return out;
        }
    };
    let omega = clique_number(&cand.graph);
    let mut algorithms = vec![Algorithm::Mccolor];
    if config.include_mcs {
        algorithms.push(Algorithm::Mcs);
    }
    let mut dimacs = None;
    for policy in &cand.policies {
        for &algorithm in &algorithms {
            out.summary.runs += 1;
            let (coloring, trace) = run_greedy(&cand.graph, policy, algorithm.rule())
                .expect("drawn policies fit the graph");
            if coloring.num_colors() <= chi {
                continue;
            }
            match verify_trace_for(&cand.graph, &trace, algorithm.rule()) {
                Ok(v) if v.is_valid() => {}
                other => {
                    log::error!("candidate {label}: produced trace failed verification: {other:?}");
                    continue;
                }
            }
            out.findings.push(Finding {
                instance: cand.instance,
                source: cand.source,
                algorithm,
                policy: policy.to_string(),
                dimacs: dimacs
                    .get_or_insert_with(|| emit_dimacs(&cand.graph))
                    .clone(),
                trace,
                colors_used: coloring.num_colors(),
                chi,
                omega,
            });
        }
    }
    out.summary.findings = out.findings.len();
    out
}

pub fn gap_search(config: &SearchConfig) -> SearchReport {
    let mut outcomes: Vec<Outcome> = Vec::new();
    if config.include_builtin {
        outcomes.push(examine(config, builtin_candidate(config)));
    }
    outcomes.par_extend(
        (0..config.instances)
            .into_par_iter()
            .map(|i| examine(config, candidate(config, i))),
    );

    let mut summary = SearchSummary::default();
    let mut findings = Vec::new();
    for o in outcomes {
        summary.candidates += o.summary.candidates;
        summary.meyniel += o.summary.meyniel;
        summary.not_meyniel += o.summary.not_meyniel;
        summary.skipped_budget += o.summary.skipped_budget;
        summary.runs += o.summary.runs;
        summary.findings += o.summary.findings;
        findings.extend(o.findings);
    }
    SearchReport { summary, findings }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_candidate_yields_the_known_gap() {
        let config = SearchConfig {
            instances: 0,
            policies_per_instance: 1,
            include_builtin: true,
            ..SearchConfig::default()
        };
        let report = gap_search(&config);
        assert_eq!(report.summary.candidates, 1);
        assert_eq!(report.findings.len(), 1);
        let f = &report.findings[0];
        assert_eq!((f.colors_used, f.chi, f.omega), (4, 3, 3));
        assert_eq!(f.policy, "priority:0,1,2,3,4,5,6,7,8,9");
        assert_eq!(f.trace.colors(), vec![1, 2, 3, 1, 2, 1, 2, 3, 1, 4]);
        assert_eq!(f.reverify(crate::DEFAULT_BUDGET), Ok(()));
        let line = f.to_json_line();
        assert_eq!(&Finding::from_json_line(&line).unwrap(), f);
    }

    #[test]
    fn zero_instances() {
        let report = gap_search(&SearchConfig {
            instances: 0,
            ..SearchConfig::default()
        });
        assert!(report.findings.is_empty());
        assert_eq!(report.summary, SearchSummary::default());
        assert_eq!(report.findings_jsonl(), "");
    }

    #[test]
    fn policy_schedule() {
        let mut rng = SplitMix64::new(1);
        let p = draw_policies(&mut rng, 4, 5, None);
        assert_eq!(p[0], TieBreakPolicy::MinIndex);
        assert_eq!(p[1], TieBreakPolicy::MaxIndex);
        assert!(matches!(p[2], TieBreakPolicy::ExplicitPriority(ref o) if o.len() == 4));
        assert!(matches!(p[3], TieBreakPolicy::Seeded(_)));
        assert!(matches!(p[4], TieBreakPolicy::ExplicitPriority(_)));
    }

    #[test]
    fn tampered_finding_fails_reverification() {
        let config = SearchConfig {
            instances: 0,
            policies_per_instance: 1,
            include_builtin: true,
            ..SearchConfig::default()
        };
        let mut f = gap_search(&config).findings.remove(0);
        f.chi = 4;
        assert!(f.reverify(crate::DEFAULT_BUDGET).is_err());
        let mut f = gap_search(&config).findings.remove(0);
        f.policy = "max".into();
        assert!(f.reverify(crate::DEFAULT_BUDGET).is_err());
    }
}
