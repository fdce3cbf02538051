//! Command-line front end for `meyniel-core`.
//!
//! Exit codes: 0 success or affirmative verdict, 1 negative verdict,
//! 2 usage or parse error, 3 search budget exhausted.
//!
//! Vertices of the built-in graph are written `a`..`j`. Everywhere else
//! vertices are numbered from 1, as in DIMACS files.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use meyniel_core::counterexample::verify_counterexample;
use meyniel_core::dimacs::{emit_dimacs, parse_dimacs};
use meyniel_core::exact::{chromatic_number, clique_number, maximal_cliques};
use meyniel_core::generate::{gen_chordal, gen_random};
use meyniel_core::graph::{counterexample_graph, counterexample_vertex, COUNTEREXAMPLE_NAMES};
use meyniel_core::greedy::{replay_order_for, run_greedy, ReplayError, SelectionRule};
use meyniel_core::meyniel::{is_meyniel, MeynielVerdict};
use meyniel_core::meyniel_color::{optimal_color_meyniel, Mode, OptimalColorError, SetSource};
use meyniel_core::search::{gap_search, SearchConfig};
use meyniel_core::{BudgetExceeded, Coloring, Graph, TieBreakPolicy, Trace, Vertex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "meyniel",
    version,
    about = "Greedy and exact coloring tools for Meyniel graphs"
)]
pub struct Cli {
    /// Step budget for exhaustive searches.
    #[arg(long, global = true, env = "MEYNIEL_BUDGET", default_value_t = meyniel_core::DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the main output to FILE instead of stdout.
    #[arg(short = 'o', long = "output", global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color a graph with MCColor, MCS+Color or the iterated optimal coloring.
    Color(ColorArgs),
    /// Decide whether every odd cycle of length >= 5 has two chords.
    CheckMeyniel(InputArgs),
    /// Check the claims about the built-in ten-vertex graph.
    VerifyCounterexample(VerifyArgs),
    /// Look for graphs where the greedy coloring is not optimal.
    Search(SearchArgs),
    /// Exact chromatic number.
    Chi(InputArgs),
    /// All maximal cliques.
    Cliques(InputArgs),
    /// Print a generated graph in DIMACS format.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// DIMACS file; stdin when absent or `-`.
    #[arg(value_name = "INPUT", conflicts_with = "builtin_counterexample")]
    pub input: Option<PathBuf>,

    /// Use the built-in ten-vertex graph with vertices a..j.
    #[arg(long)]
    pub builtin_counterexample: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Mccolor,
    Mcs,
    Optimal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TieBreak {
    Min,
    Max,
    Seeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Heuristic,
    Verified,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    #[command(flatten)]
    pub input: InputArgs,

    #[arg(long, value_enum, default_value_t = Algo::Mccolor)]
    pub algo: Algo,

    /// Stable-set extraction for `--algo optimal`.
    #[arg(long, value_enum, default_value_t = ModeArg::Verified)]
    pub mode: ModeArg,

    #[arg(long = "tie-break", value_enum, default_value_t = TieBreak::Min)]
    pub tie_break: TieBreak,

    /// Seed for `--tie-break seeded`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Replay this exact vertex order and check every step.
    #[arg(long, value_delimiter = ',', conflicts_with = "tie_break")]
    pub order: Option<Vec<String>>,

    /// Also print the step-by-step trace.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Remove the edge U,V (letters) before checking.
    #[arg(long, hide = true, value_name = "U,V")]
    pub drop_edge: Option<String>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub instances: usize,
    /// Vertices per random candidate.
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    /// Edge probability for random candidates.
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    /// Tie-break policies tried per candidate.
    #[arg(long, default_value_t = 4)]
    pub policies: usize,
    /// Also examine the built-in graph.
    #[arg(long)]
    pub builtin: bool,
    /// Also run MCS+Color.
    #[arg(long)]
    pub mcs: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Random,
    Chordal,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    #[arg(long)]
    pub n: usize,
    /// Edge probability (random).
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    /// Largest clique each new vertex attaches to (chordal).
    #[arg(long, default_value_t = 3)]
    pub cap: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Error carrying the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn negative(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_NEGATIVE,
            message: message.into(),
        }
    }
}

impl From<BudgetExceeded> for CliError {
    fn from(e: BudgetExceeded) -> Self {
        CliError {
            code: EXIT_BUDGET,
            message: e.to_string(),
        }
    }
}

/// What a command produced: the main output, an optional note for stderr
/// and the exit code.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            ..Outcome::default()
        }
    }
}

/// Vertex labels: letters for the built-in graph, 1-based numbers otherwise.
#[derive(Debug, Clone, Copy)]
struct Labels {
    letters: bool,
}

impl Labels {
    fn name(self, v: Vertex) -> String {
        if self.letters {
            COUNTEREXAMPLE_NAMES[v].to_string()
        } else {
            (v + 1).to_string()
        }
    }

    fn names(self, vs: &[Vertex]) -> Vec<String> {
        vs.iter().map(|&v| self.name(v)).collect()
    }

    fn parse(self, token: &str, n: usize) -> Result<Vertex, CliError> {
        let token = token.trim();
        let mut chars = token.chars();
        if let (true, Some(c), None) = (self.letters, chars.next(), chars.next()) {
            if let Some(v) = counterexample_vertex(c) {
                return Ok(v);
            }
        }
        match token.parse::<usize>() {
            Ok(k) if (1..=n).contains(&k) => Ok(k - 1),
            _ => Err(CliError::usage(format!("unknown vertex `{token}`"))),
        }
    }
}

fn load(args: &InputArgs, stdin: &mut dyn Read) -> Result<(Graph, Labels), CliError> {
    if args.builtin_counterexample {
        return Ok((counterexample_graph(), Labels { letters: true }));
    }
    let text = match &args.input {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?,
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| CliError::usage(format!("stdin: {e}")))?;
            s
        }
    };
    let g = parse_dimacs(&text).map_err(|e| CliError::usage(e.to_string()))?;
    Ok((g, Labels { letters: false }))
}

/// Runs a parsed command. Writing `-o` files is left to the caller except
/// for `search`, whose summary and findings go to different places.
pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Color(args) => cmd_color(cli, args, stdin),
        Command::CheckMeyniel(args) => cmd_check_meyniel(cli, args, stdin),
        Command::VerifyCounterexample(args) => cmd_verify(cli, args),
        Command::Search(args) => cmd_search(cli, args),
        Command::Chi(args) => cmd_chi(cli, args, stdin),
        Command::Cliques(args) => cmd_cliques(cli, args, stdin),
        Command::Gen(args) => cmd_gen(args),
    }
}

fn coloring_text(out: &mut String, coloring: &Coloring, labels: Labels) {
    for (v, &c) in coloring.colors().iter().enumerate() {
        let _ = writeln!(out, "{} {c}", labels.name(v));
    }
}

fn coloring_json(coloring: &Coloring, labels: Labels) -> Value {
    Value::Array(
        coloring
            .colors()
            .iter()
            .enumerate()
            .map(|(v, &c)| json!({"vertex": labels.name(v), "color": c}))
            .collect(),
    )
}

fn trace_json(trace: &Trace, labels: Labels) -> Value {
    Value::Array(
        trace
            .records()
            .iter()
            .map(|r| {
                json!({
                    "step": r.step,
                    "vertex": labels.name(r.vertex),
                    "saturation": r.saturation,
                    "color": r.color,
                })
            })
            .collect(),
    )
}

fn cmd_color(cli: &Cli, args: &ColorArgs, stdin: &mut dyn Read) -> Result<Outcome, CliError> {
    let (g, labels) = load(&args.input, stdin)?;
    let policy = match args.tie_break {
        TieBreak::Min => TieBreakPolicy::MinIndex,
        TieBreak::Max => TieBreakPolicy::MaxIndex,
        TieBreak::Seeded => TieBreakPolicy::Seeded(args.seed),
    };
    let rule = match args.algo {
        Algo::Mcs => SelectionRule::ColoredNeighbors,
        _ => SelectionRule::Saturation,
    };

    let mut trace = None;
    let mut rounds = None;
    let policy_label;
    let coloring = match (&args.order, args.algo) {
        (Some(_), Algo::Optimal) => {
            return Err(CliError::usage(
                "--order cannot be combined with --algo optimal",
            ))
        }
        (Some(tokens), _) => {
            let order = tokens
                .iter()
                .map(|t| labels.parse(t, g.n()))
                .collect::<Result<Vec<_>, _>>()?;
            policy_label = format!("order:{}", labels.names(&order).join(","));
            let (coloring, t) = replay_order_for(&g, &order, rule).map_err(|e| match e {
                ReplayError::NotAPermutation(e) => CliError::usage(e.to_string()),
                ReplayError::InvalidAtStep { .. } => CliError::negative(e.to_string()),
            })?;
            trace = Some(t);
            coloring
        }
        (None, Algo::Optimal) => {
            policy_label = policy.to_string();
            let mode = match args.mode {
                ModeArg::Heuristic => Mode::Heuristic,
                ModeArg::Verified => Mode::Verified,
            };
            let report =
                optimal_color_meyniel(&g, &policy, mode, cli.budget).map_err(|e| match e {
                    OptimalColorError::Budget(b) => b.into(),
                    OptimalColorError::Policy(p) => CliError::usage(p.to_string()),
                    OptimalColorError::NotStronglyColorable { .. } => {
                        CliError::negative(e.to_string())
                    }
                })?;
            rounds = Some((report.rounds, report.fallback_count));
            report.coloring
        }
        (None, _) => {
            policy_label = policy.to_string();
            let (coloring, t) =
                run_greedy(&g, &policy, rule).map_err(|e| CliError::usage(e.to_string()))?;
            trace = Some(t);
            coloring
        }
    };
    let algo = args
        .algo
        .to_possible_value()
        .unwrap()
        .get_name()
        .to_string();
    let colors_used = coloring.num_colors();

    let stdout = match cli.format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "algorithm: {algo}");
            let _ = writeln!(out, "policy: {policy_label}");
            coloring_text(&mut out, &coloring, labels);
            if let Some((rounds, fallbacks)) = &rounds {
                for (k, r) in rounds.iter().enumerate() {
                    let source = match r.source {
                        SetSource::Heuristic => "heuristic",
                        SetSource::ExactFallback => "exact-fallback",
                    };
                    let _ = writeln!(
                        out,
                        "round {}: {{{}}} ({source})",
                        k + 1,
                        labels.names(&r.stable_set).join(", ")
                    );
                }
                let _ = writeln!(out, "fallbacks: {fallbacks}");
            }
            if let (true, Some(t)) = (args.trace, &trace) {
                out.push_str("trace (step vertex saturation color):\n");
                out.push_str(&t.to_text_with(|v| labels.name(v)));
            }
            let _ = writeln!(out, "colors used: {colors_used}");
            out
        }
        Format::Json => {
            let mut record = json!({
                "algorithm": algo,
                "policy": policy_label,
                "colors": coloring_json(&coloring, labels),
                "colors_used": colors_used,
            });
            if let Some((rounds, fallbacks)) = &rounds {
                record["rounds"] = Value::Array(
                    rounds
                        .iter()
                        .map(|r| json!({"stable_set": labels.names(&r.stable_set), "source": r.source}))
                        .collect(),
                );
                record["fallback_count"] = json!(fallbacks);
            }
            if let (true, Some(t)) = (args.trace, &trace) {
                record["trace"] = trace_json(t, labels);
            }
            format!("{record}\n")
        }
    };
    Ok(Outcome::ok(stdout))
}

fn cmd_check_meyniel(
    cli: &Cli,
    args: &InputArgs,
    stdin: &mut dyn Read,
) -> Result<Outcome, CliError> {
    let (g, labels) = load(args, stdin)?;
    let verdict = is_meyniel(&g, cli.budget)?;
    let (stdout, code) = match (&verdict, cli.format) {
        (MeynielVerdict::Meyniel, Format::Text) => ("Meyniel\n".to_string(), EXIT_OK),
        (MeynielVerdict::Meyniel, Format::Json) => {
            (format!("{}\n", json!({"meyniel": true})), EXIT_OK)
        }
        (MeynielVerdict::NotMeyniel(w), Format::Text) => (
            format!(
                "not Meyniel\nodd cycle: {}\nchords: {}\n",
                labels.names(&w.vertices).join(" "),
                w.chord_count
            ),
            EXIT_NEGATIVE,
        ),
        (MeynielVerdict::NotMeyniel(w), Format::Json) => (
            format!(
                "{}\n",
                json!({
                    "meyniel": false,
                    "cycle": labels.names(&w.vertices),
                    "chords": w.chord_count,
                })
            ),
            EXIT_NEGATIVE,
        ),
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code,
    })
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<Outcome, CliError> {
    let mut g = counterexample_graph();
    if let Some(spec) = &args.drop_edge {
        let labels = Labels { letters: true };
        let ends: Vec<_> = spec
            .split(',')
            .map(|t| labels.parse(t, g.n()))
            .collect::<Result<_, _>>()?;
        let [u, v] = ends[..] else {
            return Err(CliError::usage(
                "--drop-edge expects two vertices, e.g. c,d",
            ));
        };
        let edges: Vec<_> = g
            .edges()
            .into_iter()
            .filter(|&e| e != (u.min(v), u.max(v)))
            .collect();
        if edges.len() == g.m() {
            return Err(CliError::usage(format!("{spec} is not an edge")));
        }
        g = Graph::from_edges(g.n(), &edges).expect("subset of a valid edge list");
    }
    let report = verify_counterexample(&g, cli.budget);
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    };
    let stdout = match cli.format {
        Format::Text => {
            let mut out = String::new();
            for c in &report.checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "[{mark}] {}: {}", c.name, c.detail);
            }
            match report.first_failure() {
                None => out.push_str("all checks passed\n"),
                Some(c) => {
                    let _ = writeln!(out, "first failing check: {}", c.name);
                }
            }
            out
        }
        Format::Json => {
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                .collect();
            format!("{}\n", json!({"passed": report.passed(), "checks": checks}))
        }
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code,
    })
}

fn cmd_search(cli: &Cli, args: &SearchArgs) -> Result<Outcome, CliError> {
    if !(0.0..=1.0).contains(&args.p) {
        return Err(CliError::usage(format!(
            "--p must lie in [0, 1], got {}",
            args.p
        )));
    }
    let config = SearchConfig {
        seed: args.seed,
        instances: args.instances,
        n: args.n,
        p: args.p,
        policies_per_instance: args.policies,
        budget: cli.budget,
        include_builtin: args.builtin,
        include_mcs: args.mcs,
    };
    let report = gap_search(&config);
    let s = &report.summary;
    let summary = match cli.format {
        Format::Text => format!(
            "candidates: {}\nmeyniel: {}\nnot meyniel: {}\nskipped (budget): {}\nruns: {}\nfindings: {}\n",
            s.candidates, s.meyniel, s.not_meyniel, s.skipped_budget, s.runs, s.findings
        ),
        Format::Json => format!("{}\n", serde_json::to_string(s).expect("summary serializes")),
    };
    let findings = report.findings_jsonl();
    // With -o the findings go to the file and the summary to stdout;
    // otherwise the findings own stdout and the summary moves to stderr.
    Ok(match &cli.output {
        Some(path) => {
            std::fs::write(path, findings)
                .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
            Outcome::ok(summary)
        }
        None => Outcome {
            stdout: findings,
            stderr: summary,
            code: EXIT_OK,
        },
    })
}

fn cmd_chi(cli: &Cli, args: &InputArgs, stdin: &mut dyn Read) -> Result<Outcome, CliError> {
    let (g, _) = load(args, stdin)?;
    let chi = chromatic_number(&g, cli.budget)?;
    let omega = clique_number(&g);
    Ok(Outcome::ok(match cli.format {
        Format::Text => format!("chromatic number: {chi}\nclique number: {omega}\n"),
        Format::Json => format!("{}\n", json!({"chi": chi, "omega": omega})),
    }))
}

fn cmd_cliques(cli: &Cli, args: &InputArgs, stdin: &mut dyn Read) -> Result<Outcome, CliError> {
    let (g, labels) = load(args, stdin)?;
    let cliques = maximal_cliques(&g).cliques;
    Ok(Outcome::ok(match cli.format {
        Format::Text => {
            let mut out = String::new();
            for k in &cliques {
                let _ = writeln!(out, "{}", labels.names(k).join(" "));
            }
            let _ = writeln!(out, "maximal cliques: {}", cliques.len());
            out
        }
        Format::Json => {
            let list: Vec<Vec<String>> = cliques.iter().map(|k| labels.names(k)).collect();
            format!("{}\n", json!({"count": cliques.len(), "cliques": list}))
        }
    }))
}

fn cmd_gen(args: &GenArgs) -> Result<Outcome, CliError> {
    let g = match args.kind {
        GenKind::Random => {
            if !(0.0..=1.0).contains(&args.p) {
                return Err(CliError::usage(format!(
                    "--p must lie in [0, 1], got {}",
                    args.p
                )));
            }
            gen_random(args.seed, args.n, args.p)
        }
        GenKind::Chordal => gen_chordal(args.seed, args.n, args.cap),
    };
    Ok(Outcome::ok(emit_dimacs(&g)))
}
