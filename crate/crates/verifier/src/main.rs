//! Command-line interface: analysis of graph and ideal files, Betti tables,
//! linearity defects, exhaustive theorem verification, and splitting checks.
//!
//! Exit codes: 0 success / verified, 1 counterexample or failing splitting,
//! 2 input error, 3 resource refusal.

use clap::{Args, Parser, Subcommand, ValueEnum};
use edgeideal::error::Error;
use edgeideal::graph::Graph;
use edgeideal::linalg::FieldSpec;
use edgeideal::lind::{linearity_defect, linearity_defect_checked};
use edgeideal::monomial::MonomialIdeal;
use edgeideal::resolution::{
    betti_table_of, betti_via_taylor, hochster_betti_ideal, DEFAULT_TAYLOR_CAP,
};
use edgeideal_verifier::analyze::{analyze_graph, analyze_ideal};
use edgeideal_verifier::formats::{
    betti_grid, betti_json, looks_like_ideal, parse_graph, parse_ideal_file,
};
use edgeideal_verifier::theorems::{verify, TheoremId};
use edgeideal_verifier::{
    parse_split_spec, split_check, splitting_report_json, splitting_report_text, SplitSpec,
};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

/// Hard ceiling for --long-running mode (2^30 Taylor subsets).
const LONG_RUNNING_CAP: usize = 30;

#[derive(Parser)]
#[command(
    name = "edgeideal",
    about = "Exact homological invariants of edge ideals and monomial ideals",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BettiMethod {
    Auto,
    Taylor,
    Hochster,
}

#[derive(Args)]
struct CommonOpts {
    /// Field characteristic: 0 for the rationals, a prime p for Z/p.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u32,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Generator cap for Taylor-complex computations.
    #[arg(long = "taylor-cap")]
    taylor_cap: Option<usize>,
    /// Allow ideals beyond the default cap (up to 30 generators) and print
    /// progress to stderr.
    #[arg(long = "long-running")]
    long_running: bool,
}

impl CommonOpts {
    fn field(&self) -> Result<FieldSpec, Error> {
        FieldSpec::new(self.characteristic)
    }
    fn cap(&self) -> usize {
        self.taylor_cap.unwrap_or(if self.long_running {
            LONG_RUNNING_CAP
        } else {
            DEFAULT_TAYLOR_CAP
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for a graph or ideal file.
    Analyze {
        /// Graph file (`n=`-headed edge list or JSON) or ideal file
        /// (`vars:`-headed monomial list).
        file: PathBuf,
        /// Force ideal-file interpretation.
        #[arg(long)]
        ideal: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Betti table of the edge ideal of a graph (or of an ideal file).
    Betti {
        file: PathBuf,
        #[arg(long)]
        ideal: bool,
        /// Computation route: the homology formula, the Taylor resolution,
        /// or the cheapest applicable one.
        #[arg(long, value_enum, default_value_t = BettiMethod::Auto)]
        method: BettiMethod,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Linearity defect of the edge ideal of a graph (or of an ideal file).
    Lind {
        file: PathBuf,
        #[arg(long)]
        ideal: bool,
        /// Re-verify the homology verdicts by direct rank computations.
        #[arg(long)]
        checked: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Graph-theoretic invariants only (no field needed).
    Invariants {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exhaustive verification of a theorem over all graph classes on
    /// --max-vertices vertices.
    Verify {
        /// One of: froberg, ld1, weakly-chordal-lind, weakly-chordal-reg,
        /// weakly-chordal-pd, cycle-lind, bounds, copair-splitting,
        /// ld-char-independence.
        theorem: String,
        #[arg(long = "max-vertices", default_value_t = 6)]
        max_vertices: usize,
        /// Restrict to connected graphs.
        #[arg(long)]
        connected: bool,
        /// Field characteristic; without it the run covers the default pair
        /// {0, 2}.
        #[arg(long = "char")]
        characteristic: Option<u32>,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Generator cap for Taylor-complex computations (defaults to the
        /// densest graph in the sweep).
        #[arg(long = "taylor-cap")]
        taylor_cap: Option<usize>,
    },
    /// Betti splitting check for an explicit decomposition.
    SplitCheck {
        /// Graph file; the split is given as edges `u-v`.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Ideal file; the split is given as generator indices.
        #[arg(long)]
        ideal: Option<PathBuf>,
        /// Decomposition: `U:0-1,2-3` (edges) or `0,2` (generator indices).
        #[arg(long)]
        split: Option<String>,
        /// Use the y-partition at this variable index instead.
        #[arg(long)]
        var: Option<usize>,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            match e {
                Error::Resource(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

enum Input {
    Graph(Graph),
    Ideal(Vec<String>, MonomialIdeal),
}

fn load_input(path: &PathBuf, force_ideal: bool) -> Result<Input, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    if force_ideal || looks_like_ideal(&text) {
        let (names, ideal) = parse_ideal_file(&text)?;
        Ok(Input::Ideal(names, ideal))
    } else {
        Ok(Input::Graph(parse_graph(&text)?))
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Analyze {
            file,
            ideal,
            common,
        } => {
            let field = common.field()?;
            let cap = common.cap();
            match load_input(&file, ideal)? {
                Input::Graph(g) => {
                    if common.long_running {
                        eprintln!("analyzing graph with {} edges over {field}", g.edge_count());
                    }
                    let report = analyze_graph(&g, &field, cap)?;
                    match common.format {
                        Format::Text => print!("{}", report.to_text()),
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&report.to_json()).expect("json")
                        ),
                    }
                }
                Input::Ideal(names, ideal) => {
                    let report = analyze_ideal(&names, &ideal, &field, cap)?;
                    match common.format {
                        Format::Text => print!("{}", report.to_text()),
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&report.to_json()).expect("json")
                        ),
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Betti {
            file,
            ideal,
            method,
            common,
        } => {
            let field = common.field()?;
            let cap = common.cap();
            let the_ideal = match load_input(&file, ideal)? {
                Input::Graph(g) => MonomialIdeal::edge_ideal(&g),
                Input::Ideal(_, i) => i,
            };
            let table = match method {
                BettiMethod::Auto => betti_table_of(&the_ideal, &field, cap)?,
                BettiMethod::Taylor => betti_via_taylor(&the_ideal, &field, cap)?,
                BettiMethod::Hochster => hochster_betti_ideal(&the_ideal, &field)?,
            };
            match common.format {
                Format::Text => print!("{}", betti_grid(&table)),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&betti_json(&table)).expect("json")
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lind {
            file,
            ideal,
            checked,
            common,
        } => {
            let field = common.field()?;
            let cap = common.cap();
            let the_ideal = match load_input(&file, ideal)? {
                Input::Graph(g) => MonomialIdeal::edge_ideal(&g),
                Input::Ideal(_, i) => i,
            };
            if common.long_running {
                eprintln!(
                    "resolving {} generators (2^{} Taylor subsets) over {field}",
                    the_ideal.num_gens(),
                    the_ideal.num_gens()
                );
            }
            let value = if checked {
                linearity_defect_checked(&the_ideal, &field, cap)?
            } else {
                linearity_defect(&the_ideal, &field, cap)?
            };
            match common.format {
                Format::Text => println!("{value}"),
                Format::Json => println!(
                    "{}",
                    json!({"schema": 1, "type": "lind", "field": field.characteristic(),
                           "linearity_defect": value, "checked": checked})
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Invariants { file, format } => {
            let Input::Graph(g) = load_input(&file, false)? else {
                return Err(Error::Input("invariants expects a graph file".into()));
            };
            let d = g.d_invariant().ok().map(|(d, _)| d);
            match format {
                Format::Text => {
                    println!(
                        "n={} edges={} connected={} forest={}",
                        g.vertex_count(),
                        g.edge_count(),
                        g.is_connected(),
                        g.is_forest()
                    );
                    println!(
                        "chordal={} weakly_chordal={} co_chordal={} bipartite={}",
                        g.is_chordal(),
                        g.is_weakly_chordal(),
                        g.is_co_chordal(),
                        g.is_bipartite()
                    );
                    println!("induced_matching_number={}", g.induced_matching_number());
                    println!("d={}", d.map_or("-".into(), |v| v.to_string()));
                    println!("two_pairs={:?}", g.find_two_pairs());
                    println!("co_two_pairs={:?}", g.co_two_pairs());
                }
                Format::Json => {
                    let value = json!({
                        "schema": 1,
                        "type": "invariants",
                        "n": g.vertex_count(),
                        "edges": g.edges().iter().map(|&(u, v)| vec![u, v]).collect::<Vec<_>>(),
                        "edge_count": g.edge_count(),
                        "connected": g.is_connected(),
                        "forest": g.is_forest(),
                        "chordal": g.is_chordal(),
                        "weakly_chordal": g.is_weakly_chordal(),
                        "co_chordal": g.is_co_chordal(),
                        "bipartite": g.is_bipartite(),
                        "induced_matching_number": g.induced_matching_number(),
                        "d_invariant": d,
                        "two_pairs": g.find_two_pairs().iter().map(|&(u, v)| vec![u, v]).collect::<Vec<_>>(),
                        "co_two_pairs": g.co_two_pairs().iter().map(|&(u, v)| vec![u, v]).collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string_pretty(&value).expect("json"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            theorem,
            max_vertices,
            connected,
            characteristic,
            format,
            taylor_cap,
        } => {
            let theorem: TheoremId = theorem.parse()?;
            let fields: Vec<FieldSpec> = match characteristic {
                Some(c) => vec![FieldSpec::new(c)?],
                // Known pathologies live in characteristic 2, so the default
                // sweep covers {0, 2}.
                None => vec![FieldSpec::Char0, FieldSpec::new(2)?],
            };
            let mut all_pass = true;
            let mut jsons = Vec::new();
            for field in &fields {
                let check = verify(theorem, max_vertices, field, connected, taylor_cap)?;
                all_pass &= check.pass;
                match format {
                    Format::Text => print!("{}", check.to_text()),
                    Format::Json => jsons.push(check.to_json()),
                }
            }
            if let Format::Json = format {
                let value = if jsons.len() == 1 {
                    jsons.pop().expect("one report")
                } else {
                    json!({"schema": 1, "type": "verify-multi", "runs": jsons})
                };
                println!("{}", serde_json::to_string_pretty(&value).expect("json"));
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::SplitCheck {
            graph,
            ideal,
            split,
            var,
            common,
        } => {
            let field = common.field()?;
            let cap = common.cap();
            let spec = match (split, var) {
                (Some(s), None) => parse_split_spec(&s)?,
                (None, Some(v)) => SplitSpec::Variable(v),
                _ => {
                    return Err(Error::Input(
                        "provide exactly one of --split or --var".into(),
                    ))
                }
            };
            let (the_ideal, the_graph) = match (graph, ideal) {
                (Some(path), None) => {
                    let Input::Graph(g) = load_input(&path, false)? else {
                        return Err(Error::Input("--graph expects a graph file".into()));
                    };
                    (MonomialIdeal::edge_ideal(&g), Some(g))
                }
                (None, Some(path)) => {
                    let Input::Ideal(_, i) = load_input(&path, true)? else {
                        unreachable!()
                    };
                    (i, None)
                }
                _ => {
                    return Err(Error::Input(
                        "provide exactly one of --graph or --ideal".into(),
                    ))
                }
            };
            let report = split_check(&the_ideal, &spec, the_graph.as_ref(), &field, cap)?;
            match common.format {
                Format::Text => print!("{}", splitting_report_text(&report)),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&splitting_report_json(&report)).expect("json")
                ),
            }
            Ok(if report.is_splitting {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
