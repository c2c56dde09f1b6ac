//! `posetflow`: Sperner verdicts, widths, normalized-flow checks, network
//! collapses, Stirling rows, and exact flow solving from the command line.
//!
//! Poset specifiers: `boolean:N`, `symmetric:N`, `partition:N`,
//! `file:PATH`, or products joined by a standalone `x`, e.g.
//! `"boolean:2 x symmetric:3"`.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use posetflow::families::{
    boolean_lattice, partition_lattice, stirling_row, symmetric_group_refinement, StirlingKind,
};
use posetflow::flownet::{
    brute_force_min_vertex_cut, max_flow, min_flow, nmc_bruteforce, normalized_flow, Network,
};
use posetflow::gen::{random_bipartite, random_dag_network, random_graded_poset};
use posetflow::morphism::{collapse_to_chain, collapse_to_two_chain, FlowMorphism};
use posetflow::serial::{
    flow_to_entries, format_ratio, network_from_json, network_to_json, poset_from_json,
    poset_to_dot, poset_to_json, FlowJsonEntry, NetworkJson,
};
use posetflow::sperner::{check_nfp_with_jobs, is_sperner_with_jobs, width, NfpReport};
use posetflow::{Error, Net, Poset, Result, Weight};

const DEFAULT_ORACLE_LIMIT: usize = 24;

#[derive(Parser)]
#[command(
    name = "posetflow",
    version,
    about = "Exact Sperner verification via network flows"
)]
struct Cli {
    /// Threads for independent rank-pair and per-edge checks.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Width, heaviest level, Sperner verdict, and NFP report for a poset.
    Sperner {
        /// Poset specifier (quote product expressions).
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Maximum antichain weight with a witness.
    Width {
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Normalized-flow feasibility for every consecutive rank pair.
    Nfp {
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Collapse a poset's Hasse network and optionally verify the morphism.
    Collapse {
        spec: String,
        #[arg(long, value_enum)]
        stage: Stage,
        /// Check the four axioms and pull back the maximum antichain.
        #[arg(long)]
        verify: bool,
    },
    /// One row of Stirling numbers.
    Stirling { kind: KindArg, n: usize },
    /// Exact MaxFlow or MinFlow of a network (a JSON file or `hasse:SPEC`).
    Flow {
        direction: DirectionArg,
        source: String,
        #[arg(long)]
        json: bool,
    },
    /// Emit a poset as DOT or JSON.
    Export { spec: String, format: FormatArg },
    /// Randomized oracle-equivalence suites.
    Selftest {
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Stage {
    /// Merge the lower copies into one chain, keep the raised copy apart.
    TwoChain,
    /// One vertex per rank.
    Chain,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    First,
    Second,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Max,
    Min,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let jobs = cli.jobs.max(1);
    match cli.command {
        Command::Sperner { spec, json } => cmd_sperner(&spec, json, jobs),
        Command::Width { spec, json } => cmd_width(&spec, json),
        Command::Nfp { spec, json } => cmd_nfp(&spec, json, jobs),
        Command::Collapse {
            spec,
            stage,
            verify,
        } => cmd_collapse(&spec, stage, verify, jobs),
        Command::Stirling { kind, n } => {
            let kind = match kind {
                KindArg::First => StirlingKind::First,
                KindArg::Second => StirlingKind::Second,
            };
            let row: Vec<Weight> = stirling_row(kind, n);
            let text: Vec<String> = row.iter().map(ToString::to_string).collect();
            println!("{}", text.join(" "));
            Ok(0)
        }
        Command::Flow {
            direction,
            source,
            json,
        } => cmd_flow(direction, &source, json),
        Command::Export { spec, format } => {
            let poset = parse_poset_spec(&spec)?;
            match format {
                FormatArg::Dot => print!("{}", poset_to_dot(&poset)),
                FormatArg::Json => println!("{}", poset_to_json(&poset)),
            }
            Ok(0)
        }
        Command::Selftest { seed, trials } => cmd_selftest(seed, trials),
    }
}

// ---------------------------------------------------------------------------
// Poset specifiers

fn parse_poset_spec(text: &str) -> Result<Poset> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(Error::InvalidInput("empty poset specifier".into()));
    }
    let mut poset = parse_atom(tokens[0])?;
    let mut rest = &tokens[1..];
    while !rest.is_empty() {
        if rest[0] != "x" || rest.len() < 2 {
            return Err(Error::InvalidInput(format!(
                "expected `x <spec>` after a factor, found {:?}",
                rest.join(" ")
            )));
        }
        poset = poset.product(&parse_atom(rest[1])?);
        rest = &rest[2..];
    }
    Ok(poset)
}

fn parse_atom(atom: &str) -> Result<Poset> {
    let (family, param) = atom.split_once(':').ok_or_else(|| {
        Error::InvalidInput(format!(
            "specifier {atom:?} is not of the form family:parameter"
        ))
    })?;
    let number = |what: &'static str| -> Result<usize> {
        param.parse().map_err(|_| Error::Parse {
            what,
            detail: format!("bad integer parameter {param:?}"),
        })
    };
    match family {
        "boolean" => boolean_lattice(number("boolean lattice size")?),
        "symmetric" => Ok(symmetric_group_refinement(number("symmetric group size")?)?.poset),
        "partition" => partition_lattice(number("partition lattice size")?),
        "file" => {
            let text = std::fs::read_to_string(param).map_err(|e| Error::Parse {
                what: "poset file",
                detail: format!("{param}: {e}"),
            })?;
            poset_from_json(&text)
        }
        other => Err(Error::InvalidInput(format!(
            "unknown poset family {other:?}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// sperner / width / nfp

#[derive(Serialize)]
struct MaxLevelJson {
    rank: usize,
    weight: String,
}

#[derive(Serialize)]
struct NfpPairJson {
    lower_rank: usize,
    feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    violating: Option<Vec<String>>,
}

#[derive(Serialize)]
struct SpernerJson {
    poset: String,
    width: String,
    verdict: bool,
    max_level: MaxLevelJson,
    witness: Vec<usize>,
    nfp: Vec<NfpPairJson>,
}

fn nfp_pairs_json(poset: &Poset, report: &NfpReport<Weight>) -> Vec<NfpPairJson> {
    report
        .pairs
        .iter()
        .map(|pair| NfpPairJson {
            lower_rank: pair.lower_rank,
            feasible: pair.feasible,
            violating: pair
                .violating_set
                .as_ref()
                .map(|xs| xs.iter().map(|&id| poset.label(id).to_string()).collect()),
        })
        .collect()
}

fn cmd_sperner(spec: &str, json: bool, jobs: usize) -> Result<u8> {
    let poset = parse_poset_spec(spec)?;
    let report = is_sperner_with_jobs(&poset, spec, jobs)?;
    let ok = report.verdict && report.nfp.all_feasible();
    if json {
        let doc = SpernerJson {
            poset: spec.to_string(),
            width: report.width.to_string(),
            verdict: report.verdict,
            max_level: MaxLevelJson {
                rank: report.max_level_rank,
                weight: report.max_level_weight.to_string(),
            },
            witness: report.witness.members.clone(),
            nfp: nfp_pairs_json(&poset, &report.nfp),
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        );
    } else {
        let relation = if report.verdict { "=" } else { ">" };
        let verdict = if report.verdict {
            "SPERNER"
        } else {
            "NOT SPERNER"
        };
        println!(
            "width {} {relation} max level {} (rank {}): {verdict}",
            report.width, report.max_level_weight, report.max_level_rank
        );
        let feasible = report.nfp.pairs.iter().filter(|p| p.feasible).count();
        println!(
            "NFP: {}/{} rank pairs accept a normalized flow",
            feasible,
            report.nfp.pairs.len()
        );
    }
    Ok(if ok { 0 } else { 2 })
}

fn cmd_width(spec: &str, json: bool) -> Result<u8> {
    let poset = parse_poset_spec(spec)?;
    let (value, witness) = width(&poset)?;
    if json {
        #[derive(Serialize)]
        struct WidthJson {
            poset: String,
            width: String,
            witness: Vec<usize>,
        }
        let doc = WidthJson {
            poset: spec.to_string(),
            width: value.to_string(),
            witness: witness.members,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        );
    } else {
        println!("width {value}");
        let labels: Vec<&str> = witness.members.iter().map(|&id| poset.label(id)).collect();
        println!("witness ({} elements): {}", labels.len(), labels.join(" "));
    }
    Ok(0)
}

fn cmd_nfp(spec: &str, json: bool, jobs: usize) -> Result<u8> {
    let poset = parse_poset_spec(spec)?;
    let report = check_nfp_with_jobs(&poset, jobs)?;
    if json {
        #[derive(Serialize)]
        struct NfpJson {
            poset: String,
            all_feasible: bool,
            pairs: Vec<NfpPairDetailJson>,
        }
        #[derive(Serialize)]
        struct NfpPairDetailJson {
            lower_rank: usize,
            feasible: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            flow: Option<Vec<FlowJsonEntry>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            violating: Option<Vec<String>>,
        }
        let pairs = report
            .pairs
            .iter()
            .map(|pair| NfpPairDetailJson {
                lower_rank: pair.lower_rank,
                feasible: pair.feasible,
                flow: pair.witness.as_ref().map(|values| {
                    pair.edges
                        .iter()
                        .zip(values)
                        .map(|(&edge, value)| FlowJsonEntry {
                            edge,
                            value: format_ratio(value),
                        })
                        .collect()
                }),
                violating: pair
                    .violating_set
                    .as_ref()
                    .map(|xs| xs.iter().map(|&id| poset.label(id).to_string()).collect()),
            })
            .collect();
        let doc = NfpJson {
            poset: spec.to_string(),
            all_feasible: report.all_feasible(),
            pairs,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        );
    } else {
        for pair in &report.pairs {
            if pair.feasible {
                println!(
                    "ranks [{}, {}]: normalized flow",
                    pair.lower_rank,
                    pair.lower_rank + 1
                );
            } else {
                let labels: Vec<&str> = pair
                    .violating_set
                    .as_deref()
                    .unwrap_or_default()
                    .iter()
                    .map(|&id| poset.label(id))
                    .collect();
                println!(
                    "ranks [{}, {}]: INFEASIBLE, violating X = {{{}}}",
                    pair.lower_rank,
                    pair.lower_rank + 1,
                    labels.join(", ")
                );
            }
        }
        println!(
            "NFP: {}",
            if report.all_feasible() {
                "holds"
            } else {
                "fails"
            }
        );
    }
    Ok(if report.all_feasible() { 0 } else { 2 })
}

// ---------------------------------------------------------------------------
// collapse

#[derive(Serialize)]
struct AxiomJson {
    passed: bool,
    failures: Vec<String>,
}

#[derive(Serialize)]
struct EdgeFiberJson {
    edge: (usize, usize),
    feasible: bool,
}

#[derive(Serialize)]
struct ReportJson {
    all_pass: bool,
    epimorphism: AxiomJson,
    boundaries: AxiomJson,
    capacities: AxiomJson,
    edge_fibers: Vec<EdgeFiberJson>,
}

#[derive(Serialize)]
struct PullbackJson {
    codomain_antichain: Vec<usize>,
    members: Vec<usize>,
    labels: Vec<String>,
    weight: String,
}

#[derive(Serialize)]
struct CollapseJson {
    poset: String,
    stage: String,
    codomain: NetworkJson,
    vertex_map: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<ReportJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pullback: Option<PullbackJson>,
}

fn cmd_collapse(spec: &str, stage: Stage, verify: bool, jobs: usize) -> Result<u8> {
    let (mut morphism, labels, stage_name): (FlowMorphism<Weight>, Vec<String>, &str) = match stage
    {
        Stage::TwoChain => {
            let n: usize = match spec.split_once(':') {
                Some(("symmetric", param)) => param.parse().map_err(|_| Error::Parse {
                    what: "symmetric group size",
                    detail: format!("bad integer parameter {param:?}"),
                })?,
                _ => {
                    return Err(Error::InvalidInput(
                        "the two-chain stage collapses symmetric:N specifiers only".into(),
                    ))
                }
            };
            if n < 2 {
                return Err(Error::InvalidInput(
                    "the two-chain stage needs symmetric:N with N >= 2".into(),
                ));
            }
            let collapse = collapse_to_two_chain::<Weight>(n - 1)?;
            let labels = collapse.group.poset.labels().to_vec();
            (collapse.morphism, labels, "two-chain")
        }
        Stage::Chain => {
            let poset = parse_poset_spec(spec)?;
            let labels = poset.labels().to_vec();
            (collapse_to_chain(&poset), labels, "chain")
        }
    };

    let mut report_json = None;
    let mut pullback_json = None;
    if verify {
        let report = morphism.verify_with_jobs(jobs);
        report_json = Some(ReportJson {
            all_pass: report.all_pass(),
            epimorphism: AxiomJson {
                passed: report.epimorphism.passed,
                failures: report.epimorphism.failures.clone(),
            },
            boundaries: AxiomJson {
                passed: report.boundaries.passed,
                failures: report.boundaries.failures.clone(),
            },
            capacities: AxiomJson {
                passed: report.capacities.passed,
                failures: report.capacities.failures.clone(),
            },
            edge_fibers: report
                .edge_fibers
                .iter()
                .map(|fiber| EdgeFiberJson {
                    edge: fiber.edge,
                    feasible: fiber.feasible,
                })
                .collect(),
        });
        if morphism.is_verified() {
            let codomain_antichain = min_flow(morphism.codomain())?.antichain;
            let (members, weight) = morphism.pull_back_antichain(&codomain_antichain)?;
            pullback_json = Some(PullbackJson {
                codomain_antichain,
                labels: members.iter().map(|&id| labels[id].clone()).collect(),
                members,
                weight: weight.to_string(),
            });
        }
    }

    let doc = CollapseJson {
        poset: spec.to_string(),
        stage: stage_name.to_string(),
        codomain: serde_json::from_str(&network_to_json(morphism.codomain())).expect("round trip"),
        vertex_map: morphism.vertex_map().to_vec(),
        report: report_json,
        pullback: pullback_json,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&doc).expect("serializable")
    );
    let ok = !verify || morphism.is_verified();
    Ok(if ok { 0 } else { 2 })
}

// ---------------------------------------------------------------------------
// flow

fn cmd_flow(direction: DirectionArg, source: &str, json: bool) -> Result<u8> {
    let network: Net = if let Some(spec) = source.strip_prefix("hasse:") {
        Network::hasse(&parse_poset_spec(spec)?)
    } else {
        let text = std::fs::read_to_string(source).map_err(|e| Error::Parse {
            what: "network file",
            detail: format!("{source}: {e}"),
        })?;
        network_from_json(&text)?
    };

    #[derive(Serialize)]
    struct FlowJson {
        problem: String,
        value: String,
        witness_set: Vec<usize>,
        flow: Vec<FlowJsonEntry>,
    }

    let (problem, value, witness_set, flow) = match direction {
        DirectionArg::Max => {
            let out = max_flow(&network)?;
            ("max", out.value, out.min_cut, out.flow)
        }
        DirectionArg::Min => {
            let out = min_flow(&network)?;
            ("min", out.value, out.antichain, out.flow)
        }
    };
    if json {
        let doc = FlowJson {
            problem: problem.to_string(),
            value: value.to_string(),
            witness_set,
            flow: flow_to_entries(&network, &flow),
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        );
    } else {
        let witness_name = match direction {
            DirectionArg::Max => "min cut",
            DirectionArg::Min => "max antichain",
        };
        println!(
            "{}Flow = {value}",
            if problem == "max" { "Max" } else { "Min" }
        );
        let ids: Vec<String> = witness_set.iter().map(ToString::to_string).collect();
        println!("{witness_name}: {}", ids.join(" "));
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// selftest

fn oracle_limit() -> usize {
    std::env::var("POSETFLOW_ORACLE_LIMIT")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ORACLE_LIMIT)
}

fn cmd_selftest(seed: u64, trials: usize) -> Result<u8> {
    let limit = oracle_limit();
    let started = Instant::now();
    let mut failures = 0usize;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_elements = limit.min(15);
    for trial in 0..trials {
        let poset: Poset = random_graded_poset(&mut rng, max_elements, 9);
        let (flow_width, _) = width(&poset)?;
        let oracle = poset.brute_force_width_with_limit(limit)?;
        if flow_width != oracle.total_weight {
            println!(
                "width suite trial {trial}: MinFlow {flow_width} != oracle {}",
                oracle.total_weight
            );
            failures += 1;
        }
    }
    println!("width suite: {trials} trials, {failures} failures");

    let mut cut_failures = 0usize;
    for trial in 0..trials {
        let network: Net = random_dag_network(&mut rng, 14, 9);
        let solved = max_flow(&network)?;
        let oracle = brute_force_min_vertex_cut(&network)?;
        if solved.value != oracle {
            println!(
                "cut suite trial {trial}: MaxFlow {} != oracle {oracle}",
                solved.value
            );
            cut_failures += 1;
        }
    }
    println!("cut suite: {trials} trials, {cut_failures} failures");

    let mut duality_failures = 0usize;
    for trial in 0..trials {
        let (s_weights, t_weights, edges): (Vec<Weight>, Vec<Weight>, _) =
            random_bipartite(&mut rng, 10, 9);
        let flow = normalized_flow(&s_weights, &t_weights, &edges)?;
        let nmc = nmc_bruteforce(&s_weights, &t_weights, &edges)?;
        if flow.feasible != nmc.holds {
            println!("duality suite trial {trial}: feasibility and NMC disagree");
            duality_failures += 1;
        }
    }
    println!("duality suite: {trials} trials, {duality_failures} failures");

    let total = failures + cut_failures + duality_failures;
    println!(
        "selftest: {} ({:.2?})",
        if total == 0 {
            "all suites passed"
        } else {
            "FAILED"
        },
        started.elapsed()
    );
    Ok(if total == 0 { 0 } else { 1 })
}
