use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use accdom::closed_forms::{
    f_corona_predict_solved, gamma_a_closed, gamma_closed, p_corona_predict, s2_predict, BaseKind,
    ClosedFamily,
};
use accdom::corona::{corona_k1, f_corona, p_corona, s2_subdivision, ConstructionSpec};
use accdom::graph::{parse_graph, write_graph, Format, Graph, StandardFamily, VertexSet};
use accdom::solver::{
    gamma, gamma_a, is_accurate_dominating, min_accurate_dominating_sets, min_dominating_sets,
    solve_record,
};
use accdom::tree::{find_witness_partition, is_corona_graph, WitnessMode};
use accdom::verify::{run_check, RunConfig, THEOREM_IDS};
use accdom::Error;

/// Exact domination and accurate domination of graphs.
#[derive(Parser)]
#[command(name = "accdom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Graph file, or `-` for standard input.
    file: PathBuf,
    /// Input format; guessed from the extension and content when omitted.
    #[arg(long, value_parser = parse_format)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Domination number and the first minimum dominating set.
    Gamma {
        #[command(flatten)]
        input: Input,
    },
    /// Accurate domination number and the first minimum accurate set.
    GammaA {
        #[command(flatten)]
        input: Input,
    },
    /// Both numbers and witnesses as one JSON record.
    Solve {
        #[command(flatten)]
        input: Input,
    },
    /// Every minimum dominating set, one per line.
    Enumerate {
        #[command(flatten)]
        input: Input,
        /// List minimum accurate dominating sets instead.
        #[arg(long)]
        accurate: bool,
    },
    /// Whether the given vertex set is accurate dominating.
    AccurateCheck {
        #[command(flatten)]
        input: Input,
        /// Comma-separated vertex indices.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<usize>,
    },
    /// Build a construction from a JSON spec and print it.
    Build {
        kind: BuildKind,
        spec: PathBuf,
        /// Output format.
        #[arg(long, value_parser = parse_format, default_value = "edge-list")]
        format: Format,
    },
    /// Whether a connected graph is a corona graph.
    RecognizeCorona {
        #[command(flatten)]
        input: Input,
    },
    /// Minimum dominating set of a tree whose removal leaves more
    /// components than its size.
    TreeWitness {
        #[command(flatten)]
        input: Input,
        /// Use the inductive construction instead of search.
        #[arg(long)]
        constructive: bool,
    },
    /// Check a claim on a generated corpus; `all` runs every claim.
    Verify {
        theorem_id: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Closed-form predictions.
    Predict {
        #[command(subcommand)]
        what: Predict,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildKind {
    CoronaK1,
    FCorona,
    PCorona,
    S2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    CompleteBipartiteEqual,
    CompleteBipartiteUnequal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    General,
    Tree,
    Cycle,
}

#[derive(Subcommand)]
enum Predict {
    /// γ of a standard family member.
    Gamma { family: Family, params: Vec<usize> },
    /// γₐ of a standard family member.
    GammaA { family: Family, params: Vec<usize> },
    /// γ and γₐ of the F-corona described by a JSON spec.
    FCorona { spec: PathBuf },
    /// γ and γₐ of the P-corona described by a JSON spec.
    PCorona {
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "general")]
        base_kind: Kind,
    },
    /// γ and γₐ of the 2-subdivision of a connected graph.
    S2 {
        #[command(flatten)]
        input: Input,
    },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

/// Edge lists start with two integers; anything else is taken as graph6.
fn guess_format(path: &Path, text: &str) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6" | "graph6") => return Format::Graph6,
        Some("edgelist" | "edges" | "el") => return Format::EdgeList,
        _ => {}
    }
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.split_whitespace().all(|t| t.parse::<usize>().is_ok()) {
        Format::EdgeList
    } else {
        Format::Graph6
    }
}

fn load(input: &Input) -> Result<Graph, Failure> {
    let text = read_text(&input.file)?;
    let format = input
        .format
        .unwrap_or_else(|| guess_format(&input.file, &text));
    parse_graph(&text, format).map_err(|e| Failure::Usage(format!("{}: {e}", input.file.display())))
}

fn load_spec(path: &Path) -> Result<ConstructionSpec, Failure> {
    Ok(ConstructionSpec::from_json(&read_text(path)?)?)
}

fn print_sets(sets: &[VertexSet]) {
    for s in sets {
        println!("{s}");
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn standard(family: Family) -> Result<StandardFamily, Failure> {
    match family {
        Family::Path => Ok(StandardFamily::Path),
        Family::Cycle => Ok(StandardFamily::Cycle),
        Family::Complete => Ok(StandardFamily::Complete),
        Family::CompleteBipartite => Ok(StandardFamily::CompleteBipartite),
        _ => Err(Failure::Usage(
            "use complete-bipartite with two parameters for γ".into(),
        )),
    }
}

fn closed(family: Family, params: &[usize]) -> Result<ClosedFamily, Failure> {
    Ok(match family {
        Family::Path => ClosedFamily::Path,
        Family::Cycle => ClosedFamily::Cycle,
        Family::Complete => ClosedFamily::Complete,
        Family::CompleteBipartiteEqual => ClosedFamily::CompleteBipartiteEqual,
        Family::CompleteBipartiteUnequal => ClosedFamily::CompleteBipartiteUnequal,
        Family::CompleteBipartite => match params {
            [m, n] if m == n => ClosedFamily::CompleteBipartiteEqual,
            _ => ClosedFamily::CompleteBipartiteUnequal,
        },
    })
}

fn verify(
    id: &str,
    max_n: Option<usize>,
    samples: Option<usize>,
    seed: u64,
    out: Option<PathBuf>,
) -> CliResult {
    let ids: Vec<&str> = if id == "all" {
        THEOREM_IDS.to_vec()
    } else {
        vec![id]
    };
    if ids.len() > 1 && out.is_some() {
        return Err(Failure::Usage("--json needs a single theorem id".into()));
    }
    let mut all_passed = true;
    for id in ids {
        let config = RunConfig {
            theorem_id: id.into(),
            max_n,
            samples,
            seed,
            output: out.clone(),
        };
        let report = run_check(&config)?;
        let status = if report.passed() { "pass" } else { "FAIL" };
        println!(
            "{id}: {status} ({} instances, {} failures, {} ms)",
            report.instances_tested,
            report.failures.len(),
            report.elapsed_ms
        );
        for f in &report.failures {
            println!(
                "  instance {}: expected {}, got {}",
                f.instance, f.expected, f.actual
            );
        }
        all_passed &= report.passed();
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Gamma { input } => {
            let r = gamma(&load(&input)?)?;
            println!("{}\n{}", r.value, r.witness);
        }
        Command::GammaA { input } => {
            let r = gamma_a(&load(&input)?)?;
            println!("{}\n{}", r.value, r.witness);
        }
        Command::Solve { input } => println!("{}", json(&solve_record(&load(&input)?)?)),
        Command::Enumerate { input, accurate } => {
            let g = load(&input)?;
            let sets = if accurate {
                min_accurate_dominating_sets(&g)?
            } else {
                min_dominating_sets(&g)?
            };
            print_sets(&sets);
        }
        Command::AccurateCheck { input, set } => {
            let g = load(&input)?;
            let set = VertexSet::from_vertices(g.order(), set)?;
            println!("{}", is_accurate_dominating(&g, &set)?);
        }
        Command::Build { kind, spec, format } => {
            let spec = load_spec(&spec)?;
            let g = match kind {
                BuildKind::CoronaK1 => corona_k1(&spec.base_graph()?)?,
                BuildKind::FCorona => f_corona(&spec.family()?)?,
                BuildKind::PCorona => p_corona(&spec.partition()?)?,
                BuildKind::S2 => s2_subdivision(&spec.base_graph()?)?,
            };
            let text = write_graph(&g, format)?;
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
        }
        Command::RecognizeCorona { input } => println!("{}", is_corona_graph(&load(&input)?)?),
        Command::TreeWitness {
            input,
            constructive,
        } => {
            let t = load(&input)?;
            let mode = if constructive {
                WitnessMode::Constructive
            } else {
                WitnessMode::BruteForce
            };
            match find_witness_partition(&t, mode)? {
                Some(w) => println!("{}", json(&w.record(&t))),
                None => println!("none"),
            }
        }
        Command::Verify {
            theorem_id,
            max_n,
            samples,
            seed,
            json,
        } => verify(&theorem_id, max_n, samples, seed, json)?,
        Command::Predict { what } => match what {
            Predict::Gamma { family, params } => {
                println!("{}", gamma_closed(standard(family)?, &params)?)
            }
            Predict::GammaA { family, params } => {
                println!("{}", gamma_a_closed(closed(family, &params)?, &params)?)
            }
            Predict::FCorona { spec } => {
                println!(
                    "{}",
                    json(&f_corona_predict_solved(&load_spec(&spec)?.family()?)?)
                )
            }
            Predict::PCorona { spec, base_kind } => {
                let kind = match base_kind {
                    Kind::General => BaseKind::General,
                    Kind::Tree => BaseKind::Tree,
                    Kind::Cycle => BaseKind::Cycle,
                };
                println!(
                    "{}",
                    json(&p_corona_predict(&load_spec(&spec)?.partition()?, kind)?)
                )
            }
            Predict::S2 { input } => {
                let (g, ga) = s2_predict(&load(&input)?)?;
                println!("{g} {ga}");
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
