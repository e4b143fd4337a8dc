use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use edgeideal::classify::{audit_chain, DEFAULT_SHELLING_CAP};
use edgeideal::formulas::{verify_bound, BoundKind};
use edgeideal::genfun::{genfun_forest, genfun_oracle};
use edgeideal::graph::io;
use edgeideal::hochster::{DEFAULT_N_CAP, WORKERS_ENV};
use edgeideal::verify::{self, CriterionReport, VerifyConfig};
use edgeideal::{
    betti_table, betti_table_component_ideal, betti_table_graph, BettiOptions, Error, FieldSpec,
    Graph, Result, SimplicialComplex,
};
use num_rational::BigRational;
use serde_json::{json, Value};

mod spec;

#[derive(Parser)]
#[command(
    name = "edgeideal",
    version,
    about = "Betti numbers and combinatorial classification of edge ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Edges,
    G6,
    Json,
}

#[derive(Args)]
struct Common {
    /// Coefficient field: a prime p (or GF(p)) or Q.
    #[arg(long, default_value = "2", value_parser = parse_field)]
    field: FieldSpec,
    /// Output format; `verify` defaults to table, everything else to json.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Worker threads for the subset sweep; 0 uses every core.
    #[arg(long, env = WORKERS_ENV, default_value_t = 0)]
    workers: usize,
    /// Shrink each induced subgraph by folds before computing homology.
    #[arg(long)]
    fold_reduce: bool,
    /// Raise the vertex cap of the exhaustive sweep.
    #[arg(long, value_name = "N", default_value_t = DEFAULT_N_CAP)]
    unsafe_n_cap: usize,
}

impl Common {
    fn options(&self) -> BettiOptions {
        BettiOptions {
            fold_reduce: self.fold_reduce,
            workers: self.workers,
            n_cap: self.unsafe_n_cap,
        }
    }
}

#[derive(Args)]
struct Input {
    /// Graph: a construction spec (cycle:5, ferrers:3,2,1, ...) or a file
    /// (.g6 graph6, .json, anything else an edge list).
    #[arg(long, short)]
    graph: Option<String>,
    /// Simplicial complex in JSON ({"ground": n, "facets": [[..], ..]}).
    #[arg(long, conflicts_with = "graph")]
    complex: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from a spec (or load a graph file) and print it.
    Construct {
        spec: String,
        #[arg(long = "as", value_enum, default_value = "edges")]
        output: GraphFormat,
    },
    /// Graded Betti numbers from Hochster's formula.
    Betti {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        common: Common,
        /// Use the ideal generated by the independent r-sets instead.
        #[arg(long, value_name = "R")]
        component: Option<usize>,
    },
    /// Betti generating polynomial.
    Genfun {
        #[arg(long, short)]
        graph: String,
        #[command(flatten)]
        common: Common,
        /// Use the leaf recursion (the graph must be a forest).
        #[arg(long)]
        forest: bool,
    },
    /// Vertex decomposability, shellability and Cohen–Macaulay checks.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Comma-separated subset of pure,vd,shellable,cm,scm.
        #[arg(long, default_value = "pure,vd,shellable,cm,scm")]
        checks: String,
        /// Comma-separated fields for the homological checks.
        #[arg(long, default_value = "2")]
        fields: String,
        #[arg(long, default_value_t = DEFAULT_SHELLING_CAP)]
        shelling_cap: usize,
    },
    /// Compare the projective dimension with a bound.
    Bounds {
        #[arg(long, short)]
        graph: String,
        /// max-degree, claw-free, z2, component:R or general:A,B (A, B rationals).
        #[arg(long, default_value = "max-degree")]
        kind: String,
        #[command(flatten)]
        common: Common,
    },
    /// Cross-check formulas against the Hochster sweep.
    Verify {
        #[arg(value_enum)]
        criterion: Criterion,
        #[arg(long, default_value_t = 20080)]
        seed: u64,
        /// Largest partition size checked exhaustively (ferrers).
        #[arg(long, default_value_t = 8)]
        max_cells: usize,
        /// Random sample count, where the criterion samples.
        #[arg(long)]
        samples: Option<usize>,
        /// graph6 corpus, one graph per line (froberg).
        #[arg(long)]
        corpus: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Reduced homology of a complex, or of Ind(G).
    Homology {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Criterion {
    All,
    Ferrers,
    Froberg,
    ComplementChordal,
    ChordalVd,
    Whiskers,
    Ears,
    Golden,
    Genfun,
    Bounds,
    Skeleton,
    Engine,
    Determinism,
}

fn parse_field(s: &str) -> std::result::Result<FieldSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}")))
}

fn load_graph(src: &str) -> Result<Graph> {
    let path = Path::new(src);
    if !path.is_file() {
        return spec::parse(src);
    }
    let text = read(src)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => {
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| Error::Input(format!("{src}: no graph6 line")))?;
            io::parse_graph6(line)
        }
        Some("json") => io::parse_json(&text),
        _ => io::parse_edge_list(&text),
    }
}

fn load_complex(input: &Input) -> Result<SimplicialComplex> {
    match (&input.graph, &input.complex) {
        (Some(g), _) => SimplicialComplex::independence_complex(&load_graph(g)?),
        (None, Some(c)) => SimplicialComplex::from_json(&read(c)?),
        (None, None) => Err(Error::Input("give --graph or --complex".into())),
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    s.trim()
        .parse()
        .map_err(|_| Error::Input(format!("{s:?} is not a rational number")))
}

fn parse_kind(s: &str) -> Result<BoundKind> {
    Ok(match s.split_once(':') {
        None => match s {
            "max-degree" => BoundKind::MaxDegree,
            "claw-free" => BoundKind::ClawFree,
            "z2" => BoundKind::Z2Lattice,
            _ => return Err(Error::Input(format!("unknown bound kind {s:?}"))),
        },
        Some(("component", r)) => BoundKind::Component {
            r: r.parse()
                .map_err(|_| Error::Input(format!("bad component size {r:?}")))?,
        },
        Some(("general", ab)) => {
            let (a, b) = ab
                .split_once(',')
                .ok_or_else(|| Error::Input("expected general:A,B".into()))?;
            BoundKind::General {
                a: parse_rational(a)?,
                b: parse_rational(b)?,
            }
        }
        _ => return Err(Error::Input(format!("unknown bound kind {s:?}"))),
    })
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON value serializes")
}

/// Output text and whether a finding (mismatch, broken implication, violated
/// bound) was made.
type Outcome = (String, bool);

fn run_verify(
    criterion: Criterion,
    cfg: &VerifyConfig,
    max_cells: usize,
    samples: Option<usize>,
    corpus: Option<&str>,
) -> Vec<Result<CriterionReport>> {
    let s = |d: usize| samples.unwrap_or(d);
    let one = |c: Criterion| -> Result<CriterionReport> {
        match c {
            Criterion::Ferrers => verify::ferrers(cfg, max_cells, max_cells.max(12), s(40)),
            Criterion::Froberg => match corpus {
                Some(path) => {
                    let graphs = read(path)?
                        .lines()
                        .filter(|l| !l.trim().is_empty())
                        .map(io::parse_graph6)
                        .collect::<Result<Vec<_>>>()?;
                    verify::froberg_on(cfg, &graphs)
                }
                None => verify::froberg(cfg, 6, 7),
            },
            Criterion::ComplementChordal => verify::complement_chordal(cfg, s(200), 9),
            Criterion::ChordalVd => verify::chordal_vd(cfg, 7, s(200), 10),
            Criterion::Whiskers => verify::whiskers(cfg, 5, s(100), s(100), 6),
            Criterion::Ears => verify::ears(cfg, 8),
            Criterion::Golden => verify::golden(cfg),
            Criterion::Genfun => verify::genfun(cfg, s(300), 8, s(200), 12),
            Criterion::Bounds => verify::bounds(cfg, s(200), 10, 9),
            Criterion::Skeleton => verify::skeleton(cfg, s(100), 10),
            Criterion::Engine => verify::engine(cfg, s(500)),
            Criterion::Determinism => verify::determinism(cfg, s(10), 10, 12),
            Criterion::All => unreachable!(),
        }
    };
    match criterion {
        Criterion::All => Criterion::value_variants()
            .iter()
            .filter(|&&c| c != Criterion::All)
            .map(|&c| one(c))
            .collect(),
        c => vec![one(c)],
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Construct { spec, output } => {
            let g = load_graph(&spec)?;
            let text = match output {
                GraphFormat::Edges => io::to_edge_list(&g),
                GraphFormat::G6 => io::to_graph6(&g) + "\n",
                GraphFormat::Json => io::to_json(&g) + "\n",
            };
            Ok((text, false))
        }
        Command::Betti {
            input,
            common,
            component,
        } => {
            let opts = common.options();
            let table = match (component, &input.graph) {
                (Some(r), Some(g)) => {
                    betti_table_component_ideal(&load_graph(g)?, r, common.field, &opts)?
                }
                (Some(_), None) => {
                    return Err(Error::Input("--component needs --graph".into()));
                }
                (None, Some(g)) => betti_table_graph(&load_graph(g)?, common.field, &opts)?,
                (None, None) => betti_table(&load_complex(&input)?, common.field, &opts)?,
            };
            let text = match common.format.unwrap_or(Format::Json) {
                Format::Table => table.render(),
                Format::Csv => table.to_csv(),
                Format::Json => {
                    let mut v = table.to_json_value(Some(common.field));
                    let s = table.summarize();
                    v["summary"] = json!({
                        "pdim": s.pdim,
                        "reg": s.reg_ring,
                        "depth": s.depth,
                        "linear": s.linear,
                        "pdim_ideal": s.pdim_ideal(),
                        "reg_ideal": s.reg_ideal(),
                    });
                    pretty(&v) + "\n"
                }
            };
            Ok((text, false))
        }
        Command::Genfun {
            graph,
            common,
            forest,
        } => {
            let g = load_graph(&graph)?;
            let poly = if forest {
                genfun_forest(&g)?
            } else {
                genfun_oracle(&g, common.field, &common.options())?
            };
            let text = match common.format.unwrap_or(Format::Json) {
                Format::Json => pretty(&poly.to_json_value()) + "\n",
                Format::Csv => {
                    let mut out = String::from("p,q,c\n");
                    for ((p, q), c) in poly.terms() {
                        out.push_str(&format!("{p},{q},{c}\n"));
                    }
                    out
                }
                Format::Table => format!("{poly}\n"),
            };
            Ok((text, false))
        }
        Command::Classify {
            input,
            checks,
            fields,
            shelling_cap,
        } => {
            let complex = load_complex(&input)?;
            let fields = fields
                .split(',')
                .map(str::parse)
                .collect::<Result<Vec<FieldSpec>>>()?;
            let report = audit_chain(&complex, &fields, shelling_cap);
            let full = serde_json::to_value(&report).expect("report serializes");
            let mut out = serde_json::Map::new();
            for check in checks.split(',').map(str::trim) {
                let key = match check {
                    "pure" => "pure",
                    "vd" => "vertex_decomposable",
                    "shellable" => "shellable",
                    "cm" => "cm",
                    "scm" => "sequentially_cm",
                    _ => return Err(Error::Input(format!("unknown check {check:?}"))),
                };
                out.insert(key.into(), full[key].clone());
            }
            out.insert("violations".into(), full["violations"].clone());
            let broken = !report.violations.is_empty();
            Ok((pretty(&Value::Object(out)) + "\n", broken))
        }
        Command::Bounds {
            graph,
            kind,
            common,
        } => {
            let g = load_graph(&graph)?;
            let report = verify_bound(&g, &parse_kind(&kind)?, common.field, &common.options())?;
            let v = serde_json::to_value(&report).expect("report serializes");
            Ok((pretty(&v) + "\n", report.holds == Some(false)))
        }
        Command::Verify {
            criterion,
            seed,
            max_cells,
            samples,
            corpus,
            common,
        } => {
            let cfg = VerifyConfig {
                seed,
                opts: common.options(),
            };
            let results = run_verify(criterion, &cfg, max_cells, samples, corpus.as_deref());
            let mut reports = Vec::new();
            for r in results {
                reports.push(r?);
            }
            let failed = reports.iter().any(|r| !r.passed());
            let text = match common.format.unwrap_or(Format::Table) {
                Format::Json => pretty(&json!(reports)) + "\n",
                _ => reports.iter().map(|r| format!("{r}\n")).collect(),
            };
            Ok((text, failed))
        }
        Command::Homology { input, common } => {
            let complex = load_complex(&input)?;
            let h = complex.reduced_homology(common.field);
            let text = match common.format.unwrap_or(Format::Json) {
                Format::Json => {
                    pretty(&json!({ "field": common.field, "reduced_homology": h })) + "\n"
                }
                Format::Csv => {
                    let mut out = String::from("degree,dim\n");
                    for (d, k) in h.nonzero() {
                        out.push_str(&format!("{d},{k}\n"));
                    }
                    out
                }
                Format::Table => {
                    let mut out = String::new();
                    for (d, k) in h.nonzero() {
                        out.push_str(&format!("H~_{d} = {k}\n"));
                    }
                    if out.is_empty() {
                        out.push_str("acyclic\n");
                    }
                    out
                }
            };
            Ok((text, false))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, finding)) => {
            print!("{text}");
            if finding {
                eprintln!("edgeideal: mismatch found; see report above");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("edgeideal: {e}");
            ExitCode::from(match e {
                Error::Input(_) | Error::Precondition(_) => 2,
                Error::CapExceeded { .. } => 3,
                Error::Invariant(_) => 1,
            })
        }
    }
}
