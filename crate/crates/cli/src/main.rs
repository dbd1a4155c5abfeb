//! `tensum`: command-line front end for tensor 2-sums of graphs.
//!
//! Exit codes: 0 for success or an affirmative verdict, 1 for a negative
//! verdict, 2 for usage or input errors.

use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tensum::census::{census, census_stats, CensusEntry};
use tensum::certificate::GraphRecord;
use tensum::formats::{edge_list_encode, graph6_encode, parse_graph, GraphFormat};
use tensum::membership::certify_labeled;
use tensum::recognition::DESK_SCALE_ORDER;
use tensum::t2::{pair_matrix, t2_min_over_labelings, t2_of};
use tensum::{
    build_ppt_graph, partial_transpose, recognize_with, t2_bruteforce_oracle, tensor_elementary, tensor_product,
    two_sum, verify_components, BlockMatrix, Certificate, Error, Graph, GridLabeling, GridShape, RecognizeOptions,
};

const LABELING_NOTE: &str = "Labeled commands place vertex v in grid cell (v div q, v mod q).";

#[derive(Parser)]
#[command(name = "tensum", version, about = "Tensor 2-sums of graphs", after_help = LABELING_NOTE)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input graph format.
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,

    /// Output mode.
    #[arg(long, short, global = true, value_enum, default_value_t = Output::Human)]
    output: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    Graph6,
    Edges,
    Matrix,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Json,
    Graph6,
    Matrix,
}

#[derive(Args)]
struct Shape {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
}

impl Shape {
    fn get(&self) -> tensum::Result<GridShape> {
        GridShape::new(self.p, self.q)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Tensor product of two graphs.
    Product { a: String, b: String },
    /// 2-sum (symmetric difference of edge sets) of two graphs of equal order.
    Xor { a: String, b: String },
    /// The tensor-elementary graph E(i,i′;j,j′) on the p×q grid.
    Elementary {
        p: usize,
        q: usize,
        i: usize,
        i2: usize,
        j: usize,
        j2: usize,
    },
    /// Membership in K(p,q) under the row-major labeling.
    Member {
        #[command(flatten)]
        shape: Shape,
        graph: String,
        /// Recheck the certificate from its JSON form.
        #[arg(long)]
        verify: bool,
    },
    /// Membership in K(p,q) under some labeling.
    Recognize {
        #[command(flatten)]
        shape: Shape,
        graph: String,
        /// Allow searches with p·q above the desk-scale limit.
        #[arg(long)]
        allow_large: bool,
        /// Skip the necessary-condition prefilter and search exhaustively.
        #[arg(long)]
        no_prefilter: bool,
        #[arg(long)]
        verify: bool,
    },
    /// Elementary summands of a member under the row-major labeling.
    Decompose {
        #[command(flatten)]
        shape: Shape,
        graph: String,
        #[arg(long)]
        verify: bool,
    },
    /// Minimal number of tensor-product summands under the row-major labeling.
    T2 {
        #[command(flatten)]
        shape: Shape,
        graph: String,
        /// Also run the brute-force search.
        #[arg(long)]
        oracle: bool,
        /// Summand limit for the brute-force search.
        #[arg(long, default_value_t = 4)]
        max_l: usize,
        /// Also minimise over all labelings that make the graph a member.
        #[arg(long)]
        min_over_labelings: bool,
    },
    /// Whether the adjacency matrix equals its partial transpose with p blocks per side.
    PptCheck {
        #[arg(long)]
        p: usize,
        graph: String,
        /// Print the matrix and its partial transpose.
        #[arg(long)]
        dump: bool,
    },
    /// PPT member of K(n,n) whose components are those of G plus K₂'s and K₁'s.
    BuildPpt { graph: String },
    /// All spanning cross-like graphs at (p,q), in pair-bit order.
    Census {
        #[command(flatten)]
        shape: Shape,
        /// Summary instead of the full listing.
        #[arg(long)]
        stats: bool,
        /// Allow up to 2^30 graphs.
        #[arg(long)]
        allow_large: bool,
    },
    /// Recheck a JSON certificate.
    Verify { certificate: String },
}

/// Outcome of a command: affirmative or negative, or a failure to run.
type Outcome = Result<bool, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn read_source(arg: &str) -> Result<String, String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))
    } else {
        Ok(arg.to_string())
    }
}

fn read_graph(cli: &Cli, arg: &str) -> Result<Graph, String> {
    let format = match cli.format {
        InputFormat::Auto => GraphFormat::Auto,
        InputFormat::Graph6 => GraphFormat::Graph6,
        InputFormat::Edges => GraphFormat::EdgeList,
        InputFormat::Matrix => GraphFormat::Matrix,
    };
    parse_graph(&read_source(arg)?, format).map_err(|e| format!("{arg}: {e}"))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Product { a, b } => {
            let (a, b) = (read_graph(cli, a)?, read_graph(cli, b)?);
            emit_graph(cli, &tensor_product(&a, &b))
        }
        Command::Xor { a, b } => {
            let (a, b) = (read_graph(cli, a)?, read_graph(cli, b)?);
            emit_graph(cli, &two_sum(&a, &b).map_err(err)?)
        }
        Command::Elementary { p, q, i, i2, j, j2 } => {
            emit_graph(cli, &tensor_elementary(*p, *q, *i, *i2, *j, *j2).map_err(err)?)
        }
        Command::Member { shape, graph, verify } => {
            let shape = shape.get().map_err(err)?;
            let k = read_graph(cli, graph)?;
            let cert = certify_labeled(&k, &GridLabeling::identity(shape)).map_err(err)?;
            emit_certificate(cli, &cert, *verify)
        }
        Command::Recognize {
            shape,
            graph,
            allow_large,
            no_prefilter,
            verify,
        } => {
            let shape = shape.get().map_err(err)?;
            if shape.vertex_count() > DESK_SCALE_ORDER && !allow_large {
                return Err(format!(
                    "p·q = {} exceeds {DESK_SCALE_ORDER}; pass --allow-large to search anyway",
                    shape.vertex_count()
                ));
            }
            let k = read_graph(cli, graph)?;
            let opts = RecognizeOptions {
                prefilter: !no_prefilter,
                ..RecognizeOptions::default()
            };
            let cert = recognize_with(&k, shape, opts).map_err(err)?;
            emit_certificate(cli, &cert, *verify)
        }
        Command::Decompose { shape, graph, verify } => {
            let shape = shape.get().map_err(err)?;
            let k = read_graph(cli, graph)?;
            let cert = certify_labeled(&k, &GridLabeling::identity(shape)).map_err(err)?;
            if cli.output == Output::Human {
                if let Some(summands) = &cert.summands {
                    println!("{} elementary summands", summands.len());
                    for e in summands {
                        println!("E({},{};{},{})", e.i, e.i2, e.j, e.j2);
                    }
                    if *verify {
                        check_certificate(&cert)?;
                    }
                    return Ok(true);
                }
            }
            emit_certificate(cli, &cert, *verify)
        }
        Command::T2 {
            shape,
            graph,
            oracle,
            max_l,
            min_over_labelings,
        } => {
            let shape = shape.get().map_err(err)?;
            let k = read_graph(cli, graph)?;
            let pairs = match pair_matrix(&k, shape) {
                Ok(m) => m,
                Err(Error::NotMember) => {
                    report_not_member(cli, shape);
                    return Ok(false);
                }
                Err(e) => return Err(err(e)),
            };
            let value = t2_of(&pairs);
            let oracle_value = if *oracle {
                Some(t2_bruteforce_oracle(&k, shape, *max_l).map_err(err)?)
            } else {
                None
            };
            let min_value = if *min_over_labelings {
                t2_min_over_labelings(&k, shape).map_err(err)?
            } else {
                None
            };
            if cli.output == Output::Json {
                let mut out = json!({ "shape": shape, "t2": value });
                if let Some(o) = oracle_value {
                    out["oracle"] = json!(o);
                }
                if *min_over_labelings {
                    out["min_over_labelings"] = json!(min_value);
                }
                println!("{}", serde_json::to_string_pretty(&out).expect("json"));
            } else {
                println!("t2 = {value}");
                match oracle_value {
                    Some(Some(o)) => println!("oracle = {o}"),
                    Some(None) => println!("oracle: no representation with at most {max_l} summands"),
                    None => {}
                }
                if let Some(m) = min_value {
                    println!("min over labelings = {m}");
                }
            }
            Ok(true)
        }
        Command::PptCheck { p, graph, dump } => {
            let k = read_graph(cli, graph)?;
            let m = BlockMatrix::from_graph(&k, *p).map_err(err)?;
            let holds = tensum::ppt_test(&k, *p).map_err(err)?;
            if cli.output == Output::Json {
                let mut out = json!({ "p": p, "ppt": holds });
                if *dump {
                    out["matrix"] = json!(m.to_text().lines().collect::<Vec<_>>());
                    out["partial_transpose"] = json!(partial_transpose(&m).to_text().lines().collect::<Vec<_>>());
                }
                println!("{}", serde_json::to_string_pretty(&out).expect("json"));
            } else {
                if *dump {
                    print!("matrix:\n{}partial transpose:\n{}", m.to_text(), partial_transpose(&m).to_text());
                }
                println!("{}", if holds { "ppt: holds" } else { "ppt: fails" });
            }
            Ok(holds)
        }
        Command::BuildPpt { graph } => {
            let g = read_graph(cli, graph)?;
            let (h, _) = build_ppt_graph(&g).map_err(err)?;
            let ok = verify_components(&h, &g);
            if cli.output == Output::Human {
                let (n, m) = (g.vertex_count(), g.edge_count());
                println!(
                    "# K({n},{n}) member; components: G + {m} K2 + {} K1 ({})",
                    n * n - n - 2 * m,
                    if ok { "verified" } else { "MISMATCH" }
                );
            }
            emit_graph(cli, &h)?;
            Ok(ok)
        }
        Command::Census {
            shape,
            stats,
            allow_large,
        } => {
            let shape = shape.get().map_err(err)?;
            if *stats {
                let s = census_stats(shape, *allow_large).map_err(err)?;
                if cli.output == Output::Json {
                    println!("{}", serde_json::to_string_pretty(&s).expect("json"));
                } else {
                    println!("shape {shape}: {} graphs", s.count);
                    println!("edge bound {}: attained by {}", s.edge_bound, s.bound_attained);
                    let hist = |h: &std::collections::BTreeMap<usize, u64>| {
                        h.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ")
                    };
                    println!("edges {}", hist(&s.edge_histogram));
                    println!("t2 {}", hist(&s.t2_histogram));
                }
                return Ok(true);
            }
            let entries = census(shape, *allow_large).map_err(err)?;
            match cli.output {
                Output::Json => {
                    let list: Vec<_> = entries.iter().map(entry_json).collect();
                    println!("{}", serde_json::to_string_pretty(&list).expect("json"));
                }
                Output::Graph6 => {
                    for e in &entries {
                        println!("{}", graph6_encode(&e.graph).map_err(err)?);
                    }
                }
                _ => {
                    println!("# index bits edges t2 bound graph6");
                    for e in &entries {
                        println!(
                            "{} {} {} {} {} {}",
                            e.index,
                            bit_string(e),
                            e.edges,
                            e.t2,
                            if e.attains_bound { "max" } else { "-" },
                            graph6_encode(&e.graph).map_err(err)?
                        );
                    }
                }
            }
            Ok(true)
        }
        Command::Verify { certificate } => {
            let cert = Certificate::from_json(&read_source(certificate)?).map_err(err)?;
            match cert.verify() {
                Ok(()) => {
                    println!("certificate valid ({})", if cert.is_member() { "member" } else { "non-member" });
                    Ok(true)
                }
                Err(e) => {
                    println!("certificate invalid: {e}");
                    Ok(false)
                }
            }
        }
    }
}

fn bit_string(e: &CensusEntry) -> String {
    let bits = e.pairs.bits();
    (0..bits.rows())
        .flat_map(|r| (0..bits.cols()).map(move |c| if bits.get(r, c) { '1' } else { '0' }))
        .collect()
}

fn entry_json(e: &CensusEntry) -> serde_json::Value {
    json!({
        "index": e.index,
        "bits": bit_string(e),
        "edges": e.edges,
        "t2": e.t2,
        "attains_bound": e.attains_bound,
        "graph6": graph6_encode(&e.graph).ok(),
    })
}

fn report_not_member(cli: &Cli, shape: GridShape) {
    if cli.output == Output::Json {
        println!("{}", json!({ "shape": shape, "member": false }));
    } else {
        println!("not a member of K{shape} under the row-major labeling");
    }
}

fn emit_graph(cli: &Cli, g: &Graph) -> Outcome {
    match cli.output {
        Output::Human => print!("{}", edge_list_encode(g)),
        Output::Json => println!("{}", serde_json::to_string(&GraphRecord::from(g)).expect("json")),
        Output::Graph6 => println!("{}", graph6_encode(g).map_err(err)?),
        Output::Matrix => print!("{}", g.to_matrix_string()),
    }
    Ok(true)
}

/// Recheck from the serialized form, as a consumer of the JSON would.
fn check_certificate(cert: &Certificate) -> Result<(), String> {
    let parsed = Certificate::from_json(&cert.to_json()).map_err(err)?;
    parsed.verify().map_err(|e| format!("certificate failed verification: {e}"))
}

fn emit_certificate(cli: &Cli, cert: &Certificate, verify: bool) -> Outcome {
    if cli.output == Output::Json {
        println!("{}", cert.to_json());
    } else if cert.is_member() {
        println!("member of K{}", cert.shape);
        if let Some(cells) = &cert.labeling {
            let cells: Vec<String> = cells.iter().map(|(r, c)| format!("({r},{c})")).collect();
            println!("labeling {}", cells.join(" "));
        }
        if let Some(summands) = &cert.summands {
            println!("{} elementary summands", summands.len());
        }
        for flag in &cert.flags {
            println!("flag {flag}");
        }
    } else {
        let witness = cert.witness.as_ref().expect("non-member certificates carry a witness");
        match witness.edge {
            Some((u, v)) => println!("not a member of K{}: {} at edge {u}-{v}", cert.shape, witness.reason.tag()),
            None => println!("not a member of K{}: {}", cert.shape, witness.reason.tag()),
        }
    }
    if verify {
        check_certificate(cert)?;
        if cli.output == Output::Human {
            println!("certificate verified");
        }
    }
    Ok(cert.is_member())
}
