//! `msk`: Morse-Smale graphs on the sphere, their moves, persistence,
//! nesting posets, and barcode realization.
//!
//! Exit codes: 0 success, 1 domain rejection (reason on stderr),
//! 2 malformed input or usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use msk_core::BarMatch;
use msk_core::error::Error;
use msk_core::moves::{self, ConnectOptions};
use msk_core::persistence::{self, ValueMatch};
use msk_core::realize;
use msk_core::slices;
use msk_core::{dot, io, Barcode64, DecoratedMsGraph64, EmbeddingHistory64, MsGraph};

#[derive(Parser)]
#[command(name = "msk", version, about = "Combinatorial Morse theory on the sphere")]
struct Cli {
    /// Emit machine-readable JSON where applicable.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress informational output; results only.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Morse-Smale invariants of a graph file.
    Validate { graph: PathBuf },
    /// Fundamental moves: enumeration, application, search.
    Moves {
        #[command(subcommand)]
        cmd: MovesCmd,
    },
    /// Persistence of decorated graphs.
    Persist {
        #[command(subcommand)]
        cmd: PersistCmd,
    },
    /// Nesting forests and posets of embedding histories.
    Slices {
        #[command(subcommand)]
        cmd: SlicesCmd,
    },
    /// Equivalence deciders.
    Equiv {
        #[command(subcommand)]
        cmd: EquivCmd,
    },
    /// Counting embedding classes of a barcode.
    Count {
        #[command(subcommand)]
        cmd: CountCmd,
    },
    /// Constructions realizing a barcode.
    Realize {
        #[command(subcommand)]
        cmd: RealizeCmd,
    },
    /// DOT rendering of graphs, Reeb graphs, merge trees, Hasse diagrams.
    Render {
        #[command(subcommand)]
        cmd: RenderCmd,
    },
}

#[derive(Subcommand)]
enum MovesCmd {
    /// List every applicable move instance.
    Enum { graph: PathBuf },
    /// Apply one move (JSON instance) and print the resulting graph file.
    Apply {
        graph: PathBuf,
        /// Move instance, e.g. '{"kind":"face_max","site":{"face":0}}'.
        #[arg(long = "move")]
        instance: String,
    },
    /// Search for a move sequence connecting two graphs.
    Connect {
        from: PathBuf,
        to: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_depth: usize,
        /// Cap on intermediate critical-point counts.
        #[arg(long)]
        max_vertices: Option<usize>,
    },
    /// Canonical codes reachable by addition moves.
    Explore {
        graph: PathBuf,
        #[arg(long)]
        n_max: usize,
    },
}

#[derive(Subcommand)]
enum PersistCmd {
    /// Sublevel barcode by boundary reduction.
    Barcode { graph: PathBuf },
    /// Contour tree of the decorated graph.
    Reeb { graph: PathBuf },
    /// Join tree of sublevel connectivity.
    MergeTree { graph: PathBuf },
}

#[derive(Subcommand)]
enum SlicesCmd {
    /// Nesting poset at a regular value.
    Poset {
        history: PathBuf,
        #[arg(long)]
        at: f64,
        /// Emit the Hasse diagram as DOT.
        #[arg(long)]
        dot: bool,
    },
    /// The zigzag of nesting posets over a slicing.
    Zigzag {
        history: PathBuf,
        /// Comma-separated slicing values; defaults to the canonical slicing.
        #[arg(long)]
        slicing: Option<String>,
    },
    /// Level-set barcode of a history.
    Barcode { history: PathBuf },
}

#[derive(Subcommand)]
enum EquivCmd {
    /// Graph equivalence of two decorated graphs.
    Graph {
        a: PathBuf,
        b: PathBuf,
        /// Compare value ranks instead of exact values.
        #[arg(long)]
        rank: bool,
    },
    /// Homological equivalence (equal Betti profiles).
    Homological { a: PathBuf, b: PathBuf },
    /// Poset equivalence of two histories.
    Poset { a: PathBuf, b: PathBuf },
}

#[derive(Args)]
struct CountArgs {
    barcode: PathBuf,
}

#[derive(Subcommand)]
enum CountCmd {
    /// The counting bound 2^(N-1) * prod mu.
    LowerBound { barcode: PathBuf },
    /// Enumerate embedding classes realizing the barcode.
    Enumerate {
        barcode: PathBuf,
        /// Compare endpoint types strictly in the round-trip check.
        #[arg(long)]
        strict_endpoints: bool,
        /// Cap on the number of bars (default 8; MSK_MAX_BARS overrides).
        #[arg(long)]
        max_bars: Option<usize>,
    },
}

#[derive(Subcommand)]
enum RealizeCmd {
    /// Reeb graph realizing a barcode.
    Reeb { barcode: PathBuf },
    /// Default all-non-nesting history realizing a barcode.
    History { barcode: PathBuf },
}

#[derive(Subcommand)]
enum RenderCmd {
    /// A graph file as DOT (solid = saddle-max, dashed = saddle-min).
    Graph { graph: PathBuf },
    /// The contour tree of a decorated graph as DOT.
    Reeb { graph: PathBuf },
    /// The merge tree of a decorated graph as DOT.
    MergeTree { graph: PathBuf },
    /// The Hasse diagram of a history's poset at a regular value.
    Hasse {
        history: PathBuf,
        #[arg(long)]
        at: f64,
    },
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::malformed(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &PathBuf) -> Result<(MsGraph, Option<Vec<f64>>), Error> {
    io::parse_graph(&read(path)?)
}

fn load_decorated(path: &PathBuf) -> Result<DecoratedMsGraph64, Error> {
    io::parse_decorated_graph(&read(path)?)
}

fn load_barcode(path: &PathBuf) -> Result<Barcode64, Error> {
    io::parse_barcode(&read(path)?)
}

fn load_history(path: &PathBuf) -> Result<EmbeddingHistory64, Error> {
    io::parse_history(&read(path)?)
}

fn require_valid(g: &MsGraph) -> Result<(), Error> {
    let report = g.validate();
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::rejected(report.to_string()))
    }
}

fn print_barcode(b: &Barcode64, json: bool) {
    if json {
        println!("{}", io::barcode_to_json(b));
    } else {
        for bar in &b.bars {
            println!("{bar}");
        }
    }
}

fn reeb_json(r: &msk_core::ReebGraph64) -> serde_json::Value {
    serde_json::json!({
        "nodes": r.nodes.iter().map(|n| serde_json::json!({"id": n.label, "height": n.height})).collect::<Vec<_>>(),
        "edges": r.edges,
    })
}

fn merge_tree_json(t: &msk_core::MergeTree64) -> serde_json::Value {
    serde_json::json!({
        "nodes": t.nodes.iter().map(|n| serde_json::json!({
            "id": n.label, "height": n.height, "parent": n.parent,
        })).collect::<Vec<_>>(),
        "root": t.root,
    })
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Validate { graph } => {
            let (g, _) = load_graph(&graph)?;
            let report = g.validate();
            if report.is_valid() {
                println!("valid");
                Ok(())
            } else {
                println!("{report}");
                Err(Error::rejected(report.to_string()))
            }
        }
        Command::Moves { cmd } => run_moves(cmd, cli.json),
        Command::Persist { cmd } => run_persist(cmd, cli.json),
        Command::Slices { cmd } => run_slices(cmd, cli.json),
        Command::Equiv { cmd } => run_equiv(cmd),
        Command::Count { cmd } => run_count(cmd, cli.json, cli.quiet),
        Command::Realize { cmd } => run_realize(cmd, cli.json),
        Command::Render { cmd } => run_render(cmd),
    }
}

fn run_moves(cmd: MovesCmd, json: bool) -> Result<(), Error> {
    match cmd {
        MovesCmd::Enum { graph } => {
            let (g, _) = load_graph(&graph)?;
            let moves = moves::enumerate_moves(&g)?;
            if json {
                println!("{}", serde_json::to_string(&moves).expect("serializable"));
            } else {
                for m in &moves {
                    println!("{}", serde_json::to_string(m).expect("serializable"));
                }
            }
            Ok(())
        }
        MovesCmd::Apply { graph, instance } => {
            let (g, _) = load_graph(&graph)?;
            let m = io::parse_move(&instance)?;
            let out = moves::apply_move(&g, &m)?;
            println!("{}", io::graph_to_json(&out, None));
            Ok(())
        }
        MovesCmd::Connect { from, to, max_depth, max_vertices } => {
            let (g, _) = load_graph(&from)?;
            let (h, _) = load_graph(&to)?;
            let options = ConnectOptions { max_vertices };
            match moves::connect(&g, &h, max_depth, options)? {
                Some(seq) => {
                    if json {
                        println!("{}", serde_json::to_string(&seq).expect("serializable"));
                    } else {
                        println!("connected in {} moves", seq.len());
                        for m in &seq {
                            println!("{}", serde_json::to_string(m).expect("serializable"));
                        }
                    }
                    Ok(())
                }
                None => Err(Error::rejected(format!("no sequence within depth {max_depth}"))),
            }
        }
        MovesCmd::Explore { graph, n_max } => {
            let (g, _) = load_graph(&graph)?;
            let codes = moves::reachable_codes(&g, n_max)?;
            if json {
                let list: Vec<String> = codes.iter().map(|c| c.to_string()).collect();
                println!("{}", serde_json::to_string(&list).expect("serializable"));
            } else {
                println!("{} reachable codes", codes.len());
                for c in &codes {
                    println!("{c}");
                }
            }
            Ok(())
        }
    }
}

fn run_persist(cmd: PersistCmd, json: bool) -> Result<(), Error> {
    match cmd {
        PersistCmd::Barcode { graph } => {
            let dg = load_decorated(&graph)?;
            require_valid(dg.graph())?;
            print_barcode(&persistence::sublevel_barcode(&dg), json);
            Ok(())
        }
        PersistCmd::Reeb { graph } => {
            let dg = load_decorated(&graph)?;
            require_valid(dg.graph())?;
            let r = persistence::reeb_graph(&dg);
            if json {
                println!("{}", reeb_json(&r));
            } else {
                for (a, b) in &r.edges {
                    println!(
                        "{} @ {} -- {} @ {}",
                        r.nodes[*a].label, r.nodes[*a].height, r.nodes[*b].label, r.nodes[*b].height
                    );
                }
            }
            Ok(())
        }
        PersistCmd::MergeTree { graph } => {
            let dg = load_decorated(&graph)?;
            require_valid(dg.graph())?;
            let t = persistence::merge_tree(&dg);
            if json {
                println!("{}", merge_tree_json(&t));
            } else {
                for (i, n) in t.nodes.iter().enumerate() {
                    match n.parent {
                        Some(p) => println!("{} @ {} -> {} @ {}", n.label, n.height, t.nodes[p].label, t.nodes[p].height),
                        None => println!("{} @ {} (root)", n.label, n.height),
                    }
                    let _ = i;
                }
            }
            Ok(())
        }
    }
}

fn run_slices(cmd: SlicesCmd, json: bool) -> Result<(), Error> {
    match cmd {
        SlicesCmd::Poset { history, at, dot: emit_dot } => {
            let h = load_history(&history)?;
            let poset = h.poset_at(at)?;
            if emit_dot {
                print!("{}", dot::hasse_dot(&poset));
            } else if json {
                let elems: Vec<String> = poset.elements.iter().map(|e| e.to_string()).collect();
                println!(
                    "{}",
                    serde_json::json!({"elements": elems, "parent": poset.parent, "code": poset.ahu_code()})
                );
            } else {
                println!("{}", poset.ahu_code());
            }
            Ok(())
        }
        SlicesCmd::Zigzag { history, slicing } => {
            let h = load_history(&history)?;
            let slicing: Vec<f64> = match slicing {
                Some(s) => s
                    .split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<f64>()
                            .map_err(|e| Error::malformed(format!("slicing value {x:?}: {e}")))
                    })
                    .collect::<Result<_, _>>()?,
                None => slices::canonical_slicing(&h),
            };
            let zz = slices::zigzag(&h, &slicing)?;
            if json {
                let nodes: Vec<serde_json::Value> = zz
                    .nodes
                    .iter()
                    .map(|n| {
                        let at = match &n.position {
                            slices::NodePosition::Slice(v) => serde_json::json!({"slice": v}),
                            slices::NodePosition::Critical(v, i) => {
                                serde_json::json!({"critical": v, "event": i})
                            }
                        };
                        serde_json::json!({"at": at, "poset": n.poset.ahu_code()})
                    })
                    .collect();
                let arrows: Vec<serde_json::Value> = zz
                    .arrows
                    .iter()
                    .map(|a| {
                        serde_json::json!({
                            "from": a.from, "to": a.to,
                            "injective": a.shape.injective,
                            "surjective": a.shape.surjective,
                            "iso": a.shape.iso,
                            "map": a.map.iter().map(|(x, y)| vec![x.to_string(), y.to_string()]).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                println!("{}", serde_json::json!({"nodes": nodes, "arrows": arrows}));
            } else {
                for a in &zz.arrows {
                    let tag = if a.shape.iso {
                        "iso"
                    } else if a.shape.injective {
                        "injective"
                    } else {
                        "surjective"
                    };
                    println!("N{} -> N{} ({tag})", a.from, a.to);
                }
            }
            Ok(())
        }
        SlicesCmd::Barcode { history } => {
            let h = load_history(&history)?;
            print_barcode(&slices::levelset_barcode(&h), json);
            Ok(())
        }
    }
}

fn run_equiv(cmd: EquivCmd) -> Result<(), Error> {
    match cmd {
        EquivCmd::Graph { a, b, rank } => {
            let da = load_decorated(&a)?;
            let db = load_decorated(&b)?;
            require_valid(da.graph())?;
            require_valid(db.graph())?;
            let mode = if rank { ValueMatch::Rank } else { ValueMatch::Exact };
            if persistence::graph_equivalent(&da, &db, mode) {
                println!("graph-equivalent");
            } else {
                println!("not graph-equivalent");
            }
            Ok(())
        }
        EquivCmd::Homological { a, b } => {
            let da = load_decorated(&a)?;
            let db = load_decorated(&b)?;
            require_valid(da.graph())?;
            require_valid(db.graph())?;
            if persistence::homologically_equivalent(&da, &db) {
                println!("homologically-equivalent");
            } else {
                println!("not homologically-equivalent");
            }
            Ok(())
        }
        EquivCmd::Poset { a, b } => {
            let ha = load_history(&a)?;
            let hb = load_history(&b)?;
            if slices::poset_equivalent(&ha, &hb) {
                println!("poset-equivalent");
            } else {
                println!("not poset-equivalent");
            }
            Ok(())
        }
    }
}

fn max_bars_cap(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var("MSK_MAX_BARS").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(8)
}

fn run_count(cmd: CountCmd, json: bool, quiet: bool) -> Result<(), Error> {
    match cmd {
        CountCmd::LowerBound { barcode } => {
            let b = load_barcode(&barcode)?;
            println!("{}", realize::lower_bound(&b)?);
            Ok(())
        }
        CountCmd::Enumerate { barcode, strict_endpoints, max_bars } => {
            let b = load_barcode(&barcode)?;
            let mode = if strict_endpoints { BarMatch::Strict } else { BarMatch::TypeInsensitive };
            let classes = realize::enumerate_embeddings(&b, mode, max_bars_cap(max_bars))?;
            let bound = realize::lower_bound(&b)?;
            if json {
                let histories: Vec<serde_json::Value> =
                    classes.iter().map(io::history_to_json).collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "count": classes.len(),
                        "lower_bound": bound.to_string(),
                        "bound_respected": classes.len() as u128 >= bound,
                        "classes": histories,
                    })
                );
            } else {
                println!("count {} (bound {bound})", classes.len());
                if !quiet {
                    for h in &classes {
                        println!("{}", io::history_to_json(h));
                    }
                }
            }
            Ok(())
        }
    }
}

fn run_realize(cmd: RealizeCmd, json: bool) -> Result<(), Error> {
    match cmd {
        RealizeCmd::Reeb { barcode } => {
            let b = load_barcode(&barcode)?;
            let r = realize::reeb_from_barcode(&b)?;
            if json {
                println!("{}", reeb_json(&r));
            } else {
                print!("{}", dot::reeb_dot(&r));
            }
            Ok(())
        }
        RealizeCmd::History { barcode } => {
            let b = load_barcode(&barcode)?;
            let h = realize::history_from_reeb(&realize::reeb_from_barcode(&b)?)?;
            println!("{}", io::history_to_json(&h));
            Ok(())
        }
    }
}

fn run_render(cmd: RenderCmd) -> Result<(), Error> {
    match cmd {
        RenderCmd::Graph { graph } => {
            let (g, values) = load_graph(&graph)?;
            print!("{}", dot::graph_dot(&g, values.as_deref()));
            Ok(())
        }
        RenderCmd::Reeb { graph } => {
            let dg = load_decorated(&graph)?;
            require_valid(dg.graph())?;
            print!("{}", dot::reeb_dot(&persistence::reeb_graph(&dg)));
            Ok(())
        }
        RenderCmd::MergeTree { graph } => {
            let dg = load_decorated(&graph)?;
            require_valid(dg.graph())?;
            print!("{}", dot::merge_tree_dot(&persistence::merge_tree(&dg)));
            Ok(())
        }
        RenderCmd::Hasse { history, at } => {
            let h = load_history(&history)?;
            print!("{}", dot::hasse_dot(&h.poset_at(at)?));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    // Die quietly on closed pipes instead of panicking mid-print.
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::Rejected(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Error::Malformed(msg)) => {
            eprintln!("error: malformed input: {msg}");
            ExitCode::from(2)
        }
    }
}
