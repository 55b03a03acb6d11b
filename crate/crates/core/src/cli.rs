//! Command-line front end.
//!
//! Exit codes: 0 when every check passes or a query is answered, 1 when a
//! mathematical check fails, 2 on invalid input, 3 when a search hits its
//! node cap before finishing.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::artin_graph::{parse_vertex_list, ArtinGraph, BitVertex, DEFAULT_WITNESS_INDICES};
use crate::curves::cache::default_cache_path;
use crate::curves::{
    min_genus, surface_of, ArcConstraint, CurvePattern, InsertionOrder, PatternJson, SearchConfig,
    Verdict,
};
use crate::error::{Error, Result};
use crate::manifest::{Report, RunManifest};
use crate::milnor_lattice::{
    gram_matrix, quotient_lattice, radical, sublattice_rank, LatticeExport,
};
use crate::pipeline;
use crate::standard;
use crate::symplectic_rep::{
    chain_parity_check, conjugacy_witnesses, invariant_span_closure, quadratic_refinement,
    transvections, verify_all_relations, Sign,
};

#[derive(Parser, Debug)]
#[command(
    name = "artin-monodromy",
    version,
    about = "Artin graph, vanishing lattice and curve-configuration checks"
)]
pub struct Cli {
    /// Emit JSON (result plus run manifest) instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The graph on {0,1}^k.
    #[command(subcommand)]
    Gamma(GammaCmd),
    /// The vanishing-cycle lattice and its quotient.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// The transvection representation.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Chains and cycles in the graph.
    #[command(subcommand)]
    Chains(ChainsCmd),
    /// Curve patterns and their minimal genus.
    #[command(subcommand)]
    Realize(RealizeCmd),
    /// Run every check in order and print a scoreboard.
    VerifyPaper(SearchArgs),
}

#[derive(Args, Debug, Clone)]
struct KArg {
    #[arg(long, default_value_t = 4)]
    k: u8,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum GammaCmd {
    /// Write the graph as JSON or DOT
    Export {
        #[command(flatten)]
        k: KArg,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
    },
    /// Vertex, edge and degree counts
    Stats {
        #[command(flatten)]
        k: KArg,
    },
}

#[derive(Subcommand, Debug)]
enum LatticeCmd {
    /// Gram matrix of the pairing
    Gram(KArg),
    /// Basis of the radical
    Radical(KArg),
    /// Basis and Gram matrix of the quotient
    Quotient(KArg),
    /// Rank of the span of selected classes.
    Rank {
        #[command(flatten)]
        k: KArg,
        /// Comma-separated vertices, or `all` / `non-extremal`.
        #[arg(long, default_value = "non-extremal")]
        subset: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SignArg {
    Positive,
    Negative,
    Both,
}

impl SignArg {
    fn signs(self) -> Vec<Sign> {
        match self {
            SignArg::Positive => vec![Sign::Positive],
            SignArg::Negative => vec![Sign::Negative],
            SignArg::Both => Sign::BOTH.to_vec(),
        }
    }
}

#[derive(Args, Debug)]
struct SignOpt {
    #[arg(long, value_enum, default_value = "both")]
    sign: SignArg,
}

#[derive(Subcommand, Debug)]
enum RepCmd {
    /// Check every pair and triangle relation
    CheckRelations(SignOpt),
    /// Conjugating words between generators
    Witnesses(SignOpt),
    /// Quadratic refinement and its invariance
    Qform,
    /// Orbit closure of a single generator
    Irreducible {
        #[command(flatten)]
        sign: SignOpt,
        /// Seed vertices; every single vertex when omitted.
        #[arg(long)]
        seed: Option<String>,
    },
    /// Parity of the quadratic refinement
    Parity,
}

#[derive(Subcommand, Debug)]
enum ChainsCmd {
    /// Check that a sequence is an induced chain
    Verify {
        #[arg(long)]
        seq: String,
        /// Check an induced cycle instead of a path.
        #[arg(long)]
        cycle: bool,
    },
    /// List induced chains of a given length
    Enumerate {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        avoid_extremal: bool,
        #[command(flatten)]
        k: KArg,
    },
    /// Commuting-partner witnesses along a chain
    Witnesses {
        /// The chain; defaults to the Br8 chain.
        #[arg(long)]
        chain: Option<String>,
        /// 1-based chain positions to search.
        #[arg(long)]
        indices: Option<String>,
    },
}

#[derive(Args, Debug, Clone)]
struct PatternArg {
    /// Pattern JSON file, or one of the bundled names (chain7, cycle8, ten, twelve).
    #[arg(long)]
    pattern: String,
}

#[derive(Args, Debug, Clone, Default)]
struct SearchArgs {
    #[arg(long)]
    threads: Option<usize>,
    /// Cache file for finished branches; defaults under $ARTIN_MONODROMY_CACHE_DIR.
    #[arg(long)]
    cache: Option<PathBuf>,
    #[arg(long)]
    resume: bool,
    /// Give up (exit 3) after this many search nodes.
    #[arg(long)]
    node_cap: Option<u64>,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            threads: self.threads,
            node_cap: self.node_cap,
            cache: self.cache.clone().or_else(default_cache_path),
            resume: self.resume,
            ..SearchConfig::default()
        }
    }
}

#[derive(Args, Debug, Clone)]
struct GenusSearch {
    #[command(flatten)]
    pattern: PatternArg,
    #[command(flatten)]
    search: SearchArgs,
    /// Insertion order: `pattern`, `degree`, or a comma-separated label list.
    #[arg(long, default_value = "pattern")]
    order: String,
    /// Arc constraint `curve:from:to:member` (repeatable).
    #[arg(long = "arc")]
    arcs: Vec<String>,
    /// Write the witness structure here when one is found.
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum RealizeCmd {
    /// List every problem with a pattern file
    Validate(PatternArg),
    /// Per-component F2 lower bound on the genus
    Bound(PatternArg),
    /// Smallest genus carrying the pattern, up to a budget
    MinGenus {
        #[command(flatten)]
        args: GenusSearch,
        #[arg(long, default_value_t = 5)]
        budget: usize,
    },
    /// Is the pattern realizable on the given genus (exit 1 if not)
    Check {
        #[command(flatten)]
        args: GenusSearch,
        #[arg(long)]
        genus: usize,
    },
}

/// Parse `argv` (including the program name), run, and return the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_) | Error::Io(_) | Error::Json(_) => 2,
        Error::Inconclusive { .. } => 3,
        Error::DegenerateForm(_) | Error::ConstructionFailed(_) | Error::Overflow(_) => 1,
    }
}

struct Ctx<'a> {
    json: bool,
    out: &'a mut dyn Write,
    manifest: RunManifest,
    start: Instant,
}

impl Ctx<'_> {
    /// Print the result and return `code`.
    fn emit<T: Serialize>(&mut self, result: &T, text: &str, code: i32) -> Result<i32> {
        self.manifest.wall_time_ms = self.start.elapsed().as_millis();
        if self.json {
            let report = Report {
                manifest: self.manifest.clone(),
                result,
            };
            writeln!(self.out, "{}", serde_json::to_string_pretty(&report)?)?;
        } else {
            write!(self.out, "{text}")?;
            if !text.ends_with('\n') {
                writeln!(self.out)?;
            }
        }
        Ok(code)
    }
}

fn ok_code(ok: bool) -> i32 {
    if ok {
        0
    } else {
        1
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let mut ctx = Ctx {
        json: cli.json,
        out,
        manifest: RunManifest::new(""),
        start: Instant::now(),
    };
    match &cli.command {
        Command::Gamma(c) => gamma(c, &mut ctx),
        Command::Lattice(c) => lattice(c, &mut ctx),
        Command::Rep(c) => rep(c, &mut ctx),
        Command::Chains(c) => chains(c, &mut ctx),
        Command::Realize(c) => realize(c, &mut ctx),
        Command::VerifyPaper(s) => {
            ctx.manifest =
                RunManifest::new("verify-paper").param("threads", format!("{:?}", s.threads));
            for (name, body) in standard::BUNDLED {
                ctx.manifest.input(name, body.as_bytes());
            }
            let cfg = s.config();
            let board = pipeline::verify_all(&cfg)?;
            for r in &board.rows {
                ctx.manifest.verdict(format!("{:?}: {}", r.status, r.claim));
            }
            let code = board.exit_code();
            let text = board.render();
            ctx.emit(&board, &text, code)
        }
    }
}

fn gamma(c: &GammaCmd, ctx: &mut Ctx) -> Result<i32> {
    match c {
        GammaCmd::Export { k, format } => {
            ctx.manifest = RunManifest::new("gamma export").param("k", k.k);
            let g = ArtinGraph::build(k.k)?;
            match format {
                GraphFormat::Dot => {
                    write!(ctx.out, "{}", g.to_dot())?;
                    Ok(0)
                }
                GraphFormat::Json => {
                    let j = g.to_json();
                    let text = serde_json::to_string_pretty(&j)?;
                    ctx.emit(&j, &text, 0)
                }
            }
        }
        GammaCmd::Stats { k } => {
            ctx.manifest = RunManifest::new("gamma stats").param("k", k.k);
            let g = ArtinGraph::build(k.k)?;
            #[derive(Serialize)]
            struct Stats {
                k: u8,
                vertices: usize,
                edges: usize,
                triangles: usize,
                extremal: Vec<String>,
                degrees: Vec<usize>,
                connected: bool,
            }
            let s = Stats {
                k: k.k,
                vertices: g.len(),
                edges: g.edge_count(),
                triangles: g.triangles().len(),
                extremal: g
                    .extremal_vertices()
                    .iter()
                    .map(ToString::to_string)
                    .collect(),
                degrees: (0..g.len()).map(|i| g.degree(i)).collect(),
                connected: g.is_connected(),
            };
            let text = format!(
                "k = {}\nvertices {}\nedges {}\ntriangles {}\nextremal {}\nconnected {}\n",
                s.k,
                s.vertices,
                s.edges,
                s.triangles,
                s.extremal.join(", "),
                s.connected
            );
            ctx.emit(&s, &text, 0)
        }
    }
}

fn matrix_text(rows: &[Vec<i64>]) -> String {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| format!("{x:>3}"))
                .collect::<Vec<_>>()
                .join("")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn select_vertices(k: u8, spec: &str) -> Result<Vec<usize>> {
    let n = 1usize << k;
    Ok(match spec {
        "all" => (0..n).collect(),
        "non-extremal" => (1..n - 1).collect(),
        list => {
            let vs = parse_vertex_list(list)?;
            for v in &vs {
                if v.k() != k {
                    return Err(Error::InvalidInput(format!(
                        "vertex {v} has length {}, expected {k}",
                        v.k()
                    )));
                }
            }
            vs.iter().map(BitVertex::index).collect()
        }
    })
}

fn lattice(c: &LatticeCmd, ctx: &mut Ctx) -> Result<i32> {
    match c {
        LatticeCmd::Gram(k) => {
            ctx.manifest = RunManifest::new("lattice gram").param("k", k.k);
            let l = gram_matrix(k.k)?;
            let text = format!("{}\nrank {}\n", matrix_text(&l.gram.to_rows()), l.rank());
            ctx.emit(&l, &text, 0)
        }
        LatticeCmd::Radical(k) => {
            ctx.manifest = RunManifest::new("lattice radical").param("k", k.k);
            let rad = radical(&gram_matrix(k.k)?)?;
            let text = format!("radical rank {}\n{}\n", rad.len(), matrix_text(&rad));
            ctx.emit(&rad, &text, 0)
        }
        LatticeCmd::Quotient(k) => {
            ctx.manifest = RunManifest::new("lattice quotient").param("k", k.k);
            let e = LatticeExport::build(k.k)?;
            let text = format!(
                "quotient rank {}\ninduced form:\n{}\ndeterminant {}\nclasses:\n{}\n",
                e.induced_gram.rows(),
                matrix_text(&e.induced_gram.to_rows()),
                e.determinant,
                matrix_text(&e.class_map)
            );
            ctx.emit(&e, &text, 0)
        }
        LatticeCmd::Rank { k, subset } => {
            ctx.manifest = RunManifest::new("lattice rank")
                .param("k", k.k)
                .param("subset", subset);
            let q = quotient_lattice(&gram_matrix(k.k)?)?;
            let idx = select_vertices(k.k, subset)?;
            let r = sublattice_rank(&q, &idx)?;
            ctx.emit(&r, &format!("rank {r} (of {})", q.rank), 0)
        }
    }
}

fn rep(c: &RepCmd, ctx: &mut Ctx) -> Result<i32> {
    let g = ArtinGraph::build(4)?;
    let q = quotient_lattice(&gram_matrix(4)?)?;
    match c {
        RepCmd::CheckRelations(s) => {
            ctx.manifest =
                RunManifest::new("rep check-relations").param("sign", format!("{:?}", s.sign));
            let reports = s
                .sign
                .signs()
                .into_iter()
                .map(|sign| verify_all_relations(&q, &g, sign))
                .collect::<Result<Vec<_>>>()?;
            let mut text = String::new();
            for r in &reports {
                text.push_str(&format!(
                    "{:?}: {} pairs ({} braid, {} commuting), {} triangles, {} failures\n",
                    r.sign,
                    r.pairs_checked,
                    r.braid_pairs,
                    r.commuting_pairs,
                    r.triangles_checked,
                    r.failures.len()
                ));
                for f in &r.failures {
                    let vs: Vec<String> = f.vertices.iter().map(ToString::to_string).collect();
                    text.push_str(&format!("  {} fails on {}\n", f.relation, vs.join(" ")));
                }
            }
            let ok = reports.iter().all(|r| r.ok());
            ctx.emit(&reports, &text, ok_code(ok))
        }
        RepCmd::Witnesses(s) => {
            ctx.manifest = RunManifest::new("rep witnesses").param("sign", format!("{:?}", s.sign));
            let mut all = Vec::new();
            let mut text = String::new();
            for sign in s.sign.signs() {
                let w = conjugacy_witnesses(&q, &g, sign)?;
                text.push_str(&format!("{sign:?}:\n"));
                for x in &w {
                    let word: Vec<String> = x.word.iter().map(ToString::to_string).collect();
                    text.push_str(&format!(
                        "  {} [{}] {}\n",
                        x.vertex,
                        word.join(" "),
                        if x.verified { "ok" } else { "FAILED" }
                    ));
                }
                all.push((sign, w));
            }
            let ok = all.iter().all(|(_, w)| w.iter().all(|x| x.verified));
            ctx.emit(&all, &text, ok_code(ok))
        }
        RepCmd::Qform => {
            ctx.manifest = RunManifest::new("rep qform");
            let qr = quadratic_refinement(&q)?;
            let mut invariant = Vec::new();
            for sign in Sign::BOTH {
                let ts = transvections(&q, &g, sign)?;
                invariant.push(ts.iter().all(|t| qr.invariant_under(t)));
            }
            let on_classes = q.class_map.iter().all(|c| qr.value_of(c) == 1);
            let ok = on_classes && qr.satisfies_identity(&q) && invariant.iter().all(|&b| b);
            let ones = qr.values.iter().filter(|&&v| v == 1).count();
            let text = format!(
                "quadratic refinement on {} vectors ({ones} with value 1)\nq(a_v) = 1 for all classes: {on_classes}\ninvariant (+, -): {invariant:?}\n",
                qr.values.len()
            );
            ctx.emit(&qr, &text, ok_code(ok))
        }
        RepCmd::Irreducible { sign, seed } => {
            ctx.manifest = RunManifest::new("rep irreducible").param("seed", format!("{seed:?}"));
            let seeds: Vec<Vec<BitVertex>> = match seed {
                Some(s) => vec![parse_vertex_list(s)?],
                None => g.vertices().iter().map(|v| vec![*v]).collect(),
            };
            #[derive(Serialize)]
            struct Closure {
                sign: Sign,
                seed: Vec<BitVertex>,
                dimension: usize,
            }
            let mut rows = Vec::new();
            for sg in sign.sign.signs() {
                for s in &seeds {
                    let classes = s
                        .iter()
                        .map(|v| q.class_of(v).map(<[i64]>::to_vec))
                        .collect::<Result<Vec<_>>>()?;
                    rows.push(Closure {
                        sign: sg,
                        seed: s.clone(),
                        dimension: invariant_span_closure(&q, &g, &classes, sg)?,
                    });
                }
            }
            let text = rows
                .iter()
                .map(|r| {
                    let s: Vec<String> = r.seed.iter().map(ToString::to_string).collect();
                    format!("{:?} {{{}}} -> {}", r.sign, s.join(","), r.dimension)
                })
                .collect::<Vec<_>>()
                .join("\n");
            let ok = rows.iter().all(|r| r.dimension == q.rank);
            ctx.emit(&rows, &text, ok_code(ok))
        }
        RepCmd::Parity => {
            ctx.manifest = RunManifest::new("rep parity");
            let p = chain_parity_check(&q)?;
            let text = format!(
                "a_0001+a_0100+a_0010+a_1000 nonzero: {}\n<a_0111, sum> mod 2: {}\n<a_0111, a_1010>: {}\n",
                p.nonzero, p.parity, p.support_pairing
            );
            ctx.emit(&p, &text, ok_code(p.nonzero && p.parity == 1))
        }
    }
}

fn chains(c: &ChainsCmd, ctx: &mut Ctx) -> Result<i32> {
    match c {
        ChainsCmd::Verify { seq, cycle } => {
            ctx.manifest = RunManifest::new("chains verify")
                .param("seq", seq)
                .param("cycle", cycle);
            let vs = parse_vertex_list(seq)?;
            let k = vs
                .first()
                .map(BitVertex::k)
                .ok_or_else(|| Error::InvalidInput("empty sequence".into()))?;
            let g = ArtinGraph::build(k)?;
            if *cycle {
                let ok = g.verify_induced_cycle(&vs)?;
                #[derive(Serialize)]
                struct CycleResult {
                    is_induced_cycle: bool,
                }
                ctx.emit(
                    &CycleResult {
                        is_induced_cycle: ok,
                    },
                    &format!("is_induced_cycle={ok}"),
                    ok_code(ok),
                )
            } else {
                let r = g.verify_chain(&vs)?;
                let mut text = format!("is_chain={}\n", r.is_chain);
                for v in &r.violations {
                    text.push_str(&format!(
                        "  {:?} between positions {} and {}\n",
                        v.reason, v.i, v.j
                    ));
                }
                let code = ok_code(r.is_chain);
                ctx.emit(&r, &text, code)
            }
        }
        ChainsCmd::Enumerate {
            length,
            avoid_extremal,
            k,
        } => {
            ctx.manifest = RunManifest::new("chains enumerate")
                .param("length", length)
                .param("k", k.k);
            let g = ArtinGraph::build(k.k)?;
            let paths = g.enumerate_induced_paths(*length, *avoid_extremal);
            let mut text = format!("{} induced paths of length {length}\n", paths.len());
            for p in paths.iter().take(50) {
                text.push_str(
                    &p.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" "),
                );
                text.push('\n');
            }
            if paths.len() > 50 {
                text.push_str("...\n");
            }
            ctx.emit(&paths, &text, 0)
        }
        ChainsCmd::Witnesses { chain, indices } => {
            ctx.manifest = RunManifest::new("chains witnesses");
            let chain = match chain {
                Some(s) => parse_vertex_list(s)?,
                None => standard::braid_chain(),
            };
            let idx: Vec<usize> = match indices {
                Some(s) => s
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse()
                            .map_err(|_| Error::InvalidInput(format!("bad index {t:?}")))
                    })
                    .collect::<Result<_>>()?,
                None => DEFAULT_WITNESS_INDICES.to_vec(),
            };
            let k = chain
                .first()
                .map(BitVertex::k)
                .ok_or_else(|| Error::InvalidInput("empty chain".into()))?;
            let g = ArtinGraph::build(k)?;
            #[derive(Serialize)]
            struct W {
                vertex: BitVertex,
                extremal: bool,
                witness: Option<usize>,
            }
            let rows = g
                .vertices()
                .iter()
                .map(|v| {
                    Ok(W {
                        vertex: *v,
                        extremal: g.is_extremal(v)?,
                        witness: g.commuting_partner_witness_in(&chain, v, &idx)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let text = rows
                .iter()
                .map(|w| {
                    let wit = w
                        .witness
                        .map_or("none".to_string(), |i| format!("{i} ({})", chain[i - 1]));
                    format!(
                        "{}{} -> {wit}",
                        w.vertex,
                        if w.extremal { " (extremal)" } else { "" }
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            let ok = rows.iter().all(|w| w.extremal == w.witness.is_none());
            ctx.emit(&rows, &text, ok_code(ok))
        }
    }
}

/// Read a pattern file, falling back to the bundled patterns by name.
fn load_pattern_json(arg: &str) -> Result<(PatternJson, Vec<u8>)> {
    let path = Path::new(arg);
    let bytes = if path.exists() {
        fs::read(path)?
    } else {
        let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or(arg);
        match standard::BUNDLED.iter().find(|(n, _)| *n == name) {
            Some((_, body)) => body.as_bytes().to_vec(),
            None => {
                return Err(Error::InvalidInput(format!(
                    "no pattern file or bundled pattern named {arg:?}"
                )))
            }
        }
    };
    Ok((serde_json::from_slice(&bytes)?, bytes))
}

fn load_pattern(arg: &str, manifest: &mut RunManifest) -> Result<CurvePattern> {
    let (json, bytes) = load_pattern_json(arg)?;
    manifest.input("pattern", &bytes);
    CurvePattern::from_json(&json)
}

fn parse_order(s: &str) -> InsertionOrder {
    match s {
        "pattern" => InsertionOrder::Pattern,
        "degree" => InsertionOrder::DegreeDescending,
        list => InsertionOrder::Labels(list.split(',').map(|t| t.trim().to_string()).collect()),
    }
}

fn parse_arc(s: &str) -> Result<ArcConstraint> {
    match s.split(':').collect::<Vec<_>>().as_slice() {
        [c, f, t, m] => Ok(ArcConstraint::new(c, f, t, m)),
        _ => Err(Error::InvalidInput(format!(
            "arc constraint {s:?} is not curve:from:to:member"
        ))),
    }
}

#[derive(Serialize)]
struct GenusOutcome {
    verdict: Verdict,
    nodes_explored: u64,
    exhausted: bool,
    f2_lower_bound: usize,
    boundary_components: Option<usize>,
    witness: Option<crate::curves::WitnessJson>,
}

fn genus_search(
    args: &GenusSearch,
    budget: usize,
    ctx: &mut Ctx,
    command: &str,
) -> Result<(GenusOutcome, String)> {
    ctx.manifest = RunManifest::new(command)
        .param("budget", budget)
        .param("order", &args.order)
        .param("arcs", args.arcs.join(" "));
    let p = load_pattern(&args.pattern.pattern, &mut ctx.manifest)?;
    let cfg = SearchConfig {
        order: parse_order(&args.order),
        constraints: args
            .arcs
            .iter()
            .map(|a| parse_arc(a))
            .collect::<Result<_>>()?,
        ..args.search.config()
    };
    let r = min_genus(&p, budget, &cfg)?;
    let witness = r.witness().map(|w| w.to_json(&p));
    let boundary_components = match r.witness() {
        Some(w) => Some(surface_of(&p, w)?.boundary_count()),
        None => None,
    };
    if let (Some(path), Some(w)) = (&args.witness_out, &witness) {
        fs::write(path, serde_json::to_string_pretty(w)?)?;
    }
    let verdict_text = match &r.verdict {
        Verdict::Exact { genus, .. } => format!("Exact({genus})"),
        Verdict::Exceeds { budget } => format!("Exceeds({budget})"),
    };
    ctx.manifest.verdict(verdict_text.clone());
    let text = format!(
        "{verdict_text}\nnodes explored {}\nexhausted {}\nF2 lower bound {}\n",
        r.nodes_explored,
        r.exhausted,
        p.f2_genus_lower_bound()
    );
    Ok((
        GenusOutcome {
            verdict: r.verdict,
            nodes_explored: r.nodes_explored,
            exhausted: r.exhausted,
            f2_lower_bound: p.f2_genus_lower_bound(),
            boundary_components,
            witness,
        },
        text,
    ))
}

fn realize(c: &RealizeCmd, ctx: &mut Ctx) -> Result<i32> {
    match c {
        RealizeCmd::Validate(a) => {
            ctx.manifest = RunManifest::new("realize validate");
            let (json, bytes) = load_pattern_json(&a.pattern)?;
            ctx.manifest.input("pattern", &bytes);
            let raw = CurvePattern::from_json_unchecked(&json)?;
            let issues = raw.validate().err().unwrap_or_default();
            let text = if issues.is_empty() {
                format!(
                    "ok: {} curves, {} crossings",
                    raw.len(),
                    raw.crossing_count()
                )
            } else {
                issues
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            let code = if issues.is_empty() { 0 } else { 2 };
            ctx.emit(&issues, &text, code)
        }
        RealizeCmd::Bound(a) => {
            ctx.manifest = RunManifest::new("realize bound");
            let p = load_pattern(&a.pattern, &mut ctx.manifest)?;
            let b = p.f2_genus_lower_bound();
            ctx.emit(&b, &format!("F2 genus lower bound {b}"), 0)
        }
        RealizeCmd::MinGenus { args, budget } => {
            let (o, text) = genus_search(args, *budget, ctx, "realize min-genus")?;
            ctx.emit(&o, &text, 0)
        }
        RealizeCmd::Check { args, genus } => {
            let (o, text) = genus_search(args, *genus, ctx, "realize check")?;
            let realizable = matches!(o.verdict, Verdict::Exact { .. });
            let text = format!("realizable on genus {genus}: {realizable}\n{text}");
            ctx.emit(&o, &text, ok_code(realizable))
        }
    }
}
