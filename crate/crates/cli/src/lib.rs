//! The `mmpkit` command line. [`run`] is the whole program short of the
//! process exit, so tests can drive it in-process.
//!
//! Exit codes: 0 decided, 1 input or usage error, 2 indeterminate (a
//! search budget ran out before an answer).

use std::fs;
use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use mmpkit::canon::is_isomorphic;
use mmpkit::catalog;
use mmpkit::codec::{mmph_to_json, parse_coordinatization, parse_document, parse_mmph_json, serialize_coordinatization, serialize_mmph};
use mmpkit::coloring::{classify_with, decide, Convention, Decision};
use mmpkit::containment::{is_subhypergraph_with_budget, Containment};
use mmpkit::generate::{master_with, verify_coordinatization, ComponentSet, EdgeMode, GenerateOptions};
use mmpkit::layout::layout3d;
use mmpkit::structure::{is_critical, partial_extension_search, reduce_trials, search_small_contextual, strong_extend, weak_extend, SubsetQuery};
use mmpkit::{Coordinatization, Mmph, Symbol};

#[derive(Parser, Debug)]
#[command(name = "mmpkit", version, about = "Contextual sets as MMP hypergraphs")]
struct Cli {
    /// Worker threads (results do not depend on it).
    #[arg(long, global = true, env = "MMPKIT_THREADS")]
    threads: Option<usize>,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Drop wall-clock fields from JSON so runs compare byte for byte.
    #[arg(long, global = true)]
    no_timings: bool,
    #[arg(long, global = true, value_enum, default_value = "standard")]
    convention: ConventionArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConventionArg {
    Standard,
    Cabello,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExtendMode {
    Weak,
    Strong,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EdgesArg {
    Bases,
    Maximal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExportFormat {
    Json,
    Dot,
    Layout3d,
}

#[derive(Args, Debug)]
struct Input {
    /// File path, `-` for stdin, `catalog:NAME`, or `gen:COMPONENTS@DIM[:maximal]`.
    input: String,
    /// Coordinatization file overriding any in the input.
    #[arg(long)]
    coords: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate and echo a hypergraph.
    Parse(Input),
    /// k, l, n, size and multiplicity histograms, complete bases.
    Stats(Input),
    /// Decide contextuality and classify.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Decide criticality.
    Critical(Input),
    /// Remove every multiplicity-1 vertex.
    Strip {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: Option<String>,
    },
    /// Weak deletion of vertices (comma-separated symbols).
    Delete {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        vertex: Vec<String>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Weak or strong extension using the coordinatization.
    Extend {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "weak")]
        mode: ExtendMode,
        /// Leave this many deficient hyperedges unextended and report every choice.
        #[arg(long)]
        keep_deficient: Option<usize>,
        /// Most choices to try before sampling.
        #[arg(long, default_value_t = 10_000)]
        limit: usize,
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        coords_out: Option<String>,
    },
    /// Master hypergraph from vector components.
    Generate {
        #[arg(long, allow_hyphen_values = true)]
        components: String,
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value = "bases")]
        edges: EdgesArg,
        /// Keep every connected component, not only the largest.
        #[arg(long)]
        all_components: bool,
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        coords_out: Option<String>,
    },
    /// Seeded reductions to critical sets; trial i uses seed + i.
    Reduce {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        trials: u64,
    },
    /// Budgeted search for small contextual sub-hypergraphs.
    Search {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long)]
        max_l: Option<usize>,
        #[arg(long)]
        max_bases: Option<usize>,
        #[arg(long)]
        min_bases: Option<usize>,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        max_results: usize,
        #[arg(long)]
        no_vertex_deletions: bool,
        /// Accept hits whose largest hyperedge is smaller than the host's.
        #[arg(long)]
        any_dimension: bool,
    },
    /// Does PATTERN embed in TARGET?
    Contains {
        pattern: String,
        target: String,
        #[arg(long, default_value_t = mmpkit::containment::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Isomorphism test with a witness.
    Iso { a: String, b: String },
    /// Check a coordinatization against its hypergraph.
    VerifyCoord(Input),
    /// Built-in instances.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// JSON, Graphviz, or a 3D layout (JSON plus OBJ).
    Export {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "json")]
        format: ExportFormat,
        #[arg(long)]
        out: Option<String>,
        /// OBJ output path for `layout3d`.
        #[arg(long)]
        obj: Option<String>,
        #[arg(long, default_value_t = 300)]
        iterations: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Show {
        name: String,
        #[arg(long)]
        coords: bool,
    },
}

struct Outcome {
    report: Value,
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(report: Value, text: String) -> Outcome {
        Outcome { report, text, code: 0 }
    }
}

type CliResult<T> = Result<T, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Runs one invocation; `args[0]` is the program name.
pub fn run<I, S>(args: I, out: &mut dyn Write, errout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(errout, "{e}") };
            return code;
        }
    };
    let threads = cli.threads.unwrap_or(0);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(errout, "error: {e}");
            return 1;
        }
    };
    match pool.install(|| dispatch(&cli)) {
        Ok(o) => {
            let printed = if cli.json {
                let mut report = o.report;
                if cli.no_timings {
                    strip_timings(&mut report);
                }
                writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable"))
            } else {
                write!(out, "{}", o.text)
            };
            if printed.is_err() {
                return 1;
            }
            o.code
        }
        Err(message) => {
            let _ = writeln!(errout, "error: {message}");
            1
        }
    }
}

fn strip_timings(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("millis");
            map.values_mut().for_each(strip_timings);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timings),
        _ => {}
    }
}

struct Loaded {
    mmph: Mmph,
    coords: Option<Coordinatization>,
}

fn read_source(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

fn load(src: &str) -> CliResult<Loaded> {
    if let Some(name) = src.strip_prefix("catalog:") {
        let e = catalog::get(name).map_err(err)?;
        return Ok(Loaded { mmph: e.mmph, coords: e.coords });
    }
    if let Some(spec) = src.strip_prefix("gen:") {
        let (components, rest) = spec.rsplit_once('@').ok_or("expected gen:COMPONENTS@DIM[:maximal]")?;
        let (dim, mode) = match rest.split_once(':') {
            Some((d, "maximal")) => (d, EdgeMode::AllMaximalCliques),
            Some((d, "bases")) => (d, EdgeMode::BasesOnly),
            Some((_, other)) => return Err(format!("unknown edge mode `{other}`")),
            None => (rest, EdgeMode::BasesOnly),
        };
        let dim: usize = dim.parse().map_err(|_| format!("bad dimension `{dim}`"))?;
        let s: ComponentSet = components.parse().map_err(err)?;
        let m = master_with(&s, dim, &GenerateOptions { mode, ..GenerateOptions::default() }).map_err(err)?;
        return Ok(Loaded { mmph: m.mmph, coords: Some(m.coords) });
    }
    let text = read_source(src)?;
    if text.trim_start().starts_with('{') {
        return Ok(Loaded { mmph: parse_mmph_json(&text).map_err(err)?, coords: None });
    }
    let (mmph, coords) = parse_document(&text).map_err(err)?;
    Ok(Loaded { mmph, coords })
}

fn load_input(input: &Input) -> CliResult<Loaded> {
    let mut l = load(&input.input)?;
    if let Some(path) = &input.coords {
        let (c, _) = parse_coordinatization(&read_source(path)?, &l.mmph).map_err(err)?;
        l.coords = Some(c);
    }
    Ok(l)
}

fn need_coords(l: &Loaded) -> CliResult<&Coordinatization> {
    l.coords.as_ref().ok_or_else(|| "no coordinatization; pass --coords".to_string())
}

/// MMP text, or `None` when a vertex symbol lies outside the alphabet.
fn mmp(h: &Mmph) -> Option<String> {
    serialize_mmph(h).ok()
}

/// Portable rendering: MMP text when possible, JSON otherwise.
fn render(h: &Mmph) -> String {
    match mmp(h) {
        Some(s) => s,
        None => serde_json::to_string(&mmph_to_json(h)).expect("serializable"),
    }
}

fn describe(h: &Mmph) -> Value {
    let mut v = json!({
        "k": h.k(),
        "l": h.l(),
        "n": h.n(),
        "complete_bases": h.complete_bases(),
        "mmp": mmp(h),
    });
    if mmp(h).is_none() {
        v["note"] = json!("more vertices than the MMP alphabet; see `edges`");
        v["edges"] = mmph_to_json(h)["edges"].clone();
    }
    v
}

fn symbols(list: impl IntoIterator<Item = Symbol>) -> Vec<String> {
    list.into_iter().map(|s| s.to_string()).collect()
}

fn write_file(path: &Option<String>, content: &str) -> CliResult<()> {
    if let Some(p) = path {
        let mut body = content.to_string();
        if !body.ends_with('\n') {
            body.push('\n');
        }
        fs::write(p, body).map_err(|e| format!("{p}: {e}"))?;
    }
    Ok(())
}

fn convention(c: ConventionArg) -> Convention {
    match c {
        ConventionArg::Standard => Convention::Standard,
        ConventionArg::Cabello => Convention::Cabello,
    }
}

fn dispatch(cli: &Cli) -> CliResult<Outcome> {
    let conv = convention(cli.convention);
    match &cli.command {
        Command::Parse(input) => {
            let l = load_input(input)?;
            let mut text = render(&l.mmph) + "\n";
            if let Some(c) = &l.coords {
                text += &serialize_coordinatization(c).map_err(err)?;
            }
            Ok(Outcome::ok(describe(&l.mmph), text))
        }
        Command::Stats(input) => {
            let l = load_input(input)?;
            let s = l.mmph.stats();
            let text = format!(
                "k {}\nl {}\nn {}\ncomplete bases {}\nhyperedge sizes {:?}\nmultiplicities {:?}\n",
                s.k, s.l, s.n, s.complete_bases, s.kappa_histogram, s.multiplicity_histogram
            );
            Ok(Outcome::ok(serde_json::to_value(&s).map_err(err)?, text))
        }
        Command::Check { input, budget } => {
            let l = load_input(input)?;
            let h = &l.mmph;
            let r = decide(h, budget.unwrap_or(u64::MAX));
            let (contextual, witness) = match &r.decision {
                Decision::Assignment(a) => (Some(false), Some(symbols(a.ones.iter().map(|&v| h.symbol(v))))),
                Decision::Contextual => (Some(true), None),
                Decision::Undecided => (None, None),
            };
            let class = contextual.map(|c| classify_with(h, c));
            let report = json!({
                "k": h.k(),
                "l": h.l(),
                "n": h.n(),
                "contextual": contextual,
                "classification": class.map(|c| c.name(conv)),
                "alias": class.map(|c| c.alias(conv)),
                "witness": witness,
                "nodes": r.nodes,
                "millis": r.millis,
            });
            let text = match (contextual, class) {
                (Some(c), Some(class)) => format!(
                    "{}-{} contextual={} classification={} ({})\n",
                    h.k(),
                    h.l(),
                    c,
                    class.name(conv),
                    class.alias(conv)
                ),
                _ => format!("{}-{} undecided after {} nodes\n", h.k(), h.l(), r.nodes),
            };
            Ok(Outcome { report, text, code: if contextual.is_some() { 0 } else { 2 } })
        }
        Command::Critical(input) => {
            let l = load_input(input)?;
            let h = &l.mmph;
            let contextual = !matches!(decide(h, u64::MAX).decision, Decision::Assignment(_));
            let critical = contextual && is_critical(h);
            let report = json!({ "k": h.k(), "l": h.l(), "contextual": contextual, "critical": critical });
            Ok(Outcome::ok(report, format!("{}-{} contextual={contextual} critical={critical}\n", h.k(), h.l())))
        }
        Command::Strip { input, out } => {
            let l = load_input(input)?;
            let s = l.mmph.strip_mult1().map_err(err)?;
            write_file(out, &render(&s.mmph))?;
            let report = json!({
                "result": describe(&s.mmph),
                "removed": symbols(s.removed.iter().copied()),
                "dropped": s.dropped,
            });
            let mut text = render(&s.mmph) + "\n";
            for d in &s.dropped {
                text += &format!("# dropped hyperedge {}: {}\n", d.index, d.reason);
            }
            Ok(Outcome::ok(report, text))
        }
        Command::Delete { input, vertex, out } => {
            let l = load_input(input)?;
            let h = &l.mmph;
            let mut doomed = Vec::new();
            for name in vertex {
                let mut chars = name.chars();
                let sym = match (chars.next(), chars.next()) {
                    (Some(c), None) => Symbol::from_char(c),
                    _ => None,
                };
                let v = sym.and_then(|s| h.vertex_of(s)).ok_or_else(|| format!("unknown vertex `{name}`"))?;
                doomed.push(v);
            }
            let g = h.delete_vertices(&doomed).map_err(err)?;
            write_file(out, &render(&g))?;
            Ok(Outcome::ok(json!({ "result": describe(&g), "deleted": vertex }), render(&g) + "\n"))
        }
        Command::Extend { input, mode, keep_deficient, limit, out, coords_out } => {
            let l = load_input(input)?;
            let c = need_coords(&l)?;
            if let Some(keep) = keep_deficient {
                let choices = partial_extension_search(&l.mmph, c, *keep, cli.seed, *limit).map_err(err)?;
                let mut text = String::new();
                let rows: Vec<Value> = choices
                    .iter()
                    .map(|p| {
                        let kept: Vec<String> = p.kept.iter().map(|i| edge_name(&l.mmph, *i)).collect();
                        text += &format!(
                            "kept [{}] {}-{} bases={} contextual={}\n",
                            kept.join(" "),
                            p.k,
                            p.l,
                            p.complete_bases,
                            p.contextual
                        );
                        json!({
                            "kept": p.kept,
                            "kept_edges": kept,
                            "k": p.k,
                            "l": p.l,
                            "complete_bases": p.complete_bases,
                            "contextual": p.contextual,
                        })
                    })
                    .collect();
                let report = json!({ "seed": cli.seed, "keep_deficient": keep, "choices": rows });
                return Ok(Outcome::ok(report, text));
            }
            let ext = match mode {
                ExtendMode::Weak => weak_extend(&l.mmph, c),
                ExtendMode::Strong => strong_extend(&l.mmph, c),
            }
            .map_err(err)?;
            let coords_text = serialize_coordinatization(&ext.coords).map_err(err)?;
            write_file(out, &render(&ext.mmph))?;
            write_file(coords_out, &coords_text)?;
            let report = json!({
                "result": describe(&ext.mmph),
                "added": ext.added,
                "skipped": ext.skipped,
                "merged": ext.merged.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>(),
                "dropped_duplicates": ext.dropped_duplicates,
            });
            let mut text = render(&ext.mmph) + "\n" + &coords_text;
            for i in &ext.skipped {
                text += &format!("# hyperedge {i} is too small for a unique completion; left as is\n");
            }
            for i in &ext.dropped_duplicates {
                text += &format!("# hyperedge {i} duplicated another after merging; dropped\n");
            }
            Ok(Outcome::ok(report, text))
        }
        Command::Generate { components, dim, edges, all_components, out, coords_out } => {
            let s: ComponentSet = components.parse().map_err(err)?;
            let mode = match edges {
                EdgesArg::Bases => EdgeMode::BasesOnly,
                EdgesArg::Maximal => EdgeMode::AllMaximalCliques,
            };
            let opts = GenerateOptions { mode, keep_all_components: *all_components, ..GenerateOptions::default() };
            let m = master_with(&s, *dim, &opts).map_err(err)?;
            let coords_text = serialize_coordinatization(&m.coords).ok();
            write_file(out, &render(&m.mmph))?;
            if let Some(t) = &coords_text {
                write_file(coords_out, t)?;
            } else if coords_out.is_some() {
                return Err("coordinatization needs more symbols than the MMP alphabet".into());
            }
            let report = json!({
                "components": s.to_string(),
                "dim": dim,
                "mode": mode,
                "result": describe(&m.mmph),
                "report": m.report,
            });
            let text = format!(
                "{}-{} from {} rays ({} bases, {} maximal cliques, {} components)\n{}\n",
                m.mmph.k(),
                m.mmph.l(),
                m.report.rays,
                m.report.bases,
                m.report.maximal_cliques,
                m.report.components.len(),
                render(&m.mmph)
            );
            Ok(Outcome::ok(report, text))
        }
        Command::Reduce { input, trials } => {
            let l = load_input(input)?;
            let seeds: Vec<u64> = (0..*trials).map(|i| cli.seed.wrapping_add(i)).collect();
            let traces = reduce_trials(&l.mmph, &seeds).map_err(err)?;
            let mut text = format!("seed {}\n", cli.seed);
            let rows: Vec<Value> = traces
                .iter()
                .map(|t| {
                    text += &format!("seed {}: {}-{} {}\n", t.seed, t.stats.k, t.stats.l, render(&t.mmph));
                    json!({ "seed": t.seed, "removed": t.removed, "result": describe(&t.mmph) })
                })
                .collect();
            Ok(Outcome::ok(json!({ "seed": cli.seed, "trials": rows }), text))
        }
        Command::Search { input, max_k, max_l, max_bases, min_bases, budget, max_results, no_vertex_deletions, any_dimension } => {
            let l = load_input(input)?;
            let q = SubsetQuery {
                max_k: *max_k,
                max_l: *max_l,
                max_complete_bases: *max_bases,
                min_complete_bases: *min_bases,
                contextual: true,
                same_dimension: !any_dimension,
                vertex_deletions: !no_vertex_deletions,
                budget: *budget,
                seed: cli.seed,
                max_results: *max_results,
            };
            let o = search_small_contextual(&l.mmph, &q);
            let mut text = format!("seed {} nodes {} hits {}\n", cli.seed, o.nodes, o.hits.len());
            let hits: Vec<Value> = o
                .hits
                .iter()
                .map(|h| {
                    text += &format!(
                        "{}-{} bases={} critical={} {}\n",
                        h.stats.k,
                        h.stats.l,
                        h.stats.complete_bases,
                        h.critical,
                        render(&h.mmph)
                    );
                    json!({ "result": describe(&h.mmph), "critical": h.critical, "certificate": h.certificate })
                })
                .collect();
            let code = if o.hits.is_empty() && o.exhausted { 2 } else { 0 };
            let report = json!({ "seed": cli.seed, "query": q, "nodes": o.nodes, "exhausted": o.exhausted, "hits": hits });
            Ok(Outcome { report, text, code })
        }
        Command::Contains { pattern, target, budget } => {
            let p = load(pattern)?.mmph;
            let t = load(target)?.mmph;
            let c = is_subhypergraph_with_budget(&p, &t, *budget);
            let (verdict, mapping, code) = match &c {
                Containment::Embedded { mapping } => {
                    let pairs: Map<String, Value> = mapping
                        .iter()
                        .enumerate()
                        .map(|(v, &x)| (p.symbol(v as u32).to_string(), json!(t.symbol(x).to_string())))
                        .collect();
                    (json!(true), Some(pairs), 0)
                }
                Containment::NotContained => (json!(false), None, 0),
                Containment::Indeterminate { .. } => (json!("indeterminate"), None, 2),
            };
            let text = match &mapping {
                Some(m) => format!(
                    "contained\n{}\n",
                    m.iter().map(|(a, b)| format!("{a}->{}", b.as_str().unwrap())).collect::<Vec<_>>().join(" ")
                ),
                None => format!("{}\n", if code == 2 { "indeterminate" } else { "not contained" }),
            };
            Ok(Outcome { report: json!({ "contained": verdict, "mapping": mapping }), text, code })
        }
        Command::Iso { a, b } => {
            let ha = load(a)?.mmph;
            let hb = load(b)?.mmph;
            let w = is_isomorphic(&ha, &hb).map_err(err)?;
            let mapping = w.as_ref().map(|m| {
                m.iter()
                    .enumerate()
                    .map(|(v, &x)| (ha.symbol(v as u32).to_string(), json!(hb.symbol(x).to_string())))
                    .collect::<Map<String, Value>>()
            });
            let text = format!("isomorphic={}\n", w.is_some());
            Ok(Outcome::ok(json!({ "isomorphic": w.is_some(), "mapping": mapping }), text))
        }
        Command::VerifyCoord(input) => {
            let l = load_input(input)?;
            let c = need_coords(&l)?;
            let r = verify_coordinatization(&l.mmph, c);
            let mut text = format!(
                "{}/{} hyperedges orthogonal, {}/{} distinct rays, {} violations\n",
                r.orthogonal_edges,
                r.edges,
                r.distinct_rays,
                r.vertices,
                r.violations.len()
            );
            for v in &r.violations {
                text += &format!("{v}\n");
            }
            let code = if r.passed() { 0 } else { 1 };
            let mut report = serde_json::to_value(&r).map_err(err)?;
            report["passed"] = json!(r.passed());
            Ok(Outcome { report, text, code })
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let mut text = String::new();
                let mut rows = Vec::new();
                for name in catalog::names() {
                    let e = catalog::get(name).map_err(err)?;
                    text += &format!("{name}\t{}-{}\t{}\n", e.mmph.k(), e.mmph.l(), provenance_text(&e.provenance));
                    rows.push(json!({ "name": name, "k": e.mmph.k(), "l": e.mmph.l(), "provenance": e.provenance, "note": e.note }));
                }
                Ok(Outcome::ok(Value::Array(rows), text))
            }
            CatalogAction::Show { name, coords } => {
                let e = catalog::get(name).map_err(err)?;
                let mut text = render(&e.mmph) + "\n";
                let mut report = json!({ "name": e.name, "result": describe(&e.mmph), "provenance": e.provenance, "note": e.note });
                if *coords {
                    if let Some(c) = &e.coords {
                        let t = serialize_coordinatization(c).map_err(err)?;
                        report["coords"] = json!(t);
                        text += &t;
                    }
                }
                if let Some(n) = e.note {
                    text += &format!("# {n}\n");
                }
                Ok(Outcome::ok(report, text))
            }
        },
        Command::Export { input, format, out, obj, iterations } => {
            let l = load_input(input)?;
            let h = &l.mmph;
            let (report, body) = match format {
                ExportFormat::Json => {
                    let v = mmph_to_json(h);
                    let body = serde_json::to_string_pretty(&v).map_err(err)?;
                    (v, body)
                }
                ExportFormat::Dot => {
                    let body = to_dot(h);
                    (json!({ "dot": body }), body)
                }
                ExportFormat::Layout3d => {
                    let lay = layout3d(h, cli.seed, *iterations);
                    write_file(obj, &lay.to_obj())?;
                    let mut v = serde_json::to_value(&lay).map_err(err)?;
                    v["seed"] = json!(cli.seed);
                    let body = serde_json::to_string_pretty(&v).map_err(err)?;
                    (v, body)
                }
            };
            write_file(out, &body)?;
            Ok(Outcome::ok(report, body + "\n"))
        }
    }
}

fn edge_name(h: &Mmph, i: usize) -> String {
    h.edge(i).iter().map(|&v| h.symbol(v).to_string()).collect()
}

fn provenance_text(p: &catalog::Provenance) -> String {
    match p {
        catalog::Provenance::Embedded { source } => format!("embedded: {source}"),
        catalog::Provenance::Derived { recipe } => format!("derived: {recipe}"),
    }
}

/// Bipartite vertex/hyperedge incidence graph in Graphviz syntax.
fn to_dot(h: &Mmph) -> String {
    let mut s = String::from("graph mmph {\n  node [shape=circle];\n");
    for v in h.vertices() {
        s += &format!("  v{v} [label=\"{}\"];\n", h.symbol(v).to_string().replace('"', "\\\""));
    }
    for (i, e) in h.edges().iter().enumerate() {
        s += &format!("  e{i} [shape=box, label=\"{}\"];\n", e.len());
        for v in e {
            s += &format!("  v{v} -- e{i};\n");
        }
    }
    s += "}\n";
    s
}
