//! `nil` — closed neighborhood ideals of graphs at the command line.
//!
//! Subcommands: `invariants` (graph + ideal summary), `betti` (graded
//! Betti table with an optional independent-oracle cross-check),
//! `verify` (named exhaustive suites with JSON reports), `gen` (graph
//! family and enumeration output), `census` (regularity-vs-matching
//! data over small graph classes).
//!
//! Environment: `NIL_DEFAULT_P` picks the field characteristic when
//! `--p` is absent; `NIL_CACHE_DIR` enables the Betti result cache.
//!
//! Exit codes: 0 success, 1 suite failures or oracle disagreement,
//! 2 usage, parse, or guard errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nil_core::betti::{
    betti_table_hochster_guarded, betti_table_taylor_guarded, BettiTable,
};
use nil_core::cache::{betti_cache_key, Cache};
use nil_core::domination::clique_cover_number_with_guard;
use nil_core::enumerate;
use nil_core::graph::{parse_edge_list, to_edge_list_string, FamilySpec, Graph};
use nil_core::guards;
use nil_core::matching::matching_number;
use nil_core::monomial::{closed_neighborhood_ideal, edge_ideal, path_ideal, MonomialIdeal};
use nil_core::verify::{self, census};

#[derive(Parser)]
#[command(
    name = "nil",
    version,
    about = "Closed neighborhood ideals: Betti tables, regularity, projective dimension, verification suites"
)]
struct Cli {
    /// Worker threads for the homology subset loop (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Pretty,
    Json,
    Csv,
}

#[derive(Args)]
struct GuardOverrides {
    /// Raise the vertex/variable guards (may be slow)
    #[arg(long)]
    max_n: Option<usize>,
    /// Raise the Taylor generator guard (may be slow)
    #[arg(long)]
    max_gens: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Graph and ideal invariants for a family spec or edge-list file
    Invariants {
        /// Family spec like "cycle:5", "whiskered(path:3)", or a file path
        input: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Field characteristic (default: NIL_DEFAULT_P or 2)
        #[arg(long)]
        p: Option<u32>,
        #[command(flatten)]
        guards: GuardOverrides,
    },
    /// Graded Betti table of an ideal attached to a graph
    Betti {
        input: String,
        /// Ideal kind: ni | edge | path:<t>
        #[arg(long, default_value = "ni")]
        ideal: String,
        #[arg(long)]
        p: Option<u32>,
        /// Also run the Taylor-complex oracle and require equality
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Cache mode (default: use when a cache dir is configured)
        #[arg(long, value_enum)]
        cache: Option<CacheMode>,
        /// Cache directory (default: NIL_CACHE_DIR)
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        #[command(flatten)]
        guards: GuardOverrides,
    },
    /// Run a named verification suite and write a JSON report
    Verify {
        /// One of: forest-equality, lower-bound, pd-bounds, closed-forms,
        /// structural-identities
        suite: String,
        /// Max vertex count (suite-specific default)
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long, default_value_t = 2026)]
        seed: u64,
        /// Report file (stdout when absent); written atomically
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit graphs in edge-list text form
    Gen {
        #[command(subcommand)]
        what: GenWhat,
    },
    /// Regularity-versus-matching census over small graph classes
    Census {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long)]
        p: Option<u32>,
        /// Restrict to connected classes
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CacheMode {
    Off,
    Use,
    /// Use the cache, then recompute a 5% sample and verify it
    Audit,
}

#[derive(Subcommand)]
enum GenWhat {
    /// One graph from a family spec
    Family { spec: String },
    /// All labeled trees on n vertices (Prüfer order)
    Trees {
        #[arg(long)]
        n: usize,
        /// One representative per isomorphism class
        #[arg(long)]
        dedup: bool,
        /// Print only the count
        #[arg(long)]
        count: bool,
    },
    /// All labeled graphs on n vertices
    Graphs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        dedup: bool,
        #[arg(long)]
        count: bool,
    },
    /// Unicyclic isomorphism classes on n vertices
    Unicyclic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn default_p(p: Option<u32>) -> u32 {
    p.or_else(|| {
        std::env::var("NIL_DEFAULT_P")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(2)
}

fn load_graph(input: &str) -> anyhow::Result<Graph> {
    if let Ok(spec) = FamilySpec::parse(input) {
        return Ok(spec.build()?);
    }
    let path = Path::new(input);
    if path.exists() {
        let text = fs::read_to_string(path)?;
        return Ok(parse_edge_list(&text)?);
    }
    anyhow::bail!(
        "`{input}` is neither a family spec (path:5, cycle:7, star:4, complete:5, \
         complete_bipartite:3,2, wheel:8, whiskered(...), disjoint_union(...), edge_list:n:u-v,...) \
         nor an existing edge-list file"
    )
}

fn warn_if_raised(overrides: &GuardOverrides) {
    if overrides.max_n.is_some_and(|m| m > guards::HOCHSTER_MAX_VARS)
        || overrides.max_gens.is_some_and(|m| m > guards::TAYLOR_MAX_GENS)
    {
        eprintln!("warning: raised size guards; this may be slow");
    }
}

fn parse_ideal_kind(kind: &str, g: &Graph) -> anyhow::Result<(String, MonomialIdeal)> {
    if kind == "ni" {
        return Ok(("ni".into(), closed_neighborhood_ideal(g)));
    }
    if kind == "edge" {
        return Ok(("edge".into(), edge_ideal(g)));
    }
    if let Some(t) = kind.strip_prefix("path:") {
        let t: usize = t
            .parse()
            .map_err(|_| anyhow::anyhow!("bad path ideal parameter `{t}`"))?;
        return Ok((format!("path{t}"), path_ideal(g, t)?));
    }
    anyhow::bail!("unknown ideal kind `{kind}` (expected ni, edge, or path:<t>)")
}

fn atomic_write(path: &Path, contents: &str) -> anyhow::Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Invariants { input, format, p, guards: overrides } => {
            warn_if_raised(&overrides);
            let g = load_graph(&input)?;
            let p = default_p(p);
            let max_n = overrides.max_n.unwrap_or(guards::HOCHSTER_MAX_VARS);
            let ni = closed_neighborhood_ideal(&g);
            let table = betti_table_hochster_guarded(&ni, p, max_n)?;
            let clique_cover = clique_cover_number_with_guard(
                &g,
                overrides.max_n.unwrap_or(guards::CLIQUE_COVER_MAX),
            )?;
            let s = g.structure_predicates();
            let gens: Vec<String> = ni
                .gens()
                .iter()
                .map(|m| m.to_string_with(g.labels()))
                .collect();
            match format {
                Format::Pretty => {
                    println!("graph:          {}", g.to_compact_string());
                    println!("vertices:       {}", g.n());
                    println!("edges:          {}", g.edge_count());
                    println!("matching:       {}", matching_number(&g));
                    println!("clique cover:   {clique_cover}");
                    println!(
                        "flags:          chordal={} forest={} tree={} unicyclic={}",
                        s.is_chordal, s.is_forest, s.is_tree, s.is_unicyclic
                    );
                    println!("components:     {}", s.components.len());
                    println!("NI generators:  {}", gens.join(", "));
                    println!("field:          GF({p})");
                    println!("reg(R/NI(G)):   {}", table.regularity());
                    println!("pd(R/NI(G)):    {}", table.projective_dimension());
                    println!("\nBetti table of R/NI(G):");
                    print!("{}", table.pretty_string());
                }
                Format::Json => {
                    let value = serde_json::json!({
                        "graph": g.to_compact_string(),
                        "n": g.n(),
                        "m": g.edge_count(),
                        "matching": matching_number(&g),
                        "clique_cover": clique_cover,
                        "is_chordal": s.is_chordal,
                        "is_forest": s.is_forest,
                        "is_tree": s.is_tree,
                        "is_unicyclic": s.is_unicyclic,
                        "components": s.components.len(),
                        "ni_generators": gens,
                        "betti": table.to_json_value(),
                    });
                    println!("{}", serde_json::to_string_pretty(&value)?);
                }
                Format::Csv => {
                    println!(
                        "graph,n,m,matching,clique_cover,is_chordal,is_forest,is_tree,is_unicyclic,reg,pd,ni_generators"
                    );
                    println!(
                        "{},{},{},{},{},{},{},{},{},{},{},{}",
                        g.to_compact_string(),
                        g.n(),
                        g.edge_count(),
                        matching_number(&g),
                        clique_cover,
                        s.is_chordal,
                        s.is_forest,
                        s.is_tree,
                        s.is_unicyclic,
                        table.regularity(),
                        table.projective_dimension(),
                        gens.join(" ")
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Betti {
            input,
            ideal,
            p,
            oracle,
            format,
            cache,
            cache_dir,
            guards: overrides,
        } => {
            warn_if_raised(&overrides);
            let g = load_graph(&input)?;
            let p = default_p(p);
            let (kind, the_ideal) = parse_ideal_kind(&ideal, &g)?;
            let max_n = overrides.max_n.unwrap_or(guards::HOCHSTER_MAX_VARS);
            let max_gens = overrides.max_gens.unwrap_or(guards::TAYLOR_MAX_GENS);

            let cache_dir = cache_dir.or_else(|| std::env::var_os("NIL_CACHE_DIR").map(Into::into));
            let mode = cache.unwrap_or(if cache_dir.is_some() {
                CacheMode::Use
            } else {
                CacheMode::Off
            });
            let mut store = match (&cache_dir, mode) {
                (Some(dir), CacheMode::Use | CacheMode::Audit) => Some(Cache::open(dir)?),
                _ => None,
            };
            let key = betti_cache_key(&g, &kind, p);

            let cached_value = store.as_ref().and_then(|c| c.get(&key)).cloned();
            let table = match &cached_value {
                Some(record) => BettiTable::from_json_value(&record.value["table"])?,
                None => {
                    let t = betti_table_hochster_guarded(&the_ideal, p, max_n)?;
                    if let Some(store) = store.as_mut() {
                        store.put(
                            &key,
                            serde_json::json!({
                                "graph": g.to_compact_string(),
                                "kind": kind,
                                "p": p,
                                "table": t.to_json_value(),
                            }),
                        )?;
                    }
                    t
                }
            };

            if mode == CacheMode::Audit {
                if let Some(store) = &store {
                    let mismatched = store.audit(0.05, 2026, |k| {
                        let record = store.get(k).expect("sampled key exists");
                        let graph = Graph::from_compact_string(
                            record.value["graph"].as_str().unwrap_or_default(),
                        )?;
                        let kind = record.value["kind"].as_str().unwrap_or_default();
                        let p = record.value["p"].as_u64().unwrap_or(2) as u32;
                        let (_, ideal) = match parse_ideal_kind(kind, &graph) {
                            Ok(pair) => pair,
                            Err(_) => return Ok(None),
                        };
                        let fresh = betti_table_hochster_guarded(&ideal, p, max_n)?;
                        let mut value = record.value.clone();
                        value["table"] = fresh.to_json_value();
                        Ok(Some(value))
                    })?;
                    if !mismatched.is_empty() {
                        eprintln!("cache audit found stale entries: {mismatched:?}");
                        return Ok(ExitCode::from(1));
                    }
                    eprintln!("cache audit clean ({} entries)", store.len());
                }
            }

            let oracle_table = if oracle {
                Some(betti_table_taylor_guarded(&the_ideal, p, max_gens)?)
            } else {
                None
            };
            if let Some(oracle_table) = &oracle_table {
                if *oracle_table != table {
                    eprintln!("oracle disagreement for {kind} of {g} at p = {p}");
                    eprintln!("hochster:\n{}", table.pretty_string());
                    eprintln!("taylor:\n{}", oracle_table.pretty_string());
                    return Ok(ExitCode::from(1));
                }
            }

            match format {
                Format::Pretty => {
                    println!(
                        "{} of {} over GF({p}): reg = {}, pd = {}{}",
                        kind,
                        g.to_compact_string(),
                        table.regularity(),
                        table.projective_dimension(),
                        if cached_value.is_some() { " (cached)" } else { "" }
                    );
                    print!("{}", table.pretty_string());
                    if oracle_table.is_some() {
                        println!("oracle: taylor table matches");
                    }
                }
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&table.to_json_value())?);
                }
                Format::Csv => {
                    println!("i,j,count");
                    for (i, j, c) in table.entries() {
                        println!("{i},{j},{c}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify { suite, n, p, seed, out } => {
            let p = default_p(p);
            let report = verify::run_suite(&suite, n, p, seed, 0)?;
            let json = serde_json::to_string_pretty(&report.to_json_value())?;
            match &out {
                Some(path) => atomic_write(path, &json)?,
                None => println!("{json}"),
            }
            eprintln!(
                "suite={} seed={} cases={} failures={} elapsed_ms={} -> {}",
                report.suite,
                report.seed,
                report.cases,
                report.failures.len(),
                report.elapsed_ms,
                if report.pass() { "PASS" } else { "FAIL" }
            );
            Ok(if report.pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Gen { what } => {
            match what {
                GenWhat::Family { spec } => {
                    let g = FamilySpec::parse(&spec)?.build()?;
                    print!("{}", to_edge_list_string(&g));
                }
                GenWhat::Trees { n, dedup, count } => {
                    if dedup {
                        emit_graphs(enumerate::trees_dedup(n)?.into_iter(), count);
                    } else {
                        emit_graphs(enumerate::labeled_trees(n)?, count);
                    }
                }
                GenWhat::Graphs { n, connected, dedup, count } => {
                    if dedup {
                        emit_graphs(enumerate::graphs_dedup(n, connected)?.into_iter(), count);
                    } else {
                        emit_graphs(enumerate::labeled_graphs(n, connected)?, count);
                    }
                }
                GenWhat::Unicyclic { n, count } => {
                    emit_graphs(enumerate::unicyclic_dedup(n)?.into_iter(), count);
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Census { n, p, connected, out } => {
            let p = default_p(p);
            let report = census(n, p, connected)?;
            let json = serde_json::to_string_pretty(&serde_json::to_value(&report)?)?;
            match &out {
                Some(path) => atomic_write(path, &json)?,
                None => println!("{json}"),
            }
            eprintln!(
                "census n<={} p={}: {} classes, reg==a on {}, reg>a on {}, pd<a on {}",
                report.n_max,
                report.p,
                report.rows.len(),
                report.reg_equal_count,
                report.reg_strict_count,
                report.pd_below_count
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit_graphs<I: Iterator<Item = Graph>>(graphs: I, count_only: bool) {
    if count_only {
        println!("{}", graphs.count());
        return;
    }
    for (idx, g) in graphs.enumerate() {
        println!("# {}", idx + 1);
        print!("{}", to_edge_list_string(&g));
        println!();
    }
}
