//! `mpg`: build, verify and explore minimal prime graphs from the command line.
//!
//! Graph arguments accept a file of graph6 lines (one graph per line), a JSON
//! edge list `{"n": .., "edges": [[u, v], ..]}`, `@NAME` for a built-in
//! fixture, or `g6:STRING` for an inline graph6 string.
//!
//! Exit status: 0 on success, 1 when a check comes back negative, 2 when the
//! command could not run.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use mpg_core::automorphism::decompose_aut;
use mpg_core::catalog::{self, Catalog, CatalogEntry, Provenance};
use mpg_core::circulant::{block_coloring, family_mpg_check, g_circulant, is_super_base, CirculantSpec};
use mpg_core::generation::site_census;
use mpg_core::products::{iterated_product, ProductKind};
use mpg_core::reseminant::{build_reseminant, duplicate_vertex, is_base_graph, regular_reseminant_verdict};
use mpg_core::verify::{check_minimal_prime_graph, is_solvable_prime_graph, is_triangle_free};
use mpg_core::{graph6, DuplicationVector, EdgeList, Error, Graph};

#[derive(Parser)]
#[command(name = "mpg", version, about = "Minimal prime graph toolkit")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether each input graph is a minimal prime graph.
    Verify { input: String },
    /// Add a true twin of one vertex.
    Duplicate {
        input: String,
        #[arg(long)]
        vertex: usize,
    },
    /// Build a graph from a base graph and duplication multiplicities.
    Reseminant {
        /// Comma-separated multiplicities, one per base vertex.
        #[arg(long)]
        w: DuplicationVector,
        /// Base graph (defaults to the 5-cycle).
        #[arg(long)]
        base: Option<String>,
    },
    /// Report on the circulant family member with `n` vertices.
    Family {
        #[arg(long)]
        n: usize,
        /// Override the family's `k`; the member must still satisfy the family rule.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Left-associated product of two or more graphs.
    Product {
        #[arg(long, value_parser = parse_kind)]
        kind: ProductKind,
        #[arg(required = true, num_args = 2..)]
        inputs: Vec<String>,
    },
    /// Automorphism group decomposition along twin classes.
    Aut { input: String },
    /// Enumerate and classify generation sites.
    Sites { input: String },
    /// Check that no single-vertex deletion leaves a minimal prime graph.
    Superbase { input: String },
    /// Built-in fixtures and catalog directories.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List entry names.
    List {
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Print one entry.
    Show {
        name: String,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Print every entry, or write them to a catalog directory.
    Export {
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Read a file of graph6 lines, optionally adding the graphs to a catalog directory.
    Ingest {
        file: PathBuf,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Json,
}

fn parse_kind(s: &str) -> Result<ProductKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure to run at all; reported with exit status 2.
#[derive(Debug)]
struct Fatal(String);

impl From<Error> for Fatal {
    fn from(e: Error) -> Self {
        Fatal(e.to_string())
    }
}

type Outcome = Result<bool, Fatal>;

fn load_graphs(arg: &str) -> Result<Vec<Graph>, Fatal> {
    if let Some(name) = arg.strip_prefix('@') {
        return Ok(vec![catalog::fixture(name)?.graph]);
    }
    if let Some(code) = arg.strip_prefix("g6:") {
        return Ok(vec![graph6::decode(code)?]);
    }
    let text = fs::read_to_string(arg).map_err(|e| Fatal(format!("{arg}: {e}")))?;
    if text.trim_start().starts_with('{') {
        let edges: EdgeList = serde_json::from_str(&text).map_err(|e| Fatal(format!("{arg}: {e}")))?;
        return Ok(vec![mpg_core::graph::make_graph(&edges)?]);
    }
    let graphs: Vec<Graph> =
        catalog::parse_graph6_lines(&text, "input")?.into_iter().map(|e| e.graph).collect();
    if graphs.is_empty() {
        return Err(Fatal(format!("{arg}: no graphs")));
    }
    Ok(graphs)
}

fn load_one(arg: &str) -> Result<Graph, Fatal> {
    let mut graphs = load_graphs(arg)?;
    if graphs.len() != 1 {
        return Err(Fatal(format!("{arg}: expected one graph, found {}", graphs.len())));
    }
    Ok(graphs.remove(0))
}

fn emit<T: Serialize>(value: &T) -> Result<(), Fatal> {
    println!("{}", serde_json::to_string(value).map_err(|e| Fatal(e.to_string()))?);
    Ok(())
}

#[derive(Serialize)]
struct GraphOutput {
    n: usize,
    graph6: String,
    edges: Vec<(usize, usize)>,
}

impl GraphOutput {
    fn new(g: &Graph) -> Self {
        GraphOutput { n: g.n(), graph6: graph6::encode(g), edges: g.edges().collect() }
    }
}

#[derive(Serialize)]
struct FamilyBundle {
    n: usize,
    k: usize,
    circulant: GraphOutput,
    regular_degree: Option<usize>,
    triangle_free: bool,
    coloring: Vec<usize>,
    coloring_proper: bool,
    minimal: bool,
    base: bool,
}

fn print_graph(g: &Graph, pretty: bool) -> Result<(), Fatal> {
    if pretty {
        println!("{} vertices, {} edges: {}", g.n(), g.edge_count(), graph6::encode(g));
        Ok(())
    } else {
        emit(&GraphOutput::new(g))
    }
}

fn verify(input: &str, pretty: bool) -> Outcome {
    let mut all = true;
    for g in load_graphs(input)? {
        let report = check_minimal_prime_graph(&g);
        all &= report.is_minimal;
        if pretty {
            let verdict = match (report.is_minimal, report.failure_kind) {
                (true, _) => "minimal prime graph".to_string(),
                (false, Some(kind)) => format!("not minimal ({kind:?})"),
                (false, None) => "not minimal".to_string(),
            };
            match report.failing_edge {
                Some((u, v)) => println!("{}: {verdict}, edge {{{u},{v}}}", graph6::encode(&g)),
                None => println!("{}: {verdict}", graph6::encode(&g)),
            }
        } else {
            emit(&report)?;
        }
    }
    Ok(all)
}

fn family(n: usize, k: Option<usize>, pretty: bool) -> Outcome {
    let spec = match k {
        Some(k) => CirculantSpec::new(n, k)?,
        None => CirculantSpec::family(n)?,
    };
    let g = g_circulant(spec);
    let coloring = block_coloring(spec)?;
    let report = family_mpg_check(spec)?;
    let bundle = FamilyBundle {
        n,
        k: spec.k,
        regular_degree: g.regular_degree(),
        triangle_free: is_triangle_free(&g),
        coloring_proper: coloring.is_proper(&g),
        coloring: coloring.colors,
        minimal: report.is_minimal,
        base: is_base_graph(&g.complement()),
        circulant: GraphOutput::new(&g),
    };
    let ok = bundle.minimal && bundle.base;
    if pretty {
        println!("G({n},{}): degree {:?}, triangle-free {}", spec.k, bundle.regular_degree, bundle.triangle_free);
        println!("block coloring proper: {}", bundle.coloring_proper);
        println!("complement minimal: {}, base: {}", bundle.minimal, bundle.base);
    } else {
        emit(&bundle)?;
    }
    Ok(ok)
}

fn aut(input: &str, pretty: bool) -> Outcome {
    let g = load_one(input)?;
    let r = decompose_aut(&g)?;
    if pretty {
        println!("|Aut| = {} = {} (kernel) x {} (quotient)", r.order, r.kernel_order, r.quotient_order);
        println!("twin classes: {:?}", r.twin_class_sizes);
        println!("kernel is product of symmetric groups: {}", r.kernel_matches_twin_product);
        println!("quotient embeds in Aut(base) of order {}: {}", r.base_aut_order, r.quotient_embeds_in_base_aut);
    } else {
        emit(&r)?;
    }
    Ok(r.kernel_matches_twin_product && r.quotient_embeds_in_base_aut)
}

fn sites(input: &str, pretty: bool) -> Outcome {
    let g = load_one(input)?;
    let census = match site_census(&g) {
        Ok(c) => c,
        Err(Error::NotMinimal) => {
            eprintln!("input is not a minimal prime graph");
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    if pretty {
        for (site, class) in &census {
            println!("{:?} {:?}", site.site, class.kind);
        }
        println!("{} sites", census.len());
    } else {
        #[derive(Serialize)]
        struct Row<'a> {
            site: &'a [usize],
            complement_set: &'a [usize],
            generated: String,
            classification: &'a mpg_core::generation::SiteClassification,
        }
        let rows: Vec<Row> = census
            .iter()
            .map(|(s, c)| Row {
                site: &s.site,
                complement_set: &s.complement_set,
                generated: graph6::encode(&s.generated),
                classification: c,
            })
            .collect();
        emit(&rows)?;
    }
    Ok(true)
}

fn superbase(input: &str, pretty: bool) -> Outcome {
    let g = load_one(input)?;
    let r = match is_super_base(&g) {
        Ok(r) => r,
        Err(Error::NotMinimal) => {
            eprintln!("input is not a minimal prime graph");
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    if pretty {
        let minimal: Vec<usize> = r.deletions.iter().filter(|d| d.1).map(|d| d.0).collect();
        println!("super base: {}", r.is_super_base);
        if !minimal.is_empty() {
            println!("deleting any of {minimal:?} leaves a minimal prime graph");
        }
    } else {
        emit(&r)?;
    }
    Ok(r.is_super_base)
}

fn open_catalog(dir: Option<&PathBuf>) -> Result<Catalog, Fatal> {
    match dir {
        Some(d) => Ok(Catalog::load(d)?),
        None => Ok(Catalog::builtin()),
    }
}

fn show_entry(e: &CatalogEntry, pretty: bool) -> Result<(), Fatal> {
    if pretty {
        println!("{} ({:?}) n={} m={} tags={:?}", e.name, e.provenance, e.graph.n(), e.graph.edge_count(), e.tags);
        println!("{}", graph6::encode(&e.graph));
        Ok(())
    } else {
        emit(e)
    }
}

fn catalog_cmd(action: &CatalogAction, pretty: bool) -> Outcome {
    match action {
        CatalogAction::List { dir } => {
            for e in open_catalog(dir.as_ref())?.entries() {
                println!("{}", e.name);
            }
        }
        CatalogAction::Show { name, dir } => {
            let cat = open_catalog(dir.as_ref())?;
            let e = cat.get(name).ok_or_else(|| Fatal(Error::UnknownEntry(name.clone()).to_string()))?;
            show_entry(e, pretty)?;
        }
        CatalogAction::Export { format, out } => {
            let entries = catalog::builtin_fixtures();
            if let Some(dir) = out {
                Catalog::builtin().save(dir)?;
            } else {
                match format {
                    Format::Graph6 => print!("{}", catalog::export_graph6(&entries)),
                    Format::Json => println!("{}", catalog::export_json(&entries)?),
                }
            }
        }
        CatalogAction::Ingest { file, dir } => {
            let entries = catalog::ingest_graph6(file)?;
            if let Some(d) = dir {
                let mut cat = if d.join("index.json").exists() { Catalog::load(d)? } else { Catalog::new() };
                for e in &entries {
                    cat.insert(e.clone())?;
                }
                cat.save(d)?;
            }
            for e in &entries {
                debug_assert_eq!(e.provenance, Provenance::Ingested);
                if pretty {
                    println!("{}: n={} m={}", e.name, e.graph.n(), e.graph.edge_count());
                } else {
                    emit(e)?;
                }
            }
        }
    }
    Ok(true)
}

fn run(cli: &Cli) -> Outcome {
    let pretty = cli.pretty;
    match &cli.command {
        Command::Verify { input } => verify(input, pretty),
        Command::Duplicate { input, vertex } => {
            print_graph(&duplicate_vertex(&load_one(input)?, *vertex)?, pretty)?;
            Ok(true)
        }
        Command::Reseminant { w, base } => {
            let base = match base {
                Some(b) => load_one(b)?,
                None => Graph::cycle(5)?,
            };
            let g = build_reseminant(&base, w)?;
            print_graph(&g, pretty)?;
            if base == Graph::cycle(5)? {
                let verdict = regular_reseminant_verdict(w)?;
                if pretty {
                    println!("regular: {} (k={:?}, h={:?})", verdict.regular, verdict.k, verdict.h);
                } else {
                    emit(&verdict)?;
                }
            }
            Ok(true)
        }
        Command::Family { n, k } => family(*n, *k, pretty),
        Command::Product { kind, inputs } => {
            let graphs = inputs.iter().map(|i| load_one(i)).collect::<Result<Vec<_>, _>>()?;
            let g = iterated_product(*kind, &graphs)?;
            print_graph(&g, pretty)?;
            if pretty {
                println!("solvable prime graph: {}", is_solvable_prime_graph(&g));
            }
            Ok(true)
        }
        Command::Aut { input } => aut(input, pretty),
        Command::Sites { input } => sites(input, pretty),
        Command::Superbase { input } => superbase(input, pretty),
        Command::Catalog { action } => catalog_cmd(action, pretty),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Fatal(msg)) => {
            eprintln!("mpg: {msg}");
            ExitCode::from(2)
        }
    }
}
