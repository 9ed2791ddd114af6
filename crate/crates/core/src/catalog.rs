//! Built-in fixtures, a named catalog with on-disk persistence, and
//! graph6 ingestion.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Figure,
    Ingested,
    Constructed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Graph,
    pub provenance: Provenance,
    pub tags: Vec<String>,
}

impl CatalogEntry {
    pub fn new(name: impl Into<String>, graph: Graph, provenance: Provenance, tags: &[&str]) -> Self {
        CatalogEntry { name: name.into(), graph, provenance, tags: tags.iter().map(|t| t.to_string()).collect() }
    }
}

/// Parses the `.edges` text format: `#` comments, one `n N` line, then one
/// `u v` pair per line.
pub fn parse_edges(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |reason: &str| Error::MalformedLine { line: i + 1, reason: reason.to_string() };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (n, fields.as_slice()) {
            (None, ["n", count]) => n = Some(count.parse::<usize>().map_err(|_| bad("bad vertex count"))?),
            (None, _) => return Err(bad("expected `n <count>` before edges")),
            (Some(_), [u, v]) => {
                let u = u.parse().map_err(|_| bad("bad vertex"))?;
                let v = v.parse().map_err(|_| bad("bad vertex"))?;
                edges.push((u, v));
            }
            (Some(_), _) => return Err(bad("expected `u v`")),
        }
    }
    let n = n.ok_or(Error::MalformedLine { line: 0, reason: "missing vertex count".into() })?;
    Graph::from_edges(n, &edges)
}

fn data(text: &str) -> Graph {
    parse_edges(text).expect("bundled data parses")
}

fn prefix_complement(g: &Graph, k: usize) -> Graph {
    let keep: Vec<usize> = (0..k).collect();
    g.induced_subgraph(&keep).expect("prefix in range").complement()
}

/// The built-in drawings, in a fixed order.
pub fn builtin_fixtures() -> Vec<CatalogEntry> {
    use Provenance::Figure;
    let fig5 = data(include_str!("../data/fig5_complement.edges"));
    let fig6 = data(include_str!("../data/fig6_complement.edges"));
    vec![
        CatalogEntry::new("FIG1_8", data(include_str!("../data/fig1.edges")), Figure, &["minimal"]),
        CatalogEntry::new("FIG2_6", data(include_str!("../data/fig2.edges")), Figure, &["minimal", "reseminant"]),
        CatalogEntry::new(
            "FIG3_11",
            data(include_str!("../data/fig3.edges")),
            Figure,
            &["minimal", "non-regular"],
        ),
        CatalogEntry::new(
            "FIG4_10",
            data(include_str!("../data/fig4.edges")),
            Figure,
            &["minimal", "reseminant", "regular"],
        ),
        CatalogEntry::new("FIG5_9", prefix_complement(&fig5, 9), Figure, &["minimal"]),
        CatalogEntry::new("FIG5_10", fig5.complement(), Figure, &["minimal", "clique-generation"]),
        CatalogEntry::new("FIG6_15", prefix_complement(&fig6, 15), Figure, &["minimal"]),
        CatalogEntry::new("FIG6_16", fig6.complement(), Figure, &["minimal", "vertex-duplication"]),
    ]
}

pub fn fixture(name: &str) -> Result<CatalogEntry> {
    builtin_fixtures().into_iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

/// One entry per nonblank line, named `<stem>_<index>` with a zero-based index.
pub fn parse_graph6_lines(text: &str, stem: &str) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let graph = graph6::decode(line).map_err(|e| Error::MalformedLine { line: i + 1, reason: e.to_string() })?;
        out.push(CatalogEntry::new(format!("{stem}_{}", out.len()), graph, Provenance::Ingested, &[]));
    }
    Ok(out)
}

pub fn ingest_graph6(path: &Path) -> Result<Vec<CatalogEntry>> {
    let text = fs::read_to_string(path)?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("graph");
    parse_graph6_lines(&text, stem)
}

/// One graph6 line per entry, each terminated by a newline.
pub fn export_graph6(entries: &[CatalogEntry]) -> String {
    entries.iter().map(|e| graph6::encode(&e.graph) + "\n").collect()
}

pub fn export_json(entries: &[CatalogEntry]) -> Result<String> {
    Ok(serde_json::to_string_pretty(entries)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct IndexRecord {
    name: String,
    file: String,
    n: usize,
    provenance: Provenance,
    tags: Vec<String>,
}

/// Named graphs with unique names, persisted as `<name>.g6` files plus an
/// `index.json`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn builtin() -> Self {
        Catalog { entries: builtin_fixtures() }
    }

    pub fn insert(&mut self, entry: CatalogEntry) -> Result<()> {
        if self.get(&entry.name).is_some() {
            return Err(Error::DuplicateName(entry.name));
        }
        self.entries.push(entry);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn save(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir)?;
        let mut index = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            let file = format!("{}.g6", e.name);
            fs::write(dir.join(&file), graph6::encode(&e.graph) + "\n")?;
            index.push(IndexRecord {
                name: e.name.clone(),
                file,
                n: e.graph.n(),
                provenance: e.provenance,
                tags: e.tags.clone(),
            });
        }
        fs::write(dir.join("index.json"), serde_json::to_string_pretty(&index)? + "\n")?;
        Ok(())
    }

    pub fn load(dir: &Path) -> Result<Self> {
        let index: Vec<IndexRecord> = serde_json::from_str(&fs::read_to_string(dir.join("index.json"))?)?;
        let mut seen = BTreeSet::new();
        let mut catalog = Catalog::new();
        for rec in index {
            if !seen.insert(rec.name.clone()) {
                return Err(Error::DuplicateName(rec.name));
            }
            let text = fs::read_to_string(dir.join(&rec.file))?;
            let graph = graph6::decode(text.trim_end())?;
            if graph.n() != rec.n {
                return Err(Error::LengthMismatch { expected: rec.n, got: graph.n() });
            }
            catalog.entries.push(CatalogEntry { name: rec.name, graph, provenance: rec.provenance, tags: rec.tags });
        }
        Ok(catalog)
    }
}
