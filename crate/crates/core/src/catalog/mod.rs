//! Ordered multiplicity lists of all graphs of order at most five.
//!
//! The shipped data file records, for every connected graph of order at most
//! five, the lists attainable by a matrix with the SSP, the extra lists that
//! are attainable only without it, and the cited graph parameters (maximum
//! nullity, minimum number of distinct eigenvalues, ...) that rule out every
//! other list. Disconnected graphs are answered by combining components:
//! with the SSP the component spectra must be disjoint, without it they may
//! share values. Impossibility is never computed numerically; it is read
//! from the stored citations.

mod recipes;
mod verify;

pub use recipes::{realize_minimal, spectrally_arbitrary_demo, star_matrix};
pub use verify::{verify_catalog, CatalogReport, CheckRow, Scope};

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{IepgError, Result};
use crate::graph::{find_subgraph_embedding, is_isomorphic, named_graph, Graph};
use crate::matrix::Oml;
use crate::strong::ssp_edge_lower_bound;

pub const CATALOG_MAX_ORDER: usize = 5;
const CATALOG_JSON: &str = include_str!("../../data/catalog.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Any matrix in `S(G)`.
    Any,
    /// Matrices with the SSP.
    Ssp,
}

impl FromStr for Mode {
    type Err = IepgError;
    fn from_str(s: &str) -> Result<Mode> {
        match s.to_ascii_lowercase().as_str() {
            "any" => Ok(Mode::Any),
            "ssp" => Ok(Mode::Ssp),
            _ => Err(IepgError::Parse(format!("unknown mode {s:?}; use any or ssp"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Any => "any",
            Mode::Ssp => "ssp",
        })
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct Fact {
    pub kind: FactKind,
    pub value: usize,
    pub citation: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactKind {
    /// Maximum nullity `M(G)`.
    MaxMultiplicity,
    /// Largest nullity with the SAP; caps multiplicities under the SMP.
    MaxMultiplicitySap,
    /// Maximum positive semidefinite nullity; caps the extreme multiplicities.
    PsdMaxNullity,
    /// Minimum number of distinct eigenvalues `q(G)`.
    MinDistinct,
}

#[derive(Clone, Debug, Deserialize)]
pub struct AnyOnly {
    pub oml: Oml,
    pub recipe: String,
    pub citation: String,
}

#[derive(Clone, Debug, Deserialize)]
struct RawEntry {
    name: String,
    order: usize,
    size: usize,
    facts: Vec<Fact>,
    ssp: Vec<Oml>,
    any_only: Vec<AnyOnly>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct MinimalGraph {
    pub graph: String,
    pub recipe: String,
    pub note: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct MinimalRow {
    pub oml: Oml,
    pub graphs: Vec<MinimalGraph>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct WitnessRecipe {
    pub kind: String,
    pub name: Option<String>,
    pub rows: Option<Vec<Vec<f64>>>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct MinorWitnessRow {
    pub graph: String,
    pub oml: Oml,
    pub witness: WitnessRecipe,
    #[serde(default)]
    pub printed: Vec<String>,
    #[serde(default)]
    pub values: Vec<f64>,
    pub tol: Option<f64>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
struct RawCatalog {
    version: u32,
    minimal_subgraphs: Vec<MinimalRow>,
    graphs: Vec<RawEntry>,
    minor_witnesses: Vec<MinorWitnessRow>,
}

/// One connected graph of order at most five.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Graph,
    pub facts: Vec<Fact>,
    /// Lists attainable with the SSP, sorted.
    pub ssp: Vec<Oml>,
    /// Lists attainable only without the SSP (indeed without the SMP).
    pub any_only: Vec<AnyOnly>,
}

impl CatalogEntry {
    pub fn attainable(&self, mode: Mode) -> Vec<Oml> {
        let mut v = self.ssp.clone();
        if mode == Mode::Any {
            v.extend(self.any_only.iter().map(|a| a.oml.clone()));
        }
        v.sort();
        v
    }

    /// Stored reason a list is impossible in the given mode, if it is.
    pub fn impossibility_reason(&self, oml: &Oml, mode: Mode) -> Option<String> {
        let m = &oml.0;
        if oml.order() != self.graph.order() {
            return Some(format!("list has order {}, graph has order {}", oml.order(), self.graph.order()));
        }
        let (first, last) = (m[0], m[m.len() - 1]);
        for f in &self.facts {
            let hit = match f.kind {
                FactKind::MaxMultiplicity => oml.max_multiplicity() > f.value,
                FactKind::PsdMaxNullity => first > f.value || last > f.value,
                FactKind::MinDistinct => m.len() < f.value,
                FactKind::MaxMultiplicitySap => mode == Mode::Ssp && oml.max_multiplicity() > f.value,
            };
            if hit {
                return Some(f.citation.clone());
            }
        }
        if self.graph.is_tree() && (first > 1 || last > 1) {
            return Some("the first and last eigenvalues of a tree are simple".into());
        }
        if self.graph.unicyclic_cycle_length().is_some_and(|l| l % 2 == 1) && first > 1 && last > 1 {
            return Some("a unicyclic graph with an odd cycle has a simple extreme eigenvalue".into());
        }
        if mode == Mode::Ssp && ssp_edge_lower_bound(oml) > self.graph.size() {
            return Some(format!(
                "an SSP matrix needs at least {} edges, the graph has {}",
                ssp_edge_lower_bound(oml),
                self.graph.size()
            ));
        }
        None
    }

    pub fn to_json(&self) -> Value {
        let lists = |v: &[Oml]| v.iter().map(|o| o.to_string()).collect::<Vec<_>>();
        let excluded: Vec<Value> = compositions(self.graph.order())
            .into_iter()
            .filter(|o| !self.attainable(Mode::Any).contains(o))
            .map(|o| json!({"oml": o.to_string(), "reason": self.impossibility_reason(&o, Mode::Any)}))
            .collect();
        let not_ssp: Vec<Value> = self
            .any_only
            .iter()
            .map(|a| {
                json!({
                    "oml": a.oml.to_string(),
                    "construction": a.citation,
                    "why_not_ssp": self.impossibility_reason(&a.oml, Mode::Ssp),
                })
            })
            .collect();
        json!({
            "name": self.name,
            "graph": self.graph.to_json(),
            "ssp": lists(&self.ssp),
            "any_only": not_ssp,
            "impossible": excluded,
            "facts": self.facts.iter().map(|f| json!({"kind": format!("{:?}", f.kind), "value": f.value, "citation": f.citation})).collect::<Vec<_>>(),
            "note": "impossibility is taken from the stored citations, never from failed numerical searches",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub version: u32,
    pub entries: Vec<CatalogEntry>,
    pub minimal: Vec<MinimalRow>,
    pub minor_witnesses: Vec<MinorWitnessRow>,
}

impl Catalog {
    pub fn from_json_str(s: &str) -> Result<Catalog> {
        let raw: RawCatalog = serde_json::from_str(s)?;
        let mut entries = Vec::with_capacity(raw.graphs.len());
        for e in raw.graphs {
            let graph = named_graph(&e.name)?;
            if graph.order() != e.order || graph.size() != e.size || !graph.is_connected() {
                return Err(IepgError::Parse(format!("catalog entry {} does not match its named graph", e.name)));
            }
            let mut ssp = e.ssp;
            ssp.sort();
            entries.push(CatalogEntry { name: e.name, graph, facts: e.facts, ssp, any_only: e.any_only });
        }
        Ok(Catalog { version: raw.version, entries, minimal: raw.minimal_subgraphs, minor_witnesses: raw.minor_witnesses })
    }

    /// Entry for a connected graph, found up to isomorphism.
    pub fn entry(&self, g: &Graph) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| is_isomorphic(&e.graph, g))
    }

    pub fn entry_by_name(&self, name: &str) -> Result<&CatalogEntry> {
        let g = named_graph(name)?;
        self.entry(&g).ok_or_else(|| IepgError::UnknownName(name.to_string()))
    }

    /// Minimal-subgraph rows for a list or its reversal.
    pub fn minimal_for(&self, oml: &Oml) -> Vec<(&MinimalGraph, bool)> {
        let rev = oml.reversed();
        let mut out = Vec::new();
        for row in &self.minimal {
            if &row.oml == oml {
                out.extend(row.graphs.iter().map(|g| (g, false)));
            } else if row.oml == rev {
                out.extend(row.graphs.iter().map(|g| (g, true)));
            }
        }
        out
    }

    /// SSP lists of `g` read off the minimal subgraph table: a list is
    /// attainable exactly when `g` has a spanning subgraph listed for it or
    /// for its reversal, or when all multiplicities are one.
    pub fn derive_ssp_lists(&self, g: &Graph) -> Vec<Oml> {
        let n = g.order();
        compositions(n)
            .into_iter()
            .filter(|o| {
                o.is_simple()
                    || self.minimal_for(o).iter().any(|(m, _)| {
                        let h = named_graph(&m.graph).expect("table graph names parse");
                        h.order() == n && find_subgraph_embedding(&h, g).is_some()
                    })
            })
            .collect()
    }

    /// Connected graphs grouped by order with their lists.
    pub fn summary(&self) -> Value {
        let mut orders = Vec::new();
        for n in 1..=CATALOG_MAX_ORDER {
            let graphs: Vec<Value> = self
                .entries
                .iter()
                .filter(|e| e.graph.order() == n)
                .map(|e| {
                    json!({
                        "name": e.name,
                        "ssp": e.ssp.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
                        "any_only": e.any_only.iter().map(|a| a.oml.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            orders.push(json!({"order": n, "graphs": graphs}));
        }
        json!({"version": self.version, "orders": orders})
    }

    pub fn summary_text(&self) -> String {
        let mut s = String::new();
        for n in 1..=CATALOG_MAX_ORDER {
            s.push_str(&format!("order {n}\n"));
            for e in self.entries.iter().filter(|e| e.graph.order() == n) {
                let ssp: Vec<String> = e.ssp.iter().filter(|o| !o.is_simple()).map(|o| o.to_string()).collect();
                let extra: Vec<String> = e.any_only.iter().map(|a| a.oml.to_string()).collect();
                s.push_str(&format!("  {:<10} {}", e.name, if ssp.is_empty() { "-".into() } else { ssp.join(" ") }));
                if !extra.is_empty() {
                    s.push_str(&format!("  | without SSP: {}", extra.join(" ")));
                }
                s.push('\n');
            }
        }
        s
    }
}

/// The shipped catalog.
pub fn catalog() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| Catalog::from_json_str(CATALOG_JSON).expect("shipped catalog parses"))
}

/// All compositions of `n`, in lexicographic order.
pub fn compositions(n: usize) -> Vec<Oml> {
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Oml>) {
        if n == 0 {
            out.push(Oml(cur.clone()));
            return;
        }
        for k in 1..=n {
            cur.push(k);
            go(n - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, &mut Vec::new(), &mut out);
    }
    out
}

/// Ways to interleave two lists of distinct values. With `merge` a value of
/// one side may coincide with a value of the other, adding multiplicities.
pub fn interleave(a: &[usize], b: &[usize], merge: bool) -> Vec<Vec<usize>> {
    if a.is_empty() {
        return vec![b.to_vec()];
    }
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for mut rest in interleave(&a[1..], b, merge) {
        rest.insert(0, a[0]);
        out.push(rest);
    }
    for mut rest in interleave(a, &b[1..], merge) {
        rest.insert(0, b[0]);
        out.push(rest);
    }
    if merge {
        for mut rest in interleave(&a[1..], &b[1..], merge) {
            rest.insert(0, a[0] + b[0]);
            out.push(rest);
        }
    }
    out
}

/// Lists attainable by a graph of order at most five.
pub fn attainable(g: &Graph, mode: Mode) -> Result<Vec<Oml>> {
    if g.order() > CATALOG_MAX_ORDER {
        return Err(IepgError::InstanceTooLarge { order: g.order(), limit: CATALOG_MAX_ORDER });
    }
    if g.order() == 0 {
        return Ok(vec![]);
    }
    let cat = catalog();
    let mut acc: Vec<Vec<usize>> = vec![vec![]];
    for comp in g.components() {
        let c = g.induced(&comp);
        let entry = cat.entry(&c).ok_or_else(|| IepgError::Unsupported(format!("component {c} missing from the catalog")))?;
        let lists = entry.attainable(mode);
        let mut next = Vec::new();
        for a in &acc {
            for l in &lists {
                next.extend(interleave(a, &l.0, mode == Mode::Any));
            }
        }
        next.sort();
        next.dedup();
        acc = next;
    }
    Ok(acc.into_iter().map(Oml).collect())
}
