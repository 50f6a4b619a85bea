//! Named graphs: every connected graph of order at most five, the minimal
//! minors of the multiplicity theorems, and a few generated families.
//!
//! Lookup is case-insensitive. Besides the table, names of the form `Kn`,
//! `Pn`, `Cn`, `Wn`, `K_{a,b}`, `S(a,b,...)` (generalized star with the given
//! arm lengths), `mG` (m disjoint copies) and unions joined by `+` or `⊔` are
//! understood. Two-digit forms such as `K13` or `K23` follow the usual
//! convention for complete bipartite graphs; write `K_{13}` for a complete
//! graph on 13 vertices.

use super::Graph;
use crate::error::{IepgError, Result};

pub struct NamedGraph {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub order: usize,
    /// 1-based edges written as digit pairs.
    pub edges: &'static str,
}

macro_rules! ng {
    ($name:expr, [$($alias:expr),*], $n:expr, $edges:expr) => {
        NamedGraph { name: $name, aliases: &[$($alias),*], order: $n, edges: $edges }
    };
}

pub static NAMED_GRAPHS: &[NamedGraph] = &[
    ng!("K1", [], 1, ""),
    ng!("K2", ["P2"], 2, "12"),
    ng!("P3", ["K12"], 3, "12 23"),
    ng!("K3", ["C3"], 3, "12 13 23"),
    ng!("K4", [], 4, "12 13 14 23 24 34"),
    ng!("Dmnd", ["Diamond", "K4-e"], 4, "12 13 14 23 24"),
    ng!("C4", ["K22"], 4, "12 23 34 14"),
    ng!("Paw", [], 4, "12 13 23 34"),
    ng!("K13", ["Claw", "S(1,1,1)"], 4, "12 13 14"),
    ng!("P4", [], 4, "12 23 34"),
    ng!("P5", [], 5, "12 23 34 45"),
    ng!("S(2,1,1)", ["Chair", "Fork"], 5, "12 23 14 15"),
    ng!("K14", ["S(1,1,1,1)"], 5, "12 13 14 15"),
    ng!("C5", [], 5, "12 23 34 45 15"),
    ng!("Bull", [], 5, "12 13 23 14 25"),
    ng!("L(3,2)", ["Lollipop(3,2)"], 5, "12 13 23 34 45"),
    ng!("Campstool", ["Camp", "Cricket"], 5, "12 13 23 34 35"),
    ng!("Bnr", ["Banner", "P"], 5, "12 23 34 14 15"),
    ng!("Hs", ["House"], 5, "12 23 34 14 15 25"),
    ng!("Bfly", ["Butterfly", "Bowtie"], 5, "12 13 23 34 35 45"),
    ng!("K23", [], 5, "13 14 15 23 24 25"),
    ng!("Dart", [], 5, "12 13 14 23 24 15"),
    ng!("Kite", [], 5, "12 13 14 23 24 35"),
    ng!("T5", ["K113", "Book3"], 5, "12 13 14 15 23 24 25"),
    ng!("L(4,1)", ["Lollipop(4,1)"], 5, "12 13 14 23 24 34 45"),
    ng!("Gem", ["Fan"], 5, "12 23 34 15 25 35 45"),
    ng!("(K4)_e", ["K4e", "K4-subdivided"], 5, "13 14 15 23 24 25 45"),
    ng!("W5", ["Wheel5"], 5, "12 23 34 14 15 25 35 45"),
    ng!("FHs", ["FullHouse", "K5-P3"], 5, "12 23 34 14 13 24 15 25"),
    ng!("K5-e", [], 5, "12 13 14 15 23 24 25 34 35"),
    ng!("K5", [], 5, "12 13 14 15 23 24 25 34 35 45"),
    ng!("H-tree", ["Htree", "H"], 6, "12 13 14 25 26"),
    ng!("3-sun", ["3sun", "Sun3"], 6, "12 13 23 14 25 36"),
    ng!("K16", ["S(1,1,1,1,1,1)"], 7, "12 13 14 15 16 17"),
    ng!("S(2,1,1,1,1)", [], 7, "12 23 14 15 16 17"),
    ng!("S(2,2,1,1)", [], 7, "12 23 14 45 16 17"),
    ng!("S(2,2,2)", [], 7, "12 23 14 45 16 67"),
];

fn normalize(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '−' | '–' => '-',
            '⊔' | '∪' | '|' => '+',
            c => c.to_ascii_lowercase(),
        })
        .collect()
}

fn table_key(s: &str) -> String {
    normalize(s).chars().filter(|c| !matches!(c, '_' | '{' | '}')).collect()
}

fn edges_of(entry: &NamedGraph) -> Graph {
    let pairs: Vec<(usize, usize)> = entry
        .edges
        .split_whitespace()
        .map(|p| {
            let p = p.as_bytes();
            ((p[0] - b'1') as usize, (p[1] - b'1') as usize)
        })
        .collect();
    Graph::from_edges(entry.order, &pairs).expect("table entry is valid")
}

/// Canonical names of the table entries.
pub fn named_graph_names() -> Vec<&'static str> {
    NAMED_GRAPHS.iter().map(|e| e.name).collect()
}

pub fn named_graph(name: &str) -> Result<Graph> {
    let norm = normalize(name);
    if norm.is_empty() {
        return Err(IepgError::UnknownName(name.to_string()));
    }
    let mut out: Option<Graph> = None;
    for part in split_union(&norm) {
        let g = single(part).ok_or_else(|| IepgError::UnknownName(name.to_string()))??;
        out = Some(match out {
            None => g,
            Some(acc) => acc.disjoint_union(&g)?,
        });
    }
    out.ok_or_else(|| IepgError::UnknownName(name.to_string()))
}

fn split_union(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            '+' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn lookup(key: &str) -> Option<Graph> {
    NAMED_GRAPHS
        .iter()
        .find(|e| table_key(e.name) == key || e.aliases.iter().any(|a| table_key(a) == key))
        .map(edges_of)
}

fn single(s: &str) -> Option<Result<Graph>> {
    if s.is_empty() {
        return None;
    }
    let key: String = s.chars().filter(|c| !matches!(c, '_' | '{' | '}')).collect();
    if let Some(g) = lookup(&key) {
        return Some(Ok(g));
    }
    // m copies: "5k1", "2k3"
    let digits: String = s.chars().take_while(|c| c.is_ascii_digit()).collect();
    if !digits.is_empty() && digits.len() < s.len() {
        let m: usize = digits.parse().ok()?;
        let inner = single(&s[digits.len()..])?;
        return Some(inner.and_then(|g| {
            let mut acc = Graph::empty(0)?;
            for _ in 0..m {
                acc = acc.disjoint_union(&g)?;
            }
            Ok(acc)
        }));
    }
    let (head, rest) = s.split_at(1);
    let braced = rest.starts_with('_') || rest.starts_with('{');
    let body: String = rest.chars().filter(|c| !matches!(c, '_' | '{' | '}')).collect();
    let num = |t: &str| t.parse::<usize>().ok();
    match head {
        "k" => {
            if let Some((a, b)) = body.split_once(',') {
                return Some(Graph::complete_bipartite(num(a)?, num(b)?));
            }
            if body.len() == 2 && !braced {
                let a = num(&body[..1])?;
                let b = num(&body[1..])?;
                return Some(Graph::complete_bipartite(a, b));
            }
            let n = num(&body)?;
            Some(Graph::empty(n).map(|_| Graph::complete(n)))
        }
        "p" => {
            let n = num(&body)?;
            Some(Graph::empty(n).map(|_| Graph::path(n)))
        }
        "c" => Some(Graph::cycle(num(&body)?)),
        "w" => {
            let n = num(&body)?;
            Some(Graph::cycle(n.checked_sub(1)?).and_then(|c| c.add_vertex(&(0..n - 1).collect::<Vec<_>>())))
        }
        "s" => {
            let inner = body.strip_prefix('(')?.strip_suffix(')')?;
            let arms: Option<Vec<usize>> = inner.split(',').map(num).collect();
            Some(generalized_star(&arms?))
        }
        _ => None,
    }
}

/// Centre 0 with paths of the given lengths attached.
fn generalized_star(arms: &[usize]) -> Result<Graph> {
    let n = 1 + arms.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in arms {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(n, &edges)
}
