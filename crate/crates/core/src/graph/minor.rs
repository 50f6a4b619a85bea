//! Minor containment by exhaustive contraction search.
//!
//! Every minor of `H` is a subgraph of some contraction of `H`, so the search
//! walks contraction states (deduplicated by canonical form) and tries a
//! subgraph embedding of the pattern into each one. The contraction sequence
//! plus the final deletions form a witness that can be replayed.

use std::collections::HashSet;

use serde_json::{json, Value};

use super::{canonical_form, mask_iter, named_graph, Graph};
use crate::error::{IepgError, Result};

/// Hosts with more vertices than this are refused unless a larger limit is passed.
pub const DEFAULT_MINOR_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorOp {
    ContractEdge(usize, usize),
    DeleteEdge(usize, usize),
    DeleteVertex(usize),
}

impl MinorOp {
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        match *self {
            MinorOp::ContractEdge(u, v) => g.contract_edge(u, v),
            MinorOp::DeleteEdge(u, v) => g.delete_edge(u, v),
            MinorOp::DeleteVertex(v) => g.delete_vertex(v),
        }
    }

    /// 1-based JSON form.
    pub fn to_json(&self) -> Value {
        match *self {
            MinorOp::ContractEdge(u, v) => json!({"op": "contract", "edge": [u + 1, v + 1]}),
            MinorOp::DeleteEdge(u, v) => json!({"op": "delete_edge", "edge": [u + 1, v + 1]}),
            MinorOp::DeleteVertex(v) => json!({"op": "delete_vertex", "vertex": v + 1}),
        }
    }
}

/// Operations turning the host into a graph isomorphic to the pattern.
/// `embedding[p]` is the vertex of the final graph that pattern vertex `p` became.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub ops: Vec<MinorOp>,
    pub embedding: Vec<usize>,
}

impl MinorWitness {
    pub fn replay(&self, host: &Graph) -> Result<Graph> {
        let mut g = host.clone();
        for op in &self.ops {
            g = op.apply(&g)?;
        }
        Ok(g)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ops": self.ops.iter().map(MinorOp::to_json).collect::<Vec<_>>(),
            "embedding": self.embedding.iter().map(|v| v + 1).collect::<Vec<_>>(),
        })
    }
}

/// Injective map of pattern vertices into host vertices carrying edges to edges.
pub fn find_subgraph_embedding(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    let np = pattern.order();
    if np > host.order() || pattern.size() > host.size() {
        return None;
    }
    // connectivity-first ordering keeps candidate sets small
    let mut order = Vec::with_capacity(np);
    let mut in_order = 0u64;
    while order.len() < np {
        let next = (0..np)
            .filter(|&v| in_order >> v & 1 == 0)
            .max_by_key(|&v| {
                ((pattern.neighbor_mask(v) & in_order).count_ones(), pattern.degree(v), usize::MAX - v)
            })
            .expect("vertex left");
        order.push(next);
        in_order |= 1 << next;
    }
    let mut map = vec![usize::MAX; np];
    if embed(pattern, host, &order, 0, &mut map, 0) {
        Some(map)
    } else {
        None
    }
}

fn embed(p: &Graph, h: &Graph, order: &[usize], i: usize, map: &mut [usize], used: u64) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    let mut cand = h.all_mask() & !used;
    for u in p.neighbors(v) {
        if map[u] != usize::MAX {
            cand &= h.neighbor_mask(map[u]);
        }
    }
    let need = p.degree(v);
    for w in mask_iter(cand) {
        if h.degree(w) < need {
            continue;
        }
        map[v] = w;
        if embed(p, h, order, i + 1, map, used | 1 << w) {
            return true;
        }
    }
    map[v] = usize::MAX;
    false
}

// Deletions that cut `state` down to the embedded copy of `pattern`.
fn finish_witness(pattern: &Graph, state: &Graph, map: &[usize], mut ops: Vec<MinorOp>) -> MinorWitness {
    let image: u64 = map.iter().map(|&w| 1u64 << w).sum();
    let mut kept = std::collections::HashSet::new();
    for (a, b) in pattern.edges() {
        let (x, y) = (map[a].min(map[b]), map[a].max(map[b]));
        kept.insert((x, y));
    }
    for (x, y) in state.edges() {
        if image >> x & 1 == 1 && image >> y & 1 == 1 && !kept.contains(&(x, y)) {
            ops.push(MinorOp::DeleteEdge(x, y));
        }
    }
    for w in (0..state.order()).rev() {
        if image >> w & 1 == 0 {
            ops.push(MinorOp::DeleteVertex(w));
        }
    }
    // final label of w is its rank inside the image
    let embedding = map
        .iter()
        .map(|&w| (image & ((1u64 << w) - 1)).count_ones() as usize)
        .collect();
    MinorWitness { ops, embedding }
}

fn check_limit(host: &Graph, limit: usize) -> Result<()> {
    if host.order() > limit {
        Err(IepgError::InstanceTooLarge { order: host.order(), limit })
    } else {
        Ok(())
    }
}

/// Searches for `pattern` as a minor of `host`.
pub fn find_minor(pattern: &Graph, host: &Graph, limit: usize) -> Result<Option<MinorWitness>> {
    check_limit(host, limit)?;
    if pattern.order() > host.order() || pattern.size() > host.size() {
        return Ok(None);
    }
    let mut seen = HashSet::new();
    seen.insert(canonical_form(host));
    let mut stack = vec![(host.clone(), Vec::new())];
    while let Some((state, ops)) = stack.pop() {
        if let Some(map) = find_subgraph_embedding(pattern, &state) {
            return Ok(Some(finish_witness(pattern, &state, &map, ops)));
        }
        if state.order() == pattern.order() {
            continue;
        }
        for (u, v) in state.edges() {
            let next = state.contract_edge(u, v)?;
            if next.size() < pattern.size() || !seen.insert(canonical_form(&next)) {
                continue;
            }
            let mut next_ops = ops.clone();
            next_ops.push(MinorOp::ContractEdge(u, v));
            stack.push((next, next_ops));
        }
    }
    Ok(None)
}

pub fn is_minor(pattern: &Graph, host: &Graph) -> Result<bool> {
    Ok(find_minor(pattern, host, DEFAULT_MINOR_LIMIT)?.is_some())
}

/// All contraction states of a host down to a given order, one per isomorphism class.
pub struct ContractionClosure {
    states: Vec<(Graph, Vec<MinorOp>)>,
}

impl ContractionClosure {
    pub fn new(host: &Graph, min_order: usize, min_size: usize, limit: usize) -> Result<Self> {
        check_limit(host, limit)?;
        let mut seen = HashSet::new();
        seen.insert(canonical_form(host));
        let mut states = vec![(host.clone(), Vec::new())];
        let mut i = 0;
        while i < states.len() {
            let (state, ops) = states[i].clone();
            i += 1;
            if state.order() <= min_order {
                continue;
            }
            for (u, v) in state.edges() {
                let next = state.contract_edge(u, v)?;
                if next.size() < min_size || !seen.insert(canonical_form(&next)) {
                    continue;
                }
                let mut next_ops = ops.clone();
                next_ops.push(MinorOp::ContractEdge(u, v));
                states.push((next, next_ops));
            }
        }
        Ok(ContractionClosure { states })
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn find(&self, pattern: &Graph) -> Option<MinorWitness> {
        self.states.iter().find_map(|(state, ops)| {
            find_subgraph_embedding(pattern, state).map(|map| finish_witness(pattern, state, &map, ops.clone()))
        })
    }
}

/// Fixed minor families used by the multiplicity theorems.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorFamily {
    /// The eleven minimal graphs whose minors force room for two multiple eigenvalues.
    TwoMultiple,
    /// The six minimal graphs allowing two consecutive multiple eigenvalues.
    ConsecutiveMultiple,
}

impl MinorFamily {
    pub fn member_names(&self) -> &'static [&'static str] {
        match self {
            MinorFamily::TwoMultiple => &[
                "K3+K3",
                "K3+K13",
                "K13+K13",
                "C4",
                "Campstool",
                "H-tree",
                "3-sun",
                "K16",
                "S(2,1,1,1,1)",
                "S(2,2,1,1)",
                "S(2,2,2)",
            ],
            MinorFamily::ConsecutiveMultiple => {
                &["K3+K3", "K3+K13", "K13+K13", "C4", "Campstool", "H-tree"]
            }
        }
    }

    pub fn members(&self) -> Vec<(&'static str, Graph)> {
        self.member_names()
            .iter()
            .map(|&name| (name, named_graph(name).expect("family member is named")))
            .collect()
    }

    pub fn parse(s: &str) -> Result<MinorFamily> {
        match s.to_ascii_lowercase().as_str() {
            "eleven" | "two-multiple" | "f2" => Ok(MinorFamily::TwoMultiple),
            "six" | "consecutive" | "f2'" | "f2prime" => Ok(MinorFamily::ConsecutiveMultiple),
            _ => Err(IepgError::UnknownName(s.to_string())),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            MinorFamily::TwoMultiple => "two-multiple",
            MinorFamily::ConsecutiveMultiple => "consecutive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub family: MinorFamily,
    pub has_minor: bool,
    pub present: Vec<(&'static str, MinorWitness)>,
}

impl FamilyReport {
    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family.label(),
            "has_minor": self.has_minor,
            "members_present": self.present.iter().map(|(n, _)| n).collect::<Vec<_>>(),
            "witnesses": self.present.iter().map(|(n, w)| json!({"member": n, "witness": w.to_json()})).collect::<Vec<_>>(),
        })
    }
}

/// Checks every member of the family against one shared contraction closure.
pub fn family_minor_check(host: &Graph, family: MinorFamily, limit: usize) -> Result<FamilyReport> {
    let members = family.members();
    let min_order = members.iter().map(|(_, g)| g.order()).min().unwrap_or(0);
    let min_size = members.iter().map(|(_, g)| g.size()).min().unwrap_or(0);
    let closure = ContractionClosure::new(host, min_order, min_size, limit)?;
    let mut present = Vec::new();
    for (name, g) in members {
        if g.order() > host.order() || g.size() > host.size() {
            continue;
        }
        if let Some(w) = closure.find(&g) {
            present.push((name, w));
        }
    }
    Ok(FamilyReport { family, has_minor: !present.is_empty(), present })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn witness_replays_to_pattern() {
        for (p, h) in [("Campstool", "Bfly"), ("K4", "W5"), ("C4", "S(2,2,2)+C5"), ("K3", "3-sun")] {
            let host = named_graph(h).unwrap();
            let pattern = named_graph(p).unwrap();
            let w = find_minor(&pattern, &host, DEFAULT_MINOR_LIMIT).unwrap().unwrap();
            let got = w.replay(&host).unwrap();
            assert!(is_isomorphic(&got, &pattern));
            for (a, b) in pattern.edges() {
                assert!(got.has_edge(w.embedding[a], w.embedding[b]));
            }
        }
        // both belong to the minimal family, so neither contains the other
        assert!(!is_minor(&named_graph("Campstool").unwrap(), &named_graph("3-sun").unwrap()).unwrap());
    }

    #[test]
    fn cycles_and_paths() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(is_minor(&Graph::cycle(4).unwrap(), &c5).unwrap());
        assert!(!is_minor(&Graph::complete(4), &c5).unwrap());
        assert!(!is_minor(&Graph::cycle(3).unwrap(), &Graph::path(6)).unwrap());
        assert!(is_minor(&Graph::empty(0).unwrap(), &c5).unwrap());
    }

    #[test]
    fn limit_is_enforced() {
        let big = Graph::path(13);
        assert!(matches!(
            find_minor(&Graph::path(2), &big, DEFAULT_MINOR_LIMIT),
            Err(IepgError::InstanceTooLarge { .. })
        ));
        assert!(find_minor(&Graph::path(2), &big, 13).unwrap().is_some());
    }

    #[test]
    fn families_on_small_hosts() {
        let r = family_minor_check(&named_graph("C5").unwrap(), MinorFamily::TwoMultiple, 12).unwrap();
        assert!(r.has_minor);
        assert_eq!(r.present.iter().map(|p| p.0).collect::<Vec<_>>(), vec!["C4"]);
        let r = family_minor_check(&named_graph("Paw").unwrap(), MinorFamily::ConsecutiveMultiple, 12).unwrap();
        assert!(!r.has_minor);
    }
}
