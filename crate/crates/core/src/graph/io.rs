//! JSON (1-based edge list) and graph6 encodings.

use petgraph::graph::UnGraph;
use petgraph::graph6::{from_graph6_representation, get_graph6_representation};
use serde::{Deserialize, Serialize};

use super::{Graph, MAX_ORDER};
use crate::error::{IepgError, Result};

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Graph {
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<[usize; 2]> = self.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect();
        serde_json::to_value(GraphJson { n: self.order(), edges }).expect("plain data")
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Graph> {
        let raw: GraphJson = serde_json::from_value(v.clone())?;
        let mut edges = Vec::with_capacity(raw.edges.len());
        for [u, v] in raw.edges {
            if u == 0 || v == 0 {
                return Err(IepgError::Parse("edge labels are 1-based".into()));
            }
            edges.push((u - 1, v - 1));
        }
        Graph::from_edges(raw.n, &edges)
    }

    pub fn from_json_str(s: &str) -> Result<Graph> {
        Graph::from_json_value(&serde_json::from_str(s)?)
    }

    pub fn to_graph6(&self) -> String {
        let mut pg = UnGraph::<(), ()>::with_capacity(self.order(), self.size());
        let nodes: Vec<_> = (0..self.order()).map(|_| pg.add_node(())).collect();
        for (u, v) in self.edges() {
            pg.add_edge(nodes[u], nodes[v], ());
        }
        get_graph6_representation(&pg)
    }

    /// Parses a graph6 string, rejecting malformed input instead of panicking.
    pub fn from_graph6(s: &str) -> Result<Graph> {
        let s = s.trim();
        let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
        let bytes = s.as_bytes();
        if bytes.is_empty() || bytes.iter().any(|&b| !(63..=126).contains(&b)) {
            return Err(IepgError::Parse("graph6 characters must lie in 63..=126".into()));
        }
        let (n, header) = if bytes[0] < 126 {
            ((bytes[0] - 63) as usize, 1)
        } else if bytes.len() >= 4 && bytes[1] < 126 {
            let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, 4)
        } else {
            return Err(IepgError::Parse("graph6 order too large".into()));
        };
        if n > MAX_ORDER {
            return Err(IepgError::InstanceTooLarge { order: n, limit: MAX_ORDER });
        }
        let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
        if bytes.len() != header + need {
            return Err(IepgError::Parse(format!(
                "graph6 body has {} characters, expected {need}",
                bytes.len() - header
            )));
        }
        let (order, edges) = from_graph6_representation::<u32>(s.to_string());
        let edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u as usize, v as usize)).collect();
        Graph::from_edges(order, &edges)
    }
}
