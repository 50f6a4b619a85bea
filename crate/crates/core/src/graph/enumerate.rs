//! Isomorphism classes of small graphs, grown one vertex at a time.

use std::collections::HashSet;

use super::{canonical_form, Graph};

/// One representative of every graph on `n` vertices (n at most 10).
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 10, "enumeration is only practical for small orders");
    let mut level = vec![Graph::empty(0).expect("empty graph")];
    for k in 0..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for subset in 0u64..(1u64 << k) {
                let nbrs: Vec<usize> = (0..k).filter(|&v| subset >> v & 1 == 1).collect();
                let h = g.add_vertex(&nbrs).expect("within limit");
                let form = canonical_form(&h);
                if seen.insert(form.clone()) {
                    next.push(form.to_graph());
                }
            }
        }
        level = next;
    }
    level
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}
