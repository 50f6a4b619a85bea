//! Structural classes appearing in the two-multiple-eigenvalue theorems.

use serde_json::{json, Value};

use super::{family_minor_check, Graph, MinorFamily};
use crate::error::Result;

pub fn is_path(g: &Graph) -> bool {
    g.is_tree() && (0..g.order()).all(|v| g.degree(v) <= 2)
}

/// A tree with at most one vertex of degree three or more.
pub fn is_generalized_star(g: &Graph) -> bool {
    g.is_tree() && (0..g.order()).filter(|&v| g.degree(v) >= 3).count() <= 1
}

/// A triangle with a path (possibly empty) hanging from each of its vertices.
/// Equivalently: connected, unicyclic with a 3-cycle, triangle vertices of
/// degree at most 3 and all other vertices of degree at most 2.
pub fn is_generalized_3sun(g: &Graph) -> bool {
    if g.unicyclic_cycle_length() != Some(3) {
        return false;
    }
    let n = g.order();
    (0..n).all(|v| {
        let on_triangle = g.neighbors(v).any(|u| g.neighbors(u).any(|w| w != v && g.has_edge(w, v)));
        g.degree(v) <= if on_triangle { 3 } else { 2 }
    })
}

/// Disjoint union of paths and at most one further component that is a
/// generalized star or a generalized 3-sun.
pub fn is_star_or_3sun_plus_paths(g: &Graph) -> bool {
    let mut special = 0;
    for comp in g.components() {
        let c = g.induced(&comp);
        if is_path(&c) {
            continue;
        }
        if is_generalized_star(&c) || is_generalized_3sun(&c) {
            special += 1;
        } else {
            return false;
        }
    }
    special <= 1
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub connected: bool,
    pub tree: bool,
    pub generalized_star: bool,
    pub generalized_3sun: bool,
    pub star_or_3sun_plus_paths: bool,
    pub two_multiple_minor: Vec<&'static str>,
    pub consecutive_minor: Vec<&'static str>,
}

impl Classification {
    /// Some realization has two multiple eigenvalues.
    pub fn allows_two_multiple(&self) -> bool {
        !self.two_multiple_minor.is_empty()
    }

    /// Some realization has two consecutive multiple eigenvalues.
    pub fn allows_consecutive_multiple(&self) -> bool {
        !self.consecutive_minor.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "connected": self.connected,
            "tree": self.tree,
            "generalized_star": self.generalized_star,
            "generalized_3sun": self.generalized_3sun,
            "star_or_3sun_plus_paths": self.star_or_3sun_plus_paths,
            "two_multiple_minors": self.two_multiple_minor,
            "consecutive_minors": self.consecutive_minor,
            "allows_two_multiple": self.allows_two_multiple(),
            "allows_consecutive_multiple": self.allows_consecutive_multiple(),
        })
    }
}

pub fn classify(g: &Graph, limit: usize) -> Result<Classification> {
    let two = family_minor_check(g, MinorFamily::TwoMultiple, limit)?;
    let six = family_minor_check(g, MinorFamily::ConsecutiveMultiple, limit)?;
    Ok(Classification {
        connected: g.is_connected(),
        tree: g.is_tree(),
        generalized_star: is_generalized_star(g),
        generalized_3sun: is_generalized_3sun(g),
        star_or_3sun_plus_paths: is_star_or_3sun_plus_paths(g),
        two_multiple_minor: two.present.iter().map(|p| p.0).collect(),
        consecutive_minor: six.present.iter().map(|p| p.0).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    #[test]
    fn small_classes() {
        let g = |s| named_graph(s).unwrap();
        assert!(is_generalized_star(&g("S(2,2,2)")));
        assert!(!is_generalized_star(&g("H-tree")));
        assert!(is_generalized_3sun(&g("3-sun")));
        assert!(is_generalized_3sun(&g("K3")));
        assert!(is_generalized_3sun(&g("Paw")));
        assert!(is_generalized_3sun(&g("Bull")));
        assert!(!is_generalized_3sun(&g("Campstool")));
        assert!(!is_generalized_3sun(&g("C4")));
        assert!(is_star_or_3sun_plus_paths(&g("K13+P3+K1")));
        assert!(!is_star_or_3sun_plus_paths(&g("K13+K13")));
        assert!(!is_star_or_3sun_plus_paths(&g("K3+K3")));
    }
}
