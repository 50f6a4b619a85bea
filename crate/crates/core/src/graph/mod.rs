//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitmasks.

mod canon;
mod classify;
mod enumerate;
mod io;
mod minor;
mod named;

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonicalForm};
pub use classify::{
    classify, is_generalized_3sun, is_generalized_star, is_path, is_star_or_3sun_plus_paths,
    Classification,
};
pub use enumerate::{all_graphs, connected_graphs};
pub use minor::{
    family_minor_check, find_minor, find_subgraph_embedding, is_minor, ContractionClosure,
    FamilyReport, MinorFamily, MinorOp, MinorWitness, DEFAULT_MINOR_LIMIT,
};
pub use named::{named_graph, named_graph_names, NAMED_GRAPHS};

use crate::error::{IepgError, Result};

pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

pub(crate) fn mask_iter(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(IepgError::InstanceTooLarge { order: n, limit: MAX_ORDER });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from 0-based edge pairs. Repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(IepgError::SelfLoop(u));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("order within limit");
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v, true);
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(IepgError::domain("a cycle needs at least 3 vertices"));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges)
    }

    /// K_{a,b}; the first `a` vertices form one side.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        if on {
            self.adj[u] |= bit(v);
            self.adj[v] |= bit(u);
        } else {
            self.adj[u] &= !bit(v);
            self.adj[v] &= !bit(u);
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(IepgError::VertexOutOfRange { vertex: v, order: self.n })
        } else {
            Ok(())
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        mask_iter(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn all_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for i in 0..self.n {
            out.extend(mask_iter(self.adj[i]).filter(|&j| j > i).map(|j| (i, j)));
        }
        out
    }

    /// Non-adjacent pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn nonedges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Removes `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced(&keep))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(IepgError::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.set_edge(u, v, false);
        Ok(g)
    }

    /// Identifies the endpoints of edge `{u, v}`. The merged vertex keeps the
    /// smaller label and the larger one is removed.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(IepgError::NotAnEdge(u, v));
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let mut g = self.clone();
        let merged = (g.adj[a] | g.adj[b]) & !bit(a) & !bit(b);
        for w in mask_iter(g.adj[b]) {
            g.adj[w] &= !bit(b);
        }
        g.adj[b] = 0;
        for w in mask_iter(merged) {
            g.set_edge(a, w, true);
        }
        g.delete_vertex(b)
    }

    /// Appends a new vertex adjacent to `nbrs`.
    pub fn add_vertex(&self, nbrs: &[usize]) -> Result<Graph> {
        let mut g = Graph::empty(self.n + 1)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for &u in nbrs {
            g.check_vertex(u)?;
            if u == self.n {
                return Err(IepgError::SelfLoop(u));
            }
            g.set_edge(u, self.n, true);
        }
        Ok(g)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(IepgError::SelfLoop(u));
        }
        let mut g = self.clone();
        g.set_edge(u, v, true);
        Ok(g)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for (i, &m) in other.adj.iter().enumerate() {
            g.adj[self.n + i] = m << self.n;
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let all = self.all_mask();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `keep`, relabeled in the order given.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len()).expect("smaller than parent");
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(a, b, true);
                }
            }
        }
        g
    }

    /// Graph with vertex `v` renamed to `map[v]`; `map` must be a permutation.
    pub fn relabeled(&self, map: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n).expect("same order");
        for (u, v) in self.edges() {
            g.set_edge(map[u], map[v], true);
        }
        g
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let comp = self.reach(s);
            seen |= comp;
            out.push(mask_iter(comp).collect());
        }
        out
    }

    pub(crate) fn reach(&self, s: usize) -> u64 {
        let mut comp = bit(s);
        let mut frontier = bit(s);
        while frontier != 0 {
            let mut next = 0;
            for v in mask_iter(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !comp;
            comp |= next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0) == self.all_mask()
    }

    /// |E| - |V| + (number of components).
    pub fn cyclomatic_number(&self) -> usize {
        self.size() + self.components().len() - self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.size() + 1 == self.n
    }

    pub fn is_forest(&self) -> bool {
        self.cyclomatic_number() == 0
    }

    /// Connected with exactly one cycle.
    pub fn is_unicyclic(&self) -> bool {
        self.is_connected() && self.size() == self.n
    }

    /// Length of the unique cycle of a unicyclic graph.
    pub fn unicyclic_cycle_length(&self) -> Option<usize> {
        if !self.is_unicyclic() {
            return None;
        }
        // strip leaves until only the cycle is left
        let mut alive = self.all_mask();
        loop {
            let leaf = mask_iter(alive).find(|&v| (self.adj[v] & alive).count_ones() <= 1);
            match leaf {
                Some(v) => alive &= !bit(v),
                None => break,
            }
        }
        Some(alive.count_ones() as usize)
    }

    /// True if every edge of `self` is an edge of `other` (same labels, same order).
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && (0..self.n).all(|v| self.adj[v] & !other.adj[v] == 0)
    }

    /// Vertices are twins when swapping them is an automorphism.
    pub(crate) fn are_twins(&self, u: usize, v: usize) -> bool {
        self.adj[u] & !bit(v) == self.adj[v] & !bit(u)
    }
}

impl std::fmt::Display for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "n={} E={{", self.n)?;
        for (k, (u, v)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}{}", u + 1, v + 1)?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_counts() {
        let g = Graph::cycle(5).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 5);
        assert!(g.is_unicyclic());
        assert_eq!(g.unicyclic_cycle_length(), Some(5));
        assert_eq!(g.nonedges().len(), 5);
        assert_eq!(Graph::complete(5).size(), 10);
        assert!(Graph::path(4).is_tree());
    }

    #[test]
    fn contraction_of_a_cycle_edge_shortens_it() {
        let c5 = Graph::cycle(5).unwrap();
        let c4 = c5.contract_edge(0, 1).unwrap();
        assert_eq!(c4, Graph::cycle(4).unwrap().relabeled(&[0, 1, 2, 3]));
        assert!(is_isomorphic(&c4, &Graph::cycle(4).unwrap()));
        assert_eq!(c4.size(), 4);
        let k3 = Graph::complete(3).contract_edge(1, 2).unwrap();
        assert_eq!(k3, Graph::path(2));
    }

    #[test]
    fn delete_vertex_shifts_labels() {
        let p = Graph::path(4).delete_vertex(1).unwrap();
        assert_eq!(p.edges(), vec![(1, 2)]);
        assert!(Graph::path(3).delete_vertex(3).is_err());
        assert!(Graph::path(3).delete_edge(0, 2).is_err());
        assert!(Graph::path(3).contract_edge(0, 2).is_err());
    }

    #[test]
    fn complement_and_union() {
        let g = Graph::complete(3).disjoint_union(&Graph::path(2)).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(g.complement().size(), 10 - 4);
        assert_eq!(g.cyclomatic_number(), 1);
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = Graph::from_edges(4, &[(3, 0), (2, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2)]);
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
    }
}
