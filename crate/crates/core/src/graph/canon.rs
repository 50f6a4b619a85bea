//! Canonical labeling by individualization and colour refinement.
//!
//! The canonical string is the upper triangle of the relabeled adjacency
//! matrix read column by column, and the labeling maximizes it
//! lexicographically. Twin vertices are swapped by an automorphism, so only
//! one of each twin group is tried as a branch.

use super::Graph;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Rebuilds the canonical representative.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("form built from a graph");
        let mut idx = 0;
        for k in 1..self.n {
            for i in 0..k {
                if self.bits[idx / 64] >> (idx % 64) & 1 == 1 {
                    g.set_edge(i, k, true);
                }
                idx += 1;
            }
        }
        g
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Returns the canonical form and the labeling: `order[p]` is the vertex placed at position `p`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    let mut colors: Vec<u32> = g.degrees().iter().map(|&d| d as u32).collect();
    refine(g, &mut colors);
    let mut search = Search { g, best_bits: None, best_order: Vec::new() };
    let mut placed = Vec::with_capacity(n);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    search.dfs(&mut placed, &colors, &mut bits);
    let best = search.best_bits.unwrap_or_default();
    let mut packed = vec![0u64; best.len().div_ceil(64)];
    for (i, &b) in best.iter().enumerate() {
        if b {
            packed[i / 64] |= 1 << (i % 64);
        }
    }
    (CanonicalForm { n, bits: packed }, search.best_order)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g) == canonical_form(h)
}

/// Splits colour classes by the multiset of neighbour colours until stable.
/// New colours are ordered by (old colour, neighbour multiset), which keeps
/// the colouring invariant under isomorphism.
fn refine(g: &Graph, colors: &mut [u32]) {
    let n = colors.len();
    let mut classes = count_classes(colors);
    loop {
        let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort();
        let mut next = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                next += 1;
            }
            colors[sigs[i].2] = next;
        }
        let after = next as usize + 1;
        if n == 0 || after == classes {
            return;
        }
        classes = after;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    g: &'a Graph,
    best_bits: Option<Vec<bool>>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    fn prefix_cmp(&self, bits: &[bool]) -> std::cmp::Ordering {
        match &self.best_bits {
            None => std::cmp::Ordering::Greater,
            Some(best) => bits.cmp(&best[..bits.len()]),
        }
    }

    fn dfs(&mut self, placed: &mut Vec<usize>, colors: &[u32], bits: &mut Vec<bool>) {
        let n = self.g.order();
        if placed.len() == n {
            if self.prefix_cmp(bits) == std::cmp::Ordering::Greater {
                self.best_bits = Some(bits.clone());
                self.best_order = placed.clone();
            }
            return;
        }
        let placed_mask: u64 = placed.iter().map(|&v| 1u64 << v).sum();
        let unplaced: Vec<usize> = (0..n).filter(|v| placed_mask >> v & 1 == 0).collect();
        let min_color = unplaced.iter().map(|&v| colors[v]).min().expect("unplaced nonempty");
        let mut cands: Vec<usize> = Vec::new();
        for &v in &unplaced {
            if colors[v] == min_color && !cands.iter().any(|&u| self.g.are_twins(u, v)) {
                cands.push(v);
            }
        }
        let start = bits.len();
        for v in cands {
            bits.truncate(start);
            bits.extend(placed.iter().map(|&u| self.g.has_edge(u, v)));
            if self.prefix_cmp(bits) == std::cmp::Ordering::Less {
                continue;
            }
            placed.push(v);
            let next = individualize(self.g, colors, placed);
            self.dfs(placed, &next, bits);
            placed.pop();
        }
        bits.truncate(start);
    }
}

// Placed vertices get singleton colours ahead of every unplaced class.
fn individualize(g: &Graph, colors: &[u32], placed: &[usize]) -> Vec<u32> {
    let n = colors.len();
    let mut pos = vec![usize::MAX; n];
    for (p, &v) in placed.iter().enumerate() {
        pos[v] = p;
    }
    let mut keys: Vec<((u8, u64), usize)> = (0..n)
        .map(|v| {
            if pos[v] != usize::MAX {
                ((0, pos[v] as u64), v)
            } else {
                ((1, colors[v] as u64), v)
            }
        })
        .collect();
    keys.sort();
    let mut out = vec![0u32; n];
    let mut next = 0u32;
    for i in 0..n {
        if i > 0 && keys[i].0 != keys[i - 1].0 {
            next += 1;
        }
        out[keys[i].1] = next;
    }
    refine(g, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shuffled(g: &Graph, seed: u64) -> Graph {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rng);
        g.relabeled(&perm)
    }

    #[test]
    fn relabeled_graphs_share_a_form() {
        let graphs = [
            Graph::cycle(6).unwrap(),
            Graph::complete_bipartite(3, 4).unwrap(),
            Graph::path(7),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap(),
        ];
        for g in &graphs {
            let f = canonical_form(g);
            for s in 0..10 {
                assert_eq!(canonical_form(&shuffled(g, s)), f);
            }
            assert!(is_isomorphic(&f.to_graph(), g));
        }
    }

    #[test]
    fn labeling_maps_onto_representative() {
        let g = Graph::from_edges(5, &[(0, 3), (3, 4), (4, 1), (1, 2)]).unwrap();
        let (f, order) = canonical_labeling(&g);
        let mut map = vec![0; 5];
        for (p, &v) in order.iter().enumerate() {
            map[v] = p;
        }
        assert_eq!(g.relabeled(&map), f.to_graph());
    }

    #[test]
    fn non_isomorphic_pairs_differ() {
        // same degree sequence, different graphs
        let c6 = Graph::cycle(6).unwrap();
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3)).unwrap();
        assert!(!is_isomorphic(&c6, &two_k3));
        let p = Graph::path(4);
        let s = Graph::complete_bipartite(1, 3).unwrap();
        assert!(!is_isomorphic(&p, &s));
    }
}
