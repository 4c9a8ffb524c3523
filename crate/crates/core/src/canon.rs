//! Canonical forms and isomorphism testing.
//!
//! The canonical form is the lexicographically minimal adjacency bit string
//! (upper triangle, column-major, the graph6 bit order) over all vertex
//! orderings consistent with a vertex-invariant refinement. Candidates at
//! each position are restricted to the invariant cell required there and
//! deduplicated by twin classes, which keeps the search shallow on the
//! highly symmetric graphs this crate constructs. Intended for n <= 10;
//! exact for any n it finishes on.

use std::collections::HashMap;

use crate::graph::Graph;
use crate::graph6::to_graph6;

/// Byte string identifying an isomorphism class: the graph6 encoding of the
/// canonically relabeled graph. Equal codes hold exactly for isomorphic
/// graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    code: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.code
    }

    /// The code is printable ASCII (it is a graph6 string).
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.code).expect("canonical codes are ASCII")
    }
}

impl std::fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

/// Per-vertex invariant: (degree, sorted multiset of neighbor degrees).
fn vertex_keys(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let n = g.n();
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    (0..n)
        .map(|v| {
            let mut nd = Vec::with_capacity(deg[v]);
            let mut m = g.neighbors(v);
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                nd.push(deg[u]);
            }
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect()
}

/// Twin classes: vertices u, v are twins when swapping them is an
/// automorphism, i.e. their neighborhoods agree outside {u, v}.
fn twin_representatives(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut rep: Vec<usize> = (0..n).collect();
    for u in 0..n {
        if rep[u] != u {
            continue;
        }
        for v in (u + 1)..n {
            if rep[v] != v {
                continue;
            }
            let mask = !((1u64 << u) | (1u64 << v));
            if g.neighbors(u) & mask == g.neighbors(v) & mask {
                rep[v] = u;
            }
        }
    }
    rep
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    cell_of: Vec<u32>,
    target_cell: Vec<u32>,
    twin_rep: Vec<usize>,
    // columns of the code built so far; cols[k] holds bits x_{pos i, pos k}
    cols: Vec<u64>,
    perm: Vec<usize>,       // position -> original vertex
    used: u64,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl<'a> Search<'a> {
    fn run(g: &'a Graph) -> Vec<usize> {
        let n = g.n();
        let keys = vertex_keys(g);
        // canonical cell ids: sort the distinct keys ascending
        let mut sorted: Vec<&(usize, Vec<usize>)> = keys.iter().collect();
        sorted.sort();
        sorted.dedup();
        let cell_index: HashMap<&(usize, Vec<usize>), u32> =
            sorted.iter().enumerate().map(|(i, k)| (*k, i as u32)).collect();
        let cell_of: Vec<u32> = keys.iter().map(|k| cell_index[k]).collect();
        let mut target_cell = cell_of.clone();
        target_cell.sort_unstable();

        let mut s = Search {
            g,
            n,
            cell_of,
            target_cell,
            twin_rep: twin_representatives(g),
            cols: vec![0; n],
            perm: vec![0; n],
            used: 0,
            best: None,
        };
        s.descend(0, true);
        s.best.expect("search always completes").1
    }

    fn descend(&mut self, depth: usize, tight: bool) {
        if depth == self.n {
            if tight {
                return; // identical to the current best
            }
            match &self.best {
                Some((bc, _)) if *bc <= self.cols => {}
                _ => self.best = Some((self.cols.clone(), self.perm.clone())),
            }
            return;
        }
        // candidates: unused vertices of the required cell, one per twin class
        let mut cands: Vec<(u64, usize)> = Vec::new();
        let mut seen_twins: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if self.used >> v & 1 == 1 || self.cell_of[v] != self.target_cell[depth] {
                continue;
            }
            let r = self.twin_rep[v];
            if seen_twins.contains(&r) {
                continue;
            }
            seen_twins.push(r);
            // column bits of v against the placed prefix
            let mut col = 0u64;
            for (i, &u) in self.perm[..depth].iter().enumerate() {
                col |= u64::from(self.g.has_edge(u, v)) << i;
            }
            cands.push((col, v));
        }
        cands.sort_unstable();
        for (col, v) in cands {
            let (next_tight, prune) = match &self.best {
                Some((bc, _)) if tight => match col.cmp(&bc[depth]) {
                    std::cmp::Ordering::Greater => (false, true),
                    std::cmp::Ordering::Equal => (true, false),
                    std::cmp::Ordering::Less => (false, false),
                },
                Some(_) => (false, false),
                None => (false, false),
            };
            if prune {
                break; // candidates are sorted; the rest are larger
            }
            self.cols[depth] = col;
            self.perm[depth] = v;
            self.used |= 1 << v;
            self.descend(depth + 1, next_tight);
            self.used &= !(1 << v);
        }
    }
}

/// Canonical labeling of `g`: `result[v]` is the canonical position of `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let pos_to_vertex = Search::run(g);
    let mut lab = vec![0; g.n()];
    for (pos, &v) in pos_to_vertex.iter().enumerate() {
        lab[v] = pos;
    }
    lab
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm { code: to_graph6(&canonical_graph(g)).into_bytes() }
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::threshold_extremal;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn p4_relabelings_are_isomorphic() {
        let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        // the path 2-0-3-1
        let b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert!(are_isomorphic(&a, &b));
    }

    #[test]
    fn star_vs_path_not_isomorphic() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let path = Graph::path(4).unwrap();
        assert!(!are_isomorphic(&star, &path));
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(canonical_form(&c5), canonical_form(&c5.complement()));
    }

    #[test]
    fn random_relabelings_share_the_code() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xab);
        let graphs = [
            Graph::path(7).unwrap(),
            Graph::cycle(6).unwrap(),
            threshold_extremal(3, 8).unwrap(),
            Graph::complete(5).unwrap().disjoint_union(&Graph::complete(3).unwrap()).unwrap(),
            Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap(),
        ];
        for g in &graphs {
            let code = canonical_form(g);
            let mut perm: Vec<usize> = (0..g.n()).collect();
            for _ in 0..1000 {
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&g.relabel(&perm)), code);
            }
        }
    }

    #[test]
    fn symmetric_graphs_canonicalize_quickly() {
        // big automorphism groups must not blow the search up
        let kpq = Graph::from_edges(
            12,
            &(0..6).flat_map(|i| (6..12).map(move |j| (i, j))).collect::<Vec<_>>(),
        )
        .unwrap();
        let star = Graph::from_edges(26, &(1..26).map(|v| (0, v)).collect::<Vec<_>>()).unwrap();
        let code1 = canonical_form(&kpq);
        let code2 = canonical_form(&star);
        assert_ne!(code1, code2);
        assert_eq!(canonical_graph(&kpq).edge_count(), 36);
    }
}
