//! Exhaustive enumeration of small graphs, one representative per
//! isomorphism class.
//!
//! Graphs are grown one edge at a time: every class with `e+1` edges
//! contains a class with `e` edges, so deduplicating each edge-count
//! stratum by canonical form is complete. Memory stays proportional to the
//! class counts, never the `2^C(n,2)` labeled counts.

use std::collections::BTreeMap;

use crate::bipartite::BipartiteGraph;
use crate::canon::{canonical_form, canonical_graph, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Enumeration caps. Full enumeration defaults to `n <= 7` (1044 classes);
/// `n = 8` (12346 classes) is opt-in. Orders of 9 and above are refused.
#[derive(Clone, Copy, Debug)]
pub struct EnumCaps {
    pub max_full_n: usize,
    pub max_bipartite_cells: usize,
}

impl Default for EnumCaps {
    fn default() -> Self {
        EnumCaps { max_full_n: 7, max_bipartite_cells: 25 }
    }
}

/// Hard ceiling for full enumeration regardless of caps.
pub const FULL_ENUMERATION_LIMIT: usize = 8;

/// All graphs on `n` vertices with at most `max_edges` edges, one per
/// isomorphism class, grouped and ordered by edge count, canonical order
/// within each stratum.
pub fn enumerate_graphs_max_edges(n: usize, max_edges: usize) -> Result<Vec<Graph>> {
    let empty = Graph::empty(n)?;
    let max_edges = max_edges.min(n * (n - 1) / 2);
    let mut stratum: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    stratum.insert(canonical_form(&empty), empty);
    let mut out: Vec<Graph> = Vec::new();
    for _e in 0..=max_edges {
        out.extend(stratum.values().cloned());
        if _e == max_edges {
            break;
        }
        let mut next: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for g in stratum.values() {
            for u in 0..n {
                for v in (u + 1)..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let mut h = g.clone();
                    h.add_edge(u, v);
                    let canon = canonical_graph(&h);
                    next.entry(canonical_form(&canon)).or_insert(canon);
                }
            }
        }
        stratum = next;
    }
    Ok(out)
}

/// One representative per isomorphism class of all graphs on `n` vertices,
/// in deterministic order. Capped by `caps.max_full_n` and hard-limited to
/// `n <= 8`.
pub fn enumerate_graphs(n: usize, caps: &EnumCaps) -> Result<Vec<Graph>> {
    let cap = caps.max_full_n.min(FULL_ENUMERATION_LIMIT);
    if n > cap {
        return Err(Error::EnumerationCapExceeded { what: "full enumeration order", got: n, cap });
    }
    enumerate_graphs_max_edges(n, n * (n - 1) / 2)
}

/// All graphs (up to isomorphism) whose complement has at most `m` edges:
/// the sparse classes are enumerated and complemented on emission.
pub fn enumerate_cocktail(n: usize, m: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_graphs_max_edges(n, m)?.iter().map(Graph::complement).collect())
}

/// Part-respecting canonical key of a biadjacency matrix: the minimum over
/// permutations of the smaller side of the sorted vector of opposite-side
/// bit rows. Exact for the `S_p x S_q` action.
fn bipartite_key(bg: &BipartiteGraph) -> Vec<u64> {
    let (p, q) = (bg.p(), bg.q());
    // orient so the permuted side is the smaller one
    let (rows, perm_side, other_side): (Vec<u64>, usize, usize) = if p <= q {
        ((0..q).map(|y| bg.y_neighbors(y)).collect(), p, q)
    } else {
        ((0..p).map(|x| bg.x_neighbors(x)).collect(), q, p)
    };
    // rows: other_side entries, each a perm_side-bit mask to be permuted
    let mut best: Option<Vec<u64>> = None;
    let mut perm: Vec<usize> = (0..perm_side).collect();
    permute_all(&mut perm, &mut |perm| {
        let mut cand: Vec<u64> = rows
            .iter()
            .map(|&r| {
                let mut v = 0u64;
                for (new, &old) in perm.iter().enumerate() {
                    v |= ((r >> old) & 1) << new;
                }
                v
            })
            .collect();
        cand.sort_unstable();
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    });
    let mut key = best.expect("at least the identity permutation");
    key.push(other_side as u64); // disambiguate shapes with equal masks
    key
}

fn permute_all(items: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    fn heap(k: usize, items: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k {
            heap(k - 1, items, f);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let k = items.len();
    heap(k, items, f);
}

/// Rebuilds the representative with parts `(p, q)` from a canonical key.
fn bipartite_from_key(p: usize, q: usize, key: &[u64]) -> BipartiteGraph {
    let masks = &key[..key.len() - 1];
    let mut bg = BipartiteGraph::empty(p, q).expect("sizes already validated");
    for (row, &m) in masks.iter().enumerate() {
        let mut mm = m;
        while mm != 0 {
            let col = mm.trailing_zeros() as usize;
            mm &= mm - 1;
            // for p <= q the key rows are Y-neighborhoods, otherwise X-rows
            if p <= q {
                bg.add_edge(col, row);
            } else {
                bg.add_edge(row, col);
            }
        }
    }
    bg
}

/// One representative per `S_p x S_q` class of bipartite graphs with parts
/// of sizes `(p, q)`, ordered by edge count then canonical key. Capped at
/// `p*q <= caps.max_bipartite_cells`.
pub fn enumerate_bipartite(p: usize, q: usize, caps: &EnumCaps) -> Result<Vec<BipartiteGraph>> {
    if p * q > caps.max_bipartite_cells {
        return Err(Error::EnumerationCapExceeded {
            what: "bipartite cells",
            got: p * q,
            cap: caps.max_bipartite_cells,
        });
    }
    let empty = BipartiteGraph::empty(p, q)?;
    let mut stratum: BTreeMap<Vec<u64>, BipartiteGraph> = BTreeMap::new();
    stratum.insert(bipartite_key(&empty), empty);
    let mut out = Vec::new();
    for e in 0..=(p * q) {
        out.extend(stratum.values().cloned());
        if e == p * q {
            break;
        }
        let mut next: BTreeMap<Vec<u64>, BipartiteGraph> = BTreeMap::new();
        for bg in stratum.values() {
            for x in 0..p {
                for y in 0..q {
                    if bg.has_edge(x, y) {
                        continue;
                    }
                    let mut h = bg.clone();
                    h.add_edge(x, y);
                    let key = bipartite_key(&h);
                    next.entry(key.clone()).or_insert_with(|| bipartite_from_key(p, q, &key));
                }
            }
        }
        stratum = next;
    }
    Ok(out)
}
