//! Undirected simple graphs on up to 64 vertices, stored as bitmask adjacency rows.

use crate::error::{Error, Result};

/// Hard representation limit: one `u64` row per vertex.
pub const MAX_VERTICES: usize = 64;

/// An undirected simple graph with `1 <= n <= 64` vertices.
///
/// `rows[v]` is the neighbor bitset of vertex `v`. The matrix is kept
/// symmetric with a zero diagonal at all times.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, e={}, edges={:?})", self.n, self.edge_count(), self.edges())
    }
}

#[inline]
const fn bit(v: usize) -> u64 {
    1u64 << v
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::OrderOverflow { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = if n == 64 { u64::MAX } else { bit(n) - 1 };
        for v in 0..n {
            g.rows[v] = all & !bit(v);
        }
        Ok(g)
    }

    /// Path `P_n` on vertices `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 0..n.saturating_sub(1) {
            g.add_edge(v, v + 1);
        }
        Ok(g)
    }

    /// Cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidInput(format!("cycle needs n >= 3, got {n}")));
        }
        let mut g = Graph::path(n)?;
        g.add_edge(n - 1, 0);
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidInput(format!("bad edge ({u},{v}) for n = {n}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.rows[u] >> v) & 1 == 1
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] |= bit(v);
        self.rows[v] |= bit(u);
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !bit(v);
        self.rows[v] &= !bit(u);
    }

    /// Neighbor bitset of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        let total: u32 = self.rows.iter().map(|r| r.count_ones()).sum();
        (total / 2) as usize
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut m = self.rows[u] >> (u + 1) << (u + 1);
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Join `G ∨ H`: disjoint union plus all cross edges.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in self.n..self.n + other.n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Disjoint union `G ∪ H`; vertices of `H` are shifted by `|G|`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::OrderOverflow { n, max: MAX_VERTICES });
        }
        let mut rows = Vec::with_capacity(n);
        rows.extend_from_slice(&self.rows);
        rows.extend(other.rows.iter().map(|r| r << self.n));
        Ok(Graph { n, rows })
    }

    /// Complement within the same vertex set.
    pub fn complement(&self) -> Graph {
        let all = if self.n == 64 { u64::MAX } else { bit(self.n) - 1 };
        let rows = (0..self.n).map(|v| all & !self.rows[v] & !bit(v)).collect();
        Graph { n: self.n, rows }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = bit(0);
        let mut frontier = bit(0);
        while frontier != 0 {
            let mut next = 0u64;
            let mut m = frontier;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Relabel by `perm`: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, rows: vec![0; self.n] };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

/// `K_{a-1} ∨ (K_{n-a} ∪ K_1)`: the threshold extremal graph.
///
/// It has `C(n-1,2) + a - 1` edges and minimum degree `min(a-1, n-2)`.
pub fn threshold_extremal(a: usize, n: usize) -> Result<Graph> {
    if a == 0 {
        return Err(Error::InvalidInput("a must be >= 1".into()));
    }
    if n <= a {
        return Err(Error::InvalidInput(format!(
            "threshold extremal graph needs n >= a+1, got a = {a}, n = {n}"
        )));
    }
    let joined = Graph::complete(n - a)?.disjoint_union(&Graph::empty(1)?)?;
    if a == 1 {
        return Ok(joined);
    }
    Graph::complete(a - 1)?.join(&joined)
}

/// The unique spectral maximizer among `n`-vertex graphs with `e` edges:
/// `(K_t ∨ (K_{r-t} ∪ K_1)) ∪ (n-r-1)K_1` where `e = C(r,2) + t`, `0 < t <= r`.
pub fn edge_spectral_extremal(n: usize, e: usize) -> Result<Graph> {
    if e == 0 {
        return Err(Error::InvalidInput("e must be positive".into()));
    }
    // r is the unique value with C(r,2) < e <= C(r+1,2).
    let mut r = 1;
    while (r + 1) * r / 2 < e {
        r += 1;
    }
    let t = e - r * (r - 1) / 2;
    debug_assert!(t >= 1 && t <= r);
    if r + 1 > n {
        return Err(Error::InvalidInput(format!(
            "no decomposition e = C(r,2)+t with r+1 <= n (need {} vertices, have {n})",
            r + 1
        )));
    }
    // t = r collapses K_{r-t} to nothing; the kernel is then just the K_1
    let kernel = if r == t {
        Graph::empty(1)?
    } else {
        Graph::complete(r - t)?.disjoint_union(&Graph::empty(1)?)?
    };
    let core = Graph::complete(t)?.join(&kernel)?;
    if n == r + 1 {
        Ok(core)
    } else {
        core.disjoint_union(&Graph::empty(n - r - 1)?)
    }
}
