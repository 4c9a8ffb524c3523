//! Bipartite graphs with labeled parts, and the double nested family.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// A bipartite graph on parts X (size `p`) and Y (size `q`), stored as a
/// `p x q` biadjacency bit matrix with one `u64` row per X-vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    p: usize,
    q: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BipartiteGraph(p={}, q={}, e={})", self.p, self.q, self.edge_count())
    }
}

impl BipartiteGraph {
    pub fn empty(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidInput(format!("parts must be nonempty, got ({p},{q})")));
        }
        if p + q > MAX_VERTICES || q > 64 {
            return Err(Error::OrderOverflow { n: p + q, max: MAX_VERTICES });
        }
        Ok(BipartiteGraph { p, q, rows: vec![0; p] })
    }

    pub fn complete(p: usize, q: usize) -> Result<Self> {
        let mut b = BipartiteGraph::empty(p, q)?;
        let all = if q == 64 { u64::MAX } else { (1u64 << q) - 1 };
        for r in &mut b.rows {
            *r = all;
        }
        Ok(b)
    }

    /// Builds from a row-major biadjacency mask (row `i` occupies bits
    /// `i*q..(i+1)*q`, little-endian). Requires `p*q <= 64`.
    pub fn from_mask(p: usize, q: usize, mask: u64) -> Result<Self> {
        if p * q > 64 {
            return Err(Error::InvalidInput(format!(
                "mask form needs p*q <= 64, got ({p},{q})"
            )));
        }
        let mut b = BipartiteGraph::empty(p, q)?;
        let row = if q == 64 { u64::MAX } else { (1u64 << q) - 1 };
        for i in 0..p {
            b.rows[i] = (mask >> (i * q)) & row;
        }
        Ok(b)
    }

    #[inline]
    pub fn p(&self) -> usize {
        self.p
    }

    #[inline]
    pub fn q(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.p + self.q
    }

    #[inline]
    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        (self.rows[x] >> y) & 1 == 1
    }

    #[inline]
    pub fn add_edge(&mut self, x: usize, y: usize) {
        debug_assert!(x < self.p && y < self.q);
        self.rows[x] |= 1 << y;
    }

    #[inline]
    pub fn remove_edge(&mut self, x: usize, y: usize) {
        self.rows[x] &= !(1 << y);
    }

    /// Neighbor bitset (over Y indices) of X-vertex `x`.
    #[inline]
    pub fn x_neighbors(&self, x: usize) -> u64 {
        self.rows[x]
    }

    /// Neighbor bitset (over X indices) of Y-vertex `y`.
    pub fn y_neighbors(&self, y: usize) -> u64 {
        let mut m = 0u64;
        for x in 0..self.p {
            m |= ((self.rows[x] >> y) & 1) << x;
        }
        m
    }

    pub fn x_degree(&self, x: usize) -> usize {
        self.rows[x].count_ones() as usize
    }

    pub fn y_degree(&self, y: usize) -> usize {
        self.y_neighbors(y).count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// The underlying graph on `p + q` vertices: X is `0..p`, Y is `p..p+q`.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.p + self.q).expect("order checked at construction");
        for x in 0..self.p {
            let mut m = self.rows[x];
            while m != 0 {
                let y = m.trailing_zeros() as usize;
                m &= m - 1;
                g.add_edge(x, self.p + y);
            }
        }
        g
    }

    /// Cross edges as `(x, p + y)` pairs in `to_graph` numbering.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.to_graph().edges()
    }
}

/// The double nested graph `D(p_1..p_h; q_1..q_h)`: block `X_i` is complete
/// to blocks `Y_1..Y_{h+1-i}`. Zero-size blocks are permitted and vanish.
pub fn double_nested(ps: &[usize], qs: &[usize]) -> Result<BipartiteGraph> {
    if ps.len() != qs.len() || ps.is_empty() {
        return Err(Error::InvalidInput(format!(
            "block size lists must have equal nonzero length, got {} and {}",
            ps.len(),
            qs.len()
        )));
    }
    let p: usize = ps.iter().sum();
    let q: usize = qs.iter().sum();
    if p == 0 || q == 0 {
        return Err(Error::InvalidInput("each side needs at least one vertex".into()));
    }
    let h = ps.len();
    let mut b = BipartiteGraph::empty(p, q)?;
    let mut x0 = 0;
    for (i, &pi) in ps.iter().enumerate() {
        // X_{i+1} is adjacent to Y_1 .. Y_{h - i}
        let reach: usize = qs[..h - i].iter().sum();
        let mask = if reach == 64 { u64::MAX } else { (1u64 << reach) - 1 };
        for x in x0..x0 + pi {
            b.rows[x] = mask;
        }
        x0 += pi;
    }
    Ok(b)
}

/// `K_{p,q}^e`: the complete bipartite graph minus `pq - e` edges incident
/// with one vertex of the q-side, for `pq - p < e < pq`.
pub fn near_complete_bipartite(p: usize, q: usize, e: usize) -> Result<BipartiteGraph> {
    if p > q {
        return Err(Error::InvalidInput(format!("requires p <= q, got ({p},{q})")));
    }
    if e <= p * q - p || e >= p * q {
        return Err(Error::InvalidInput(format!(
            "e must satisfy pq-p < e < pq, got e = {e} for ({p},{q})"
        )));
    }
    let mut b = BipartiteGraph::complete(p, q)?;
    let removed = p * q - e;
    // strip the last Y-vertex down to degree p - removed
    for x in (p - removed)..p {
        b.remove_edge(x, q - 1);
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    #[test]
    fn complete_bipartite_basics() {
        let b = BipartiteGraph::complete(2, 3).unwrap();
        assert_eq!(b.edge_count(), 6);
        let g = b.to_graph();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 6);
        assert!(!g.has_edge(0, 1));
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn double_nested_edge_counts() {
        // D(a-1, p-a+1; q-1, 1) with a=2, p=4, q=5 has p(q-1)+a-1 = 17 edges.
        let b = double_nested(&[1, 3], &[4, 1]).unwrap();
        assert_eq!(b.edge_count(), 17);
        assert_eq!(b.p(), 4);
        assert_eq!(b.q(), 5);

        // D(0, p; q-1, 1) is K_{p,q-1} plus an isolated Y-vertex.
        let b = double_nested(&[0, 3], &[4, 1]).unwrap();
        assert_eq!(b.edge_count(), 12);
        assert_eq!(b.y_degree(4), 0);
        assert!(!b.to_graph().is_connected());

        // D(p; q) with h = 1 is complete bipartite.
        let b = double_nested(&[3], &[4]).unwrap();
        assert_eq!(b, BipartiteGraph::complete(3, 4).unwrap());

        assert!(double_nested(&[1, 2], &[3]).is_err());
        assert!(double_nested(&[0, 0], &[1, 1]).is_err());
    }

    #[test]
    fn double_nested_part_swap_isomorphic() {
        for (ps, qs) in [(vec![1, 3], vec![4, 1]), (vec![2, 2], vec![3, 1]), (vec![0, 2], vec![1, 2])]
        {
            let a = double_nested(&ps, &qs).unwrap().to_graph();
            let b = double_nested(&qs, &ps).unwrap().to_graph();
            assert!(are_isomorphic(&a, &b), "swap failed for {ps:?};{qs:?}");
        }
    }

    #[test]
    fn near_complete_examples() {
        let b = near_complete_bipartite(3, 4, 10).unwrap();
        assert_eq!(b.edge_count(), 10);
        let mut ydeg: Vec<usize> = (0..4).map(|y| b.y_degree(y)).collect();
        ydeg.sort_unstable();
        assert_eq!(ydeg, vec![1, 3, 3, 3]);

        // K_{2,2} minus one edge is P_4
        let b = near_complete_bipartite(2, 2, 3).unwrap();
        assert!(are_isomorphic(&b.to_graph(), &Graph::path(4).unwrap()));

        let b = near_complete_bipartite(3, 3, 8).unwrap();
        let mut ydeg: Vec<usize> = (0..3).map(|y| b.y_degree(y)).collect();
        ydeg.sort_unstable();
        assert_eq!(ydeg, vec![2, 3, 3]);

        assert!(near_complete_bipartite(3, 4, 12).is_err());
        assert!(near_complete_bipartite(3, 4, 9).is_err());
    }
}
