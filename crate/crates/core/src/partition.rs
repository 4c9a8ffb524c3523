//! Ordered vertex partitions, the carrier for quotient-matrix checks.

use crate::error::{Error, Result};
use crate::graph::MAX_VERTICES;

/// An ordered list of disjoint nonempty vertex blocks covering `0..n-1`,
/// each stored as a bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    n: usize,
    blocks: Vec<u64>,
}

impl VertexPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::MalformedPartition(format!("order {n} out of range")));
        }
        let mut masks = Vec::with_capacity(blocks.len());
        let mut seen = 0u64;
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::MalformedPartition(format!("block {i} is empty")));
            }
            let mut mask = 0u64;
            for &v in block {
                if v >= n {
                    return Err(Error::MalformedPartition(format!("vertex {v} out of range")));
                }
                if seen >> v & 1 == 1 || mask >> v & 1 == 1 {
                    return Err(Error::MalformedPartition(format!("vertex {v} repeated")));
                }
                mask |= 1 << v;
            }
            seen |= mask;
            masks.push(mask);
        }
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        if seen != all {
            return Err(Error::MalformedPartition("blocks do not cover the vertex set".into()));
        }
        Ok(VertexPartition { n, blocks: masks })
    }

    /// The all-in-one-block partition.
    pub fn trivial(n: usize) -> Result<Self> {
        VertexPartition::new(n, vec![(0..n).collect()])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    #[inline]
    pub fn block_mask(&self, i: usize) -> u64 {
        self.blocks[i]
    }

    pub fn block_size(&self, i: usize) -> usize {
        self.blocks[i].count_ones() as usize
    }

    pub fn block_vertices(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut m = self.blocks[i];
        while m != 0 {
            out.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(VertexPartition::new(3, vec![vec![0, 2], vec![1]]).is_ok());
        assert!(VertexPartition::new(3, vec![vec![0], vec![1]]).is_err()); // misses 2
        assert!(VertexPartition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err()); // overlap
        assert!(VertexPartition::new(3, vec![vec![0, 1, 2], vec![]]).is_err()); // empty block
        assert!(VertexPartition::new(2, vec![vec![0, 5]]).is_err()); // out of range
    }
}
