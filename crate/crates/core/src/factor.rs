//! Exact `[a,b]`-factor decisions on general graphs by pruned backtracking.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default node budget for the backtracking search. Exceeding it is an
/// error, never a silent "no".
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// An edge subset certifying an `[a,b]`-factor, with the degree of every
/// vertex in the witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorWitness {
    pub edges: Vec<(usize, usize)>,
    pub degrees: Vec<usize>,
}

impl FactorWitness {
    /// Re-checks the witness against `g` from scratch: edges of `g`, degrees
    /// consistent with the edge list, and `a <= d <= b` at every vertex.
    pub fn validate(&self, g: &Graph, a: usize, b: usize) -> bool {
        if self.degrees.len() != g.n() {
            return false;
        }
        let mut deg = vec![0usize; g.n()];
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &self.edges {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                return false;
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return false;
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        deg == self.degrees && deg.iter().all(|&d| a <= d && d <= b)
    }
}

struct FactorSearch {
    a: usize,
    b: usize,
    edges: Vec<(usize, usize)>,
    deg: Vec<usize>,
    undecided: Vec<usize>,
    chosen: Vec<bool>,
    deficit: usize, // sum over v of max(0, a - deg[v])
    nodes: u64,
    budget: u64,
}

impl FactorSearch {
    fn solve(&mut self, i: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { limit: self.budget });
        }
        if i == self.edges.len() {
            debug_assert!(self.deg.iter().all(|&d| self.a <= d && d <= self.b));
            return Ok(true);
        }
        // every undecided edge can reduce the total deficit by at most 2
        if self.deficit > 2 * (self.edges.len() - i) {
            return Ok(false);
        }
        let (u, v) = self.edges[i];
        let can_take = self.deg[u] < self.b && self.deg[v] < self.b;
        let can_skip = self.deg[u] + self.undecided[u] > self.a
            && self.deg[v] + self.undecided[v] > self.a;
        // prefer filling deficient vertices first
        let take_first = self.deg[u] < self.a || self.deg[v] < self.a;
        for &take in if take_first { &[true, false] } else { &[false, true] } {
            if (take && !can_take) || (!take && !can_skip) {
                continue;
            }
            self.apply(i, take);
            if self.solve(i + 1)? {
                // leave `chosen` and `deg` intact for witness extraction
                return Ok(true);
            }
            self.undo(i, take);
        }
        Ok(false)
    }

    fn apply(&mut self, i: usize, take: bool) {
        let (u, v) = self.edges[i];
        self.undecided[u] -= 1;
        self.undecided[v] -= 1;
        if take {
            if self.deg[u] < self.a {
                self.deficit -= 1;
            }
            if self.deg[v] < self.a {
                self.deficit -= 1;
            }
            self.deg[u] += 1;
            self.deg[v] += 1;
            self.chosen[i] = true;
        }
    }

    fn undo(&mut self, i: usize, take: bool) {
        let (u, v) = self.edges[i];
        self.undecided[u] += 1;
        self.undecided[v] += 1;
        if take {
            self.deg[u] -= 1;
            self.deg[v] -= 1;
            if self.deg[u] < self.a {
                self.deficit += 1;
            }
            if self.deg[v] < self.a {
                self.deficit += 1;
            }
            self.chosen[i] = false;
        }
    }
}

/// Decides whether `g` contains an `[a,b]`-factor, with the default node
/// budget. Exact whenever it returns.
pub fn has_factor(g: &Graph, a: usize, b: usize) -> Result<Option<FactorWitness>> {
    has_factor_with_budget(g, a, b, DEFAULT_NODE_BUDGET)
}

/// As [`has_factor`] with an explicit node budget.
pub fn has_factor_with_budget(
    g: &Graph,
    a: usize,
    b: usize,
    budget: u64,
) -> Result<Option<FactorWitness>> {
    if a == 0 || a > b {
        return Err(Error::InvalidInput(format!("need 1 <= a <= b, got a = {a}, b = {b}")));
    }
    let n = g.n();
    // degree-sum parity: an [a,a]-factor has a*n/... precisely sum = a*n
    if a == b && (a * n) % 2 == 1 {
        return Ok(None);
    }
    if (0..n).any(|v| g.degree(v) < a) {
        return Ok(None);
    }
    // lexicographic order exhausts each vertex's incidences consecutively
    let edges = g.edges();
    let mut search = FactorSearch {
        a,
        b,
        deg: vec![0; n],
        undecided: (0..n).map(|v| g.degree(v)).collect(),
        chosen: vec![false; edges.len()],
        deficit: a * n,
        edges,
        nodes: 0,
        budget,
    };
    if search.solve(0)? {
        let edges: Vec<(usize, usize)> = search
            .edges
            .iter()
            .zip(&search.chosen)
            .filter_map(|(&e, &c)| c.then_some(e))
            .collect();
        let witness = FactorWitness { edges, degrees: search.deg.clone() };
        debug_assert!(witness.validate(g, a, b));
        Ok(Some(witness))
    } else {
        Ok(None)
    }
}

/// `k`-factor decision: [`has_factor`] at `a = b = k`, with the handshake
/// parity shortcut for odd `n * k`.
pub fn has_k_factor(g: &Graph, k: usize) -> Result<Option<FactorWitness>> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be >= 1".into()));
    }
    if (g.n() * k) % 2 == 1 {
        return Ok(None);
    }
    has_factor(g, k, k)
}
