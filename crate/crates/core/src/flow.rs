//! Polynomial-time bipartite `[a,b]`-factor decisions via feasible flow
//! with lower bounds.
//!
//! The network is source -> X with bounds `[a,b]`, cross arcs with bounds
//! `[0,1]`, Y -> sink with bounds `[a,b]`, closed by an uncapacitated sink
//! -> source arc. Lower bounds are removed by the standard circulation
//! transformation and the residual problem is solved with Dinic's
//! algorithm. Integer arithmetic throughout.

use crate::bipartite::BipartiteGraph;
use crate::factor::FactorWitness;

struct Dinic {
    // per node: (to, rev_index, cap)
    adj: Vec<Vec<(usize, usize, i64)>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(n: usize) -> Self {
        Dinic { adj: vec![Vec::new(); n], level: vec![0; n], iter: vec![0; n] }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: i64) -> (usize, usize) {
        let f_idx = self.adj[from].len();
        let t_idx = self.adj[to].len();
        self.adj[from].push((to, t_idx, cap));
        self.adj[to].push((from, f_idx, 0));
        (from, f_idx)
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        let mut queue = std::collections::VecDeque::new();
        self.level[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &(to, _, cap) in &self.adj[v] {
                if cap > 0 && self.level[to] < 0 {
                    self.level[to] = self.level[v] + 1;
                    queue.push_back(to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, v: usize, t: usize, f: i64) -> i64 {
        if v == t {
            return f;
        }
        while self.iter[v] < self.adj[v].len() {
            let (to, rev, cap) = self.adj[v][self.iter[v]];
            if cap > 0 && self.level[v] < self.level[to] {
                let d = self.dfs(to, t, f.min(cap));
                if d > 0 {
                    self.adj[v][self.iter[v]].2 -= d;
                    self.adj[to][rev].2 += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }

    fn flow_on(&self, handle: (usize, usize), original_cap: i64) -> i64 {
        original_cap - self.adj[handle.0][handle.1].2
    }
}

/// Exact `[a,b]`-factor decision for a bipartite graph; always terminates.
///
/// Returns the witness in `to_graph` numbering (X is `0..p`, Y is `p..p+q`).
pub fn has_factor_bipartite_flow(bg: &BipartiteGraph, a: usize, b: usize) -> Option<FactorWitness> {
    assert!(a >= 1 && a <= b, "need 1 <= a <= b");
    let (p, q) = (bg.p(), bg.q());
    let (a, b) = (a as i64, b as i64);
    // nodes: 0 = super-source, 1 = super-sink, 2 = s, 3 = t, then X, then Y
    let (ss, tt, s, t) = (0, 1, 2, 3);
    let xn = |x: usize| 4 + x;
    let yn = |y: usize| 4 + p + y;
    let mut net = Dinic::new(4 + p + q);
    let mut excess = vec![0i64; 4 + p + q];
    let mut add_bounded = |net: &mut Dinic, u: usize, v: usize, lo: i64, hi: i64| {
        excess[v] += lo;
        excess[u] -= lo;
        net.add_edge(u, v, hi - lo)
    };
    for x in 0..p {
        add_bounded(&mut net, s, xn(x), a, b);
    }
    for y in 0..q {
        add_bounded(&mut net, yn(y), t, a, b);
    }
    let mut cross = Vec::new();
    for x in 0..p {
        let mut m = bg.x_neighbors(x);
        while m != 0 {
            let y = m.trailing_zeros() as usize;
            m &= m - 1;
            let handle = add_bounded(&mut net, xn(x), yn(y), 0, 1);
            cross.push((x, y, handle));
        }
    }
    // close the circulation
    net.add_edge(t, s, i64::MAX / 4);

    let mut demand = 0;
    for (v, &e) in excess.iter().enumerate() {
        match e.cmp(&0) {
            std::cmp::Ordering::Greater => {
                net.add_edge(ss, v, e);
                demand += e;
            }
            std::cmp::Ordering::Less => {
                net.add_edge(v, tt, -e);
            }
            std::cmp::Ordering::Equal => {}
        }
    }
    if net.max_flow(ss, tt) != demand {
        return None;
    }
    let mut edges = Vec::new();
    let mut degrees = vec![0usize; p + q];
    for &(x, y, handle) in &cross {
        if net.flow_on(handle, 1) == 1 {
            edges.push((x, p + y));
            degrees[x] += 1;
            degrees[p + y] += 1;
        }
    }
    let witness = FactorWitness { edges, degrees };
    debug_assert!(witness.validate(&bg.to_graph(), a as usize, b as usize));
    Some(witness)
}
