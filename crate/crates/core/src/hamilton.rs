//! Exact Hamilton path/cycle decisions by backtracking with failed-state
//! memoization.

use std::collections::HashSet;

use crate::graph::Graph;

fn extend(g: &Graph, last: usize, visited: u64, full: u64, dead: &mut HashSet<(u64, usize)>) -> bool {
    if visited == full {
        return true;
    }
    if dead.contains(&(visited, last)) {
        return false;
    }
    let mut m = g.neighbors(last) & !visited;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if extend(g, v, visited | (1 << v), full, dead) {
            return true;
        }
    }
    dead.insert((visited, last));
    false
}

pub fn has_hamilton_path(g: &Graph) -> bool {
    let n = g.n();
    if n == 1 {
        return true;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut dead = HashSet::new();
    (0..n).any(|start| extend(g, start, 1 << start, full, &mut dead))
}

pub fn has_hamilton_cycle(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // fix vertex 0 as the cycle anchor; close back to it through each
    // neighbor pair
    let mut dead = HashSet::new();
    let home = g.neighbors(0);
    let mut m = home;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if extend_cycle(g, v, (1 << v) | 1, full, home, &mut dead) {
            return true;
        }
    }
    false
}

fn extend_cycle(
    g: &Graph,
    last: usize,
    visited: u64,
    full: u64,
    home: u64,
    dead: &mut HashSet<(u64, usize)>,
) -> bool {
    if visited == full {
        return home >> last & 1 == 1;
    }
    if dead.contains(&(visited, last)) {
        return false;
    }
    let mut m = g.neighbors(last) & !visited;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if extend_cycle(g, v, visited | (1 << v), full, home, dead) {
            return true;
        }
    }
    dead.insert((visited, last));
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::threshold_extremal;

    #[test]
    fn paths_and_cycles() {
        let p6 = Graph::path(6).unwrap();
        assert!(has_hamilton_path(&p6));
        assert!(!has_hamilton_cycle(&p6));
        let c6 = Graph::cycle(6).unwrap();
        assert!(has_hamilton_path(&c6));
        assert!(has_hamilton_cycle(&c6));
    }

    #[test]
    fn known_exceptional_graphs() {
        // K_1 ∨ (K_{n-2} ∪ K_1) at n = 6 has no Hamilton cycle
        let g = threshold_extremal(2, 6).unwrap();
        assert!(!has_hamilton_cycle(&g));
        assert!(has_hamilton_path(&g));
        // K_2 ∨ 3K_1
        let g = Graph::complete(2).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        assert!(!has_hamilton_cycle(&g));
        // K_{n-1} ∪ K_1 has no Hamilton path
        let g = threshold_extremal(1, 6).unwrap();
        assert!(!has_hamilton_path(&g));
        // the claw
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!has_hamilton_path(&claw));
    }

    #[test]
    fn tiny_orders() {
        assert!(has_hamilton_path(&Graph::empty(1).unwrap()));
        assert!(!has_hamilton_path(&Graph::empty(2).unwrap()));
        assert!(has_hamilton_path(&Graph::complete(2).unwrap()));
        assert!(!has_hamilton_cycle(&Graph::complete(2).unwrap()));
        assert!(has_hamilton_cycle(&Graph::complete(3).unwrap()));
    }
}
