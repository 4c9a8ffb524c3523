//! Closed-form extremal values and extremal-family constructors for the
//! edge and spectral bounds on `[a,b]`-factor-free graphs, with all case
//! selections done in exact integer arithmetic.

use serde::Serialize;
use std::cmp::Ordering;

use crate::bipartite::{double_nested, BipartiteGraph};
use crate::biquadratic::{largest_root, phi1, phi2, phi3, Biquadratic};
use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{threshold_extremal, Graph};
use crate::spectral::{spectral_radius, DEFAULT_TOL};

/// A spectral bound in exactly comparable form where one exists.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum SpectralBound {
    /// `sqrt(m)` for an integer `m`.
    SqrtInt(u64),
    /// The largest root of an integer biquadratic.
    QuarticRoot(Biquadratic),
    /// An eigensolver value with no closed form (the threshold family).
    Computed(f64),
}

impl SpectralBound {
    pub fn value(&self) -> f64 {
        match self {
            SpectralBound::SqrtInt(m) => (*m as f64).sqrt(),
            SpectralBound::QuarticRoot(b) => largest_root(b).expect("valid by construction"),
            SpectralBound::Computed(v) => *v,
        }
    }
}

/// The extremal value: an edge count or a spectral radius.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Bound {
    Edges(u64),
    Spectral(SpectralBound),
}

impl Bound {
    pub fn value(&self) -> f64 {
        match self {
            Bound::Edges(e) => *e as f64,
            Bound::Spectral(s) => s.value(),
        }
    }
}

/// One extremal graph, kept as a concrete object so a harness can
/// canonicalize and compare it against brute-force extremal sets.
#[derive(Clone, Debug)]
pub struct ExtremalGraph {
    pub name: String,
    pub graph: Graph,
    /// Part sizes when the graph comes from a bipartite construction.
    pub parts: Option<(usize, usize)>,
}

/// A closed-form answer: the bound, the clause that applied, and every
/// graph attaining the bound (deduplicated up to isomorphism).
#[derive(Clone, Debug)]
pub struct ExtremalAnswer {
    pub bound: Bound,
    pub case_label: String,
    pub extremal: Vec<ExtremalGraph>,
}

impl ExtremalAnswer {
    fn new(bound: Bound, case_label: &str, graphs: Vec<ExtremalGraph>) -> Self {
        // theorem lists may coincide at boundary parameters; report each
        // isomorphism class once
        let mut seen = std::collections::HashSet::new();
        let extremal = graphs
            .into_iter()
            .filter(|xg| seen.insert(canonical_form(&xg.graph)))
            .collect();
        ExtremalAnswer { bound, case_label: case_label.to_string(), extremal }
    }
}

fn check_ab(a: usize, b: usize) -> Result<()> {
    if a == 0 || a > b {
        return Err(Error::InvalidInput(format!("need 1 <= a <= b, got a = {a}, b = {b}")));
    }
    Ok(())
}

fn check_parity(n: usize, a: usize, b: usize) -> Result<()> {
    if a == b && (n * a) % 2 == 1 {
        return Err(Error::ParityExcluded { n, a });
    }
    Ok(())
}

fn binom2(n: usize) -> u64 {
    (n as u64) * (n as u64 - 1) / 2
}

fn claw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).expect("static graph")
}

fn k2_join_3k1() -> Graph {
    Graph::complete(2).unwrap().join(&Graph::empty(3).unwrap()).expect("static graph")
}

/// Maximum edges of an `n`-vertex graph with no `[a,b]`-factor:
/// `C(n-1,2) + a - 1`, with the clause-dependent extremal family.
pub fn turan_factor(n: usize, a: usize, b: usize) -> Result<ExtremalAnswer> {
    check_ab(a, b)?;
    if n < a + 1 {
        return Err(Error::InvalidInput(format!("need n >= a+1, got n = {n}, a = {a}")));
    }
    check_parity(n, a, b)?;
    let threshold = ExtremalGraph {
        name: format!("K_{{{}}}∨(K_{{{}}}∪K_{{1}})", a - 1, n - a),
        graph: threshold_extremal(a, n)?,
        parts: None,
    };
    let mut graphs = vec![threshold];
    let label = if a * b <= 2 {
        if n == 4 {
            graphs.push(ExtremalGraph { name: "K_{1,3}".into(), graph: claw(), parts: None });
        }
        "1.1(i)"
    } else if a == 2 && b == 2 {
        if n == 5 {
            graphs.push(ExtremalGraph {
                name: "K_{2}∨3K_{1}".into(),
                graph: k2_join_3k1(),
                parts: None,
            });
        }
        "1.1(ii)"
    } else {
        "1.1(iii)"
    };
    Ok(ExtremalAnswer::new(Bound::Edges(binom2(n - 1) + a as u64 - 1), label, graphs))
}

/// Maximum spectral radius of an `n`-vertex graph with no `[a,b]`-factor:
/// attained uniquely by the threshold extremal graph.
pub fn spectral_turan_factor(n: usize, a: usize, b: usize) -> Result<ExtremalAnswer> {
    check_ab(a, b)?;
    if n < a + 1 {
        return Err(Error::InvalidInput(format!("need n >= a+1, got n = {n}, a = {a}")));
    }
    check_parity(n, a, b)?;
    let g = threshold_extremal(a, n)?;
    let rho = spectral_radius::<f64>(&g, DEFAULT_TOL)?.radius;
    let graphs = vec![ExtremalGraph {
        name: format!("K_{{{}}}∨(K_{{{}}}∪K_{{1}})", a - 1, n - a),
        graph: g,
        parts: None,
    }];
    Ok(ExtremalAnswer::new(Bound::Spectral(SpectralBound::Computed(rho)), "1.2", graphs))
}

/// `f(a,b) = floor((an-1)/(a+b)) * (n - floor((an-1)/(a+b)))`.
pub fn f_ab(n: usize, a: usize, b: usize) -> u64 {
    let m = (a * n - 1) / (a + b);
    (m * (n - m)) as u64
}

/// The K-side part size of `f_ab`.
fn f_part(n: usize, a: usize, b: usize) -> usize {
    (a * n - 1) / (a + b)
}

/// `K_{m,n-m}` as an extremal graph; `m = 0` degenerates to the edgeless
/// graph on `n` vertices.
fn complete_bipartite_graph(m: usize, n: usize) -> Result<ExtremalGraph> {
    let graph = if m == 0 {
        Graph::empty(n)?
    } else {
        BipartiteGraph::complete(m, n - m)?.to_graph()
    };
    Ok(ExtremalGraph {
        name: format!("K_{{{},{}}}", m, n - m),
        graph,
        parts: Some((m, n - m)),
    })
}

/// `D(ps; qs)` as an extremal graph; an all-zero side degenerates to the
/// edgeless graph.
fn d_graph(ps: &[usize], qs: &[usize]) -> Result<ExtremalGraph> {
    let p: usize = ps.iter().sum();
    let q: usize = qs.iter().sum();
    let name = format!(
        "D({};{})",
        ps.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
        qs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    );
    let graph = if p == 0 || q == 0 {
        Graph::empty(p + q)?
    } else {
        double_nested(ps, qs)?.to_graph()
    };
    Ok(ExtremalGraph { name, graph, parts: Some((p, q)) })
}

/// Maximum edges of a bipartite graph with parts of sizes `p <= q` and no
/// `[a,b]`-factor.
pub fn bipartite_parts_turan(p: usize, q: usize, a: usize, b: usize) -> Result<ExtremalAnswer> {
    check_ab(a, b)?;
    if p > q || p == 0 {
        return Err(Error::InvalidInput(format!("need 1 <= p <= q, got ({p},{q})")));
    }
    let kpq = ExtremalGraph {
        name: format!("K_{{{p},{q}}}"),
        graph: BipartiteGraph::complete(p, q)?.to_graph(),
        parts: Some((p, q)),
    };
    if a * q > b * p {
        return Ok(ExtremalAnswer::new(Bound::Edges((p * q) as u64), "1.3(i)", vec![kpq]));
    }
    if a > p {
        return Ok(ExtremalAnswer::new(Bound::Edges((p * q) as u64), "1.3(ii)", vec![kpq]));
    }
    let d = d_graph(&[a - 1, p - a + 1], &[q - 1, 1])?;
    Ok(ExtremalAnswer::new(
        Bound::Edges((p * (q - 1) + a - 1) as u64),
        "1.3(iii)",
        vec![d],
    ))
}

/// Spectral analogue of [`bipartite_parts_turan`].
pub fn bipartite_parts_spectral(p: usize, q: usize, a: usize, b: usize) -> Result<ExtremalAnswer> {
    check_ab(a, b)?;
    if p > q || p == 0 {
        return Err(Error::InvalidInput(format!("need 1 <= p <= q, got ({p},{q})")));
    }
    let kpq = ExtremalGraph {
        name: format!("K_{{{p},{q}}}"),
        graph: BipartiteGraph::complete(p, q)?.to_graph(),
        parts: Some((p, q)),
    };
    if a * q > b * p {
        return Ok(ExtremalAnswer::new(
            Bound::Spectral(SpectralBound::SqrtInt((p * q) as u64)),
            "1.5(i)",
            vec![kpq],
        ));
    }
    if a > p {
        return Ok(ExtremalAnswer::new(
            Bound::Spectral(SpectralBound::SqrtInt((p * q) as u64)),
            "1.5(ii)",
            vec![kpq],
        ));
    }
    let d = d_graph(&[a - 1, p - a + 1], &[q - 1, 1])?;
    Ok(ExtremalAnswer::new(
        Bound::Spectral(SpectralBound::QuarticRoot(phi1(p, q, a)?)),
        "1.5(iii)",
        vec![d],
    ))
}

fn check_order_pre(n: usize, a: usize, b: usize) -> Result<()> {
    check_ab(a, b)?;
    if a > n / 2 {
        return Err(Error::InvalidInput(format!("need a <= floor(n/2), got a = {a}, n = {n}")));
    }
    Ok(())
}

/// The order-based D-graphs attaining `floor(n/2)(ceil(n/2)-1) + a - 1`
/// edges: two for even `n`, one for odd `n`.
fn order_d_graphs(n: usize, a: usize) -> Result<Vec<ExtremalGraph>> {
    if n % 2 == 0 {
        Ok(vec![
            d_graph(&[a - 1, n / 2 - a], &[n / 2, 1])?,
            d_graph(&[a - 1, n / 2 - a + 1], &[n / 2 - 1, 1])?,
        ])
    } else {
        Ok(vec![d_graph(&[a - 1, (n + 1) / 2 - a], &[(n - 1) / 2, 1])?])
    }
}

/// Maximum edges of an `n`-vertex bipartite graph with no `[a,b]`-factor:
/// the larger of `f(a,b)` and `floor(n/2)(ceil(n/2)-1) + a - 1`, with
/// clause selection by exact integer comparison.
pub fn bipartite_order_turan(n: usize, a: usize, b: usize) -> Result<ExtremalAnswer> {
    check_order_pre(n, a, b)?;
    let f = f_ab(n, a, b);
    let g = (n / 2) as u64 * (n.div_ceil(2) as u64 - 1) + a as u64 - 1;
    let kg = complete_bipartite_graph(f_part(n, a, b), n)?;
    match f.cmp(&g) {
        Ordering::Greater => Ok(ExtremalAnswer::new(Bound::Edges(f), "1.4(i)", vec![kg])),
        Ordering::Equal => {
            let mut graphs = vec![kg];
            graphs.extend(order_d_graphs(n, a)?);
            let label = if n % 2 == 0 { "1.4(ii)" } else { "1.4(iii)" };
            Ok(ExtremalAnswer::new(Bound::Edges(f), label, graphs))
        }
        Ordering::Less => {
            let label = if n % 2 == 0 { "1.4(iv)" } else { "1.4(v)" };
            Ok(ExtremalAnswer::new(Bound::Edges(g), label, order_d_graphs(n, a)?))
        }
    }
}

/// Maximum spectral radius of an `n`-vertex bipartite graph with no
/// `[a,b]`-factor. The comparison of the quartic root against `sqrt(f)` is
/// exact: with the squared bound `y+`, the clause is decided by the sign of
/// `f^2 - c f + d` and the position of `f` against `c/2`, in integers.
pub fn bipartite_order_spectral(n: usize, a: usize, b: usize) -> Result<ExtremalAnswer> {
    check_order_pre(n, a, b)?;
    let f = f_ab(n, a, b);
    let quartic = if n % 2 == 0 { phi2(n, a)? } else { phi3(n, a)? };
    let d = d_graph(&[a - 1, n.div_ceil(2) - a], &[n / 2, 1])?;
    let kg = complete_bipartite_graph(f_part(n, a, b), n)?;
    // rho_D vs sqrt(f) == y+ vs f
    match quartic.compare_root_sq(f as i64) {
        Ordering::Less => Ok(ExtremalAnswer::new(
            Bound::Spectral(SpectralBound::SqrtInt(f)),
            "1.7(i)",
            vec![kg],
        )),
        Ordering::Equal => Ok(ExtremalAnswer::new(
            Bound::Spectral(SpectralBound::SqrtInt(f)),
            "1.7(ii)",
            vec![kg, d],
        )),
        Ordering::Greater => Ok(ExtremalAnswer::new(
            Bound::Spectral(SpectralBound::QuarticRoot(quartic)),
            "1.7(iii)",
            vec![d],
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    #[test]
    fn turan_factor_clauses() {
        // (ii): the order-5 sporadic graph only appears at n = 5
        let ans = turan_factor(6, 2, 2).unwrap();
        assert_eq!(ans.bound, Bound::Edges(11));
        assert_eq!(ans.case_label, "1.1(ii)");
        assert_eq!(ans.extremal.len(), 1);

        let ans = turan_factor(5, 2, 2).unwrap();
        assert_eq!(ans.bound, Bound::Edges(7));
        assert_eq!(ans.extremal.len(), 2);

        // (i): n = 4 includes the claw
        let ans = turan_factor(4, 1, 1).unwrap();
        assert_eq!(ans.bound, Bound::Edges(3));
        assert_eq!(ans.extremal.len(), 2);
        assert!(ans
            .extremal
            .iter()
            .any(|xg| are_isomorphic(&xg.graph, &claw())));

        // (iii)
        let ans = turan_factor(7, 3, 4).unwrap();
        assert_eq!(ans.bound, Bound::Edges(17));
        assert_eq!(ans.case_label, "1.1(iii)");
        assert_eq!(ans.extremal.len(), 1);

        // parity exclusion
        assert!(matches!(turan_factor(5, 3, 3), Err(Error::ParityExcluded { .. })));
    }

    #[test]
    fn spectral_turan_factor_values() {
        let ans = spectral_turan_factor(6, 1, 1).unwrap();
        assert!((ans.bound.value() - 4.0).abs() < 1e-9);
        assert_eq!(ans.extremal.len(), 1);

        let ans = spectral_turan_factor(6, 2, 3).unwrap();
        assert!((ans.bound.value() - 4.051374241731036).abs() < 1e-9);
    }

    #[test]
    fn f_ab_examples() {
        assert_eq!(f_ab(10, 1, 2), 21);
        assert_eq!(f_ab(8, 1, 1), 15);
        assert_eq!(f_ab(6, 3, 3), 8);
    }

    #[test]
    fn parts_turan_clauses() {
        let ans = bipartite_parts_turan(2, 5, 1, 2).unwrap();
        assert_eq!(ans.bound, Bound::Edges(10));
        assert_eq!(ans.case_label, "1.3(i)");

        let ans = bipartite_parts_turan(4, 4, 2, 2).unwrap();
        assert_eq!(ans.bound, Bound::Edges(13));
        assert_eq!(ans.case_label, "1.3(iii)");
        assert_eq!(ans.extremal[0].name, "D(1,3;3,1)");

        // a|Y| > b|X| takes precedence over a > |X|
        let ans = bipartite_parts_turan(2, 3, 3, 3).unwrap();
        assert_eq!(ans.bound, Bound::Edges(6));
        assert_eq!(ans.case_label, "1.3(i)");

        // a genuine (ii): a > p with aq <= bp
        let ans = bipartite_parts_turan(2, 3, 3, 5).unwrap();
        assert_eq!(ans.bound, Bound::Edges(6));
        assert_eq!(ans.case_label, "1.3(ii)");
    }

    #[test]
    fn order_turan_clauses() {
        let ans = bipartite_order_turan(10, 1, 2).unwrap();
        assert_eq!(ans.bound, Bound::Edges(21));
        assert_eq!(ans.case_label, "1.4(i)");
        assert_eq!(ans.extremal[0].name, "K_{3,7}");

        // n=8, a=1, b=1: f = 15 > g = 12, clause (i), unique K_{3,5}
        let ans = bipartite_order_turan(8, 1, 1).unwrap();
        assert_eq!(ans.bound, Bound::Edges(15));
        assert_eq!(ans.case_label, "1.4(i)");
        assert_eq!(ans.extremal.len(), 1);

        // n=9, a=2, b=3: f = 18 > g = 17, clause (i), K_{3,6}
        let ans = bipartite_order_turan(9, 2, 3).unwrap();
        assert_eq!(ans.bound, Bound::Edges(18));
        assert_eq!(ans.extremal[0].name, "K_{3,6}");

        // an equality instance: n=8, a=1, b=2 has f = g = 12
        let ans = bipartite_order_turan(8, 1, 2).unwrap();
        assert_eq!(ans.bound, Bound::Edges(12));
        assert_eq!(ans.case_label, "1.4(ii)");
        // K_{2,6}, D(0,3;4,1) = K_{3,4}∪K_1 and D(0,4;3,1) = K_{4,3}∪K_1;
        // the two D graphs coincide as graphs
        assert_eq!(ans.extremal.len(), 2);

        // equality at n=4, a=2, b=2: K_{1,3} = D(1,0;2,1), plus D(1,1;1,1) = P_4
        let ans = bipartite_order_turan(4, 2, 2).unwrap();
        assert_eq!(ans.bound, Bound::Edges(3));
        assert_eq!(ans.case_label, "1.4(ii)");
        assert_eq!(ans.extremal.len(), 2);

        assert!(bipartite_order_turan(5, 3, 3).is_err());
    }

    #[test]
    fn order_spectral_clauses() {
        // n=10, a=1, b=2: rho_D = sqrt(20) < sqrt(21) = sqrt(f)
        let ans = bipartite_order_spectral(10, 1, 2).unwrap();
        assert_eq!(ans.case_label, "1.7(i)");
        assert_eq!(ans.bound, Bound::Spectral(SpectralBound::SqrtInt(21)));
        assert_eq!(ans.extremal[0].name, "K_{3,7}");

        // n=8, a=3, b=3: clause (i) with bound sqrt(15)
        let ans = bipartite_order_spectral(8, 3, 3).unwrap();
        assert_eq!(ans.case_label, "1.7(i)");
        assert_eq!(ans.bound, Bound::Spectral(SpectralBound::SqrtInt(15)));
        assert_eq!(ans.extremal[0].name, "K_{3,5}");

        // n=8, a=1, b=2: exact equality detected in integers
        let ans = bipartite_order_spectral(8, 1, 2).unwrap();
        assert_eq!(ans.case_label, "1.7(ii)");
        assert_eq!(ans.extremal.len(), 2);

        // a clause (iii) instance: n=5, a=2, b=3
        let ans = bipartite_order_spectral(5, 2, 3).unwrap();
        assert_eq!(ans.case_label, "1.7(iii)");
        match &ans.bound {
            Bound::Spectral(SpectralBound::QuarticRoot(q)) => {
                let rho = spectral_radius::<f64>(&ans.extremal[0].graph, DEFAULT_TOL)
                    .unwrap()
                    .radius;
                let root: f64 = largest_root(q).unwrap();
                assert!((rho - root).abs() < 1e-9);
            }
            other => panic!("expected a quartic root bound, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_two_vertex_case() {
        // n=2, a=1: everything collapses to the edgeless graph
        let ans = bipartite_order_turan(2, 1, 1).unwrap();
        assert_eq!(ans.bound, Bound::Edges(0));
        assert_eq!(ans.extremal.len(), 1);
        assert_eq!(ans.extremal[0].graph.edge_count(), 0);
        let ans = bipartite_order_spectral(2, 1, 3).unwrap();
        assert_eq!(ans.case_label, "1.7(ii)");
        assert_eq!(ans.extremal.len(), 1);
    }
}
