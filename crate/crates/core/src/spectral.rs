//! Spectral radius computation and equitable-partition quotient matrices.
//!
//! The eigensolver is power iteration on `A + I` from the all-ones vector:
//! the shift defeats the ±λ oscillation of bipartite spectra, and the start
//! vector has positive projection onto a Perron vector of the dominant
//! component, so disconnected graphs need no per-component handling.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::VertexPartition;
use crate::scalar::Scalar;

/// Default stopping tolerance on the eigenvalue residual.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Iteration cap; exceeding it is reported, never silently truncated.
pub const ITERATION_CAP: u64 = 1_000_000;

/// Converged spectral radius with its Perron vector.
///
/// `residual` is `max_i |(A v)_i - radius * v_i|` for the unit vector `v`
/// and is at most the requested tolerance.
#[derive(Clone, Debug)]
pub struct SpectralResult<F> {
    pub radius: F,
    pub vector: Vec<F>,
    pub iterations: u64,
    pub residual: F,
}

/// Quotient matrix of a vertex partition: `entries[i][j]` is the average
/// number of neighbors in block `j` over the vertices of block `i`.
#[derive(Clone, Debug)]
pub struct QuotientMatrix<F> {
    pub entries: Vec<Vec<F>>,
    pub block_sizes: Vec<usize>,
    pub equitable: bool,
}

fn matvec<F: Scalar>(g: &Graph, v: &[F], out: &mut [F]) {
    for (u, o) in out.iter_mut().enumerate() {
        let mut acc = F::zero();
        let mut m = g.neighbors(u);
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            acc = acc + v[w];
        }
        *o = acc;
    }
}

fn normalize<F: Scalar>(v: &mut [F]) {
    let norm = v.iter().fold(F::zero(), |s, &x| s + x * x).sqrt();
    if norm > F::zero() {
        for x in v.iter_mut() {
            *x = *x / norm;
        }
    }
}

/// Shared power-iteration core over an abstract symmetric nonnegative
/// operator; returns on `‖Mv - μv‖_2 <= tol`.
fn power_iterate<F: Scalar>(
    dim: usize,
    apply: impl Fn(&[F], &mut [F]),
    shift: F,
    tol: F,
) -> Result<(F, Vec<F>, u64, F)> {
    let mut v: Vec<F> = vec![F::one(); dim];
    normalize(&mut v);
    let mut mv = vec![F::zero(); dim];
    let mut restarted = false;
    let mut prev_mu = F::nan();
    let mut stagnant = 0u32;
    let mut iterations = 0u64;
    loop {
        iterations += 1;
        apply(&v, &mut mv);
        for (y, x) in mv.iter_mut().zip(v.iter()) {
            *y = *y + shift * *x;
        }
        // Rayleigh quotient of the shifted operator at the unit vector v
        let mu = mv.iter().zip(v.iter()).fold(F::zero(), |s, (&y, &x)| s + y * x);
        let res2 = mv
            .iter()
            .zip(v.iter())
            .fold(F::zero(), |s, (&y, &x)| {
                let r = y - mu * x;
                s + r * r
            })
            .sqrt();
        if res2 <= tol {
            let res_inf = mv
                .iter()
                .zip(v.iter())
                .fold(F::zero(), |m, (&y, &x)| m.max((y - mu * x).abs()));
            return Ok((mu - shift, v, iterations, res_inf));
        }
        if mu == prev_mu {
            stagnant += 1;
            // zero Rayleigh progress over a window: restart once, perturbed
            if stagnant >= 64 && !restarted {
                restarted = true;
                stagnant = 0;
                for (i, x) in v.iter_mut().enumerate() {
                    *x = F::one() + F::usize(i) / F::usize(dim);
                }
                normalize(&mut v);
                continue;
            }
        } else {
            stagnant = 0;
            prev_mu = mu;
        }
        if iterations >= ITERATION_CAP {
            return Err(Error::NoConvergence {
                iterations,
                residual: res2.to_f64().unwrap_or(f64::NAN),
            });
        }
        std::mem::swap(&mut v, &mut mv);
        normalize(&mut v);
    }
}

/// Largest adjacency eigenvalue of `g`, within `tol`.
pub fn spectral_radius<F: Scalar>(g: &Graph, tol: F) -> Result<SpectralResult<F>> {
    if tol <= F::zero() {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    if g.edge_count() == 0 {
        return Ok(SpectralResult {
            radius: F::zero(),
            vector: {
                let mut v = vec![F::one(); g.n()];
                normalize(&mut v);
                v
            },
            iterations: 0,
            residual: F::zero(),
        });
    }
    let (radius, vector, iterations, residual) =
        power_iterate(g.n(), |v, out| matvec(g, v, out), F::one(), tol)?;
    Ok(SpectralResult { radius, vector, iterations, residual })
}

/// Quotient matrix of `A(g)` under `pi`, with an exact integer equitability
/// test per vertex.
pub fn quotient_matrix<F: Scalar>(g: &Graph, pi: &VertexPartition) -> Result<QuotientMatrix<F>> {
    if pi.n() != g.n() {
        return Err(Error::MalformedPartition(format!(
            "partition is over {} vertices, graph has {}",
            pi.n(),
            g.n()
        )));
    }
    let s = pi.block_count();
    let mut entries = vec![vec![F::zero(); s]; s];
    let mut equitable = true;
    for i in 0..s {
        let verts = pi.block_vertices(i);
        for j in 0..s {
            let mask = pi.block_mask(j);
            let counts: Vec<usize> =
                verts.iter().map(|&v| (g.neighbors(v) & mask).count_ones() as usize).collect();
            if counts.iter().any(|&c| c != counts[0]) {
                equitable = false;
            }
            let total: usize = counts.iter().sum();
            entries[i][j] = F::usize(total) / F::usize(verts.len());
        }
    }
    Ok(QuotientMatrix {
        entries,
        block_sizes: (0..s).map(|i| pi.block_size(i)).collect(),
        equitable,
    })
}

/// Largest eigenvalue of an equitable quotient matrix, within `tol`.
///
/// For an equitable partition this equals the spectral radius of the
/// underlying graph within `2 * tol`. The quotient is symmetrized by the
/// block sizes (`D^{1/2} M D^{-1/2}`), so the same residual-based stopping
/// rule applies.
pub fn quotient_spectral_radius<F: Scalar>(q: &QuotientMatrix<F>, tol: F) -> Result<F> {
    if !q.equitable {
        return Err(Error::NotEquitable);
    }
    if tol <= F::zero() {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    let s = q.entries.len();
    let mut sym = vec![vec![F::zero(); s]; s];
    for i in 0..s {
        for j in 0..s {
            let scale = (F::usize(q.block_sizes[i]) / F::usize(q.block_sizes[j])).sqrt();
            sym[i][j] = q.entries[i][j] * scale;
        }
    }
    if sym.iter().flatten().all(|&x| x == F::zero()) {
        return Ok(F::zero());
    }
    let apply = |v: &[F], out: &mut [F]| {
        for (i, o) in out.iter_mut().enumerate() {
            *o = sym[i].iter().zip(v.iter()).fold(F::zero(), |s, (&m, &x)| s + m * x);
        }
    };
    let (radius, _, _, _) = power_iterate(s, apply, F::one(), tol)?;
    Ok(radius)
}

/// Checks `ρ(G) <= sqrt(2e - n + 1)` for a connected graph (always true;
/// exposed as a test predicate).
pub fn check_edge_bound(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::InvalidInput("the edge bound requires a connected graph".into()));
    }
    let rho = spectral_radius::<f64>(g, DEFAULT_TOL)?.radius;
    let bound = ((2 * g.edge_count() + 1 - g.n()) as f64).sqrt();
    Ok(rho <= bound + 1e-9)
}

/// Checks `ρ(G) <= sqrt(e)` for a bipartite graph.
pub fn check_bipartite_bound(bg: &crate::bipartite::BipartiteGraph) -> Result<bool> {
    let rho = spectral_radius::<f64>(&bg.to_graph(), DEFAULT_TOL)?.radius;
    Ok(rho <= (bg.edge_count() as f64).sqrt() + 1e-9)
}
