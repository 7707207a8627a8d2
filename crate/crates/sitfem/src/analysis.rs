//! Reported quantities: norms, integrals, diagonal profiles, and empirical
//! orders of convergence.

use crate::error::{Error, Result};
use crate::mesh::Mesh;
use crate::model::ModelParams;
use crate::sparse::CsrMatrix;
use crate::stepper::State;

/// Discrete L2 norm sqrt(u' Mass u).
pub fn l2_norm(u: &[f64], mass: &CsrMatrix) -> Result<f64> {
    let mu = mass.mul_vec(u);
    let q: f64 = u.iter().zip(&mu).map(|(a, b)| a * b).sum();
    let scale = u.iter().fold(0.0f64, |m, v| m.max(v * v));
    if q < -1e-10 * scale.max(1.0) {
        return Err(Error::InvalidInput(format!(
            "mass quadratic form is negative ({q:.3e}); mass matrix corrupted"
        )));
    }
    Ok(q.max(0.0).sqrt())
}

/// Domain integral 1' Mass u.
pub fn integrate(u: &[f64], mass: &CsrMatrix) -> f64 {
    mass.mul_vec(u).iter().sum()
}

/// Energy norm: sqrt of the (mu, alpha)-weighted sum over species of
/// mu ||u||^2 + alpha u'Ku.
pub fn energy_norm(
    state: &State,
    mass: &CsrMatrix,
    stiffness: &CsrMatrix,
    p: &ModelParams,
) -> Result<f64> {
    let mut total = 0.0;
    for (field, mu, alpha) in [
        (&state.m, p.mu_m, p.alpha_m),
        (&state.f, p.mu_f, p.alpha_f),
        (&state.ms, p.mu_s, p.alpha_s),
    ] {
        let l2 = l2_norm(field, mass)?;
        let ku = stiffness.mul_vec(field);
        let grad: f64 = field.iter().zip(&ku).map(|(a, b)| a * b).sum();
        total += mu * l2 * l2 + alpha * grad.max(0.0);
    }
    Ok(total.sqrt())
}

/// Samples along the diagonal x = y of the unit square.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalProfile {
    /// Abscissae k/n, k = 0..=n.
    pub x: Vec<f64>,
    pub values: Vec<f64>,
}

/// Nodal values at the diagonal grid points (k/n, k/n).
pub fn diagonal_profile(u: &[f64], mesh: &Mesh) -> DiagonalProfile {
    assert_eq!(u.len(), mesh.num_nodes());
    let mut x = Vec::with_capacity(mesh.n + 1);
    let mut values = Vec::with_capacity(mesh.n + 1);
    for k in 0..=mesh.n {
        x.push(k as f64 / mesh.n as f64);
        values.push(u[mesh.diagonal_node(k)]);
    }
    DiagonalProfile { x, values }
}

/// Least-squares fit of f(r) = f0 + c r^q.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EocFit {
    pub f0: f64,
    pub c: f64,
    pub q: f64,
    /// Set when the data carry no resolution dependence (all values equal).
    pub degenerate: bool,
}

/// Fits (f0, c, q) to (resolution, value) pairs by scanning q over [0.1, 4]
/// in steps of 1e-3 with an inner linear least-squares solve for (f0, c),
/// then refining the best q locally. The scan is globally robust on the
/// nonconvex landscape that a three-parameter fit of four points produces.
pub fn fit_eoc(pairs: &[(f64, f64)]) -> Result<EocFit> {
    if pairs.len() < 3 {
        return Err(Error::InvalidInput(format!(
            "eoc fit needs at least 3 pairs, got {}",
            pairs.len()
        )));
    }
    for &(r, _) in pairs {
        if !(r > 0.0) {
            return Err(Error::InvalidInput(format!("resolutions must be positive, got {r}")));
        }
    }
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            if pairs[i].0 == pairs[j].0 {
                return Err(Error::InvalidInput(format!(
                    "resolutions must be distinct (duplicate {})",
                    pairs[i].0
                )));
            }
        }
    }
    let first = pairs[0].1;
    if pairs.iter().all(|&(_, v)| v == first) {
        return Ok(EocFit { f0: first, c: 0.0, q: 0.0, degenerate: true });
    }

    // linear least squares for (f0, c) at fixed q via 2x2 normal equations
    let sse_at = |q: f64| -> (f64, f64, f64) {
        let n = pairs.len() as f64;
        let (mut sx, mut sxx, mut sy, mut sxy) = (0.0, 0.0, 0.0, 0.0);
        for &(r, v) in pairs {
            let x = r.powf(q);
            sx += x;
            sxx += x * x;
            sy += v;
            sxy += x * v;
        }
        let det = n * sxx - sx * sx;
        if det.abs() < 1e-300 {
            return (f64::INFINITY, 0.0, 0.0);
        }
        let c = (n * sxy - sx * sy) / det;
        let f0 = (sy - c * sx) / n;
        let mut sse = 0.0;
        for &(r, v) in pairs {
            let e = f0 + c * r.powf(q) - v;
            sse += e * e;
        }
        (sse, f0, c)
    };

    let mut best_q = 0.1;
    let mut best_sse = f64::INFINITY;
    let mut q = 0.1;
    while q <= 4.0 + 1e-12 {
        let (sse, _, _) = sse_at(q);
        if sse < best_sse {
            best_sse = sse;
            best_q = q;
        }
        q += 1e-3;
    }
    // ternary refinement inside the winning step
    let (mut lo, mut hi) = ((best_q - 1e-3).max(0.1), (best_q + 1e-3).min(4.0));
    for _ in 0..80 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if sse_at(m1).0 < sse_at(m2).0 {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    let q = 0.5 * (lo + hi);
    let (_, f0, c) = sse_at(q);
    Ok(EocFit { f0, c, q, degenerate: false })
}

/// One sampled row of a simulation time series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeSeriesRecord {
    pub t: f64,
    pub l2_m: f64,
    pub l2_f: f64,
    pub l2_ms: f64,
    pub int_m: f64,
    pub int_f: f64,
    pub int_ms: f64,
    pub min_m: f64,
    pub min_f: f64,
    pub min_ms: f64,
    pub max_m: f64,
    pub max_f: f64,
    pub max_ms: f64,
    /// Largest CG iteration count among the three solves of the last step.
    pub cg_iterations: usize,
}

impl TimeSeriesRecord {
    pub fn measure(state: &State, mass: &CsrMatrix, cg_iterations: usize) -> Result<Self> {
        let min_max = |v: &[f64]| {
            v.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
                (lo.min(x), hi.max(x))
            })
        };
        let (min_m, max_m) = min_max(&state.m);
        let (min_f, max_f) = min_max(&state.f);
        let (min_ms, max_ms) = min_max(&state.ms);
        Ok(TimeSeriesRecord {
            t: state.t,
            l2_m: l2_norm(&state.m, mass)?,
            l2_f: l2_norm(&state.f, mass)?,
            l2_ms: l2_norm(&state.ms, mass)?,
            int_m: integrate(&state.m, mass),
            int_f: integrate(&state.f, mass),
            int_ms: integrate(&state.ms, mass),
            min_m,
            min_f,
            min_ms,
            max_m,
            max_f,
            max_ms,
            cg_iterations,
        })
    }
}
