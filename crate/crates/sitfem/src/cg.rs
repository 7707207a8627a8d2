//! Preconditioned conjugate gradients for the SPD systems of the implicit part.

use crate::error::{Error, Result};
use crate::sparse::CsrMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preconditioner {
    /// Diagonal (Jacobi) scaling; mesh-robust for mass-plus-stiffness systems.
    Jacobi,
    None,
}

#[derive(Debug, Clone)]
pub struct CgConfig {
    /// Convergence when ||b - Ax|| <= max(rel_tol * ||b||, abs_tol).
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Defaults to 10x the system dimension when unset.
    pub max_iters: Option<usize>,
    pub preconditioner: Preconditioner,
}

impl Default for CgConfig {
    fn default() -> Self {
        CgConfig {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_iters: None,
            preconditioner: Preconditioner::Jacobi,
        }
    }
}

impl CgConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || !(self.abs_tol > 0.0) {
            return Err(Error::InvalidInput("cg tolerances must be positive".into()));
        }
        if self.max_iters == Some(0) {
            return Err(Error::InvalidInput("cg max_iters must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CgStats {
    pub iterations: usize,
    /// Final true residual ||b - Ax||.
    pub residual: f64,
}

fn norm2(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Solves A x = b for SPD A, warm-started from x0.
pub fn cg_solve(
    a: &CsrMatrix,
    b: &[f64],
    x0: &[f64],
    cfg: &CgConfig,
) -> Result<(Vec<f64>, CgStats)> {
    cfg.validate()?;
    let n = a.dim();
    assert_eq!(b.len(), n);
    assert_eq!(x0.len(), n);
    let max_iters = cfg.max_iters.unwrap_or(10 * n.max(1));
    let tol = (cfg.rel_tol * norm2(b)).max(cfg.abs_tol);

    let inv_diag: Option<Vec<f64>> = match cfg.preconditioner {
        Preconditioner::Jacobi => Some(
            a.diagonal()
                .into_iter()
                .map(|d| if d > 0.0 { 1.0 / d } else { 1.0 })
                .collect(),
        ),
        Preconditioner::None => None,
    };
    let apply_pc = |r: &[f64], z: &mut Vec<f64>| match &inv_diag {
        Some(d) => {
            z.clear();
            z.extend(r.iter().zip(d).map(|(ri, di)| ri * di));
        }
        None => {
            z.clear();
            z.extend_from_slice(r);
        }
    };

    let mut x = x0.to_vec();
    let mut r = b.to_vec();
    let ax = a.mul_vec(&x);
    for i in 0..n {
        r[i] -= ax[i];
    }
    let true_residual = |x: &[f64]| {
        let ax = a.mul_vec(x);
        norm2(&b.iter().zip(&ax).map(|(bi, ai)| bi - ai).collect::<Vec<_>>())
    };
    if norm2(&r) <= tol {
        let res = true_residual(&x);
        return Ok((x, CgStats { iterations: 0, residual: res }));
    }

    let mut z = Vec::with_capacity(n);
    apply_pc(&r, &mut z);
    let mut p = z.clone();
    let mut rz = dot(&r, &z);
    let mut ap = vec![0.0; n];

    for iter in 1..=max_iters {
        a.matvec(&p, &mut ap);
        let pap = dot(&p, &ap);
        if pap <= 0.0 {
            return Err(Error::NotSpd { iteration: iter, curvature: pap });
        }
        let alpha = rz / pap;
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        if norm2(&r) <= tol {
            return Ok((
                x.clone(),
                CgStats { iterations: iter, residual: true_residual(&x) },
            ));
        }
        apply_pc(&r, &mut z);
        let rz_next = dot(&r, &z);
        let beta = rz_next / rz;
        rz = rz_next;
        for i in 0..n {
            p[i] = z[i] + beta * p[i];
        }
    }
    Err(Error::NonConvergence {
        iterations: max_iters,
        residual: norm2(&r),
    })
}
