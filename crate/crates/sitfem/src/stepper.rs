//! One-step-theta IMEX time stepping of the fully discrete system.
//!
//! Each step solves, for every species u in {M, F, Ms} with coefficients
//! (alpha, mu) and nodal source s evaluated at the previous step,
//!
//!   [(1/dt) Mass + theta (alpha K + mu Mass)] u^m
//!       = [(1/dt) Mass - (1-theta)(alpha K + mu Mass)] u^{m-1} + Mass s^{m-1},
//!
//! with s = r rho G(X^{m-1}) for M, (1-r) rho G(X^{m-1}) for F, and the
//! release rate for Ms. The three systems are uncoupled and their matrices
//! constant in time, so they are assembled once per (theta, dt) and reused;
//! CG is warm-started from the previous step. No positivity clamping is
//! applied; negativity is surfaced through the recorded nodal minima.

use serde::{Deserialize, Serialize};

use crate::assembly::{assemble_mass, assemble_stiffness};
use crate::cg::{cg_solve, CgConfig, CgStats};
use crate::error::{Error, Result};
use crate::mesh::Mesh;
use crate::model::{recruitment_raw, ModelParams};
use crate::release::{apply_impulse, ReleaseSchedule};
use crate::sparse::CsrMatrix;

/// Nodal fields of the three species at one time instant.
#[derive(Debug, Clone, PartialEq)]
pub struct State {
    /// Days.
    pub t: f64,
    pub m: Vec<f64>,
    pub f: Vec<f64>,
    pub ms: Vec<f64>,
}

impl State {
    pub fn new(t: f64, m: Vec<f64>, f: Vec<f64>, ms: Vec<f64>) -> Result<Self> {
        if m.len() != f.len() || m.len() != ms.len() {
            return Err(Error::InvalidInput("state fields must have equal length".into()));
        }
        Ok(State { t, m, f, ms })
    }

    pub fn num_nodes(&self) -> usize {
        self.m.len()
    }

    pub fn species(&self, s: Species) -> &[f64] {
        match s {
            Species::WildMale => &self.m,
            Species::WildFemale => &self.f,
            Species::SterileMale => &self.ms,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().chain(&self.f).chain(&self.ms).all(|v| v.is_finite())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Species {
    WildMale,
    WildFemale,
    SterileMale,
}

impl Species {
    pub const ALL: [Species; 3] = [Species::WildMale, Species::WildFemale, Species::SterileMale];

    pub fn label(self) -> &'static str {
        match self {
            Species::WildMale => "M",
            Species::WildFemale => "F",
            Species::SterileMale => "Ms",
        }
    }
}

/// Time-discretization parameters of the theta scheme.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SchemeConfig {
    /// Implicit weight, in [1/2, 1].
    pub theta: f64,
    /// Step size in days.
    pub dt: f64,
    /// Final time in days.
    pub t_end: f64,
}

impl Default for SchemeConfig {
    fn default() -> Self {
        SchemeConfig { theta: 1.0, dt: 0.5, t_end: 500.0 }
    }
}

impl SchemeConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.5..=1.0).contains(&self.theta) {
            return Err(Error::Config {
                path: "scheme.theta".into(),
                message: format!("theta must lie in [0.5, 1], got {}", self.theta),
            });
        }
        if !(self.dt > 0.0) {
            return Err(Error::Config {
                path: "scheme.dt".into(),
                message: format!("dt must be positive, got {}", self.dt),
            });
        }
        if self.t_end < 0.0 {
            return Err(Error::Config {
                path: "scheme.t_end".into(),
                message: format!("t_end must be nonnegative, got {}", self.t_end),
            });
        }
        let steps = (self.t_end / self.dt).round();
        if (steps * self.dt - self.t_end).abs() > 1e-9 * self.t_end.max(1.0) {
            return Err(Error::Config {
                path: "scheme.t_end".into(),
                message: format!("t_end = {} is not an integer multiple of dt = {}", self.t_end, self.dt),
            });
        }
        Ok(())
    }

    pub fn num_steps(&self) -> usize {
        (self.t_end / self.dt).round() as usize
    }
}

struct SpeciesSystem {
    implicit: CsrMatrix,
    explicit: CsrMatrix,
}

/// Per-species system matrices for fixed (theta, dt, params), plus the mass
/// matrix used for the reaction right-hand side.
pub struct SystemMatrices {
    mass: CsrMatrix,
    species: [SpeciesSystem; 3],
}

impl SystemMatrices {
    pub fn build(
        mass: &CsrMatrix,
        stiffness: &CsrMatrix,
        params: &ModelParams,
        scheme: &SchemeConfig,
    ) -> Result<Self> {
        params.validate()?;
        scheme.validate()?;
        let build_one = |alpha: f64, mu: f64| -> Result<SpeciesSystem> {
            let implicit = CsrMatrix::linear_combination(
                1.0 / scheme.dt + scheme.theta * mu,
                mass,
                scheme.theta * alpha,
                stiffness,
            )?;
            let explicit = CsrMatrix::linear_combination(
                1.0 / scheme.dt - (1.0 - scheme.theta) * mu,
                mass,
                -(1.0 - scheme.theta) * alpha,
                stiffness,
            )?;
            Ok(SpeciesSystem { implicit, explicit })
        };
        Ok(SystemMatrices {
            mass: mass.clone(),
            species: [
                build_one(params.alpha_m, params.mu_m)?,
                build_one(params.alpha_f, params.mu_f)?,
                build_one(params.alpha_s, params.mu_s)?,
            ],
        })
    }

    pub fn mass(&self) -> &CsrMatrix {
        &self.mass
    }
}

/// Advances the state by one step. The nodal reaction source is the
/// recruitment kernel evaluated nodewise at the previous state; the release
/// field enters the sterile equation unchanged.
pub fn imex_step(
    state: &State,
    sys: &SystemMatrices,
    lambda_nodal: &[f64],
    params: &ModelParams,
    cg: &CgConfig,
    dt: f64,
    step_index: usize,
) -> Result<(State, [CgStats; 3])> {
    let n = state.num_nodes();
    assert_eq!(lambda_nodal.len(), n);
    let mut g = vec![0.0; n];
    for i in 0..n {
        g[i] = recruitment_raw(state.m[i], state.f[i], state.ms[i], params);
    }
    let birth_m = params.r * params.rho;
    let birth_f = (1.0 - params.r) * params.rho;

    let solve_species = |idx: usize, current: &[f64], source: &[f64]| -> Result<(Vec<f64>, CgStats)> {
        let system = &sys.species[idx];
        let mut rhs = system.explicit.mul_vec(current);
        let reaction = sys.mass.mul_vec(source);
        for i in 0..n {
            rhs[i] += reaction[i];
        }
        cg_solve(&system.implicit, &rhs, current, cg).map_err(|e| Error::Step {
            species: Species::ALL[idx].label(),
            step: step_index,
            t: state.t + dt,
            source: Box::new(e),
        })
    };

    let source_m: Vec<f64> = g.iter().map(|gi| birth_m * gi).collect();
    let source_f: Vec<f64> = g.iter().map(|gi| birth_f * gi).collect();
    let (m, stats_m) = solve_species(0, &state.m, &source_m)?;
    let (f, stats_f) = solve_species(1, &state.f, &source_f)?;
    let (ms, stats_s) = solve_species(2, &state.ms, lambda_nodal)?;

    Ok((
        State { t: state.t + dt, m, f, ms },
        [stats_m, stats_f, stats_s],
    ))
}

/// A full simulation: mesh artifacts, system matrices, release schedule, and
/// the evolving state. Owns its state exclusively; observers get read-only
/// snapshots.
pub struct Simulation {
    mesh: Mesh,
    mass: CsrMatrix,
    stiffness: CsrMatrix,
    params: ModelParams,
    scheme: SchemeConfig,
    cg: CgConfig,
    sys: SystemMatrices,
    lambda_nodal: Vec<f64>,
    /// (step index, nodal field), sorted by step.
    impulses: Vec<(usize, Vec<f64>)>,
    state: State,
    step_index: usize,
    last_stats: [CgStats; 3],
}

impl Simulation {
    pub fn new(
        mesh: Mesh,
        params: ModelParams,
        scheme: SchemeConfig,
        cg: CgConfig,
        schedule: &ReleaseSchedule,
        initial: State,
    ) -> Result<Self> {
        params.validate()?;
        scheme.validate()?;
        cg.validate()?;
        schedule.validate(scheme.dt, scheme.t_end)?;
        if initial.num_nodes() != mesh.num_nodes() {
            return Err(Error::InvalidInput(format!(
                "initial state has {} nodes, mesh has {}",
                initial.num_nodes(),
                mesh.num_nodes()
            )));
        }
        if initial.t != 0.0 {
            return Err(Error::InvalidInput("initial state must start at t = 0".into()));
        }

        let lambda_nodal = match &schedule.continuous {
            Some(field) => field.evaluate_on_mesh(&mesh)?,
            None => vec![0.0; mesh.num_nodes()],
        };
        let mut initial = initial;
        let mut impulses = Vec::new();
        for imp in &schedule.impulses {
            let step = (imp.time / scheme.dt).round() as usize;
            let nodal = imp.field.evaluate_on_mesh(&mesh)?;
            if step == 0 {
                // a release at t = 0 is part of the initial condition
                initial.ms = apply_impulse(&initial.ms, &nodal)?;
            } else {
                impulses.push((step, nodal));
            }
        }

        let mass = assemble_mass(&mesh);
        let stiffness = assemble_stiffness(&mesh);
        let sys = SystemMatrices::build(&mass, &stiffness, &params, &scheme)?;
        Ok(Simulation {
            mesh,
            mass,
            stiffness,
            params,
            scheme,
            cg,
            sys,
            lambda_nodal,
            impulses,
            state: initial,
            step_index: 0,
            last_stats: [CgStats { iterations: 0, residual: 0.0 }; 3],
        })
    }

    pub fn mesh(&self) -> &Mesh {
        &self.mesh
    }

    pub fn mass(&self) -> &CsrMatrix {
        &self.mass
    }

    pub fn stiffness(&self) -> &CsrMatrix {
        &self.stiffness
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn scheme(&self) -> &SchemeConfig {
        &self.scheme
    }

    pub fn state(&self) -> &State {
        &self.state
    }

    pub fn last_cg_stats(&self) -> &[CgStats; 3] {
        &self.last_stats
    }

    pub fn steps_taken(&self) -> usize {
        self.step_index
    }

    pub fn is_done(&self) -> bool {
        self.step_index >= self.scheme.num_steps()
    }

    /// Advances one step; an impulse scheduled at the new time is applied
    /// after the step completes (to the t^- state, producing the t^+ state).
    pub fn step(&mut self) -> Result<()> {
        let next_index = self.step_index + 1;
        let (mut next, stats) = imex_step(
            &self.state,
            &self.sys,
            &self.lambda_nodal,
            &self.params,
            &self.cg,
            self.scheme.dt,
            next_index,
        )?;
        // recompute from the step count so sampling times stay exact
        next.t = next_index as f64 * self.scheme.dt;
        if let Some((_, field)) = self.impulses.iter().find(|(s, _)| *s == next_index) {
            next.ms = apply_impulse(&next.ms, field)?;
        }
        self.state = next;
        self.step_index = next_index;
        self.last_stats = stats;
        Ok(())
    }

    /// Runs to the final time, invoking the observer on the initial state and
    /// then at every multiple of `sample_every` plus at every post-impulse
    /// instant. `sample_every` must be an integer multiple of dt.
    pub fn run(
        &mut self,
        sample_every: f64,
        mut observer: impl FnMut(&State, &[CgStats; 3]),
    ) -> Result<()> {
        let stride = sample_stride(sample_every, self.scheme.dt)?;
        if self.step_index == 0 {
            observer(&self.state, &self.last_stats);
        }
        let total = self.scheme.num_steps();
        while self.step_index < total {
            self.step()?;
            let idx = self.step_index;
            let impulse_now = self.impulses.iter().any(|(s, _)| *s == idx);
            if idx % stride == 0 || impulse_now || idx == total {
                observer(&self.state, &self.last_stats);
            }
        }
        Ok(())
    }

    /// Runs to the final time discarding intermediate samples.
    pub fn run_to_end(&mut self) -> Result<()> {
        self.run(self.scheme.dt.max(self.scheme.t_end), |_, _| ())
    }
}

fn sample_stride(sample_every: f64, dt: f64) -> Result<usize> {
    if !(sample_every > 0.0) {
        return Err(Error::Config {
            path: "output.sample_every".into(),
            message: format!("sampling interval must be positive, got {sample_every}"),
        });
    }
    let stride = (sample_every / dt).round();
    if stride < 1.0 || (stride * dt - sample_every).abs() > 1e-9 * sample_every {
        return Err(Error::Config {
            path: "output.sample_every".into(),
            message: format!("sampling interval {sample_every} is not an integer multiple of dt = {dt}"),
        });
    }
    Ok(stride as usize)
}
