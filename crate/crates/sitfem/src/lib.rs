//! Finite-element simulator for sterile-insect-technique (SIT) control of
//! mosquito populations.
//!
//! The model tracks wild males, wild females, and released sterile males as
//! reaction-diffusion fields on the unit square (1 hectare) with homogeneous
//! Neumann boundaries, Ricker-type recruitment, and mating competition from
//! the sterile stock. Space is discretized with P1 triangular finite elements,
//! time with a one-step-theta IMEX scheme: diffusion and linear decay are
//! treated implicitly, the nonlinear recruitment explicitly at the previous
//! step, so each step solves three uncoupled SPD systems.

pub mod analysis;
pub mod assembly;
pub mod catalog;
pub mod cg;
pub mod config;
pub mod error;
pub mod mesh;
pub mod model;
pub mod output;
pub mod release;
pub mod scenario;
pub mod sparse;
pub mod stepper;

pub use error::{Error, Result};
pub use mesh::Mesh;
pub use model::{lambda_crit, positive_equilibrium, ModelParams, OdeState};
pub use sparse::CsrMatrix;
pub use stepper::{SchemeConfig, Simulation, State};

pub fn version() -> &'static str {
    env!("CARGO_PKG_VERSION")
}
