//! Spatial release fields, scaling helpers, and impulsive schedules.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mesh::Mesh;

/// Mass of the top-right Gaussian exp(-100 ||x - (3/4, 3/4)||^2) over the unit
/// square. Kept verbatim so release totals match published runs exactly.
pub const TOP_RIGHT_GAUSSIAN_MASS: f64 = 0.0314031;

/// Scalar field over the unit square, evaluated pointwise.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SpatialField {
    Uniform { value: f64 },
    /// amplitude * exp(-100 ||(x,y) - center||^2)
    Gaussian { center: [f64; 2], amplitude: f64 },
    /// base + amplitude * sin(k pi x) sin(k pi y)
    Sinusoidal { base: f64, amplitude: f64, frequency: f64 },
    Sum { terms: Vec<SpatialField> },
}

impl SpatialField {
    pub fn uniform(value: f64) -> Self {
        SpatialField::Uniform { value }
    }

    pub fn zero() -> Self {
        SpatialField::Uniform { value: 0.0 }
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        match self {
            SpatialField::Uniform { value } => *value,
            SpatialField::Gaussian { center, amplitude } => {
                let dx = x - center[0];
                let dy = y - center[1];
                amplitude * (-100.0 * (dx * dx + dy * dy)).exp()
            }
            SpatialField::Sinusoidal { base, amplitude, frequency } => {
                let k = frequency * std::f64::consts::PI;
                base + amplitude * (k * x).sin() * (k * y).sin()
            }
            SpatialField::Sum { terms } => terms.iter().map(|t| t.eval(x, y)).sum(),
        }
    }

    /// Point evaluation at every mesh node (P1 interpolation coefficients).
    /// Fails on the first negative nodal value, naming the node.
    pub fn evaluate_on_mesh(&self, mesh: &Mesh) -> Result<Vec<f64>> {
        let mut values = Vec::with_capacity(mesh.num_nodes());
        for (idx, p) in mesh.nodes.iter().enumerate() {
            let v = self.eval(p[0], p[1]);
            if v < 0.0 {
                return Err(Error::InvalidInput(format!(
                    "field is negative at node {idx} = ({}, {}): {v}",
                    p[0], p[1]
                )));
            }
            values.push(v);
        }
        Ok(values)
    }
}

/// Spatial profile for a release of prescribed total size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReleaseProfile {
    Uniform,
    GaussianCenter,
    GaussianTopRight,
}

/// Field whose integral over the unit square equals `total`:
/// uniform value `total`, or a Gaussian with amplitude total*100/pi (center)
/// resp. total/0.0314031 (top right, truncated by the boundary).
pub fn scaled_release(profile: ReleaseProfile, total: f64) -> Result<SpatialField> {
    if total < 0.0 {
        return Err(Error::InvalidInput(format!(
            "release total must be nonnegative, got {total}"
        )));
    }
    Ok(match profile {
        ReleaseProfile::Uniform => SpatialField::Uniform { value: total },
        ReleaseProfile::GaussianCenter => SpatialField::Gaussian {
            center: [0.5, 0.5],
            amplitude: total * 100.0 / std::f64::consts::PI,
        },
        ReleaseProfile::GaussianTopRight => SpatialField::Gaussian {
            center: [0.75, 0.75],
            amplitude: total / TOP_RIGHT_GAUSSIAN_MASS,
        },
    })
}

/// Instantaneous addition to the sterile-male field at a fixed time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Impulse {
    /// Days; must be an integer multiple of the simulation step.
    pub time: f64,
    pub field: SpatialField,
}

/// Continuous release rate plus timed impulses.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ReleaseSchedule {
    pub continuous: Option<SpatialField>,
    pub impulses: Vec<Impulse>,
}

impl ReleaseSchedule {
    pub fn constant(field: SpatialField) -> Self {
        ReleaseSchedule { continuous: Some(field), impulses: Vec::new() }
    }

    /// Checks impulse times: nonnegative, strictly increasing, aligned with
    /// the step size, and not beyond the final time.
    pub fn validate(&self, dt: f64, t_end: f64) -> Result<()> {
        let mut prev = f64::NEG_INFINITY;
        for (i, imp) in self.impulses.iter().enumerate() {
            let path = format!("impulses[{i}].time");
            if imp.time < 0.0 {
                return Err(Error::Config { path, message: format!("negative time {}", imp.time) });
            }
            if imp.time <= prev {
                return Err(Error::Config {
                    path,
                    message: format!("times must be strictly increasing ({} after {prev})", imp.time),
                });
            }
            let steps = (imp.time / dt).round();
            if (steps * dt - imp.time).abs() > 1e-9 * imp.time.max(1.0) {
                return Err(Error::Config {
                    path,
                    message: format!("time {} is not an integer multiple of dt = {dt}", imp.time),
                });
            }
            if imp.time > t_end + 1e-9 {
                return Err(Error::Config {
                    path,
                    message: format!("time {} exceeds final time {t_end}", imp.time),
                });
            }
            prev = imp.time;
        }
        Ok(())
    }
}

/// Componentwise sum of the sterile field and an impulse field.
pub fn apply_impulse(ms: &[f64], impulse: &[f64]) -> Result<Vec<f64>> {
    if ms.len() != impulse.len() {
        return Err(Error::InvalidInput(format!(
            "impulse dimension {} does not match field dimension {}",
            impulse.len(),
            ms.len()
        )));
    }
    Ok(ms.iter().zip(impulse).map(|(a, b)| a + b).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembly::assemble_mass;

    fn integral(field: &SpatialField, n: usize) -> f64 {
        let mesh = Mesh::structured(n).unwrap();
        let mass = assemble_mass(&mesh);
        let v = field.evaluate_on_mesh(&mesh).unwrap();
        mass.mul_vec(&v).iter().sum()
    }

    #[test]
    fn gaussian_peak_value() {
        let g = SpatialField::Gaussian { center: [0.5, 0.5], amplitude: 1.0 };
        assert_eq!(g.eval(0.5, 0.5), 1.0);
        let mesh = Mesh::structured(2).unwrap();
        let v = g.evaluate_on_mesh(&mesh).unwrap();
        assert_eq!(v[mesh.node_index(1, 1)], 1.0);
    }

    #[test]
    fn uniform_everywhere() {
        let mesh = Mesh::structured(3).unwrap();
        let v = SpatialField::uniform(1421.2).evaluate_on_mesh(&mesh).unwrap();
        assert!(v.iter().all(|&x| x == 1421.2));
    }

    #[test]
    fn top_right_gaussian_quadrature_matches_constant() {
        let g = SpatialField::Gaussian { center: [0.75, 0.75], amplitude: 1.0 };
        let q = integral(&g, 64);
        assert!(
            (q - TOP_RIGHT_GAUSSIAN_MASS).abs() <= 5e-4 * TOP_RIGHT_GAUSSIAN_MASS,
            "integral {q}"
        );
    }

    #[test]
    fn negative_field_names_the_node() {
        let mesh = Mesh::structured(4).unwrap();
        let f = SpatialField::Sinusoidal { base: 0.0, amplitude: 1.0, frequency: 2.0 };
        let err = f.evaluate_on_mesh(&mesh).unwrap_err();
        assert!(err.to_string().contains("node"), "{err}");
    }

    #[test]
    fn scaled_release_amplitudes() {
        match scaled_release(ReleaseProfile::Uniform, 1.1 * 1292.0).unwrap() {
            SpatialField::Uniform { value } => assert!((value - 1421.2).abs() < 1e-9),
            other => panic!("{other:?}"),
        }
        match scaled_release(ReleaseProfile::GaussianCenter, 2000.0).unwrap() {
            SpatialField::Gaussian { amplitude, center } => {
                assert_eq!(center, [0.5, 0.5]);
                assert!((amplitude - 63661.98).abs() < 0.01);
            }
            other => panic!("{other:?}"),
        }
        match scaled_release(ReleaseProfile::GaussianTopRight, 33000.0).unwrap() {
            SpatialField::Gaussian { amplitude, center } => {
                assert_eq!(center, [0.75, 0.75]);
                assert!((amplitude - 1_050_852.0).abs() / 1_050_852.0 < 1e-4);
            }
            other => panic!("{other:?}"),
        }
        assert!(scaled_release(ReleaseProfile::Uniform, -1.0).is_err());
    }

    #[test]
    fn scaled_release_totals_integrate_back() {
        for (profile, tol) in [
            (ReleaseProfile::Uniform, 1e-12),
            (ReleaseProfile::GaussianCenter, 1e-3),
            (ReleaseProfile::GaussianTopRight, 5e-4),
        ] {
            let total = 33000.0;
            let field = scaled_release(profile, total).unwrap();
            let q = integral(&field, 64);
            assert!(
                (q - total).abs() <= tol * total,
                "{profile:?}: integral {q} vs total {total}"
            );
        }
    }

    #[test]
    fn refinement_consistency() {
        for profile in [
            ReleaseProfile::Uniform,
            ReleaseProfile::GaussianCenter,
            ReleaseProfile::GaussianTopRight,
        ] {
            let field = scaled_release(profile, 1000.0).unwrap();
            let coarse = integral(&field, 64);
            let fine = integral(&field, 128);
            assert!(
                (coarse - fine).abs() < 1e-3 * fine.abs(),
                "{profile:?}: {coarse} vs {fine}"
            );
        }
    }

    #[test]
    fn impulse_addition() {
        let ms = vec![10.0; 9];
        let bump = vec![33000.0; 9];
        let after = apply_impulse(&ms, &bump).unwrap();
        assert!(after.iter().all(|&v| v == 33010.0));
        let same = apply_impulse(&ms, &vec![0.0; 9]).unwrap();
        assert_eq!(same, ms);
        assert!(apply_impulse(&ms, &vec![0.0; 4]).is_err());
    }

    #[test]
    fn impulse_mass_is_conserved_by_quadrature() {
        let mesh = Mesh::structured(64).unwrap();
        let mass = assemble_mass(&mesh);
        let ms = vec![0.0; mesh.num_nodes()];
        let field = scaled_release(ReleaseProfile::GaussianCenter, 33000.0)
            .unwrap()
            .evaluate_on_mesh(&mesh)
            .unwrap();
        let after = apply_impulse(&ms, &field).unwrap();
        let q: f64 = mass.mul_vec(&after).iter().sum();
        assert!((q - 33000.0).abs() <= 1e-3 * 33000.0, "integral {q}");
    }

    #[test]
    fn schedule_validation() {
        let mk = |times: &[f64]| ReleaseSchedule {
            continuous: None,
            impulses: times
                .iter()
                .map(|&t| Impulse { time: t, field: SpatialField::uniform(1.0) })
                .collect(),
        };
        assert!(mk(&[0.0, 20.0, 40.0]).validate(0.5, 500.0).is_ok());
        assert!(mk(&[10.25]).validate(0.5, 500.0).is_err());
        assert!(mk(&[20.0, 20.0]).validate(0.5, 500.0).is_err());
        assert!(mk(&[-1.0]).validate(0.5, 500.0).is_err());
        assert!(mk(&[600.0]).validate(0.5, 500.0).is_err());
    }
}
