//! Biological model: parameters, reaction terms, reference ODE dynamics,
//! equilibria, and the critical release threshold.
//!
//! Recruitment follows a Ricker law: matings succeed with probability
//! M/(M + gamma*Ms) and larval competition damps births by exp(-sigma(M+F)).
//! The recruitment kernel is
//!
//!   G(M, F, Ms) = F * M / (M + gamma*Ms) * exp(-sigma (M + F)),
//!
//! and the reaction rates are
//!
//!   dM/dt  = r rho G - mu_M M
//!   dF/dt  = (1-r) rho G - mu_F F
//!   dMs/dt = Lambda - mu_S Ms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// G is defined as 0 once M + gamma*Ms falls below this guard; the continuous
/// limit of G as M -> 0 is 0, but a discrete explicit step can hit exact zeros.
pub const DENOMINATOR_GUARD: f64 = 1e-12;

/// All biological and diffusion constants. Units: rates per day, sigma per
/// individual, diffusion in hectare/day; the domain is scaled to 1 hectare.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ModelParams {
    /// Eggs per female per day.
    pub rho: f64,
    /// Male fraction of offspring, in [0, 1].
    pub r: f64,
    /// Larval-competition parameter.
    pub sigma: f64,
    pub mu_m: f64,
    pub mu_f: f64,
    pub mu_s: f64,
    /// Relative mating efficiency of sterile males, in (0, 1].
    pub gamma: f64,
    pub alpha_m: f64,
    pub alpha_f: f64,
    pub alpha_s: f64,
}

impl Default for ModelParams {
    fn default() -> Self {
        ModelParams {
            rho: 4.55,
            r: 0.5,
            sigma: 1.0 / 2800.0,
            mu_m: 0.04,
            mu_f: 0.03,
            mu_s: 0.04,
            gamma: 1.0,
            alpha_m: 0.01,
            alpha_f: 0.01,
            alpha_s: 0.01,
        }
    }
}

impl ModelParams {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("rho", self.rho),
            ("sigma", self.sigma),
            ("mu_m", self.mu_m),
            ("mu_f", self.mu_f),
            ("mu_s", self.mu_s),
            ("alpha_m", self.alpha_m),
            ("alpha_f", self.alpha_f),
            ("alpha_s", self.alpha_s),
        ];
        for (name, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "parameter {name} must be strictly positive, got {v}"
                )));
            }
        }
        if !(0.0..=1.0).contains(&self.r) {
            return Err(Error::InvalidInput(format!("r must lie in [0,1], got {}", self.r)));
        }
        if !(self.gamma > 0.0 && self.gamma <= 1.0) {
            return Err(Error::InvalidInput(format!(
                "gamma must lie in (0,1], got {}",
                self.gamma
            )));
        }
        Ok(())
    }

    /// Equilibrium female-to-male ratio mu_M (1-r) / (mu_F r).
    pub fn female_male_ratio(&self) -> f64 {
        self.mu_m * (1.0 - self.r) / (self.mu_f * self.r)
    }
}

/// Spatially homogeneous population totals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeState {
    pub m: f64,
    pub f: f64,
    pub ms: f64,
}

impl OdeState {
    pub fn new(m: f64, f: f64, ms: f64) -> Self {
        OdeState { m, f, ms }
    }
}

/// Recruitment kernel without precondition checks; tolerates the slightly
/// negative nodal values an explicit step may produce (monitored, not clamped).
#[inline]
pub(crate) fn recruitment_raw(m: f64, f: f64, ms: f64, p: &ModelParams) -> f64 {
    let den = m + p.gamma * ms;
    if den < DENOMINATOR_GUARD {
        return 0.0;
    }
    f * m / den * (-p.sigma * (m + f)).exp()
}

/// Recruitment kernel G; rejects negative inputs.
pub fn recruitment(m: f64, f: f64, ms: f64, p: &ModelParams) -> Result<f64> {
    if m < 0.0 || f < 0.0 || ms < 0.0 {
        return Err(Error::InvalidInput(format!(
            "recruitment requires nonnegative populations, got ({m}, {f}, {ms})"
        )));
    }
    Ok(recruitment_raw(m, f, ms, p))
}

/// Reaction rates (dM, dF, dMs) for release rate `lambda`.
pub fn reaction_rates(state: &OdeState, lambda: f64, p: &ModelParams) -> Result<[f64; 3]> {
    if lambda < 0.0 {
        return Err(Error::InvalidInput(format!("release rate must be nonnegative, got {lambda}")));
    }
    let g = recruitment(state.m, state.f, state.ms, p)?;
    Ok(rates_raw(state.m, state.f, state.ms, g, lambda, p))
}

#[inline]
fn rates_raw(m: f64, f: f64, ms: f64, g: f64, lambda: f64, p: &ModelParams) -> [f64; 3] {
    [
        p.r * p.rho * g - p.mu_m * m,
        (1.0 - p.r) * p.rho * g - p.mu_f * f,
        lambda - p.mu_s * ms,
    ]
}

/// Lipschitz factor L(X) = sigma F M + F + gamma^2 (F + Ms) + 1.
pub fn lipschitz_bound(m: f64, f: f64, ms: f64, p: &ModelParams) -> f64 {
    p.sigma * f * m + f + p.gamma * p.gamma * (f + ms) + 1.0
}

/// Release input for the reference ODE: constant rate plus timed impulses
/// added to the sterile stock between steps.
#[derive(Debug, Clone, Default)]
pub struct OdeRelease {
    pub constant: f64,
    /// (time, sterile males added); times must be multiples of the step size.
    pub impulses: Vec<(f64, f64)>,
}

impl OdeRelease {
    pub fn constant(rate: f64) -> Self {
        OdeRelease { constant: rate, impulses: Vec::new() }
    }
}

const RK4_ROUNDOFF: f64 = 1e-9;

/// Classical fixed-step RK4 trajectory, sampled at every step.
///
/// Values in (-1e-9, 0) are clamped to 0 as tolerated round-off; anything
/// more negative, or NaN, aborts with the offending time. An impulse at t=0
/// is folded into the initial state; later impulses apply after the step
/// that lands on their time.
pub fn ode_solve_rk4(
    initial: OdeState,
    release: &OdeRelease,
    p: &ModelParams,
    dt: f64,
    t_end: f64,
) -> Result<Vec<(f64, OdeState)>> {
    if !(dt > 0.0) {
        return Err(Error::InvalidInput(format!("dt must be positive, got {dt}")));
    }
    if t_end < 0.0 {
        return Err(Error::InvalidInput(format!("t_end must be nonnegative, got {t_end}")));
    }
    if initial.m < 0.0 || initial.f < 0.0 || initial.ms < 0.0 {
        return Err(Error::InvalidInput("initial state must be nonnegative".into()));
    }
    if release.constant < 0.0 {
        return Err(Error::InvalidInput("release rate must be nonnegative".into()));
    }
    let steps = (t_end / dt).round() as usize;
    if ((steps as f64) * dt - t_end).abs() > 1e-9 * t_end.max(1.0) {
        return Err(Error::InvalidInput(format!(
            "t_end = {t_end} is not an integer multiple of dt = {dt}"
        )));
    }
    let mut impulse_steps = std::collections::BTreeMap::new();
    for &(time, amount) in &release.impulses {
        if time < 0.0 || amount < 0.0 {
            return Err(Error::InvalidInput("impulses must have nonnegative time and size".into()));
        }
        let k = (time / dt).round() as usize;
        if (k as f64 * dt - time).abs() > 1e-9 * time.max(1.0) {
            return Err(Error::InvalidInput(format!(
                "impulse time {time} is not an integer multiple of dt = {dt}"
            )));
        }
        *impulse_steps.entry(k).or_insert(0.0) += amount;
    }

    let deriv = |s: [f64; 3]| {
        let g = recruitment_raw(s[0], s[1], s[2], p);
        rates_raw(s[0], s[1], s[2], g, release.constant, p)
    };

    let mut state = [initial.m, initial.f, initial.ms];
    if let Some(first) = impulse_steps.get(&0) {
        state[2] += first;
    }
    let mut out = Vec::with_capacity(steps + 1);
    out.push((0.0, OdeState::new(state[0], state[1], state[2])));

    for step in 1..=steps {
        let k1 = deriv(state);
        let mid1 = add_scaled(state, &k1, dt / 2.0);
        let k2 = deriv(mid1);
        let mid2 = add_scaled(state, &k2, dt / 2.0);
        let k3 = deriv(mid2);
        let end = add_scaled(state, &k3, dt);
        let k4 = deriv(end);
        let t = step as f64 * dt;
        for i in 0..3 {
            let v = state[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            if v.is_nan() {
                return Err(Error::Integration { t, message: format!("component {i} became NaN") });
            }
            if v < 0.0 {
                if v > -RK4_ROUNDOFF {
                    state[i] = 0.0;
                } else {
                    return Err(Error::Integration {
                        t,
                        message: format!("component {i} became negative ({v:.3e})"),
                    });
                }
            } else {
                state[i] = v;
            }
        }
        if let Some(amount) = impulse_steps.get(&step) {
            state[2] += amount;
        }
        out.push((t, OdeState::new(state[0], state[1], state[2])));
    }
    Ok(out)
}

fn add_scaled(base: [f64; 3], k: &[f64; 3], factor: f64) -> [f64; 3] {
    [base[0] + factor * k[0], base[1] + factor * k[1], base[2] + factor * k[2]]
}

/// A spatially homogeneous steady state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Equilibrium {
    pub m: f64,
    pub f: f64,
    pub ms: f64,
}

/// With F = kappa*M eliminated, a positive equilibrium solves
/// phi(M) = (1-r) rho M / (M + a) exp(-b M) = mu_F,
/// where a = gamma Lambda / mu_S and b = sigma (1 + kappa).
struct EquilibriumEquation {
    birth: f64,
    a: f64,
    b: f64,
    kappa: f64,
}

impl EquilibriumEquation {
    fn new(p: &ModelParams, lambda: f64) -> Result<Self> {
        p.validate()?;
        if lambda < 0.0 {
            return Err(Error::InvalidInput(format!("release rate must be nonnegative, got {lambda}")));
        }
        let birth = (1.0 - p.r) * p.rho;
        if birth <= p.mu_f {
            return Err(Error::NotViable { birth, mu_f: p.mu_f });
        }
        let kappa = p.female_male_ratio();
        Ok(EquilibriumEquation {
            birth,
            a: p.gamma * lambda / p.mu_s,
            b: p.sigma * (1.0 + kappa),
            kappa,
        })
    }

    fn phi(&self, m: f64) -> f64 {
        self.birth * m / (m + self.a) * (-self.b * m).exp()
    }

    /// Maximizer of phi: the positive root of M^2 + a M - a/b = 0.
    fn maximizer(&self) -> f64 {
        let a = self.a;
        0.5 * (-a + (a * a + 4.0 * a / self.b).sqrt())
    }
}

fn bisect(mut lo: f64, mut hi: f64, mut above: impl FnMut(f64) -> bool) -> f64 {
    // invariant: above(lo), !above(hi)
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if above(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo) <= 1e-13 * hi.abs().max(1.0) {
            break;
        }
    }
    0.5 * (lo + hi)
}

fn equilibrium_from_m(m: f64, eq: &EquilibriumEquation, p: &ModelParams, lambda: f64) -> Equilibrium {
    Equilibrium { m, f: eq.kappa * m, ms: lambda / p.mu_s }
}

/// Stable positive equilibrium (larger root), or None when only the
/// mosquito-free state remains (Lambda above the critical threshold).
pub fn positive_equilibrium(p: &ModelParams, lambda: f64) -> Result<Option<Equilibrium>> {
    let eq = EquilibriumEquation::new(p, lambda)?;
    if lambda == 0.0 {
        // phi reduces to birth*exp(-bM): closed form
        let m = (eq.birth / p.mu_f).ln() / eq.b;
        return Ok(Some(equilibrium_from_m(m, &eq, p, lambda)));
    }
    let m_hat = eq.maximizer();
    if eq.phi(m_hat) < p.mu_f {
        return Ok(None);
    }
    let mut hi = m_hat.max(1.0);
    while eq.phi(hi) >= p.mu_f {
        hi *= 2.0;
        if hi > 1e30 {
            return Err(Error::Bracket("equilibrium root escaped to infinity".into()));
        }
    }
    let m = bisect(m_hat, hi, |m| eq.phi(m) >= p.mu_f);
    Ok(Some(equilibrium_from_m(m, &eq, p, lambda)))
}

/// Unstable saddle equilibrium (smaller root), defined for 0 < Lambda below
/// the critical threshold; used for basin studies.
pub fn saddle_equilibrium(p: &ModelParams, lambda: f64) -> Result<Option<Equilibrium>> {
    let eq = EquilibriumEquation::new(p, lambda)?;
    if lambda == 0.0 {
        return Ok(None);
    }
    let m_hat = eq.maximizer();
    if eq.phi(m_hat) < p.mu_f {
        return Ok(None);
    }
    // phi(0) = 0 < mu_F <= phi(m_hat): root in (0, m_hat]
    let m = bisect(0.0, m_hat, |m| eq.phi(m) < p.mu_f);
    Ok(Some(equilibrium_from_m(m, &eq, p, lambda)))
}

/// Critical constant daily release: the saddle-node value of Lambda at which
/// max over M of phi(M; Lambda) equals mu_F. Bisection over [1, 1e6]; the
/// maximum is strictly decreasing in Lambda, so the bracket is safe.
pub fn lambda_crit(p: &ModelParams) -> Result<f64> {
    let (mut lo, mut hi) = (1.0, 1e6);
    let peak = |lambda: f64| -> Result<f64> {
        let eq = EquilibriumEquation::new(p, lambda)?;
        Ok(eq.phi(eq.maximizer()))
    };
    if peak(lo)? <= p.mu_f {
        return Err(Error::Bracket(format!(
            "critical release below bracket start: peak({lo}) <= mu_F"
        )));
    }
    if peak(hi)? >= p.mu_f {
        return Err(Error::Bracket(format!(
            "critical release above bracket end {hi}: sterile males too inefficient"
        )));
    }
    loop {
        let mid = 0.5 * (lo + hi);
        if peak(mid)? > p.mu_f {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo) <= 1e-6 * hi {
            return Ok(0.5 * (lo + hi));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> ModelParams {
        ModelParams::default()
    }

    #[test]
    fn recruitment_direct_values() {
        let g = recruitment(100.0, 100.0, 0.0, &p()).unwrap();
        assert!((g - 100.0 * (-1.0f64 / 14.0).exp()).abs() < 1e-9);
        assert!((g - 93.1062).abs() < 5e-4);

        let g = recruitment(100.0, 100.0, 100.0, &p()).unwrap();
        assert!((g - 50.0 * (-1.0f64 / 14.0).exp()).abs() < 1e-9);
        assert!((g - 46.5531).abs() < 5e-4);

        assert_eq!(recruitment(0.0, 50.0, 10.0, &p()).unwrap(), 0.0);
    }

    #[test]
    fn recruitment_guard_and_bounds() {
        // denominator below the guard
        assert_eq!(recruitment(1e-13, 5.0, 0.0, &p()).unwrap(), 0.0);
        assert!(recruitment(-1.0, 1.0, 1.0, &p()).is_err());
        // G <= F always
        for (m, f, ms) in [(1.0, 2.0, 0.0), (1e4, 3.0, 1e3), (0.3, 0.7, 0.1)] {
            assert!(recruitment(m, f, ms, &p()).unwrap() <= f);
        }
    }

    #[test]
    fn reaction_rates_examples() {
        let zero = reaction_rates(&OdeState::new(0.0, 0.0, 0.0), 0.0, &p()).unwrap();
        assert_eq!(zero, [0.0, 0.0, 0.0]);

        let r = reaction_rates(&OdeState::new(100.0, 100.0, 0.0), 1000.0, &p()).unwrap();
        let g = 100.0 * (-1.0f64 / 14.0).exp();
        assert!((r[0] - (0.5 * 4.55 * g - 4.0)).abs() < 1e-9);
        assert!((r[1] - (0.5 * 4.55 * g - 3.0)).abs() < 1e-9);
        assert!((r[0] - 207.82).abs() < 5e-3);
        assert!((r[1] - 208.82).abs() < 5e-3);
        assert_eq!(r[2], 1000.0);
    }

    #[test]
    fn equilibrium_is_fixed_point_of_reaction() {
        let eq = positive_equilibrium(&p(), 0.0).unwrap().unwrap();
        let rates = reaction_rates(&OdeState::new(eq.m, eq.f, 0.0), 0.0, &p()).unwrap();
        for (rate, scale) in rates.iter().zip([eq.m, eq.f, 1.0]) {
            assert!(rate.abs() <= 1e-9 * scale.max(1.0), "residual {rate}");
        }
    }

    #[test]
    fn lipschitz_bound_values() {
        assert_eq!(lipschitz_bound(0.0, 0.0, 0.0, &p()), 1.0);
        let l = lipschitz_bound(100.0, 100.0, 0.0, &p());
        assert!((l - (10000.0 / 2800.0 + 100.0 + 100.0 + 1.0)).abs() < 1e-12);
        assert!((l - 204.571).abs() < 5e-4);

        let mut q = p();
        q.gamma = 0.5;
        let l = lipschitz_bound(10.0, 20.0, 30.0, &q);
        assert!((l - (200.0 / 2800.0 + 20.0 + 0.25 * 50.0 + 1.0)).abs() < 1e-12);
        assert!((l - 33.571).abs() < 5e-4);
    }

    #[test]
    fn equilibria_match_closed_forms() {
        let eq = positive_equilibrium(&p(), 0.0).unwrap().unwrap();
        assert!((eq.m - 5194.25).abs() < 0.5, "M* = {}", eq.m);
        assert!((eq.f - 6925.66).abs() < 0.5, "F* = {}", eq.f);
        // M + F = ln((1-r) rho / mu_F) / sigma
        let sum = (2.275f64 / 0.03).ln() * 2800.0;
        assert!((eq.m + eq.f - sum).abs() < 1e-6 * sum);
        assert_eq!(eq.ms, 0.0);
    }

    #[test]
    fn equilibrium_symmetry_when_mortalities_match() {
        let mut q = p();
        q.mu_m = q.mu_f;
        let eq = positive_equilibrium(&q, 0.0).unwrap().unwrap();
        assert!((eq.m - eq.f).abs() < 1e-9 * eq.m);
    }

    #[test]
    fn no_equilibrium_above_threshold() {
        let crit = lambda_crit(&p()).unwrap();
        assert!(positive_equilibrium(&p(), 1.1 * crit).unwrap().is_none());
        assert!(saddle_equilibrium(&p(), 1.1 * crit).unwrap().is_none());
    }

    #[test]
    fn branches_straddle_the_maximizer() {
        let crit = lambda_crit(&p()).unwrap();
        let lambda = 0.5 * crit;
        let stable = positive_equilibrium(&p(), lambda).unwrap().unwrap();
        let saddle = saddle_equilibrium(&p(), lambda).unwrap().unwrap();
        assert!(saddle.m < stable.m);
        assert!((stable.ms - lambda / 0.04).abs() < 1e-9 * stable.ms);
        let rates = reaction_rates(&OdeState::new(saddle.m, saddle.f, saddle.ms), lambda, &p()).unwrap();
        assert!(rates[0].abs() < 1e-8 * saddle.m.max(1.0));
        assert!(rates[1].abs() < 1e-8 * saddle.f.max(1.0));
    }

    #[test]
    fn critical_release_value() {
        let crit = lambda_crit(&p()).unwrap();
        assert!((crit - 1292.0).abs() <= 1.0, "lambda_crit = {crit}");
        // at the threshold the inner maximizer sits near 1158 and the peak
        // equals mu_F
        let eq = EquilibriumEquation::new(&p(), crit).unwrap();
        let m_hat = eq.maximizer();
        assert!((m_hat - 1158.0).abs() < 2.0, "maximizer = {m_hat}");
        assert!((eq.phi(m_hat) - 0.03).abs() < 1e-4 * 0.03);
    }

    #[test]
    fn critical_release_monotonicity() {
        let base = lambda_crit(&p()).unwrap();
        let mut weak = p();
        weak.gamma = 0.1;
        assert!(lambda_crit(&weak).unwrap() > base);

        let mut gammas = p();
        let mut prev = f64::INFINITY;
        for g in [0.2, 0.4, 0.6, 0.8, 1.0] {
            gammas.gamma = g;
            let c = lambda_crit(&gammas).unwrap();
            assert!(c < prev, "lambda_crit not decreasing in gamma at {g}");
            prev = c;
        }

        let mut mus = p();
        let mut prev = 0.0;
        for mu in [0.02, 0.04, 0.08, 0.16] {
            mus.mu_s = mu;
            let c = lambda_crit(&mus).unwrap();
            assert!(c > prev, "lambda_crit not increasing in mu_s at {mu}");
            prev = c;
        }
    }

    #[test]
    fn non_viable_parameters_rejected() {
        let mut q = p();
        q.mu_f = 3.0; // (1-r) rho = 2.275 <= mu_F
        match positive_equilibrium(&q, 0.0) {
            Err(Error::NotViable { .. }) => {}
            other => panic!("expected NotViable, got {other:?}"),
        }
        assert!(matches!(lambda_crit(&q), Err(Error::NotViable { .. })));
    }

    #[test]
    fn rk4_preserves_equilibrium() {
        let eq = positive_equilibrium(&p(), 0.0).unwrap().unwrap();
        let traj = ode_solve_rk4(
            OdeState::new(eq.m, eq.f, 0.0),
            &OdeRelease::constant(0.0),
            &p(),
            0.1,
            100.0,
        )
        .unwrap();
        let last = traj.last().unwrap().1;
        assert!((last.m - eq.m).abs() < 1e-6 * eq.m);
        assert!((last.f - eq.f).abs() < 1e-6 * eq.f);
    }

    #[test]
    fn rk4_extinction_fixed_point() {
        let traj = ode_solve_rk4(OdeState::new(0.0, 0.0, 0.0), &OdeRelease::constant(0.0), &p(), 0.5, 10.0).unwrap();
        for (_, s) in traj {
            assert_eq!((s.m, s.f, s.ms), (0.0, 0.0, 0.0));
        }
    }

    #[test]
    fn rk4_fourth_order_self_convergence() {
        // bistable scenario over T = 10; error against a dt/8 reference
        let crit = lambda_crit(&p()).unwrap();
        let release = OdeRelease::constant(0.9 * crit);
        let ic = OdeState::new(80.0, 80.0, 0.0);
        let run = |dt: f64| {
            let traj = ode_solve_rk4(ic, &release, &p(), dt, 10.0).unwrap();
            traj.last().unwrap().1
        };
        let reference = run(0.2 / 8.0);
        let err = |s: OdeState| {
            ((s.m - reference.m).powi(2) + (s.f - reference.f).powi(2) + (s.ms - reference.ms).powi(2)).sqrt()
        };
        let e1 = err(run(0.2));
        let e2 = err(run(0.1));
        let ratio = e1 / e2;
        assert!((10.0..26.0).contains(&ratio), "order-4 ratio {ratio}");
    }

    #[test]
    fn rk4_impulses_add_to_sterile_stock() {
        let release = OdeRelease { constant: 0.0, impulses: vec![(0.0, 100.0), (1.0, 50.0)] };
        let traj = ode_solve_rk4(OdeState::new(0.0, 0.0, 0.0), &release, &p(), 0.5, 2.0).unwrap();
        assert_eq!(traj[0].1.ms, 100.0);
        let decay_1day = (-0.04f64).exp();
        let after = traj.iter().find(|(t, _)| *t == 1.0).unwrap().1.ms;
        assert!((after - (100.0 * decay_1day + 50.0)).abs() < 1e-6);
    }

    #[test]
    fn rk4_rejects_misaligned_impulse() {
        let release = OdeRelease { constant: 0.0, impulses: vec![(0.3, 1.0)] };
        assert!(ode_solve_rk4(OdeState::new(1.0, 1.0, 1.0), &release, &p(), 0.5, 2.0).is_err());
    }
}
