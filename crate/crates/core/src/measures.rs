//! A pure-state entanglement functional and its convex-roof upper bound for
//! mixed states.
//!
//! The pure functional is the normalized quadratic residual: continuous, scale
//! and phase invariant, and zero exactly on the simple tensors of a class. The
//! mixed-state value `f(ρ) = inf Σ t_i f(ψ_i)` over decompositions
//! `ρ = Σ t_i |ψ_i⟩⟨ψ_i|` is only ever bounded from above here.

use std::f64::consts::PI;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{
    is_antisymmetric, is_symmetric, quadratic_residual, residual_unchecked, RankOptions, Statistics,
};
use crate::error::{Error, Result};
use crate::matrix::{max_abs_diff, outer, ComplexMatrix};
use crate::random::random_unitary;
use crate::states::{convex_mix, DensityOperator};
use crate::tensor::{Complex64, ComplexTensor};

/// Slack added on the right-hand side of the convexity probe.
pub const CONVEXITY_SLACK: f64 = 1e-6;

/// Max-entry tolerance for `Σ t_i ρ_{ψ_i} = ρ`.
pub const RECONSTRUCTION_TOLERANCE: f64 = 1e-8;

/// A sweep improving the bound by less than this fraction ends a restart.
const STATIONARY_GAIN: f64 = 1e-8;

/// Cap on accepted moves in one pair search.
const MAX_PATTERN_MOVES: usize = 200;

/// Components lighter than this are dropped from reported decompositions.
const NEGLIGIBLE_WEIGHT: f64 = 1e-15;

/// The entanglement functional on pure states: zero iff `u` is simple for its
/// class.
pub fn pure_measure(u: &ComplexTensor, stats: Statistics) -> Result<f64> {
    quadratic_residual(u, stats)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RoofOptions {
    pub restarts: usize,
    /// Refinement sweeps per restart; one sweep optimizes every component pair once.
    pub steps: usize,
    pub seed: u64,
    /// Number of pure components; `None` means `rank(ρ)²`.
    pub max_components: Option<usize>,
    /// Stop as soon as the bound drops to this value.
    pub target: f64,
    /// Decomposition `(weights, states)` of `ρ` used as the first start point.
    pub initial: Option<(Vec<f64>, Vec<ComplexTensor>)>,
    pub rank: RankOptions,
}

impl Default for RoofOptions {
    fn default() -> Self {
        Self {
            restarts: 200,
            steps: 100,
            seed: 0,
            max_components: None,
            target: 1e-12,
            initial: None,
            rank: RankOptions::default(),
        }
    }
}

/// An upper bound on the convex roof, with the decomposition that attains it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RoofEstimate {
    /// Upper bound on the convex roof at `ρ`.
    pub value: f64,
    pub weights: Vec<f64>,
    /// Normalized pure states, one per weight.
    #[serde(skip)]
    pub states: Vec<ComplexTensor>,
    /// Refinement sweeps performed across all restarts.
    pub iterations: usize,
    /// True when the bound reached the target or the best restart stopped at a
    /// stationary point rather than by running out of sweeps.
    pub converged: bool,
    /// Best value after each restart; nonincreasing.
    pub trace: Vec<f64>,
}

impl RoofEstimate {
    /// `Σ t_i |ψ_i⟩⟨ψ_i|`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let dim = self.states[0].len();
        let mut acc = ComplexMatrix::zeros(dim, dim);
        for (t, psi) in self.weights.iter().zip(&self.states) {
            acc += outer(psi, psi) * Complex64::new(*t, 0.0);
        }
        acc
    }
}

/// `‖ψ‖² · f(ψ/‖ψ‖)` for an unnormalized component.
fn weighted_term(psi: &ComplexTensor, stats: Statistics) -> f64 {
    let norm_sq = psi.norm_sqr();
    if norm_sq <= NEGLIGIBLE_WEIGHT {
        return 0.0;
    }
    residual_unchecked(psi, stats) * norm_sq
}

/// Rotates the pair `(a, b)` by the unitary `[[c, s e^{iφ}], [−s e^{−iφ}, c]]`,
/// which leaves `|a⟩⟨a| + |b⟩⟨b|` unchanged.
fn rotate(a: &ComplexTensor, b: &ComplexTensor, theta: f64, phi: f64) -> (ComplexTensor, ComplexTensor) {
    let (s, c) = theta.sin_cos();
    let phase = Complex64::from_polar(s, phi);
    let a2 = a.scale(Complex64::new(c, 0.0)) + b.scale(phase);
    let b2 = b.scale(Complex64::new(c, 0.0)) - a.scale(phase.conj());
    (a2, b2)
}

struct PairSearch {
    theta: f64,
    phi: f64,
    value: f64,
}

/// Grid search over `(θ, φ)` followed by a shrinking pattern search.
fn optimize_pair(a: &ComplexTensor, b: &ComplexTensor, stats: Statistics) -> PairSearch {
    let eval = |theta: f64, phi: f64| {
        let (a2, b2) = rotate(a, b, theta, phi);
        weighted_term(&a2, stats) + weighted_term(&b2, stats)
    };
    let mut best = PairSearch {
        theta: 0.0,
        phi: 0.0,
        value: eval(0.0, 0.0),
    };
    const THETA_STEPS: usize = 6;
    const PHI_STEPS: usize = 6;
    for i in 1..THETA_STEPS {
        let theta = i as f64 * PI / (2.0 * THETA_STEPS as f64);
        for j in 0..PHI_STEPS {
            let phi = j as f64 * 2.0 * PI / PHI_STEPS as f64;
            let v = eval(theta, phi);
            if v < best.value {
                best = PairSearch { theta, phi, value: v };
            }
        }
    }
    let (mut dt, mut dp) = (PI / (4.0 * THETA_STEPS as f64), PI / PHI_STEPS as f64);
    let mut moves = 0;
    while dt > 1e-6 && moves < MAX_PATTERN_MOVES {
        let mut moved = false;
        for (t, p) in [(dt, 0.0), (-dt, 0.0), (0.0, dp), (0.0, -dp)] {
            let v = eval(best.theta + t, best.phi + p);
            // Demand a decrease above rounding so flat directions cannot be walked forever.
            if v < best.value - 1e-15 * best.value.max(1e-300) {
                moves += 1;
                best = PairSearch {
                    theta: best.theta + t,
                    phi: best.phi + p,
                    value: v,
                };
                moved = true;
            }
        }
        if !moved {
            dt *= 0.5;
            dp *= 0.5;
        }
    }
    best
}

struct LocalRun {
    components: Vec<ComplexTensor>,
    value: f64,
    sweeps: usize,
    stationary: bool,
}

fn refine(mut comps: Vec<ComplexTensor>, stats: Statistics, steps: usize, target: f64) -> LocalRun {
    let mut terms: Vec<f64> = comps.iter().map(|c| weighted_term(c, stats)).collect();
    let mut value: f64 = terms.iter().sum();
    let mut sweeps = 0;
    let mut stationary = false;
    while sweeps < steps && value > target {
        sweeps += 1;
        let before = value;
        for j in 0..comps.len() {
            for l in j + 1..comps.len() {
                if comps[j].norm_sqr() <= NEGLIGIBLE_WEIGHT && comps[l].norm_sqr() <= NEGLIGIBLE_WEIGHT {
                    continue;
                }
                let current = terms[j] + terms[l];
                let found = optimize_pair(&comps[j], &comps[l], stats);
                if found.value < current {
                    let (a, b) = rotate(&comps[j], &comps[l], found.theta, found.phi);
                    terms[j] = weighted_term(&a, stats);
                    terms[l] = weighted_term(&b, stats);
                    comps[j] = a;
                    comps[l] = b;
                }
            }
        }
        value = terms.iter().sum();
        if before - value <= STATIONARY_GAIN * before {
            stationary = true;
            break;
        }
    }
    LocalRun {
        components: comps,
        value,
        sweeps,
        stationary: stationary || value <= target,
    }
}

fn check_support(psi: &ComplexTensor, stats: Statistics) -> Result<()> {
    let ok = match stats {
        Statistics::Distinguishable => true,
        Statistics::Bosonic => is_symmetric(psi),
        Statistics::Fermionic => is_antisymmetric(psi),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::NotInClass(format!(
            "density operator is not supported on the {} subspace",
            stats.name()
        )))
    }
}

/// Unnormalized components `√t_i ψ_i/‖ψ_i‖`, validated against `ρ`.
fn seeded_components(
    rho: &DensityOperator,
    n: usize,
    k: usize,
    weights: &[f64],
    states: &[ComplexTensor],
) -> Result<Vec<ComplexTensor>> {
    if weights.len() != states.len() || weights.is_empty() {
        return Err(Error::InvalidWeights(format!(
            "{} weights for {} states",
            weights.len(),
            states.len()
        )));
    }
    let mut comps = Vec::with_capacity(states.len());
    for (t, psi) in weights.iter().zip(states) {
        if psi.dim() != n || psi.order() != k {
            return Err(Error::InvalidOption("initial decomposition has the wrong shape".into()));
        }
        if *t < 0.0 {
            return Err(Error::InvalidWeights("weights must be nonnegative".into()));
        }
        comps.push(psi.normalized()?.scale(Complex64::new(t.sqrt(), 0.0)));
    }
    let mut acc = ComplexMatrix::zeros(rho.dim(), rho.dim());
    for c in &comps {
        acc += outer(c, c);
    }
    if max_abs_diff(&acc, rho.matrix()) > RECONSTRUCTION_TOLERANCE {
        return Err(Error::InvalidWeights(
            "initial decomposition does not reproduce the density operator".into(),
        ));
    }
    Ok(comps)
}

/// Upper bound on the convex roof of [`pure_measure`] at `ρ`, a density
/// operator on `(C^n)^{⊗k}` supported in the subspace of `stats`.
///
/// Every decomposition of `ρ` into `M` components arises from the eigen-ensemble
/// `w_i = √λ_i φ_i` as `ψ̃_j = Σ_i U_{ji} w_i` with `U` having orthonormal
/// columns. Each restart draws such a mix (the first uses the eigen-ensemble
/// itself, or the supplied decomposition) and then applies Givens rotations
/// between component pairs, which keep `Σ_j |ψ̃_j⟩⟨ψ̃_j| = ρ` exactly.
pub fn convex_roof_upper(
    rho: &DensityOperator,
    n: usize,
    k: usize,
    stats: Statistics,
    opts: &RoofOptions,
) -> Result<RoofEstimate> {
    if n == 0 || k == 0 || n.checked_pow(k as u32) != Some(rho.dim()) {
        return Err(Error::DimensionMismatch {
            expected: n.checked_pow(k as u32).unwrap_or(usize::MAX),
            found: rho.dim(),
        });
    }
    let (values, vectors) = rho.eigen();
    let max = values.first().copied().unwrap_or(0.0);
    let ensemble: Vec<ComplexTensor> = values
        .iter()
        .enumerate()
        .filter(|(_, &lam)| lam > opts.rank.tolerance * max)
        .map(|(i, &lam)| {
            let col: Vec<Complex64> = vectors.column(i).iter().map(|c| c * lam.sqrt()).collect();
            ComplexTensor::new(n, k, col).expect("shape checked")
        })
        .collect();
    for w in &ensemble {
        check_support(w, stats)?;
    }
    let rank = ensemble.len();

    if rank == 1 {
        let psi = ensemble[0].normalized()?;
        let value = pure_measure(&psi, stats)?;
        return Ok(RoofEstimate {
            value,
            weights: vec![1.0],
            states: vec![psi],
            iterations: 0,
            converged: true,
            trace: vec![value],
        });
    }

    let seeded = match &opts.initial {
        Some((w, s)) => Some(seeded_components(rho, n, k, w, s)?),
        None => None,
    };
    let mut m = opts.max_components.unwrap_or(rank * rank).max(rank);
    if let Some(s) = &seeded {
        m = m.max(s.len());
    }
    let zero = ComplexTensor::zeros(n, k);
    let pad = |mut v: Vec<ComplexTensor>| {
        v.resize(m, zero.clone());
        v
    };

    let mut best: Option<LocalRun> = None;
    let mut trace = Vec::with_capacity(opts.restarts.max(1));
    let mut iterations = 0;
    for restart in 0..opts.restarts.max(1) {
        let start = if restart == 0 {
            pad(seeded.clone().unwrap_or_else(|| ensemble.clone()))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            rng.set_stream(restart as u64);
            let u = random_unitary(&mut rng, m);
            (0..m)
                .map(|j| {
                    let mut acc = zero.clone();
                    for (i, w) in ensemble.iter().enumerate() {
                        acc += &w.scale(u[(j, i)]);
                    }
                    acc
                })
                .collect()
        };
        let run = refine(start, stats, opts.steps, opts.target);
        iterations += run.sweeps;
        if best.as_ref().is_none_or(|b| run.value < b.value) {
            best = Some(run);
        }
        let best_value = best.as_ref().map_or(f64::INFINITY, |b| b.value);
        trace.push(best_value);
        if best_value <= opts.target {
            break;
        }
    }
    let best = best.expect("at least one restart");
    let mut weights = Vec::new();
    let mut states = Vec::new();
    for c in &best.components {
        let t = c.norm_sqr();
        if t > NEGLIGIBLE_WEIGHT {
            weights.push(t);
            states.push(c.normalized()?);
        }
    }
    Ok(RoofEstimate {
        value: best.value,
        weights,
        states,
        iterations,
        converged: best.stationary,
        trace,
    })
}

/// Checks `upper(tρ_1 + (1−t)ρ_2) ≤ t·upper(ρ_1) + (1−t)·upper(ρ_2) + slack`
/// for the computed upper bounds.
pub fn roof_convexity_probe(
    rho1: &DensityOperator,
    rho2: &DensityOperator,
    t: f64,
    n: usize,
    k: usize,
    stats: Statistics,
    opts: &RoofOptions,
) -> Result<bool> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::InvalidWeights(format!("t = {t} is outside [0, 1]")));
    }
    let mixed = convex_mix(&[t, 1.0 - t], &[rho1.clone(), rho2.clone()])?;
    let lhs = convex_roof_upper(&mixed, n, k, stats, opts)?.value;
    let f1 = convex_roof_upper(rho1, n, k, stats, opts)?.value;
    let f2 = convex_roof_upper(rho2, n, k, stats, opts)?.value;
    Ok(lhs <= t * f1 + (1.0 - t) * f2 + CONVEXITY_SLACK)
}
