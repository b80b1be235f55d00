//! Discrete Lévy waiting-time distribution and kick-schedule construction.
//!
//! The waiting time τ between successive kicks is drawn from
//!
//! ```text
//! w(τ) = α Γ(τ) Γ(α+1) / Γ(τ + α + 1),   τ = 1, 2, 3, ...
//! ```
//!
//! which decays asymptotically as τ^(−α−1). For 0 < α < 1 the mean waiting
//! time diverges and the kick sequence is a non-stationary noise source.
//!
//! Probabilities are always evaluated through the stable ratio recursion
//!
//! ```text
//! w(1) = α/(α+1),    w(τ+1) = w(τ) · τ/(τ + α + 1),
//! ```
//!
//! never through direct large-argument Gamma ratios, so the pmf stays
//! accurate for arbitrarily large τ.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum NoiseError {
    #[error("levy exponent alpha must be positive and finite, got {0}")]
    InvalidAlpha(f64),
    #[error("waiting time tau must be >= 1")]
    InvalidTau,
    #[error("horizon must be >= 1")]
    InvalidHorizon,
    #[error("{name} must lie in (0, 1), got {value}")]
    InvalidFraction { name: &'static str, value: f64 },
}

/// Parameters of the discrete Lévy waiting-time distribution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LevyParams {
    alpha: f64,
}

impl LevyParams {
    pub fn new(alpha: f64) -> Result<Self, NoiseError> {
        if !alpha.is_finite() || alpha <= 0.0 {
            return Err(NoiseError::InvalidAlpha(alpha));
        }
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// True when the mean waiting time diverges (0 < α < 1).
    pub fn mean_diverges(&self) -> bool {
        self.alpha < 1.0
    }

    /// Mean waiting time τ̄ = α/(α−1), defined only for α > 1.
    ///
    /// Follows from the telescoping identity
    /// w(τ) = Γ(α+1)·[Γ(τ)/Γ(τ+α) − Γ(τ+1)/Γ(τ+1+α)], summed by parts.
    pub fn mean_waiting_time(&self) -> Option<f64> {
        (self.alpha > 1.0).then(|| self.alpha / (self.alpha - 1.0))
    }
}

/// Which noise is applied to the kick sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum NoiseMode {
    /// Noise-free limit: every period carries a kick.
    Periodic,
    /// Kicks separated by Lévy-distributed integer waiting times.
    Levy { alpha: f64 },
    /// Every period kicks, but the period length jitters uniformly in
    /// [1−delta_max, 1+delta_max] (stationary timing noise).
    StationaryTiming { delta_max: f64 },
    /// Every period kicks, but the kick strength is scaled by a factor
    /// uniform in [1−eps_max, 1+eps_max].
    Amplitude { eps_max: f64 },
}

impl NoiseMode {
    pub fn validate(&self) -> Result<(), NoiseError> {
        match *self {
            NoiseMode::Periodic => Ok(()),
            NoiseMode::Levy { alpha } => LevyParams::new(alpha).map(|_| ()),
            NoiseMode::StationaryTiming { delta_max } => {
                if delta_max > 0.0 && delta_max < 1.0 {
                    Ok(())
                } else {
                    Err(NoiseError::InvalidFraction {
                        name: "delta_max",
                        value: delta_max,
                    })
                }
            }
            NoiseMode::Amplitude { eps_max } => {
                if eps_max > 0.0 && eps_max < 1.0 {
                    Ok(())
                } else {
                    Err(NoiseError::InvalidFraction {
                        name: "eps_max",
                        value: eps_max,
                    })
                }
            }
        }
    }
}

/// The realized noise of one run: which periods kick, how long each period
/// lasts (in kick-period units), and the per-kick strength factor.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KickSchedule {
    /// `mask[i]` is true when the kick at period n = i+1 is applied.
    pub mask: Vec<bool>,
    /// Free-evolution length of period n = i+1; all 1.0 except timing noise.
    pub durations: Vec<f64>,
    /// Multiplicative kick-strength factor; all 1.0 except amplitude noise.
    pub amplitudes: Vec<f64>,
    /// Seed this schedule was generated from.
    pub seed: u64,
}

impl KickSchedule {
    pub fn horizon(&self) -> usize {
        self.mask.len()
    }

    /// Number of kicks actually applied.
    pub fn kicks_applied(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }
}

/// w(τ) via the ratio recursion. O(τ) time, stable for any τ.
pub fn levy_pmf(params: &LevyParams, tau: u64) -> Result<f64, NoiseError> {
    if tau < 1 {
        return Err(NoiseError::InvalidTau);
    }
    let alpha = params.alpha;
    let mut w = alpha / (alpha + 1.0);
    for t in 1..tau {
        w *= t as f64 / (t as f64 + alpha + 1.0);
    }
    Ok(w)
}

/// Iterator over w(1), w(2), w(3), ... at O(1) per step.
pub fn levy_pmf_iter(params: &LevyParams) -> impl Iterator<Item = f64> {
    let alpha = params.alpha;
    let mut w = alpha / (alpha + 1.0);
    let mut tau = 0u64;
    std::iter::from_fn(move || {
        tau += 1;
        let out = w;
        w *= tau as f64 / (tau as f64 + alpha + 1.0);
        Some(out)
    })
}

/// Quantile function of w: the smallest τ with CDF(τ) ≥ u.
///
/// This is the inverse-CDF walk used by the samplers; it runs the pmf
/// recursion on the fly, so cost is O(τ) and the sampled distribution is
/// exact for arbitrarily large τ.
pub fn waiting_time_quantile(params: &LevyParams, u: f64) -> u64 {
    let mut cdf = 0.0;
    for (i, w) in levy_pmf_iter(params).enumerate() {
        cdf += w;
        if cdf >= u || w < f64::MIN_POSITIVE {
            return i as u64 + 1;
        }
    }
    unreachable!()
}

/// Draw one waiting time τ ≥ 1 distributed as w(τ).
pub fn sample_waiting_time<R: Rng + ?Sized>(params: &LevyParams, rng: &mut R) -> u64 {
    waiting_time_quantile(params, rng.gen::<f64>())
}

/// Outcome of a capped waiting-time draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Wait {
    /// τ ≤ cap; exact draw from w conditioned on nothing.
    At(u64),
    /// The draw fell beyond the cap. The walk stops early, so the exact
    /// value is not resolved; only the event {τ > cap} is.
    BeyondCap,
}

/// Like [`sample_waiting_time`] but abandons the inverse-CDF walk once
/// τ would exceed `cap`.
///
/// For α < 1 the unconditional expected walk length diverges; schedule
/// construction only ever needs waits up to the remaining horizon, and this
/// variant keeps the cost bounded by it without changing the distribution
/// of the resolved values.
pub fn sample_waiting_time_capped<R: Rng + ?Sized>(
    params: &LevyParams,
    rng: &mut R,
    cap: u64,
) -> Wait {
    let u = rng.gen::<f64>();
    let mut cdf = 0.0;
    for (i, w) in levy_pmf_iter(params).take(cap as usize) {
        cdf += w;
        if cdf >= u {
            return Wait::At(i as u64 + 1);
        }
    }
    Wait::BeyondCap
}

/// SplitMix64 finalizer; decorrelates consecutive integers.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derive the seed of an independent stream (realization, particle, ...)
/// from the master seed by a counter-based mix. Streams can be generated in
/// any order or in parallel.
pub fn derive_stream_seed(master_seed: u64, stream: u64) -> u64 {
    splitmix64(master_seed ^ splitmix64(stream.wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

fn stream_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Build the kick schedule for one realization.
///
/// The first kick is always applied at period n = 1 (fixed phase
/// convention); for Lévy mode subsequent kicks sit at cumulative sums of
/// sampled waiting times, truncated at the horizon. Identical
/// (mode, horizon, seed) always produce an identical schedule.
pub fn build_schedule(
    mode: NoiseMode,
    horizon: usize,
    seed: u64,
) -> Result<KickSchedule, NoiseError> {
    if horizon < 1 {
        return Err(NoiseError::InvalidHorizon);
    }
    mode.validate()?;
    let mut rng = stream_rng(seed);
    let mut mask = vec![true; horizon];
    let mut durations = vec![1.0; horizon];
    let mut amplitudes = vec![1.0; horizon];
    match mode {
        NoiseMode::Periodic => {}
        NoiseMode::Levy { alpha } => {
            let params = LevyParams::new(alpha)?;
            mask = levy_mask(horizon, |remaining| {
                match sample_waiting_time_capped(&params, &mut rng, remaining) {
                    Wait::At(tau) => tau,
                    // any value beyond the horizon means "no more kicks"
                    Wait::BeyondCap => remaining + 1,
                }
            });
        }
        NoiseMode::StationaryTiming { delta_max } => {
            for d in durations.iter_mut() {
                *d = 1.0 + rng.gen_range(-delta_max..=delta_max);
            }
        }
        NoiseMode::Amplitude { eps_max } => {
            for a in amplitudes.iter_mut() {
                *a = 1.0 + rng.gen_range(-eps_max..=eps_max);
            }
        }
    }
    Ok(KickSchedule {
        mask,
        durations,
        amplitudes,
        seed,
    })
}

/// Kick mask with the first kick at period 1 and gaps supplied by `next_wait`
/// (called with the remaining horizon, must return τ ≥ 1).
fn levy_mask(horizon: usize, mut next_wait: impl FnMut(u64) -> u64) -> Vec<bool> {
    let mut mask = vec![false; horizon];
    mask[0] = true;
    let mut n = 1u64;
    while n < horizon as u64 {
        let tau = next_wait(horizon as u64 - n);
        debug_assert!(tau >= 1);
        n += tau;
        if n > horizon as u64 {
            break;
        }
        mask[(n - 1) as usize] = true;
    }
    mask
}
