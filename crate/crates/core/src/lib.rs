//! Simulation library for the atom-optics kicked rotor driven by a kick
//! sequence with heavy-tailed (Lévy) waiting times between kicks.
//!
//! The library covers the full desk-scale pipeline:
//!
//! - [`levy`]: the discrete Lévy waiting-time distribution, samplers, and
//!   kick-schedule construction for all supported noise modes;
//! - [`special`]: numerical evaluation of the Mittag-Leffler function on the
//!   real line;
//! - [`quantum`]: split-step Floquet evolution of the quantum rotor over a
//!   truncated momentum ladder, with ensemble averaging of observables;
//! - [`classical`]: the classical standard-map ensemble with the same kick
//!   bookkeeping, for stroboscopic sections and reference energy curves;
//! - [`theory`]: closed-form predictions (kick-averaged overlap factor,
//!   decoherence factor, asymptotic energy-growth laws);
//! - [`analysis`]: regression and model selection on simulated observables;
//! - [`orchestrator`]: config parsing, named experiments, deterministic
//!   parallel execution, and CSV/manifest output.
//!
//! All randomness flows from explicit seeds through counter-derived
//! per-realization streams, so every result is reproducible bit-for-bit
//! regardless of worker count.

pub mod analysis;
pub mod classical;
pub mod levy;
pub mod orchestrator;
pub mod quantum;
pub mod special;
pub mod theory;

pub use analysis::{DecayModel, FitResult, ProfileClass};
pub use classical::{ClassicalEnsembleConfig, ClassicalState};
pub use levy::{KickSchedule, LevyParams, NoiseMode};
pub use quantum::{EnergyCurve, MomentumProfile, QuantumState, SimConfig};
pub use special::MlEvalOptions;
pub use theory::TheoryParams;
