//! Desk-scale laboratory for learning with noisy labels.
//!
//! The crate provides a small reverse-mode autodiff engine over dense
//! `f64` arrays, MLP/conv models with Adam, the loss family used by
//! dual-model co-training methods (paired cross-entropy, symmetric KL
//! agreement, mean point ensemble), symmetric label-noise injection with
//! ground-truth bookkeeping, whole-dataset small-loss selection on
//! horizontally flipped images, and five training regimes (baseline,
//! Co-teaching, JoCoR, MDA, Co-teaching+MDA) with full metric capture.
//!
//! Everything is deterministic given the seeds in [`config::ExperimentConfig`]:
//! two runs of the same config produce bitwise-identical parameters and
//! byte-identical metrics files.

pub mod autodiff;
pub mod config;
pub mod data;
pub mod losses;
pub mod metrics;
pub mod nn;
pub mod rng;
pub mod selection;
pub mod trainer;
