//! Fejér kernels, lacunary block differences, and the Fourier
//! multiplier machinery that controls their sign-weighted sums.
//!
//! The library evaluates the Fejér kernel in space and frequency,
//! certifies lacunary sequences, realizes the block-difference
//! operators σ_{n_{k+1}}f − σ_{n_k}f as multipliers on a periodic
//! grid, and verifies the bound chain that makes the block series
//! unconditionally summable on L²: the absolute block-symbol sum is
//! capped by the geometric constant 2α/(α−1) — and, telescoping, by
//! 1 — uniformly in the truncation, which caps ‖T_N f‖₂ by
//! ‖c‖∞·C·‖f‖₂ for every bounded coefficient pattern.
//!
//! Modules:
//!
//! - [`kernel`]: kernel evaluation, two space-domain routes plus the
//!   frequency tent;
//! - [`lacunary`]: sequence certification and the geometric constant;
//! - [`spectral`]: grid, transforms, Fejér means, block differences,
//!   multipliers;
//! - [`bounds`]: exhaustive verification of each inequality in the
//!   chain;
//! - [`experiments`]: seeded Monte Carlo sign studies and parameter
//!   sweeps.

// `!(x > y)` rejects NaN parameters along with out-of-range ones.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod experiments;
pub mod kernel;
pub mod lacunary;
pub mod spectral;
pub mod tolerances;

mod error;
mod numeric;

pub use error::{Error, Result};
pub use kernel::FejerKernel;
pub use lacunary::LacunarySequence;
pub use spectral::{Multiplier, Signal, SpectralGrid};
