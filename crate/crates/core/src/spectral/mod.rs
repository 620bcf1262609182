//! Discrete periodic function space: the uniform grid, the Fourier
//! coefficient transform with a Parseval-consistent normalization,
//! Fejér means by two independent routes, lacunary block differences,
//! and Fourier multipliers.
//!
//! Conventions, fixed once:
//!
//! - coefficients f̂(j) = (1/M) Σ_i f(x_i) e^{−ij·x_i};
//! - convolution (1/2π) ∫ K_n(t) f(x−t) dt, so that the Fejér mean is
//!   exactly coefficient-wise multiplication by the tent;
//! - norm ‖f‖₂² = ∫_{−π}^{π} |f|² dx = 2π Σ_j |f̂(j)|².

pub mod grid;
pub mod io;
pub mod multiplier;
pub mod ops;
pub mod signal;

pub use grid::SpectralGrid;
pub use multiplier::{apply_multiplier, build_multiplier, Multiplier};
pub use ops::{block_difference, convolve_direct, fejer_mean};
pub use signal::Signal;
