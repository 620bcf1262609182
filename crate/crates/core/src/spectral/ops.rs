use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernel::{eval_kernel_closed, fejer_hat};
use crate::lacunary::LacunarySequence;

use super::signal::Signal;

/// Fejér mean σ_n f = K_n ∗ f, realized in frequency: the j-th
/// coefficient is damped by the tent K̂_n(j) = 1 − |j|/(n+1).
pub fn fejer_mean(f: &Signal, n: u64) -> Result<Signal> {
    let grid = f.grid();
    if n > grid.max_frequency() {
        return Err(Error::AliasingRisk {
            required: n,
            max_frequency: grid.max_frequency(),
        });
    }
    Ok(f.map_coefficients(|j, c| c * fejer_hat(n, j as f64)))
}

/// Independent oracle for [`fejer_mean`]: the normalized convolution
/// (1/2π) ∫ K_n(t) f(x − t) dt approximated by the M-point rectangle
/// rule with nodes t_l = 2πl/M, so that f(x_i − t_l) wraps to the
/// sample at index (i − l) mod M.
///
/// The rule is exact when the integrand's degree stays below M, i.e.
/// whenever n + deg(f) < M.
pub fn convolve_direct(f: &Signal, n: u64) -> Result<Signal> {
    let grid = f.grid();
    if n > grid.max_frequency() {
        return Err(Error::AliasingRisk {
            required: n,
            max_frequency: grid.max_frequency(),
        });
    }
    let m = grid.size();
    let kernel: Vec<f64> = (0..m)
        .map(|l| eval_kernel_closed(n, 2.0 * PI * l as f64 / m as f64))
        .collect();
    let samples = f.samples();
    let scale = 1.0 / m as f64;
    let out: Vec<Complex64> = (0..m)
        .map(|i| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (l, &k) in kernel.iter().enumerate() {
                acc += k * samples[(i + m - l) % m];
            }
            acc * scale
        })
        .collect();
    Signal::from_samples(grid, out)
}

/// Block difference σ_{n_{k+1}} f − σ_{n_k} f for block index `k`
/// (0-based: orders `terms[k+1]` and `terms[k]`), applied as the single
/// tent-difference symbol Δ_k(j) = K̂_{n_{k+1}}(j) − K̂_{n_k}(j).
pub fn block_difference(f: &Signal, seq: &LacunarySequence, k: usize) -> Result<Signal> {
    let terms = seq.terms();
    if k + 1 >= terms.len() {
        return Err(Error::IndexOutOfRange {
            index: k,
            len: terms.len(),
        });
    }
    let grid = f.grid();
    let upper = terms[k + 1];
    if upper > grid.max_frequency() {
        return Err(Error::AliasingRisk {
            required: upper,
            max_frequency: grid.max_frequency(),
        });
    }
    let lower = terms[k];
    Ok(f.map_coefficients(|j, c| {
        c * (fejer_hat(upper, j as f64) - fejer_hat(lower, j as f64))
    }))
}
