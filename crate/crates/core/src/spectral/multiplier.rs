use crate::error::{Error, Result};
use crate::kernel::fejer_hat;
use crate::lacunary::LacunarySequence;
use crate::numeric::NeumaierSum;

use super::grid::SpectralGrid;
use super::signal::Signal;

/// A Fourier multiplier: a real symbol m(j) per represented frequency,
/// acting on signals by coefficient-wise multiplication.
#[derive(Debug, Clone, PartialEq)]
pub struct Multiplier {
    grid: SpectralGrid,
    /// Symbol values in DFT-bin layout.
    symbol: Vec<f64>,
}

impl Multiplier {
    pub fn constant(grid: SpectralGrid, value: f64) -> Self {
        Self {
            grid,
            symbol: vec![value; grid.size()],
        }
    }

    /// Build a symbol from a function of the frequency. Symbols derived
    /// from Fejér tents depend on |j| only; the constructor asserts the
    /// resulting even symmetry and forces the unmatched Nyquist mode of
    /// an even grid to zero.
    pub(crate) fn from_tent_symbol(grid: SpectralGrid, f: impl Fn(f64) -> f64) -> Self {
        let m = grid.size();
        let symbol: Vec<f64> = (0..m)
            .map(|bin| {
                let j = grid.frequency_for_bin(bin);
                if m.is_multiple_of(2) && j == (m / 2) as i64 {
                    0.0
                } else {
                    let value = f(j as f64);
                    assert!(value.is_finite(), "symbol not finite at j={j}");
                    value
                }
            })
            .collect();
        let result = Self { grid, symbol };
        for j in 1..=grid.max_frequency() as i64 {
            assert_eq!(
                result.symbol_at(j),
                result.symbol_at(-j),
                "tent symbol must be even, differs at |j|={j}"
            );
        }
        result
    }

    pub fn grid(&self) -> SpectralGrid {
        self.grid
    }

    /// m(j); zero outside the represented range.
    pub fn symbol_at(&self, j: i64) -> f64 {
        match self.grid.bin_for_frequency(j) {
            Some(bin) => self.symbol[bin],
            None => 0.0,
        }
    }

    /// Exact L²→L² operator norm sup_j |m(j)| together with a witness
    /// frequency attaining it.
    ///
    /// Ties resolve to the smallest |j|, preferring the nonnegative
    /// one, so the witness is deterministic.
    pub fn operator_norm(&self) -> (f64, i64) {
        let mut best = f64::NEG_INFINITY;
        let mut witness = 0i64;
        let mut consider = |j: i64| {
            let v = self.symbol_at(j).abs();
            if v > best {
                best = v;
                witness = j;
            }
        };
        let top = *self.grid.frequency_range().end();
        consider(0);
        for a in 1..=top {
            consider(a);
            if self.grid.is_representable(-a) {
                consider(-a);
            }
        }
        (best, witness)
    }
}

/// Symbol of T_N: m(j) = Σ_{k=1}^{N} c_k (K̂_{n_{k+1}}(j) − K̂_{n_k}(j)).
///
/// `n_blocks` is N; block k (0-based) differences the kernels of orders
/// `seq.terms()[k+1]` and `seq.terms()[k]`. The top order must be
/// representable on the grid.
pub fn build_multiplier(
    grid: SpectralGrid,
    seq: &LacunarySequence,
    coeffs: &[f64],
    n_blocks: usize,
) -> Result<Multiplier> {
    if n_blocks == 0 || n_blocks >= seq.len() {
        return Err(Error::IndexOutOfRange {
            index: n_blocks,
            len: seq.len(),
        });
    }
    if coeffs.len() < n_blocks {
        return Err(Error::LengthMismatch {
            expected: n_blocks,
            got: coeffs.len(),
        });
    }
    let terms = seq.terms();
    let top = terms[n_blocks];
    if top > grid.max_frequency() {
        return Err(Error::AliasingRisk {
            required: top,
            max_frequency: grid.max_frequency(),
        });
    }
    Ok(block_span_multiplier(grid, seq, coeffs, 0, n_blocks - 1))
}

/// Σ_{k=start..=end} c_k · (tent(n_{k+1}, j) − tent(n_k, j)) evaluated
/// at every represented frequency. Pure tent arithmetic: valid for
/// block orders beyond the grid's band as well, which is what the tail
/// studies on band-limited signals rely on.
pub(crate) fn block_span_multiplier(
    grid: SpectralGrid,
    seq: &LacunarySequence,
    coeffs: &[f64],
    start: usize,
    end: usize,
) -> Multiplier {
    let terms = seq.terms();
    debug_assert!(start <= end && end + 1 < terms.len());
    debug_assert!(coeffs.len() > end);
    Multiplier::from_tent_symbol(grid, |j| {
        let mut acc = NeumaierSum::new();
        for k in start..=end {
            let delta = fejer_hat(terms[k + 1], j) - fejer_hat(terms[k], j);
            acc.add(coeffs[k] * delta);
        }
        acc.total()
    })
}

/// Coefficient-wise action: output ĝ(j) = m(j)·f̂(j).
pub fn apply_multiplier(multiplier: &Multiplier, f: &Signal) -> Result<Signal> {
    if multiplier.grid() != f.grid() {
        return Err(Error::GridMismatch {
            left: multiplier.grid().size(),
            right: f.grid().size(),
        });
    }
    Ok(f.map_coefficients(|j, c| c * multiplier.symbol_at(j)))
}
