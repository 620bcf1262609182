use std::cell::RefCell;
use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::numeric::compensated_sum;
use crate::tolerances::{BANDWIDTH_REL_CUTOFF, NORM_AGREEMENT_REL};

use super::grid::SpectralGrid;

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

/// Fourier coefficients of the sampled signal, in DFT-bin layout:
/// f̂(j) = (1/M) Σ_i f(x_i) e^{−ij·x_i}, stored at bin j mod M.
///
/// Because the grid starts at −π rather than 0, each raw DFT output
/// picks up the phase e^{iπj} = (−1)^j.
fn bins_from_samples(grid: SpectralGrid, samples: &[Complex64]) -> Vec<Complex64> {
    let m = grid.size();
    let mut buf = samples.to_vec();
    PLANNER.with(|p| {
        let fft = p.borrow_mut().plan_fft_forward(m);
        fft.process(&mut buf);
    });
    let scale = 1.0 / m as f64;
    for (bin, value) in buf.iter_mut().enumerate() {
        let j = grid.frequency_for_bin(bin);
        let sign = if j & 1 == 0 { scale } else { -scale };
        *value *= sign;
    }
    buf
}

fn samples_from_bins(grid: SpectralGrid, bins: &[Complex64]) -> Vec<Complex64> {
    let m = grid.size();
    let mut buf = bins.to_vec();
    for (bin, value) in buf.iter_mut().enumerate() {
        let j = grid.frequency_for_bin(bin);
        if j & 1 != 0 {
            *value = -*value;
        }
    }
    PLANNER.with(|p| {
        let fft = p.borrow_mut().plan_fft_inverse(m);
        fft.process(&mut buf);
    });
    buf
}

/// A function on the periodic grid, carried in both the space and the
/// frequency representation.
///
/// Whichever representation is absent is computed on first use and
/// cached; values are never mutated after construction, so the two
/// stay consistent by construction.
#[derive(Debug)]
pub struct Signal {
    grid: SpectralGrid,
    samples: OnceLock<Vec<Complex64>>,
    coefficients: OnceLock<Vec<Complex64>>,
}

impl Clone for Signal {
    fn clone(&self) -> Self {
        Self {
            grid: self.grid,
            samples: self.samples.clone(),
            coefficients: self.coefficients.clone(),
        }
    }
}

impl Signal {
    pub fn from_samples(grid: SpectralGrid, samples: Vec<Complex64>) -> Result<Self> {
        if samples.len() != grid.size() {
            return Err(Error::LengthMismatch {
                expected: grid.size(),
                got: samples.len(),
            });
        }
        let cell = OnceLock::new();
        let _ = cell.set(samples);
        Ok(Self {
            grid,
            samples: cell,
            coefficients: OnceLock::new(),
        })
    }

    pub fn from_real_samples(grid: SpectralGrid, samples: &[f64]) -> Result<Self> {
        let complex: Vec<Complex64> = samples.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        Self::from_samples(grid, complex)
    }

    /// Build a signal from (frequency, coefficient) pairs; frequencies
    /// must be representable on the grid.
    pub fn from_coefficients(grid: SpectralGrid, coeffs: &[(i64, Complex64)]) -> Result<Self> {
        let mut bins = vec![Complex64::new(0.0, 0.0); grid.size()];
        for &(j, value) in coeffs {
            let bin = grid.bin_for_frequency(j).ok_or(Error::AliasingRisk {
                required: j.unsigned_abs(),
                max_frequency: grid.max_frequency(),
            })?;
            bins[bin] += value;
        }
        Ok(Self::from_coefficient_bins(grid, bins))
    }

    pub(crate) fn from_coefficient_bins(grid: SpectralGrid, bins: Vec<Complex64>) -> Self {
        assert_eq!(bins.len(), grid.size());
        let cell = OnceLock::new();
        let _ = cell.set(bins);
        Self {
            grid,
            samples: OnceLock::new(),
            coefficients: cell,
        }
    }

    pub fn zero(grid: SpectralGrid) -> Self {
        Self::from_coefficient_bins(grid, vec![Complex64::new(0.0, 0.0); grid.size()])
    }

    pub fn grid(&self) -> SpectralGrid {
        self.grid
    }

    pub fn samples(&self) -> &[Complex64] {
        self.samples
            .get_or_init(|| samples_from_bins(self.grid, self.coefficients.get().expect("signal holds at least one representation")))
    }

    pub(crate) fn coefficient_bins(&self) -> &[Complex64] {
        self.coefficients
            .get_or_init(|| bins_from_samples(self.grid, self.samples.get().expect("signal holds at least one representation")))
    }

    /// f̂(j); zero for frequencies the grid does not represent.
    pub fn coefficient(&self, j: i64) -> Complex64 {
        match self.grid.bin_for_frequency(j) {
            Some(bin) => self.coefficient_bins()[bin],
            None => Complex64::new(0.0, 0.0),
        }
    }

    /// (j, f̂(j)) over all represented frequencies in ascending order.
    pub fn coefficients_by_frequency(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.grid
            .frequency_range()
            .map(move |j| (j, self.coefficient(j)))
    }

    /// ‖f‖₂ with the convention ‖f‖₂² = ∫_{−π}^{π} |f|² dx, i.e.
    /// 2π Σ_j |f̂(j)|² = (2π/M) Σ_i |f(x_i)|².
    ///
    /// Both sides are evaluated (compensated summation) and must agree
    /// to [`NORM_AGREEMENT_REL`] relative; disagreement means the two
    /// cached representations have diverged, which is a bug.
    pub fn l2_norm(&self) -> f64 {
        let m = self.grid.size() as f64;
        let space_sq =
            2.0 * PI / m * compensated_sum(self.samples().iter().map(|v| v.norm_sqr()));
        let freq_sq =
            2.0 * PI * compensated_sum(self.coefficient_bins().iter().map(|v| v.norm_sqr()));
        let scale = space_sq.max(freq_sq);
        assert!(
            (space_sq - freq_sq).abs() <= NORM_AGREEMENT_REL * scale.max(f64::MIN_POSITIVE),
            "Parseval mismatch: space {space_sq} vs frequency {freq_sq}"
        );
        freq_sq.max(0.0).sqrt()
    }

    /// Largest |j| carrying a coefficient above [`BANDWIDTH_REL_CUTOFF`]
    /// times the peak magnitude; 0 for the zero signal.
    pub fn bandwidth(&self) -> u64 {
        let bins = self.coefficient_bins();
        let peak = bins.iter().map(|v| v.norm()).fold(0.0f64, f64::max);
        if peak == 0.0 {
            return 0;
        }
        let cutoff = BANDWIDTH_REL_CUTOFF * peak;
        let mut band = 0u64;
        for (bin, value) in bins.iter().enumerate() {
            if value.norm() > cutoff {
                band = band.max(self.grid.frequency_for_bin(bin).unsigned_abs());
            }
        }
        band
    }

    /// New signal with coefficients transformed bin-wise.
    pub(crate) fn map_coefficients(
        &self,
        f: impl Fn(i64, Complex64) -> Complex64,
    ) -> Signal {
        let bins = self
            .coefficient_bins()
            .iter()
            .enumerate()
            .map(|(bin, &v)| f(self.grid.frequency_for_bin(bin), v))
            .collect();
        Signal::from_coefficient_bins(self.grid, bins)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(m: usize) -> SpectralGrid {
        SpectralGrid::new(m).unwrap()
    }

    #[test]
    fn constant_signal_transforms_to_dc_only() {
        let g = grid(16);
        let f = Signal::from_real_samples(g, &[1.0; 16]).unwrap();
        assert!((f.coefficient(0) - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        for j in g.frequency_range() {
            if j != 0 {
                assert!(f.coefficient(j).norm() < 1e-14, "leak at j={j}");
            }
        }
    }

    #[test]
    fn pure_mode_lands_in_its_bin() {
        let g = grid(16);
        let samples: Vec<Complex64> = g
            .points()
            .map(|x| Complex64::new(0.0, 3.0 * x).exp())
            .collect();
        let f = Signal::from_samples(g, samples).unwrap();
        assert!((f.coefficient(3) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        for j in g.frequency_range() {
            if j != 3 {
                assert!(f.coefficient(j).norm() < 1e-12, "leak at j={j}");
            }
        }
    }

    #[test]
    fn cosine_splits_into_half_coefficients() {
        let g = grid(8);
        let samples: Vec<f64> = g.points().map(|x| (2.0 * x).cos()).collect();
        let f = Signal::from_real_samples(g, &samples).unwrap();
        assert!((f.coefficient(2) - Complex64::new(0.5, 0.0)).norm() < 1e-14);
        assert!((f.coefficient(-2) - Complex64::new(0.5, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn roundtrip_from_coefficients() {
        let g = grid(32);
        let f = Signal::from_coefficients(
            g,
            &[
                (0, Complex64::new(0.3, 0.0)),
                (5, Complex64::new(1.0, -2.0)),
                (-7, Complex64::new(0.1, 0.9)),
            ],
        )
        .unwrap();
        // Force samples, rebuild, compare coefficients.
        let back = Signal::from_samples(g, f.samples().to_vec()).unwrap();
        for j in g.frequency_range() {
            assert!(
                (f.coefficient(j) - back.coefficient(j)).norm() < 1e-13,
                "j={j}"
            );
        }
    }

    #[test]
    fn rejects_unrepresentable_frequency() {
        let g = grid(8);
        let err = Signal::from_coefficients(g, &[(5, Complex64::new(1.0, 0.0))]);
        assert!(matches!(err, Err(Error::AliasingRisk { .. })));
        // Nyquist j = 4 is representable on an even grid, j = −4 is not.
        assert!(Signal::from_coefficients(g, &[(4, Complex64::new(1.0, 0.0))]).is_ok());
        assert!(Signal::from_coefficients(g, &[(-4, Complex64::new(1.0, 0.0))]).is_err());
    }

    #[test]
    fn norm_of_constant_and_modes() {
        let g = grid(64);
        let one = Signal::from_real_samples(g, &vec![1.0; 64]).unwrap();
        assert!((one.l2_norm() - (2.0 * PI).sqrt()).abs() < 1e-12);

        let mode = Signal::from_coefficients(g, &[(5, Complex64::new(1.0, 0.0))]).unwrap();
        assert!((mode.l2_norm() - (2.0 * PI).sqrt()).abs() < 1e-12);

        let cos: Vec<f64> = g.points().map(|x| x.cos()).collect();
        let f = Signal::from_real_samples(g, &cos).unwrap();
        assert!((f.l2_norm() - PI.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn bandwidth_detects_top_mode() {
        let g = grid(64);
        let f = Signal::from_coefficients(
            g,
            &[(2, Complex64::new(1.0, 0.0)), (-9, Complex64::new(0.5, 0.5))],
        )
        .unwrap();
        assert_eq!(f.bandwidth(), 9);
        assert_eq!(Signal::zero(g).bandwidth(), 0);
    }

    #[test]
    fn length_mismatch_rejected() {
        let g = grid(8);
        assert!(matches!(
            Signal::from_real_samples(g, &[1.0; 7]),
            Err(Error::LengthMismatch { .. })
        ));
    }
}
