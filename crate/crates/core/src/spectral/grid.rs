use std::f64::consts::PI;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};

/// Uniform periodic grid of M points x_i = −π + 2πi/M, i = 0…M−1.
///
/// Represented integer frequencies are |j| ≤ ⌊(M−1)/2⌋ for odd M; for
/// even M the set is −M/2 < j ≤ M/2, with the unmatched Nyquist mode
/// j = M/2 excluded from multiplier construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpectralGrid {
    size: usize,
}

impl SpectralGrid {
    pub fn new(size: usize) -> Result<Self> {
        if size < 2 {
            return Err(Error::InvalidGrid { size });
        }
        Ok(Self { size })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Largest frequency magnitude that pairs with its negative on this
    /// grid: ⌊(M−1)/2⌋.
    pub fn max_frequency(&self) -> u64 {
        ((self.size - 1) / 2) as u64
    }

    pub fn point(&self, index: usize) -> f64 {
        debug_assert!(index < self.size);
        -PI + 2.0 * PI * index as f64 / self.size as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.size).map(move |i| self.point(i))
    }

    /// Signed frequency carried by a DFT bin.
    pub fn frequency_for_bin(&self, bin: usize) -> i64 {
        debug_assert!(bin < self.size);
        let m = self.size as i64;
        let b = bin as i64;
        if b <= m / 2 {
            b
        } else {
            b - m
        }
    }

    /// Whether the signed frequency j has a bin of its own.
    pub fn is_representable(&self, j: i64) -> bool {
        let m = self.size as i64;
        if m % 2 == 0 {
            -m / 2 < j && j <= m / 2
        } else {
            2 * j.abs() < m
        }
    }

    pub fn bin_for_frequency(&self, j: i64) -> Option<usize> {
        if self.is_representable(j) {
            Some(j.rem_euclid(self.size as i64) as usize)
        } else {
            None
        }
    }

    /// All represented frequencies in ascending order.
    pub fn frequency_range(&self) -> RangeInclusive<i64> {
        let m = self.size as i64;
        if m % 2 == 0 {
            (-m / 2 + 1)..=(m / 2)
        } else {
            (-(m - 1) / 2)..=((m - 1) / 2)
        }
    }
}
