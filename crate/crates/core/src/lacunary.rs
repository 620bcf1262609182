//! Lacunary integer sequences and the geometric-series constant they
//! induce.
//!
//! A sequence n_1 < n_2 < … of positive integers is lacunary when every
//! consecutive ratio n_{k+1}/n_k stays at or above some α > 1. The
//! stored `alpha` is always the *certified* minimum ratio of the
//! concrete terms, never a requested target: every bound computed
//! downstream must hold for the sequence actually in hand.

use crate::error::{Error, Result};
use crate::tolerances::RATIO_MARGIN;

/// Strictly increasing positive integers with a certified minimum
/// consecutive ratio α > 1. A single-term sequence certifies α = ∞.
#[derive(Debug, Clone, PartialEq)]
pub struct LacunarySequence {
    terms: Vec<u64>,
    alpha: f64,
}

impl LacunarySequence {
    /// Certify a list of terms, computing α as the minimum consecutive
    /// ratio.
    pub fn validate(terms: Vec<u64>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptySequence);
        }
        if terms.contains(&0) {
            return Err(Error::NonPositiveTerm);
        }
        let mut min_ratio = f64::INFINITY;
        for pair in terms.windows(2) {
            let ratio = pair[1] as f64 / pair[0] as f64;
            if ratio < min_ratio {
                min_ratio = ratio;
            }
        }
        if !(min_ratio > 1.0 + RATIO_MARGIN) {
            return Err(Error::NotLacunary { min_ratio });
        }
        Ok(Self {
            terms,
            alpha: min_ratio,
        })
    }

    /// Build `count` terms starting at `n1` with the recursion
    /// n_{k+1} = max(n_k + 1, ⌈n_k · alpha⌉).
    ///
    /// The `n_k + 1` clamp guarantees strict increase even when α is
    /// barely above 1; the returned α is re-certified from the terms.
    pub fn generate(n1: u64, alpha: f64, count: usize) -> Result<Self> {
        if !(alpha > 1.0) {
            return Err(Error::InvalidAlpha { alpha });
        }
        if n1 == 0 {
            return Err(Error::NonPositiveTerm);
        }
        if count == 0 {
            return Err(Error::EmptySequence);
        }
        let mut terms = Vec::with_capacity(count);
        let mut current = n1;
        terms.push(current);
        for _ in 1..count {
            let scaled = (current as f64 * alpha).ceil() as u64;
            current = scaled.max(current.saturating_add(1));
            terms.push(current);
        }
        Self::validate(terms)
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    /// Certified minimum consecutive ratio.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of consecutive-difference blocks the sequence supports.
    pub fn block_count(&self) -> usize {
        self.terms.len() - 1
    }
}

/// The geometric-tail constant 2α/(α−1) that dominates the block
/// symbol sum for any sequence of ratio α.
///
/// Strictly decreasing in α with limit 2; for a vacuously-lacunary
/// single-term sequence (α = ∞) the limit value is returned.
pub fn geometric_tail_bound(alpha: f64) -> Result<f64> {
    if !(alpha > 1.0) {
        return Err(Error::InvalidAlpha { alpha });
    }
    if alpha.is_infinite() {
        return Ok(2.0);
    }
    Ok(2.0 * alpha / (alpha - 1.0))
}
