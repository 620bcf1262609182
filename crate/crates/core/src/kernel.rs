//! Fejér kernel evaluation in space and in frequency.
//!
//! The kernel of order `n` is the trigonometric polynomial
//!
//! ```text
//! K_n(x) = Σ_{j=-n}^{n} (1 - |j|/(n+1)) e^{-ijx}
//! ```
//!
//! Two independent space-domain routes are provided: the direct cosine
//! series ([`eval_kernel_sum`]) and the sin-ratio closed form
//! ([`eval_kernel_closed`]). They cross-check each other in the test
//! suites. The frequency profile is the tent `1 - |ξ|/(n+1)` supported
//! on `[-n, n]` ([`fejer_hat`]).

use crate::tolerances::CLOSED_FORM_SINGULARITY_EPS;

/// Fejér kernel of a fixed order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FejerKernel {
    order: u64,
}

impl FejerKernel {
    pub fn new(order: u64) -> Self {
        Self { order }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Space-domain value via the cosine series.
    pub fn eval_sum(&self, x: f64) -> f64 {
        eval_kernel_sum(self.order, x)
    }

    /// Space-domain value via the closed form.
    pub fn eval_closed(&self, x: f64) -> f64 {
        eval_kernel_closed(self.order, x)
    }

    /// Frequency-domain tent value.
    pub fn hat(&self, xi: f64) -> f64 {
        fejer_hat(self.order, xi)
    }
}

/// K_n(x) summed as `1 + 2 Σ_{j=1}^{n} (1 - j/(n+1)) cos(jx)`.
///
/// The exponential pairs `±j` are folded into cosines, so the result is
/// real by construction rather than by cancellation.
pub fn eval_kernel_sum(n: u64, x: f64) -> f64 {
    let np1 = (n + 1) as f64;
    let mut sum = 0.0;
    for j in 1..=n {
        let jf = j as f64;
        sum += (1.0 - jf / np1) * (jf * x).cos();
    }
    1.0 + 2.0 * sum
}

/// K_n(x) = (1/(n+1)) · (sin((n+1)x/2) / sin(x/2))².
///
/// At x ≡ 0 (mod 2π) the quotient has a removable singularity; the
/// limit value `n + 1` is returned once |sin(x/2)| drops below
/// [`CLOSED_FORM_SINGULARITY_EPS`].
pub fn eval_kernel_closed(n: u64, x: f64) -> f64 {
    let np1 = (n + 1) as f64;
    let half = 0.5 * x;
    let denom = half.sin();
    if denom.abs() < CLOSED_FORM_SINGULARITY_EPS {
        return np1;
    }
    let ratio = (np1 * half).sin() / denom;
    ratio * ratio / np1
}

/// Frequency profile of K_n: `1 - |ξ|/(n+1)` for |ξ| ≤ n, zero beyond.
///
/// Defined for real ξ; the integer frequencies are the consumers.
pub fn fejer_hat(n: u64, xi: f64) -> f64 {
    let a = xi.abs();
    let nf = n as f64;
    if a <= nf {
        1.0 - a / (nf + 1.0)
    } else {
        0.0
    }
}
