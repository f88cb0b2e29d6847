use std::f64::consts::PI;

use gk_quad::{integrate, QuadOptions};

use crate::{Process, SiltConvention, SiltError};

/// Expected kernel value at lag `tau`:
/// `E p_eps(X_t - X_s) = (2 pi (sigma^2(tau) + eps))^{-1/2}` for centered
/// increments with variance `sigma^2(tau)`.
fn expected_kernel(tau: f64, t_end: f64, eps: f64, process: Process) -> f64 {
    let sigma2 = process.increment_variance(tau, t_end);
    (2.0 * PI * (sigma2 + eps)).sqrt().recip()
}

/// Deterministic mean of the regularized SILT,
/// `E I_eps = int_0^T (T - tau) (2 pi (sigma^2(tau) + eps))^{-1/2} d tau`
/// in the ordered convention (twice that for full-square).
///
/// Bridge moments are for equal pinned endpoints (centered increments).
/// `eps = 0` is allowed: the `tau^{-1/2}` endpoint singularity is removed
/// exactly by integrating in `u = sqrt(tau)` near 0 and
/// `w = sqrt(T - tau)` near `T`.
pub fn mean_silt_quadrature(
    t_end: f64,
    eps: f64,
    process: Process,
    convention: SiltConvention,
) -> Result<f64, SiltError> {
    if !(t_end > 0.0) {
        return Err(SiltError::InvalidInput(format!(
            "duration must be positive, got {t_end}"
        )));
    }
    if !(eps >= 0.0) {
        return Err(SiltError::InvalidInput(format!(
            "eps must be nonnegative, got {eps}"
        )));
    }

    let opts = QuadOptions::with_tol(1e-13, 1e-11);
    let half = (0.5 * t_end).sqrt();

    // tau in [0, T/2] via tau = u^2
    let left = integrate(
        |u| {
            let tau = u * u;
            2.0 * u * (t_end - tau) * expected_kernel(tau, t_end, eps, process)
        },
        0.0,
        half,
        opts,
    )
    .map_err(|e| SiltError::from_quad("mean quadrature (left half)", e, vec![]))?;

    // tau in [T/2, T] via tau = T - w^2
    let right = integrate(
        |w| {
            let tau = t_end - w * w;
            2.0 * w * (w * w) * expected_kernel(tau, t_end, eps, process)
        },
        0.0,
        half,
        opts,
    )
    .map_err(|e| SiltError::from_quad("mean quadrature (right half)", e, vec![left.value]))?;

    Ok(convention.factor() * (left.value + right.value))
}

/// Exact expectation of the finite-`n` pair-sum estimator on the uniform
/// grid of `n` points: `(T/n)^2 sum_{j=1}^{n-1} (n - j) E p_eps` at lag
/// `j T/(n-1)`.
///
/// This is the discrete companion of [`mean_silt_quadrature`]; the gap
/// between the two is the estimator's discretization bias, O(1/n).
pub fn mean_silt_discrete(
    t_end: f64,
    eps: f64,
    n_grid: usize,
    process: Process,
    convention: SiltConvention,
) -> Result<f64, SiltError> {
    if !(t_end > 0.0) || !(eps >= 0.0) {
        return Err(SiltError::InvalidInput(
            "need positive duration and nonnegative eps".into(),
        ));
    }
    if n_grid < 2 {
        return Err(SiltError::InvalidInput(format!(
            "need at least 2 grid points, got {n_grid}"
        )));
    }
    let n = n_grid as f64;
    let dt = t_end / (n - 1.0);
    let mut acc = 0.0;
    for j in 1..n_grid {
        let tau = j as f64 * dt;
        acc += (n - j as f64) * expected_kernel(tau, t_end, eps, process);
    }
    Ok(convention.factor() * (t_end / n) * (t_end / n) * acc)
}
