use gaussian_paths::PathSample;

use crate::SiltError;

/// Full-square SILT recovered from an occupation histogram.
#[derive(Clone, Copy, Debug)]
pub struct LocalTimeEstimate {
    pub value: f64,
    pub bin_width: f64,
    /// Set when the path's range is too narrow for the bin width; the
    /// value then scales like `T^2 / bin_width` instead of converging.
    pub degenerate: bool,
}

/// Independent SILT oracle via the occupation-density identity
/// `int int delta(X_t - X_s) ds dt = int L(x)^2 dx` in one dimension.
///
/// Bins the sampled values, reads off occupation times, and sums
/// `time_i (time_i - dt) / bin_width` — the same-sample (diagonal) pairs
/// are removed to match the pair-sum estimators. Returns the full-square
/// value; halve for the ordered convention.
pub fn silt_local_time_oracle(
    path: &PathSample,
    bin_width: f64,
) -> Result<LocalTimeEstimate, SiltError> {
    if !(bin_width > 0.0) {
        return Err(SiltError::InvalidInput(format!(
            "bin width must be positive, got {bin_width}"
        )));
    }
    if !path.grid.is_uniform() {
        return Err(SiltError::NonUniformGrid);
    }

    let n = path.values.len();
    let t_end = path.duration();
    let dt = t_end / n as f64;

    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for &v in &path.values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    let range = hi - lo;
    let degenerate = range < 2.0 * bin_width;

    let n_bins = (range / bin_width).ceil() as usize + 1;
    let mut counts = vec![0u64; n_bins];
    for &v in &path.values {
        let idx = ((v - lo) / bin_width) as usize;
        counts[idx.min(n_bins - 1)] += 1;
    }

    let mut acc = 0.0;
    for &c in &counts {
        let c = c as f64;
        acc += c * (c - 1.0);
    }
    let value = acc * dt * dt / bin_width;

    Ok(LocalTimeEstimate {
        value,
        bin_width,
        degenerate,
    })
}
