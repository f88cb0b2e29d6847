use gaussian_paths::bridge_cov;

use crate::{OverlapGeometry, OverlapRegion, SiltError};

/// Intersection length and region label for a pair of time intervals.
///
/// The second-moment domain splits by the relative position of the two
/// intervals once they are ordered by right endpoint: disjoint (D1),
/// staggered (D2), or nested (D3). The overlap `m` is what survives into
/// the covariance of the two increments.
pub fn overlap_length(s1: f64, t1: f64, s2: f64, t2: f64) -> Result<OverlapGeometry, SiltError> {
    if !(s1 < t1) || !(s2 < t2) {
        return Err(SiltError::InvalidInput(format!(
            "degenerate interval: [{s1}, {t1}] or [{s2}, {t2}]"
        )));
    }
    // canonical order: (p, q) with q ending last
    let ((ps, pt), (qs, _qt)) = if t1 <= t2 {
        ((s1, t1), (s2, t2))
    } else {
        ((s2, t2), (s1, t1))
    };
    let (m, region) = if qs >= pt {
        (0.0, OverlapRegion::D1)
    } else if qs <= ps {
        (pt - ps, OverlapRegion::D3)
    } else {
        (pt - qs, OverlapRegion::D2)
    };
    Ok(OverlapGeometry {
        s1,
        t1,
        s2,
        t2,
        m,
        region,
    })
}

/// Determinant of the 2x2 covariance of the two bridge increments
/// `(X_{t1} - X_{s1}, X_{t2} - X_{s2})` on `[0, T]`:
///
/// `det = [tau1 tau2 (T - tau1 - tau2 + 2m) - T m^2] / T`
///
/// with `tau_i` the interval lengths and `m` their overlap. Agrees with
/// assembling the covariance from `bridge_cov` and taking the determinant.
pub fn increment_cov_det(s1: f64, t1: f64, s2: f64, t2: f64, t_end: f64) -> Result<f64, SiltError> {
    if !(t_end > 0.0) {
        return Err(SiltError::InvalidInput(format!(
            "duration must be positive, got {t_end}"
        )));
    }
    for &x in &[s1, t1, s2, t2] {
        if !(0.0..=t_end).contains(&x) {
            return Err(SiltError::InvalidInput(format!(
                "time {x} outside [0, {t_end}]"
            )));
        }
    }
    let geom = overlap_length(s1, t1, s2, t2)?;
    let tau1 = t1 - s1;
    let tau2 = t2 - s2;
    let m = geom.m;
    Ok((tau1 * tau2 * (t_end - tau1 - tau2 + 2.0 * m) - t_end * m * m) / t_end)
}

/// The same determinant assembled entry by entry from the covariance
/// function. Slower; the independent route for checking the closed
/// formula.
pub fn increment_cov_det_assembled(
    s1: f64,
    t1: f64,
    s2: f64,
    t2: f64,
    t_end: f64,
) -> Result<f64, SiltError> {
    let var = |s: f64, t: f64| -> Result<f64, SiltError> {
        Ok(bridge_cov(t, t, t_end)? + bridge_cov(s, s, t_end)? - 2.0 * bridge_cov(s, t, t_end)?)
    };
    let v1 = var(s1, t1)?;
    let v2 = var(s2, t2)?;
    let cross = bridge_cov(t1, t2, t_end)? - bridge_cov(t1, s2, t_end)?
        - bridge_cov(s1, t2, t_end)?
        + bridge_cov(s1, s2, t_end)?;
    Ok(v1 * v2 - cross * cross)
}
