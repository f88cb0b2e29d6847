use crate::PathError;

/// Mean of the Brownian bridge from `a` to `b` at time `t`:
/// `a (1 - t/T) + b t/T`.
pub fn bridge_mean(t: f64, t_end: f64, a: f64, b: f64) -> Result<f64, PathError> {
    check_time(t, t_end)?;
    let u = t / t_end;
    Ok(a * (1.0 - u) + b * u)
}

/// Covariance of the Brownian bridge on `[0, T]`: `s /\ t - s t / T`.
///
/// Independent of the pinned endpoints; symmetric in `(s, t)`.
pub fn bridge_cov(s: f64, t: f64, t_end: f64) -> Result<f64, PathError> {
    check_time(s, t_end)?;
    check_time(t, t_end)?;
    Ok(s.min(t) - s * t / t_end)
}

fn check_time(t: f64, t_end: f64) -> Result<(), PathError> {
    if !(t_end > 0.0) {
        return Err(PathError::OutOfRange(format!(
            "duration must be positive, got {t_end}"
        )));
    }
    if !(0.0..=t_end).contains(&t) {
        return Err(PathError::OutOfRange(format!(
            "time {t} outside [0, {t_end}]"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mean_interpolates_endpoints() {
        assert_eq!(bridge_mean(0.0, 2.0, -1.0, 3.0).unwrap(), -1.0);
        assert_eq!(bridge_mean(2.0, 2.0, -1.0, 3.0).unwrap(), 3.0);
        assert_eq!(bridge_mean(0.5, 1.0, 0.0, 2.0).unwrap(), 1.0);
    }

    #[test]
    fn covariance_formula_values() {
        assert_eq!(bridge_cov(0.0, 0.7, 1.0).unwrap(), 0.0);
        assert_eq!(bridge_cov(0.25, 0.5, 1.0).unwrap(), 0.125);
        assert_eq!(bridge_cov(0.5, 0.5, 1.0).unwrap(), 0.25);
        // var(X_t) = t (T - t) / T
        let v = bridge_cov(0.3, 0.3, 2.0).unwrap();
        assert!((v - 0.3 * 1.7 / 2.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_times_outside_interval() {
        assert!(bridge_cov(-0.1, 0.5, 1.0).is_err());
        assert!(bridge_cov(0.1, 1.5, 1.0).is_err());
        assert!(bridge_mean(1.5, 1.0, 0.0, 0.0).is_err());
    }
}
