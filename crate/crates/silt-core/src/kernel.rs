use crate::SiltError;

/// Centered Gaussian density of variance `eps`:
/// `p_eps(x) = (2 pi eps)^{-1/2} exp(-x^2 / (2 eps))`.
pub fn heat_kernel(x: f64, eps: f64) -> Result<f64, SiltError> {
    if !(eps > 0.0) {
        return Err(SiltError::InvalidInput(format!(
            "heat kernel variance must be positive, got {eps}"
        )));
    }
    Ok((2.0 * std::f64::consts::PI * eps).sqrt().recip() * (-x * x / (2.0 * eps)).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn value_at_zero() {
        let v = heat_kernel(0.0, 1.0).unwrap();
        assert!((v - (2.0 * PI).sqrt().recip()).abs() < 1e-15);
    }

    #[test]
    fn value_at_x_equals_eps() {
        for &eps in &[0.5, 1.0, 2.0] {
            let v = heat_kernel(eps, eps).unwrap();
            let expected = (2.0 * PI * eps).sqrt().recip() * (-eps / 2.0).exp();
            assert!((v - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn integrates_to_one() {
        for &eps in &[1e-3f64, 0.1, 1.0, 7.0] {
            let half = 10.0 * eps.sqrt();
            let r = gk_quad::integrate(
                |x| heat_kernel(x, eps).unwrap(),
                -half,
                half,
                gk_quad::QuadOptions::with_tol(1e-13, 1e-13),
            )
            .unwrap();
            assert!((r.value - 1.0).abs() < 1e-12, "eps={eps}: {}", r.value);
        }
    }

    #[test]
    fn rejects_nonpositive_eps() {
        assert!(heat_kernel(0.0, 0.0).is_err());
        assert!(heat_kernel(0.0, -1.0).is_err());
    }

    #[test]
    fn decreasing_in_eps_iff_eps_exceeds_x_squared() {
        // d p_eps(x) / d eps has the sign of (x^2 - eps)
        let cases = [(0.5f64, 0.3f64), (1.0, 0.5), (0.2, 0.01)];
        for &(x, eps) in &cases {
            let h = 1e-7 * eps;
            let up = heat_kernel(x, eps + h).unwrap();
            let down = heat_kernel(x, eps - h).unwrap();
            let slope = (up - down) / (2.0 * h);
            if eps > x * x {
                assert!(slope < 0.0, "x={x}, eps={eps}");
            } else if eps < x * x {
                assert!(slope > 0.0, "x={x}, eps={eps}");
            }
        }
    }
}
