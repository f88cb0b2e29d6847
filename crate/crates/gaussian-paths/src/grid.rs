use crate::PathError;

/// A partition of `[0, T]`: strictly increasing times, first point 0,
/// last point `T`, at least two points.
#[derive(Clone, Debug, PartialEq)]
pub struct TimeGrid {
    points: Vec<f64>,
}

impl TimeGrid {
    pub fn new(points: Vec<f64>) -> Result<Self, PathError> {
        if points.len() < 2 {
            return Err(PathError::InvalidGrid(format!(
                "need at least 2 points, got {}",
                points.len()
            )));
        }
        if points[0] != 0.0 {
            return Err(PathError::InvalidGrid(format!(
                "first point must be 0, got {}",
                points[0]
            )));
        }
        if !points.iter().all(|t| t.is_finite()) {
            return Err(PathError::InvalidGrid("non-finite time point".into()));
        }
        if points.windows(2).any(|w| w[1] <= w[0]) {
            return Err(PathError::InvalidGrid(
                "points must be strictly increasing".into(),
            ));
        }
        Ok(Self { points })
    }

    /// Uniform grid of `n_points` points spanning `[0, t_end]` inclusive.
    pub fn uniform(t_end: f64, n_points: usize) -> Result<Self, PathError> {
        if !(t_end > 0.0) {
            return Err(PathError::InvalidGrid(format!(
                "duration must be positive, got {t_end}"
            )));
        }
        if n_points < 2 {
            return Err(PathError::InvalidGrid(format!(
                "need at least 2 points, got {n_points}"
            )));
        }
        let m = (n_points - 1) as f64;
        let points = (0..n_points)
            .map(|i| t_end * (i as f64) / m)
            .collect::<Vec<_>>();
        Self::new(points)
    }

    pub fn duration(&self) -> f64 {
        *self.points.last().expect("grid has at least 2 points")
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True when all spacings agree to within a relative 1e-12. Estimators
    /// that carry a `(T/n)^2` weight require this.
    pub fn is_uniform(&self) -> bool {
        let dt = self.points[1] - self.points[0];
        self.points
            .windows(2)
            .all(|w| ((w[1] - w[0]) - dt).abs() <= 1e-12 * dt.abs())
    }
}
