use crate::TimeGrid;

/// Which Gaussian process a sample came from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PathKind {
    /// Standard Brownian motion started at 0.
    Motion,
    /// Brownian bridge pinned at `a` (time 0) and `b` (time T).
    Bridge { a: f64, b: f64 },
}

/// Values of a Gaussian process on a [`TimeGrid`].
#[derive(Clone, Debug)]
pub struct PathSample {
    pub grid: TimeGrid,
    pub values: Vec<f64>,
    pub kind: PathKind,
}

impl PathSample {
    pub fn duration(&self) -> f64 {
        self.grid.duration()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}
