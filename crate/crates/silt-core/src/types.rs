/// Which double-integral domain a SILT value refers to.
///
/// `FullSquare` equals exactly twice `Ordered` for every path, grid and
/// `eps`: the estimator sums over unordered pairs once and doubles, so the
/// identity holds bit for bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SiltConvention {
    /// `int_0^T int_0^t ... ds dt` — pairs with `s < t` only.
    Ordered,
    /// `int_0^T int_0^T ... ds dt` — all off-diagonal pairs.
    FullSquare,
}

impl SiltConvention {
    pub fn factor(self) -> f64 {
        match self {
            SiltConvention::Ordered => 1.0,
            SiltConvention::FullSquare => 2.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SiltConvention::Ordered => "ordered",
            SiltConvention::FullSquare => "full-square",
        }
    }
}

/// The process a moment quadrature refers to. Bridge moments are for the
/// centered case (equal pinned endpoints), where all increments have mean
/// zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Process {
    Motion,
    Bridge,
}

impl Process {
    /// Variance of the lag-`tau` increment on `[0, T]`.
    pub(crate) fn increment_variance(self, tau: f64, t_end: f64) -> f64 {
        match self {
            Process::Motion => tau,
            Process::Bridge => tau * (t_end - tau) / t_end,
        }
    }
}

/// A SILT value together with the parameters that produced it.
#[derive(Clone, Copy, Debug)]
pub struct SiltEstimate {
    pub value: f64,
    pub epsilon: f64,
    pub convention: SiltConvention,
    pub n_grid: usize,
    pub n_samples: usize,
    /// Standard error of the Monte Carlo mean; 0 for single-path values.
    pub std_error: f64,
}

/// Relative position of two time intervals in the second-moment domain
/// decomposition (canonically ordered so the second interval ends last).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OverlapRegion {
    /// Disjoint: `s1 < t1 <= s2 < t2`, overlap 0.
    D1,
    /// Staggered: `s1 < s2 < t1 < t2`, overlap `t1 - s2`.
    D2,
    /// Nested: `s2 <= s1 < t1 <= t2`, overlap `t1 - s1`.
    D3,
}

/// Two intervals, the length of their intersection, and the region label.
#[derive(Clone, Copy, Debug)]
pub struct OverlapGeometry {
    pub s1: f64,
    pub t1: f64,
    pub s2: f64,
    pub t2: f64,
    /// Length of `[s1,t1] /\ [s2,t2]`.
    pub m: f64,
    pub region: OverlapRegion,
}
