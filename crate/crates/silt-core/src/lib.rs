//! Regularized self-intersection local time (SILT) of one-dimensional
//! Brownian motion and bridge: pair-sum estimators on uniform grids,
//! closed-form moment quadratures, and L2-convergence diagnostics.
//!
//! The regularized SILT replaces the Dirac delta in
//! `int int delta(X_t - X_s) ds dt` by a heat kernel of variance `eps`.
//! Everything here works with two conventions:
//!
//! * `Ordered` — integrate over `0 < s < t < T` (half the square),
//! * `FullSquare` — integrate over the full square `[0,T]^2`, which is
//!   exactly twice the ordered value since the diagonal carries no mass.
//!
//! Moments of the estimators are available in closed quadrature form
//! because the increments of both processes are jointly Gaussian: the mean
//! needs a one-dimensional integral of `(2 pi (sigma^2 + eps))^{-1/2}`, the
//! second moment a determinant integral over pairs of intervals. Those
//! serve as deterministic oracles for the Monte Carlo estimators.

mod error;
mod geometry;
mod kernel;
mod local_time;
pub mod mc;
mod mean;
mod pair_sum;
mod second_moment;
mod types;

pub use error::SiltError;
pub use geometry::{increment_cov_det, increment_cov_det_assembled, overlap_length};
pub use kernel::heat_kernel;
pub use local_time::{silt_local_time_oracle, LocalTimeEstimate};
pub use mean::{mean_silt_discrete, mean_silt_quadrature};
pub use pair_sum::{silt_pair_sum, silt_pair_sum_multi};
pub use second_moment::{
    cauchy_gap, mixed_second_moment, second_moment_discrete, second_moment_quadrature,
    SecondMoment,
};
pub use types::{OverlapGeometry, OverlapRegion, Process, SiltConvention, SiltEstimate};
