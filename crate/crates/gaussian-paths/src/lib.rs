//! Exact sampling and covariance arithmetic for one-dimensional Brownian
//! motion and Brownian bridge on finite time grids.
//!
//! A bridge from `a` to `b` on `[0, T]` is built by pivoting a motion path,
//!
//! ```text
//! X_t = a (1 - t/T) + b t/T + B_t - (t/T) B_T ,
//! ```
//!
//! so the bridge produced from a motion sample and the bridge sampled
//! directly from the same random stream agree bit for bit. The pinned
//! endpoints are set exactly, not stochastically.
//!
//! Randomness comes from counter-based ChaCha streams: a base seed plus a
//! shard index fully determine every draw, so Monte Carlo work can fan out
//! across workers and still reproduce.

mod error;
mod grid;
mod law;
mod path;
mod rng;
mod sample;

pub use error::PathError;
pub use grid::TimeGrid;
pub use law::{bridge_cov, bridge_mean};
pub use path::{PathKind, PathSample};
pub use rng::PathRng;
pub use sample::{bridge_from_motion, sample_bridge, sample_motion};
