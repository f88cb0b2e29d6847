//! Sharded Monte Carlo over bridge paths with deterministic reduction.
//!
//! Work is split into `shards` independent random streams derived from one
//! seed; shards are mapped in parallel and merged in shard order, so the
//! result depends on `(seed, shards)` but not on scheduling or worker
//! count.

use gaussian_paths::{sample_bridge, PathRng, PathSample, TimeGrid};
use rayon::prelude::*;

/// Welford running mean/variance accumulator.
#[derive(Clone, Copy, Debug, Default)]
pub struct Welford {
    pub count: u64,
    pub mean: f64,
    m2: f64,
}

impl Welford {
    pub fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    /// Chan's pairwise combination; exact and order-dependent, so merges
    /// happen in shard order.
    pub fn merge(&mut self, other: &Welford) {
        if other.count == 0 {
            return;
        }
        if self.count == 0 {
            *self = *other;
            return;
        }
        let n = self.count + other.count;
        let delta = other.mean - self.mean;
        self.mean += delta * other.count as f64 / n as f64;
        self.m2 += other.m2
            + delta * delta * (self.count as f64) * (other.count as f64) / n as f64;
        self.count = n;
    }

    pub fn variance(&self) -> f64 {
        if self.count > 1 {
            self.m2 / (self.count - 1) as f64
        } else {
            0.0
        }
    }

    pub fn std_error(&self) -> f64 {
        if self.count > 1 {
            (self.variance() / self.count as f64).sqrt()
        } else {
            0.0
        }
    }
}

/// First- and second-moment statistics of one scalar sequence.
#[derive(Clone, Copy, Debug)]
pub struct MomentStats {
    pub n: u64,
    pub mean: f64,
    pub std_error: f64,
    pub variance: f64,
    /// Sample mean of the squares, with its own standard error — the
    /// quantity the second-moment quadratures predict.
    pub second_moment: f64,
    pub second_moment_std_error: f64,
}

impl MomentStats {
    fn from_accs(first: &Welford, second: &Welford) -> Self {
        MomentStats {
            n: first.count,
            mean: first.mean,
            std_error: first.std_error(),
            variance: first.variance(),
            second_moment: second.mean,
            second_moment_std_error: second.std_error(),
        }
    }
}

/// Number of samples assigned to shard `i` of `shards` when distributing
/// `total`: the remainder goes to the lowest indices.
pub fn shard_quota(total: u64, shards: u64, i: u64) -> u64 {
    total / shards + u64::from(i < total % shards)
}

/// Map shard indices in parallel, collect in index order.
pub fn run_sharded<T: Send, F: Fn(u64) -> T + Sync + Send>(shards: u64, f: F) -> Vec<T> {
    (0..shards).into_par_iter().map(f).collect()
}

/// Evaluate `f` on `n_samples` bridge paths from `a` to `b`, returning
/// moment statistics per output component. `f` must produce `width`
/// values per path (one per regularization, say).
pub fn bridge_moment_mc<F>(
    grid: &TimeGrid,
    a: f64,
    b: f64,
    seed: u64,
    shards: u64,
    n_samples: u64,
    width: usize,
    f: F,
) -> Vec<MomentStats>
where
    F: Fn(&PathSample) -> Vec<f64> + Sync,
{
    let shards = shards.max(1);
    let base = PathRng::new(seed);
    let partials = run_sharded(shards, |i| {
        let mut rng = base.shard(i);
        let mut firsts = vec![Welford::default(); width];
        let mut seconds = vec![Welford::default(); width];
        for _ in 0..shard_quota(n_samples, shards, i) {
            let path = sample_bridge(grid, a, b, &mut rng);
            let values = f(&path);
            debug_assert_eq!(values.len(), width);
            for (k, v) in values.into_iter().enumerate() {
                firsts[k].push(v);
                seconds[k].push(v * v);
            }
        }
        (firsts, seconds)
    });

    let mut firsts = vec![Welford::default(); width];
    let mut seconds = vec![Welford::default(); width];
    for (fs, ss) in &partials {
        for k in 0..width {
            firsts[k].merge(&fs[k]);
            seconds[k].merge(&ss[k]);
        }
    }
    firsts
        .iter()
        .zip(&seconds)
        .map(|(f1, f2)| MomentStats::from_accs(f1, f2))
        .collect()
}
