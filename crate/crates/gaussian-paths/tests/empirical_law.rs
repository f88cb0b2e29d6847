//! Monte Carlo checks of the sampled processes against their known laws.

use gaussian_paths::{bridge_cov, bridge_mean, sample_bridge, sample_motion, PathRng, TimeGrid};

const N_PATHS: usize = 100_000;

#[test]
fn motion_increment_variance_matches_dt() {
    let grid = TimeGrid::new(vec![0.0, 0.05, 0.2, 0.5, 1.0, 1.25]).unwrap();
    let mut rng = PathRng::new(2024);
    let n_inc = grid.len() - 1;
    let mut sum = vec![0.0; n_inc];
    let mut sum_sq = vec![0.0; n_inc];
    for _ in 0..N_PATHS {
        let p = sample_motion(&grid, &mut rng);
        for k in 0..n_inc {
            let d = p.values[k + 1] - p.values[k];
            sum[k] += d;
            sum_sq[k] += d * d;
        }
    }
    let n = N_PATHS as f64;
    for k in 0..n_inc {
        let dt = grid.points()[k + 1] - grid.points()[k];
        let mean = sum[k] / n;
        let var = sum_sq[k] / n - mean * mean;
        // sample variance of N Gaussians has std error ~ var * sqrt(2/N)
        let se = dt * (2.0 / n).sqrt();
        assert!(
            (var - dt).abs() < 3.0 * se,
            "increment {k}: var {var} vs dt {dt} (3se = {})",
            3.0 * se
        );
    }
}

#[test]
fn bridge_empirical_mean_and_covariance() {
    let t_end = 1.0;
    let (a, b) = (0.5, -0.25);
    let grid = TimeGrid::uniform(t_end, 17).unwrap();
    let mut rng = PathRng::new(99);

    let n_pts = grid.len();
    let mut sum = vec![0.0; n_pts];
    let mut paths = Vec::with_capacity(N_PATHS);
    for _ in 0..N_PATHS {
        let p = sample_bridge(&grid, a, b, &mut rng);
        for (acc, v) in sum.iter_mut().zip(&p.values) {
            *acc += *v;
        }
        paths.push(p.values);
    }
    let n = N_PATHS as f64;
    let means: Vec<f64> = sum.iter().map(|s| s / n).collect();

    for (k, &t) in grid.points().iter().enumerate() {
        let expected = bridge_mean(t, t_end, a, b).unwrap();
        let var = bridge_cov(t, t, t_end).unwrap();
        let se = (var / n).sqrt();
        assert!(
            (means[k] - expected).abs() <= 3.0 * se + 1e-12,
            "mean at t={t}: {} vs {expected}",
            means[k]
        );
    }

    // ten deterministic interior (s, t) index pairs
    let pairs = [
        (1, 3),
        (2, 9),
        (3, 3),
        (4, 12),
        (5, 7),
        (6, 14),
        (8, 8),
        (9, 15),
        (11, 13),
        (14, 15),
    ];
    for &(i, j) in &pairs {
        let (s, t) = (grid.points()[i], grid.points()[j]);
        let mut acc = 0.0;
        for vals in &paths {
            acc += (vals[i] - means[i]) * (vals[j] - means[j]);
        }
        let emp = acc / n;
        let expected = bridge_cov(s, t, t_end).unwrap();
        let css = bridge_cov(s, s, t_end).unwrap();
        let ctt = bridge_cov(t, t, t_end).unwrap();
        let se = ((css * ctt + expected * expected) / n).sqrt();
        assert!(
            (emp - expected).abs() <= 3.0 * se,
            "cov({s},{t}): {emp} vs {expected} (3se = {})",
            3.0 * se
        );
    }
}
