use gaussian_paths::{bridge_cov, bridge_from_motion, sample_bridge, sample_motion, PathRng, TimeGrid};
use proptest::prelude::*;

/// Lower-triangular Cholesky with a nonnegative-pivot tolerance; returns
/// false if a pivot drops below `-tol`.
fn cholesky_psd(m: &[Vec<f64>], tol: f64) -> bool {
    let n = m.len();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = m[i][j];
            for k in 0..j {
                s -= l[i][k] * l[j][k];
            }
            if i == j {
                if s < -tol {
                    return false;
                }
                l[i][j] = s.max(0.0).sqrt();
            } else if l[j][j] > 0.0 {
                l[i][j] = s / l[j][j];
            } else {
                l[i][j] = 0.0;
            }
        }
    }
    true
}

fn arb_grid() -> impl Strategy<Value = TimeGrid> {
    (2usize..12, 0.2f64..5.0).prop_flat_map(|(interior, t_end)| {
        proptest::collection::vec(0.01f64..0.99, interior).prop_map(move |mut fracs| {
            fracs.sort_by(|a, b| a.partial_cmp(b).unwrap());
            fracs.dedup_by(|a, b| (*a - *b).abs() < 1e-6);
            let mut pts = vec![0.0];
            pts.extend(fracs.iter().map(|f| f * t_end));
            pts.push(t_end);
            TimeGrid::new(pts).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn covariance_is_symmetric(s in 0.0f64..2.0, t in 0.0f64..2.0) {
        let c1 = bridge_cov(s, t, 2.0).unwrap();
        let c2 = bridge_cov(t, s, 2.0).unwrap();
        prop_assert_eq!(c1, c2);
        prop_assert!(c1 >= 0.0);
    }

    #[test]
    fn covariance_matrix_is_psd(grid in arb_grid()) {
        let t_end = grid.duration();
        let interior = &grid.points()[1..grid.len() - 1];
        let m: Vec<Vec<f64>> = interior
            .iter()
            .map(|&s| interior.iter().map(|&t| bridge_cov(s, t, t_end).unwrap()).collect())
            .collect();
        prop_assert!(cholesky_psd(&m, 1e-10));
    }

    #[test]
    fn bridge_equals_pivoted_motion(seed in 0u64..1000, a in -2.0f64..2.0, b in -2.0f64..2.0) {
        let grid = TimeGrid::uniform(1.5, 21).unwrap();
        let motion = sample_motion(&grid, &mut PathRng::new(seed));
        let pivoted = bridge_from_motion(&motion, a, b).unwrap();
        let direct = sample_bridge(&grid, a, b, &mut PathRng::new(seed));
        prop_assert_eq!(pivoted.values, direct.values);
    }
}
