use crate::{PathError, PathKind, PathRng, PathSample, TimeGrid};

/// Sample standard Brownian motion on `grid`: independent centered Gaussian
/// increments with variance `t_{k+1} - t_k`, started at 0.
pub fn sample_motion(grid: &TimeGrid, rng: &mut PathRng) -> PathSample {
    let pts = grid.points();
    let mut values = Vec::with_capacity(pts.len());
    values.push(0.0);
    let mut current = 0.0;
    for w in pts.windows(2) {
        let dt = w[1] - w[0];
        current += dt.sqrt() * rng.standard_normal();
        values.push(current);
    }
    PathSample {
        grid: grid.clone(),
        values,
        kind: PathKind::Motion,
    }
}

/// Pivot a motion sample into the bridge from `a` to `b`:
/// `X_t = a (1 - t/T) + b t/T + B_t - (t/T) B_T`.
///
/// The endpoints are written as exactly `a` and `b`.
pub fn bridge_from_motion(motion: &PathSample, a: f64, b: f64) -> Result<PathSample, PathError> {
    if motion.kind != PathKind::Motion {
        return Err(PathError::OutOfRange(
            "bridge_from_motion expects a motion sample".into(),
        ));
    }
    let pts = motion.grid.points();
    let t_end = motion.grid.duration();
    let b_end = *motion.values.last().expect("non-empty path");
    let n = pts.len();
    let mut values = Vec::with_capacity(n);
    values.push(a);
    for k in 1..n - 1 {
        let u = pts[k] / t_end;
        values.push(a * (1.0 - u) + b * u + motion.values[k] - u * b_end);
    }
    values.push(b);
    Ok(PathSample {
        grid: motion.grid.clone(),
        values,
        kind: PathKind::Bridge { a, b },
    })
}

/// Sample the Brownian bridge from `a` to `b` on `grid`.
///
/// Consumes exactly the same draws as [`sample_motion`], so the result's
/// underlying motion path can be reproduced from the same stream.
pub fn sample_bridge(grid: &TimeGrid, a: f64, b: f64, rng: &mut PathRng) -> PathSample {
    let motion = sample_motion(grid, rng);
    bridge_from_motion(&motion, a, b).expect("freshly sampled motion is a motion path")
}
