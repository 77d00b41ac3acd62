use crate::error::{Error, Result};
use crate::matrix::{AdjacencyMatrix, Cell};

use super::PointCloud3D;

/// Percentile of `sorted` with linear interpolation between order
/// statistics (position `p/100 · (len - 1)`).
pub fn percentile(sorted: &[f64], p: f64) -> f64 {
    assert!(!sorted.is_empty());
    let pos = p / 100.0 * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

fn distance(a: [f64; 3], b: [f64; 3]) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt()
}

/// Undirected proximity graph: `{i, j}` is an edge iff the points are
/// strictly closer than the given percentile of this cloud's own pairwise
/// distances. The diagonal stays zero.
pub fn points_to_graph(cloud: &PointCloud3D, pct: f64) -> Result<AdjacencyMatrix> {
    if !(pct > 0.0 && pct < 100.0) {
        return Err(Error::PercentileOutOfRange(pct));
    }
    let pts = cloud.points();
    let n = pts.len();
    if n < 2 {
        return Err(Error::CloudTooSmall(n));
    }

    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j, distance(pts[i], pts[j])));
        }
    }
    let mut sorted: Vec<f64> = pairs.iter().map(|p| p.2).collect();
    sorted.sort_by(f64::total_cmp);
    let threshold = percentile(&sorted, pct);

    let mut m = AdjacencyMatrix::zeros(n, false)?;
    for (i, j, d) in pairs {
        if d < threshold {
            m.set_unchecked(Cell::new(i + 1, j + 1));
        }
    }
    Ok(m)
}

/// Fraction of off-diagonal cells that are set.
pub fn off_diagonal_density(m: &AdjacencyMatrix) -> f64 {
    let n = m.n();
    if n < 2 {
        return 0.0;
    }
    let off = m.ones().filter(|c| c.row != c.col).count();
    off as f64 / (n * (n - 1)) as f64
}
