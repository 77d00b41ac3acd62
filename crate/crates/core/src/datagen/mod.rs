//! Synthetic three-class dataset of geometric proximity graphs.
//!
//! Each sample is a random 3D point sequence turned into an undirected
//! graph by thresholding pairwise distances at a per-graph percentile:
//!
//! 1. one Gaussian random walk,
//! 2. two Gaussian random walks joined by a large jump,
//! 3. noisy points around a torus.

mod clouds;
mod dataset;
mod graph;

pub use clouds::{
    gen_class1, gen_class2, gen_class3, random_walk, torus_point, torus_sequence, two_walks, Point3,
};
pub use dataset::{
    gen_dataset, generate_sample, read_dataset, sample_seed, write_dataset, write_record, DatasetRecord,
    DatasetSample, GraphClass,
};
pub use graph::{off_diagonal_density, percentile, points_to_graph};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    /// Edge threshold percentile of the pairwise distances, in (0, 100).
    pub percentile: f64,
    pub class1_poisson_mean: f64,
    pub class2_poisson_mean: f64,
    /// Covariance multiplier of the jump between the two class-2 walks.
    pub class2_jump_scale: f64,
    pub class3_poisson_mean: f64,
    pub torus_major: f64,
    pub torus_minor: f64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            percentile: 20.0,
            class1_poisson_mean: 10.0,
            class2_poisson_mean: 5.0,
            class2_jump_scale: 10.0,
            class3_poisson_mean: 10.0,
            torus_major: 10.0,
            torus_minor: 1.0,
        }
    }
}

impl GenParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.percentile > 0.0 && self.percentile < 100.0) {
            return Err(Error::PercentileOutOfRange(self.percentile));
        }
        let positive = |v: f64| v > 0.0 && v.is_finite();
        if !positive(self.class1_poisson_mean)
            || !positive(self.class2_poisson_mean)
            || !positive(self.class3_poisson_mean)
        {
            return Err(Error::InvalidParams("Poisson means must be positive"));
        }
        if !positive(self.class2_jump_scale) {
            return Err(Error::InvalidParams("jump scale must be positive"));
        }
        if !positive(self.torus_major) || !positive(self.torus_minor) {
            return Err(Error::InvalidParams("torus radii must be positive"));
        }
        Ok(())
    }
}

/// Ordered 3D points, one per vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud3D(Vec<Point3>);

impl PointCloud3D {
    pub fn new(points: Vec<Point3>) -> Self {
        PointCloud3D(points)
    }

    pub fn points(&self) -> &[Point3] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}
