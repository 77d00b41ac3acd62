//! Random 3D point sequences for the three graph classes.

use std::f64::consts::TAU;

use rand::Rng;
use rand_distr::{Distribution, Normal, Poisson};

use super::{GenParams, PointCloud3D};

pub type Point3 = [f64; 3];

fn poisson<R: Rng + ?Sized>(rng: &mut R, mean: f64) -> usize {
    Poisson::new(mean).expect("validated mean").sample(rng) as usize
}

fn gaussian_step<R: Rng + ?Sized>(rng: &mut R, sd: f64) -> Point3 {
    let normal = Normal::new(0.0, sd).expect("finite standard deviation");
    [normal.sample(rng), normal.sample(rng), normal.sample(rng)]
}

fn add(a: Point3, b: Point3) -> Point3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// `len` points starting at `start`, each later point displaced from its
/// predecessor by an isotropic Gaussian step with per-axis deviation `sd`.
pub fn random_walk<R: Rng + ?Sized>(rng: &mut R, start: Point3, len: usize, sd: f64) -> Vec<Point3> {
    let mut out = Vec::with_capacity(len);
    let mut p = start;
    for i in 0..len {
        if i > 0 {
            p = add(p, gaussian_step(rng, sd));
        }
        out.push(p);
    }
    out
}

/// Two unit-step walks of lengths `len1` and `len2` joined by one Gaussian
/// jump with per-axis deviation `jump_sd`. The first walk starts at the
/// origin.
pub fn two_walks<R: Rng + ?Sized>(rng: &mut R, len1: usize, len2: usize, jump_sd: f64) -> Vec<Point3> {
    let mut out = random_walk(rng, [0.0; 3], len1, 1.0);
    let last = out.last().copied().unwrap_or([0.0; 3]);
    let start2 = add(last, gaussian_step(rng, jump_sd));
    out.extend(random_walk(rng, start2, len2, 1.0));
    out
}

pub fn torus_point(theta: f64, phi: f64, major: f64, minor: f64) -> Point3 {
    let ring = major + minor * theta.cos();
    [ring * phi.cos(), ring * phi.sin(), minor * theta.sin()]
}

/// Torus points with `theta_i = 2π (xi_i + i) / L` for `L = xi.len()`.
pub fn torus_sequence(xi: &[f64], phi: &[f64], major: f64, minor: f64) -> Vec<Point3> {
    assert_eq!(xi.len(), phi.len());
    let len = xi.len() as f64;
    xi.iter()
        .zip(phi)
        .enumerate()
        .map(|(i, (&x, &p))| torus_point(TAU * (x + i as f64) / len, p, major, minor))
        .collect()
}

/// Class 1: a single unit-step walk of `2 + Poisson` points.
pub fn gen_class1<R: Rng + ?Sized>(rng: &mut R, params: &GenParams) -> PointCloud3D {
    let len = 2 + poisson(rng, params.class1_poisson_mean);
    PointCloud3D::new(random_walk(rng, [0.0; 3], len, 1.0))
}

/// Class 2: two walks of `1 + Poisson` points each, joined by a large jump
/// whose covariance is `class2_jump_scale · I`.
pub fn gen_class2<R: Rng + ?Sized>(rng: &mut R, params: &GenParams) -> PointCloud3D {
    let len1 = 1 + poisson(rng, params.class2_poisson_mean);
    let len2 = 1 + poisson(rng, params.class2_poisson_mean);
    PointCloud3D::new(two_walks(rng, len1, len2, params.class2_jump_scale.sqrt()))
}

/// Class 3: `2 + Poisson` points on a torus. Each point draws its own
/// `xi ~ N(0, 1)` and `phi ~ U(0, 2π)`.
pub fn gen_class3<R: Rng + ?Sized>(rng: &mut R, params: &GenParams) -> PointCloud3D {
    let len = 2 + poisson(rng, params.class3_poisson_mean);
    let normal = Normal::new(0.0, 1.0).expect("unit normal");
    let mut xi = Vec::with_capacity(len);
    let mut phi = Vec::with_capacity(len);
    for _ in 0..len {
        xi.push(normal.sample(rng));
        phi.push(rng.random_range(0.0..TAU));
    }
    PointCloud3D::new(torus_sequence(&xi, &phi, params.torus_major, params.torus_minor))
}
