//! Shared fixtures for the criterion benches.

use graphcode::AdjacencyMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn bernoulli_matrix(n: usize, rho: f64, directed: bool, seed: u64) -> AdjacencyMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    AdjacencyMatrix::random(&mut rng, n, rho, directed).expect("valid fixture parameters")
}
