use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::analysis::closed_form::{expected_length, expected_nn_distance};
use crate::analysis::nn::empirical_nn_distance;
use crate::encode::encode_canonical;
use crate::error::{Error, Result};
use crate::matrix::AdjacencyMatrix;

/// Averages over a batch of random directed Bernoulli matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct LengthStats {
    pub n: usize,
    pub rho: f64,
    pub samples: usize,
    pub mean_length: f64,
    /// Mean over the samples that have at least two set cells.
    pub mean_nn_distance: Option<f64>,
}

impl LengthStats {
    pub const CSV_HEADER: &'static str =
        "n,rho,samples,mean_length,predicted_length,mean_nn_distance,predicted_nn_distance";

    pub fn predicted_length(&self) -> Option<f64> {
        expected_length(self.n, self.rho).ok()
    }

    pub fn predicted_nn_distance(&self) -> Option<f64> {
        expected_nn_distance(self.rho).ok()
    }

    /// Row matching [`Self::CSV_HEADER`]; undefined values are left empty.
    pub fn csv_row(&self) -> String {
        let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{}",
            self.n,
            self.rho,
            self.samples,
            self.mean_length,
            opt(self.predicted_length()),
            opt(self.mean_nn_distance),
            opt(self.predicted_nn_distance()),
        )
    }
}

/// Generator for sample `index` of a batch seeded with `seed`. Each sample
/// gets its own ChaCha stream, so results do not depend on scheduling.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Encodes `samples` directed matrices with i.i.d. Bernoulli(`rho`) cells.
/// `rho` may be 0 here (empty graphs), unlike the closed forms.
pub fn measure_length_stats(n: usize, rho: f64, samples: usize, seed: u64) -> Result<LengthStats> {
    if samples == 0 {
        return Err(Error::InvalidParams("samples must be at least 1"));
    }
    if !(0.0..=1.0).contains(&rho) {
        return Err(Error::DensityOutOfRange(rho));
    }
    let per_sample = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let m = AdjacencyMatrix::random(&mut sample_rng(seed, i), n, rho, true)?;
            Ok((encode_canonical(&m).len(), empirical_nn_distance(&m)))
        })
        .collect::<Result<Vec<_>>>()?;

    let mean_length = per_sample.iter().map(|(l, _)| *l as f64).sum::<f64>() / samples as f64;
    let nn: Vec<f64> = per_sample.iter().filter_map(|(_, d)| *d).collect();
    let mean_nn_distance = (!nn.is_empty()).then(|| nn.iter().sum::<f64>() / nn.len() as f64);

    Ok(LengthStats {
        n,
        rho,
        samples,
        mean_length,
        mean_nn_distance,
    })
}
