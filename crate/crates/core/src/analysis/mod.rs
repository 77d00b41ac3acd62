//! Length laws, nearest-neighbour statistics, edit distance and
//! edit-locality patches.

mod closed_form;
mod levenshtein;
mod nn;
mod patch;
mod stats;

pub use closed_form::{expected_length, expected_nn_distance, nn_constant, nn_density, nn_survival};
pub use levenshtein::levenshtein;
pub use nn::empirical_nn_distance;
pub use patch::{patch_flip, patch_insert_edge, patch_remove_edge, PatchResult};
pub use stats::{measure_length_stats, sample_rng, LengthStats};
