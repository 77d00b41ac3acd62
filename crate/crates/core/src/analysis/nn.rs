use crate::matrix::AdjacencyMatrix;
use crate::rows::RowIndex;

/// Mean Manhattan distance from each set cell to the nearest other set
/// cell. `None` when fewer than two cells are set.
pub fn empirical_nn_distance(m: &AdjacencyMatrix) -> Option<f64> {
    let index = RowIndex::from_matrix(m);
    if index.len() < 2 {
        return None;
    }
    let total: usize = m
        .ones()
        .map(|c| index.nearest(c, true).map(|(d, _)| d).unwrap_or(0))
        .sum();
    Some(total as f64 / index.len() as f64)
}
