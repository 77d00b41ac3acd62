//! Canonical greedy encoder.
//!
//! Starting at `(1, 1)`, repeatedly walk to the nearest remaining set cell
//! (Manhattan distance; ties go to the smallest row, then the smallest
//! column), emitting vertical moves, then horizontal moves, then `E`. The
//! visited cell is cleared from a scratch copy, together with its transpose
//! on undirected matrices, until nothing is left.

use crate::instruction::{Instruction, InstructionString};
use crate::interp::push_moves;
use crate::matrix::{AdjacencyMatrix, Cell};
use crate::rows::RowIndex;

pub fn encode_canonical(m: &AdjacencyMatrix) -> InstructionString {
    let mut remaining = RowIndex::from_matrix(m);
    let mut out = Vec::new();
    let mut pointer = Cell::ORIGIN;

    while let Some((_, target)) = remaining.nearest(pointer, false) {
        push_moves(&mut out, pointer, target);
        out.push(Instruction::Edge);
        remaining.remove(target);
        if !m.is_directed() {
            remaining.remove(target.transpose());
        }
        pointer = target;
    }
    debug_assert!(remaining.is_empty());
    out.into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::execute;

    fn encode(m: &AdjacencyMatrix) -> String {
        encode_canonical(m).to_string()
    }

    #[test]
    fn null_matrix_encodes_to_empty_string() {
        assert_eq!(encode(&AdjacencyMatrix::zeros(4, true).unwrap()), "");
        assert_eq!(encode(&AdjacencyMatrix::zeros(4, false).unwrap()), "");
    }

    #[test]
    fn complete_directed_2x2() {
        let m = AdjacencyMatrix::complete(2, true).unwrap();
        assert_eq!(encode(&m), "EREDELE");
    }

    #[test]
    fn undirected_tie_prefers_upper_row() {
        let m = AdjacencyMatrix::from_edges(3, false, &[(1, 3)]).unwrap();
        assert_eq!(encode(&m), "RRE");
    }

    #[test]
    fn signed_row_difference_breaks_ties() {
        // From (2,1): (1,3) and (3,3) are both at distance 3; the row above wins.
        let m = AdjacencyMatrix::from_edges(3, true, &[(2, 1), (1, 3), (3, 3)]).unwrap();
        assert_eq!(encode(&m), "DEURREDDE");
    }

    #[test]
    fn column_breaks_remaining_ties() {
        // From (2,3): (3,2) and (3,4) tie on distance and row; the left column wins.
        let m = AdjacencyMatrix::from_edges(4, true, &[(2, 3), (3, 2), (3, 4)]).unwrap();
        assert_eq!(encode(&m), "DRREDLERRE");
    }

    #[test]
    fn undirected_self_loop() {
        let m = AdjacencyMatrix::from_edges(3, false, &[(2, 2)]).unwrap();
        let w = encode_canonical(&m);
        assert_eq!(w.to_string(), "DRE");
        assert_eq!(execute(&w, 3, false).unwrap(), m);
    }

    #[test]
    fn complete_directed_hits_upper_bound() {
        for n in 1..=6 {
            let m = AdjacencyMatrix::complete(n, true).unwrap();
            assert_eq!(encode_canonical(&m).len(), 2 * n * n - 1);
        }
    }
}
