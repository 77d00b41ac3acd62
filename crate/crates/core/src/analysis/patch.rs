//! Local string edits that follow a single-cell flip of the matrix.
//!
//! Setting a cell splices a detour into the program at the visited position
//! closest to the cell: walk there, `E`, walk back. A detour of Manhattan
//! length `d` adds exactly `2d + 1` instructions.
//!
//! Clearing a cell drops its `E` and replaces everything between the
//! previous and next `E` with a shortest walk between the cells those two
//! instructions write. The program never grows.

use crate::analysis::levenshtein::levenshtein;
use crate::error::{Error, Result};
use crate::instruction::{Instruction, InstructionString};
use crate::interp::{execute, push_moves, trace};
use crate::matrix::{AdjacencyMatrix, Cell};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatchResult {
    pub new_string: InstructionString,
    pub length_delta: isize,
    pub edit_distance: usize,
    /// Manhattan distance of the inserted detour. `None` for removals.
    pub detour: Option<usize>,
}

impl PatchResult {
    fn new(old: &InstructionString, new_string: InstructionString, detour: Option<usize>) -> Self {
        PatchResult {
            length_delta: new_string.len() as isize - old.len() as isize,
            edit_distance: levenshtein(old, &new_string),
            new_string,
            detour,
        }
    }
}

fn check_program(m: &AdjacencyMatrix, w: &InstructionString) -> Result<()> {
    if execute(w, m.n(), m.is_directed())? == *m {
        Ok(())
    } else {
        Err(Error::StringMismatch)
    }
}

/// Sets `cell` (0 → 1) by splicing a detour into `w`, which must build `m`.
///
/// The detour starts from the first visit of the closest pointer position
/// on `w`'s path; earlier positions win distance ties.
pub fn patch_insert_edge(m: &AdjacencyMatrix, w: &InstructionString, cell: Cell) -> Result<PatchResult> {
    m.check_cell(cell)?;
    if m.get(cell) {
        return Err(Error::CellAlreadySet {
            row: cell.row,
            col: cell.col,
        });
    }
    check_program(m, w)?;

    let path = trace(w, m.n());
    let (at, anchor) = path
        .iter()
        .copied()
        .enumerate()
        .min_by_key(|&(k, c)| (c.manhattan(cell), k))
        .expect("trace is never empty");
    let detour = anchor.manhattan(cell);

    let mut out = Vec::with_capacity(w.len() + 2 * detour + 1);
    out.extend_from_slice(&w[..at]);
    push_moves(&mut out, anchor, cell);
    out.push(Instruction::Edge);
    push_moves(&mut out, cell, anchor);
    out.extend_from_slice(&w[at..]);

    Ok(PatchResult::new(w, out.into(), Some(detour)))
}

/// Clears `cell` (1 → 0) by removing the single `E` that writes it.
///
/// When that `E` is the first one, the start cell `(1, 1)` stands in for
/// the previous anchor; when it is the last one, the program is cut right
/// after the previous `E`.
pub fn patch_remove_edge(m: &AdjacencyMatrix, w: &InstructionString, cell: Cell) -> Result<PatchResult> {
    m.check_cell(cell)?;
    if !m.get(cell) {
        return Err(Error::CellNotSet {
            row: cell.row,
            col: cell.col,
        });
    }
    check_program(m, w)?;

    let path = trace(w, m.n());
    let edges: Vec<usize> = (0..w.len()).filter(|&k| w[k] == Instruction::Edge).collect();
    let hits = |k: &usize| {
        let c = path[*k];
        c == cell || (!m.is_directed() && c == cell.transpose())
    };
    let mut targeting = edges.iter().enumerate().filter(|(_, k)| hits(k));
    let (slot, &removed) = targeting.next().ok_or(Error::StringMismatch)?;
    if targeting.next().is_some() {
        return Err(Error::DuplicateEdgeInstruction {
            row: cell.row,
            col: cell.col,
        });
    }
    debug_assert_eq!(w[removed], Instruction::Edge);

    let (start, from) = match slot.checked_sub(1).map(|s| edges[s]) {
        Some(prev) => (prev + 1, path[prev]),
        None => (0, Cell::ORIGIN),
    };

    let mut out = Vec::with_capacity(w.len());
    out.extend_from_slice(&w[..start]);
    if let Some(&next) = edges.get(slot + 1) {
        push_moves(&mut out, from, path[next]);
        out.extend_from_slice(&w[next..]);
    }

    Ok(PatchResult::new(w, out.into(), None))
}

/// Applies whichever patch matches the current value of `cell`.
pub fn patch_flip(m: &AdjacencyMatrix, w: &InstructionString, cell: Cell) -> Result<PatchResult> {
    m.check_cell(cell)?;
    if m.get(cell) {
        patch_remove_edge(m, w, cell)
    } else {
        patch_insert_edge(m, w, cell)
    }
}
