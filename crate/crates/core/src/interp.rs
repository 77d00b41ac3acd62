//! Interpreter for instruction strings.
//!
//! Execution starts from the all-zero matrix with the pointer at `(1, 1)`.
//! Moves that would leave the matrix are no-ops; `E` sets the pointed cell
//! (and its transpose on undirected matrices).

use crate::error::Result;
use crate::instruction::Instruction;
use crate::matrix::{AdjacencyMatrix, Cell};

/// Pointer into an `n x n` matrix. Always within `[1, n]²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pointer {
    cell: Cell,
    n: usize,
}

impl Pointer {
    pub fn new(n: usize) -> Self {
        debug_assert!(n >= 1);
        Pointer {
            cell: Cell::ORIGIN,
            n,
        }
    }

    pub fn cell(&self) -> Cell {
        self.cell
    }

    /// Applies a move instruction with border clamping. `Edge` leaves the
    /// pointer where it is.
    pub fn step(&mut self, instruction: Instruction) {
        let c = &mut self.cell;
        match instruction {
            Instruction::Up if c.row > 1 => c.row -= 1,
            Instruction::Down if c.row < self.n => c.row += 1,
            Instruction::Left if c.col > 1 => c.col -= 1,
            Instruction::Right if c.col < self.n => c.col += 1,
            _ => {}
        }
    }
}

/// Runs `program` on a fresh `n x n` matrix. Fails only when `n == 0`.
pub fn execute(program: &[Instruction], n: usize, directed: bool) -> Result<AdjacencyMatrix> {
    let mut m = AdjacencyMatrix::zeros(n, directed)?;
    let mut p = Pointer::new(n);
    for &ins in program {
        if ins == Instruction::Edge {
            m.set_unchecked(p.cell());
        } else {
            p.step(ins);
        }
    }
    Ok(m)
}

/// Pointer positions visited while running `program`: element `k` is the
/// position after the first `k` instructions, so the result has
/// `program.len() + 1` entries. The `E` at index `k` writes cell `trace[k]`.
pub fn trace(program: &[Instruction], n: usize) -> Vec<Cell> {
    let mut p = Pointer::new(n.max(1));
    let mut out = Vec::with_capacity(program.len() + 1);
    out.push(p.cell());
    for &ins in program {
        p.step(ins);
        out.push(p.cell());
    }
    out
}

/// Appends a shortest move sequence from `from` to `to`: all vertical
/// moves first, then all horizontal moves.
pub fn push_moves(out: &mut Vec<Instruction>, from: Cell, to: Cell) {
    let vertical = if to.row < from.row {
        Instruction::Up
    } else {
        Instruction::Down
    };
    out.extend(std::iter::repeat_n(vertical, from.row.abs_diff(to.row)));
    let horizontal = if to.col < from.col {
        Instruction::Left
    } else {
        Instruction::Right
    };
    out.extend(std::iter::repeat_n(horizontal, from.col.abs_diff(to.col)));
}
