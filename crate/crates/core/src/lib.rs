//! Reversible encoding of graph adjacency matrices as strings over the
//! five instructions `U`, `D`, `L`, `R`, `E`.
//!
//! A program runs on an `n x n` zero matrix with a pointer that starts at
//! the upper left cell. `U`/`D`/`L`/`R` move the pointer (clamped at the
//! border) and `E` sets the pointed cell. Every string is a valid program,
//! and [`encode_canonical`] picks one distinguished program per matrix.
//!
//! ```
//! use graphcode::{encode_canonical, execute, AdjacencyMatrix};
//!
//! let m = AdjacencyMatrix::complete(2, true).unwrap();
//! let w = encode_canonical(&m);
//! assert_eq!(w.to_string(), "EREDELE");
//! assert_eq!(execute(&w, 2, true).unwrap(), m);
//! ```

pub mod analysis;
pub mod datagen;
mod encode;
mod error;
mod instruction;
mod interp;
mod matrix;
mod rows;

pub use encode::encode_canonical;
pub use error::{Error, Position, Result};
pub use instruction::{Instruction, InstructionString};
pub use interp::{execute, push_moves, trace, Pointer};
pub use matrix::{AdjacencyMatrix, BinaryString, Cell};
