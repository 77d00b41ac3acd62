//! The five-symbol instruction alphabet and instruction strings.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Instruction {
    Up,
    Down,
    Left,
    Right,
    Edge,
}

impl Instruction {
    pub const ALL: [Instruction; 5] = [
        Instruction::Up,
        Instruction::Down,
        Instruction::Left,
        Instruction::Right,
        Instruction::Edge,
    ];

    pub fn symbol(self) -> char {
        match self {
            Instruction::Up => 'U',
            Instruction::Down => 'D',
            Instruction::Left => 'L',
            Instruction::Right => 'R',
            Instruction::Edge => 'E',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            'U' => Some(Instruction::Up),
            'D' => Some(Instruction::Down),
            'L' => Some(Instruction::Left),
            'R' => Some(Instruction::Right),
            'E' => Some(Instruction::Edge),
            _ => None,
        }
    }

    pub fn is_move(self) -> bool {
        self != Instruction::Edge
    }
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A program over `{U, D, L, R, E}`. Every such sequence is valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct InstructionString(Vec<Instruction>);

impl InstructionString {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn from_vec(instructions: Vec<Instruction>) -> Self {
        Self(instructions)
    }

    pub fn into_vec(self) -> Vec<Instruction> {
        self.0
    }

    pub fn push(&mut self, instruction: Instruction) {
        self.0.push(instruction);
    }

    pub fn push_n(&mut self, instruction: Instruction, count: usize) {
        self.0.extend(std::iter::repeat_n(instruction, count));
    }

    pub fn extend_from_slice(&mut self, instructions: &[Instruction]) {
        self.0.extend_from_slice(instructions);
    }

    pub fn edge_count(&self) -> usize {
        self.0.iter().filter(|i| **i == Instruction::Edge).count()
    }

    /// Parses the file form: the symbols on a single line, optionally
    /// followed by one terminating newline. Any other byte is rejected
    /// with its 1-based line and column.
    pub fn parse_text(text: &str) -> Result<Self> {
        let body = text
            .strip_suffix("\r\n")
            .or_else(|| text.strip_suffix('\n'))
            .unwrap_or(text);
        let mut out = Vec::with_capacity(body.len());
        for (idx, c) in body.chars().enumerate() {
            match Instruction::from_symbol(c) {
                Some(i) => out.push(i),
                None if c == '\n' => return Err(Error::parse(2, 1, "unexpected data after the first line")),
                None => {
                    return Err(Error::parse(
                        1,
                        idx + 1,
                        format!("invalid instruction {c:?}, expected one of U, D, L, R, E"),
                    ))
                }
            }
        }
        Ok(Self(out))
    }
}

impl Deref for InstructionString {
    type Target = [Instruction];

    fn deref(&self) -> &[Instruction] {
        &self.0
    }
}

impl From<Vec<Instruction>> for InstructionString {
    fn from(v: Vec<Instruction>) -> Self {
        Self(v)
    }
}

impl FromIterator<Instruction> for InstructionString {
    fn from_iter<I: IntoIterator<Item = Instruction>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl FromStr for InstructionString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_text(s)
    }
}

impl fmt::Display for InstructionString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.0 {
            write!(f, "{}", i.symbol())?;
        }
        Ok(())
    }
}
