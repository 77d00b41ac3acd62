//! Dense binary adjacency matrices, their row-major binary flattening and
//! the plain-text matrix form.
//!
//! All public indices are 1-based: cell `(1, 1)` is the upper left corner.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};

/// A matrix cell, or equivalently a pointer position. 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const ORIGIN: Cell = Cell { row: 1, col: 1 };

    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn transpose(self) -> Cell {
        Cell::new(self.col, self.row)
    }

    pub fn manhattan(self, other: Cell) -> usize {
        self.row.abs_diff(other.row) + self.col.abs_diff(other.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdjacencyMatrix {
    n: usize,
    directed: bool,
    cells: Vec<bool>,
}

impl AdjacencyMatrix {
    pub fn zeros(n: usize, directed: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        Ok(Self {
            n,
            directed,
            cells: vec![false; n * n],
        })
    }

    /// Every cell set, self-loops included.
    pub fn complete(n: usize, directed: bool) -> Result<Self> {
        let mut m = Self::zeros(n, directed)?;
        m.cells.fill(true);
        Ok(m)
    }

    /// Builds a matrix from row-major cells, rejecting asymmetric content
    /// when `directed` is false.
    pub fn from_cells(n: usize, directed: bool, cells: Vec<bool>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if cells.len() != n * n {
            return Err(Error::ShapeMismatch {
                expected: n * n,
                actual: cells.len(),
            });
        }
        let m = Self { n, directed, cells };
        if let Some(c) = m.first_asymmetry() {
            return Err(Error::Asymmetric {
                row: c.row,
                col: c.col,
            });
        }
        Ok(m)
    }

    /// Sets each listed cell (and its transpose when undirected).
    pub fn from_edges(n: usize, directed: bool, edges: &[(usize, usize)]) -> Result<Self> {
        let mut m = Self::zeros(n, directed)?;
        for &(row, col) in edges {
            m.insert(Cell::new(row, col))?;
        }
        Ok(m)
    }

    /// I.i.d. Bernoulli(`rho`) cells. Undirected matrices draw the upper
    /// triangle (diagonal included) and mirror it.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize, rho: f64, directed: bool) -> Result<Self> {
        if !(0.0..=1.0).contains(&rho) {
            return Err(Error::DensityOutOfRange(rho));
        }
        let mut m = Self::zeros(n, directed)?;
        for r in 0..n {
            let start = if directed { 0 } else { r };
            for c in start..n {
                if rng.random_bool(rho) {
                    m.cells[r * n + c] = true;
                    if !directed {
                        m.cells[c * n + r] = true;
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn contains(&self, cell: Cell) -> bool {
        (1..=self.n).contains(&cell.row) && (1..=self.n).contains(&cell.col)
    }

    pub fn check_cell(&self, cell: Cell) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            Err(Error::CellOutOfRange {
                row: cell.row,
                col: cell.col,
                n: self.n,
            })
        }
    }

    #[inline]
    fn index(&self, cell: Cell) -> usize {
        (cell.row - 1) * self.n + (cell.col - 1)
    }

    /// Panics if the cell is out of range.
    pub fn get(&self, cell: Cell) -> bool {
        assert!(self.contains(cell), "cell {cell} out of range for n={}", self.n);
        self.cells[self.index(cell)]
    }

    /// Sets a cell to 1, plus its transpose on undirected matrices.
    pub fn insert(&mut self, cell: Cell) -> Result<()> {
        self.write(cell, true)
    }

    /// Clears a cell, plus its transpose on undirected matrices.
    pub fn remove(&mut self, cell: Cell) -> Result<()> {
        self.write(cell, false)
    }

    fn write(&mut self, cell: Cell, value: bool) -> Result<()> {
        self.check_cell(cell)?;
        let i = self.index(cell);
        self.cells[i] = value;
        if !self.directed {
            let t = self.index(cell.transpose());
            self.cells[t] = value;
        }
        Ok(())
    }

    pub(crate) fn set_unchecked(&mut self, cell: Cell) {
        let i = self.index(cell);
        self.cells[i] = true;
        if !self.directed {
            let t = self.index(cell.transpose());
            self.cells[t] = true;
        }
    }

    /// Row-major cell values.
    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    /// All set cells in row-major order. On undirected matrices both
    /// `(i, j)` and `(j, i)` are reported.
    pub fn ones(&self) -> impl Iterator<Item = Cell> + '_ {
        let n = self.n;
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, v)| **v)
            .map(move |(i, _)| Cell::new(i / n + 1, i % n + 1))
    }

    pub fn ones_count(&self) -> usize {
        self.cells.iter().filter(|v| **v).count()
    }

    /// Directed: number of set cells. Undirected: number of distinct
    /// unordered pairs, with self-loops counted once.
    pub fn count_edges(&self) -> usize {
        if self.directed {
            self.ones_count()
        } else {
            self.ones().filter(|c| c.row <= c.col).count()
        }
    }

    pub fn is_null(&self) -> bool {
        !self.cells.iter().any(|v| *v)
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    fn first_asymmetry(&self) -> Option<Cell> {
        if self.directed {
            return None;
        }
        let n = self.n;
        (0..n)
            .flat_map(|r| (0..n).map(move |c| (r, c)))
            .find(|&(r, c)| self.cells[r * n + c] != self.cells[c * n + r])
            .map(|(r, c)| Cell::new(r + 1, c + 1))
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.n).all(|i| !self.cells[i * self.n + i])
    }

    /// Row-major flattening, `n²` symbols long.
    pub fn flatten_binary(&self) -> BinaryString {
        BinaryString(self.cells.clone())
    }

    pub fn unflatten_binary(b: &BinaryString, n: usize, directed: bool) -> Result<Self> {
        Self::from_cells(n, directed, b.0.clone())
    }

    /// Renders the text form: a header line `N directed|undirected`
    /// followed by `N` rows of `0`/`1`, each newline-terminated.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(16 + self.n * (self.n + 1));
        s.push_str(&self.n.to_string());
        s.push(' ');
        s.push_str(if self.directed { "directed" } else { "undirected" });
        s.push('\n');
        for row in self.cells.chunks(self.n) {
            s.extend(row.iter().map(|v| if *v { '1' } else { '0' }));
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));

        let (_, header) = lines.next().unwrap_or((1, ""));
        let header = header.strip_suffix('\r').unwrap_or(header);
        let (n, directed) = parse_header(header)?;

        let mut cells = Vec::with_capacity(n * n);
        for row in 0..n {
            let line_no = row + 2;
            let line = match lines.next() {
                Some((_, l)) => l.strip_suffix('\r').unwrap_or(l),
                None => {
                    return Err(Error::parse(
                        line_no,
                        1,
                        format!("expected {n} matrix rows, found {row}"),
                    ))
                }
            };
            let mut width = 0;
            for (col, c) in line.chars().enumerate() {
                match c {
                    '0' | '1' if col < n => cells.push(c == '1'),
                    '0' | '1' => {
                        return Err(Error::parse(
                            line_no,
                            col + 1,
                            format!("row is longer than {n} cells"),
                        ))
                    }
                    other => {
                        return Err(Error::parse(
                            line_no,
                            col + 1,
                            format!("invalid cell {other:?}, expected '0' or '1'"),
                        ))
                    }
                }
                width += 1;
            }
            if width < n {
                return Err(Error::parse(
                    line_no,
                    width + 1,
                    format!("row has {width} cells, expected {n}"),
                ));
            }
        }
        // Only a single terminating newline may follow the last row.
        if let Some((line_no, rest)) = lines.next() {
            if !rest.is_empty() {
                return Err(Error::parse(
                    line_no,
                    1,
                    "unexpected data after the last matrix row",
                ));
            }
            if lines.next().is_some() {
                return Err(Error::parse(line_no, 1, "unexpected blank line after the matrix"));
            }
        }

        match Self::from_cells(n, directed, cells) {
            Err(Error::Asymmetric { row, col }) => Err(Error::parse(
                row + 1,
                col,
                format!("undirected matrix is not symmetric at ({row}, {col})"),
            )),
            other => other,
        }
    }
}

fn parse_header(header: &str) -> Result<(usize, bool)> {
    let mut parts = header.splitn(2, ' ');
    let size = parts.next().unwrap_or("");
    if size.is_empty() {
        return Err(Error::parse(
            1,
            1,
            "expected a header of the form \"N directed|undirected\"",
        ));
    }
    if let Some(i) = size.find(|c: char| !c.is_ascii_digit()) {
        return Err(Error::parse(1, i + 1, "matrix size must be a decimal integer"));
    }
    let n: usize = size
        .parse()
        .map_err(|_| Error::parse(1, 1, "matrix size is too large"))?;
    if n == 0 {
        return Err(Error::parse(1, 1, "matrix size must be at least 1"));
    }
    let kind_col = size.len() + 2;
    let directed = match parts.next() {
        Some("directed") => true,
        Some("undirected") => false,
        Some(_) => {
            return Err(Error::parse(
                1,
                kind_col,
                "expected \"directed\" or \"undirected\"",
            ))
        }
        None => {
            return Err(Error::parse(
                1,
                size.len() + 1,
                "missing \"directed\" or \"undirected\"",
            ))
        }
    };
    Ok((n, directed))
}

impl FromStr for AdjacencyMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_text(s)
    }
}

impl fmt::Display for AdjacencyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The row-major `0`/`1` flattening of a matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryString(Vec<bool>);

impl BinaryString {
    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for BinaryString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::parse(1, i + 1, format!("invalid binary symbol {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryString)
    }
}

impl fmt::Display for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            f.write_str(if *b { "1" } else { "0" })?;
        }
        Ok(())
    }
}
