//! Independent reference implementations used as test oracles. These are
//! deliberately naive and share no code with the library's algorithms.

#![allow(dead_code)]

use graphcode::{AdjacencyMatrix, Cell, Instruction};

/// Plain-array interpreter. 0-based internally.
pub fn naive_execute(program: &[Instruction], n: usize, directed: bool) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; n]; n];
    let (mut r, mut c) = (0usize, 0usize);
    for ins in program {
        match ins {
            Instruction::Up => r = r.saturating_sub(1),
            Instruction::Down => r = (r + 1).min(n - 1),
            Instruction::Left => c = c.saturating_sub(1),
            Instruction::Right => c = (c + 1).min(n - 1),
            Instruction::Edge => {
                m[r][c] = true;
                if !directed {
                    m[c][r] = true;
                }
            }
        }
    }
    m
}

pub fn grid(m: &AdjacencyMatrix) -> Vec<Vec<bool>> {
    m.cells().chunks(m.n()).map(|r| r.to_vec()).collect()
}

/// Greedy encoder by exhaustive scan of the whole scratch matrix per step.
pub fn brute_force_encode(m: &AdjacencyMatrix) -> String {
    let n = m.n() as i64;
    let mut g = grid(m);
    let (mut pr, mut pc) = (0i64, 0i64);
    let mut out = String::new();
    loop {
        let mut best: Option<(i64, i64, i64, i64)> = None; // (dist, dr signed, col, row)
        for r in 0..n {
            for c in 0..n {
                if g[r as usize][c as usize] {
                    let key = ((r - pr).abs() + (c - pc).abs(), r - pr, c, r);
                    if best.is_none_or(|b| key < b) {
                        best = Some(key);
                    }
                }
            }
        }
        let Some((_, _, qc, qr)) = best else { break };
        let vert = if qr < pr { 'U' } else { 'D' };
        out.extend(std::iter::repeat_n(vert, (qr - pr).unsigned_abs() as usize));
        let horiz = if qc < pc { 'L' } else { 'R' };
        out.extend(std::iter::repeat_n(horiz, (qc - pc).unsigned_abs() as usize));
        out.push('E');
        g[qr as usize][qc as usize] = false;
        if !m.is_directed() {
            g[qc as usize][qr as usize] = false;
        }
        pr = qr;
        pc = qc;
    }
    out
}

/// All-pairs nearest-neighbour mean over set cells.
pub fn brute_force_nn(m: &AdjacencyMatrix) -> Option<f64> {
    let cells: Vec<Cell> = m.ones().collect();
    if cells.len() < 2 {
        return None;
    }
    let total: usize = cells
        .iter()
        .enumerate()
        .map(|(i, a)| {
            cells
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, b)| a.row.abs_diff(b.row) + a.col.abs_diff(b.col))
                .min()
                .unwrap()
        })
        .sum();
    Some(total as f64 / cells.len() as f64)
}

/// Full-table Wagner-Fischer.
pub fn full_table_levenshtein<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    let mut d = vec![vec![0usize; b.len() + 1]; a.len() + 1];
    for (i, row) in d.iter_mut().enumerate() {
        row[0] = i;
    }
    for (j, cell) in d[0].iter_mut().enumerate() {
        *cell = j;
    }
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            let sub = d[i - 1][j - 1] + usize::from(a[i - 1] != b[j - 1]);
            d[i][j] = sub.min(d[i - 1][j] + 1).min(d[i][j - 1] + 1);
        }
    }
    d[a.len()][b.len()]
}

/// Pointer positions after each prefix of `program`, via the naive rules.
pub fn naive_path(program: &[Instruction], n: usize) -> Vec<(usize, usize)> {
    let (mut r, mut c) = (1usize, 1usize);
    let mut out = vec![(r, c)];
    for ins in program {
        match ins {
            Instruction::Up if r > 1 => r -= 1,
            Instruction::Down if r < n => r += 1,
            Instruction::Left if c > 1 => c -= 1,
            Instruction::Right if c < n => c += 1,
            _ => {}
        }
        out.push((r, c));
    }
    out
}

pub fn flipped(m: &AdjacencyMatrix, cell: Cell) -> AdjacencyMatrix {
    let mut out = m.clone();
    if m.get(cell) {
        out.remove(cell).unwrap();
    } else {
        out.insert(cell).unwrap();
    }
    out
}
