//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.
//!
//! Run with `cargo test -p graphcode-core --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{brute_force_nn, flipped, naive_execute, naive_path};
use graphcode::analysis::{
    expected_length, expected_nn_distance, levenshtein, measure_length_stats, patch_insert_edge,
    patch_remove_edge, sample_rng,
};
use graphcode::datagen::{gen_dataset, off_diagonal_density, GenParams, GraphClass};
use graphcode::{encode_canonical, execute, AdjacencyMatrix, Cell, Instruction};
use rand::Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

const DENSITIES: [f64; 3] = [0.05, 0.2, 0.5];

fn corpus() -> Vec<AdjacencyMatrix> {
    let mut rng = sample_rng(20_240_501, 0);
    (0..1000)
        .map(|i| {
            let n = rng.random_range(2..=64);
            let rho = DENSITIES[i % 3];
            let directed = (i / 3) % 2 == 0;
            AdjacencyMatrix::random(&mut rng, n, rho, directed).unwrap()
        })
        .collect()
}

fn round_trip() -> Outcome {
    let corpus = corpus();
    let start = Instant::now();
    let mut failures = 0;
    for m in &corpus {
        let w = encode_canonical(m);
        let back = execute(&w, m.n(), m.is_directed()).unwrap();
        if back != *m || naive_execute(&w, m.n(), m.is_directed()) != common::grid(m) {
            failures += 1;
        }
    }
    let elapsed = start.elapsed();
    let directed = corpus.iter().filter(|m| m.is_directed()).count();
    outcome(
        failures == 0 && elapsed < Duration::from_secs(10),
        format!(
            "{} matrices ({} directed, {} undirected), {} failures, {:.2?} (limit 10s)",
            corpus.len(),
            directed,
            corpus.len() - directed,
            failures,
            elapsed
        ),
    )
}

fn worst_case_length() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for n in [2, 4, 8, 16] {
        let len = encode_canonical(&AdjacencyMatrix::complete(n, true).unwrap()).len();
        ok &= len == 2 * n * n - 1;
        lines.push(format!("n={n}: {len}/{}", 2 * n * n - 1));
    }
    outcome(ok, lines.join(", "))
}

fn length_bound() -> Outcome {
    let corpus = corpus();
    let mut over = 0;
    let mut count_mismatch = 0;
    let mut max_ratio: f64 = 0.0;
    for m in &corpus {
        let w = encode_canonical(m);
        let bound = 2 * m.n() * m.n() - 1;
        if w.len() > bound {
            over += 1;
        }
        max_ratio = max_ratio.max(w.len() as f64 / bound as f64);
        if w.edge_count() != m.count_edges() {
            count_mismatch += 1;
        }
    }
    outcome(
        over == 0 && count_mismatch == 0,
        format!(
            "{} over 2n²-1, {} E-count mismatches, max |I_G|/(2n²-1) = {:.3}",
            over, count_mismatch, max_ratio
        ),
    )
}

fn nn_distance() -> Outcome {
    let start = Instant::now();
    let stats = measure_length_stats(512, 0.01, 20, 7).unwrap();
    let elapsed = start.elapsed();
    let predicted = expected_nn_distance(0.01).unwrap();
    let got = stats.mean_nn_distance.unwrap_or(f64::NAN);
    let rel = (got - predicted).abs() / predicted;

    // Spot-check the fast NN search against the all-pairs oracle on one sample.
    let m = AdjacencyMatrix::random(&mut sample_rng(7, 0), 512, 0.01, true).unwrap();
    let oracle = brute_force_nn(&m).unwrap();
    let fast = graphcode::analysis::empirical_nn_distance(&m).unwrap();

    outcome(
        rel <= 0.10 && elapsed < Duration::from_secs(60) && (oracle - fast).abs() < 1e-9,
        format!(
            "mean δ = {got:.4} vs {predicted:.4} (rel err {:.2}%, limit 10%), oracle agrees on sample 0, {elapsed:.2?} (limit 60s)",
            rel * 100.0
        ),
    )
}

fn length_regime() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for rho in [0.005, 0.01] {
        let stats = measure_length_stats(512, rho, 20, 11).unwrap();
        let ratio = stats.mean_length / expected_length(512, rho).unwrap();
        ok &= (1.0..=3.0).contains(&ratio);
        parts.push(format!("rho={rho}: ratio {ratio:.3}"));
    }
    outcome(ok, format!("{} (band [1.0, 3.0])", parts.join(", ")))
}

fn compression() -> Outcome {
    let n = 256;
    let stats = measure_length_stats(n, 0.01, 20, 13).unwrap();
    let frac = stats.mean_length / (n * n) as f64;
    outcome(
        frac < 0.25,
        format!(
            "mean |I_G| = {:.1} = {frac:.4}·n² (limit 0.25·n², binary is n² = {})",
            stats.mean_length,
            n * n
        ),
    )
}

/// Writes of the program: `(E index, cell)` pairs along the naive path.
fn writes(w: &[Instruction], n: usize) -> Vec<(usize, (usize, usize))> {
    let path = naive_path(w, n);
    (0..w.len())
        .filter(|&k| w[k] == Instruction::Edge)
        .map(|k| (k, path[k]))
        .collect()
}

fn edit_locality() -> Outcome {
    let mut rng = sample_rng(99, 0);
    let (mut inserts, mut removes, mut bad) = (0, 0, Vec::new());
    for trial in 0..500 {
        let n = rng.random_range(2..=32);
        let rho = DENSITIES[trial % 3];
        let directed = rng.random_bool(0.5);
        let m = AdjacencyMatrix::random(&mut rng, n, rho, directed).unwrap();
        let cell = Cell::new(rng.random_range(1..=n), rng.random_range(1..=n));
        let w = encode_canonical(&m);
        let target = flipped(&m, cell);

        if !m.get(cell) {
            inserts += 1;
            let delta = naive_path(&w, n)
                .iter()
                .map(|&(r, c)| r.abs_diff(cell.row) + c.abs_diff(cell.col))
                .min()
                .unwrap();
            let p = patch_insert_edge(&m, &w, cell).unwrap();
            let ok = p.length_delta == 2 * delta as isize + 1
                && execute(&p.new_string, n, directed).unwrap() == target
                && levenshtein(&w, &p.new_string) <= 2 * delta + 1;
            if !ok {
                bad.push(format!("insert trial {trial}"));
            }
        } else {
            removes += 1;
            // Independent reconstruction of the replaced segment.
            let ws = writes(&w, n);
            let hit =
                |c: (usize, usize)| c == (cell.row, cell.col) || (!directed && c == (cell.col, cell.row));
            let slot = ws.iter().position(|&(_, c)| hit(c)).unwrap();
            let (seg_start, from) = if slot == 0 {
                (0, (1, 1))
            } else {
                (ws[slot - 1].0 + 1, ws[slot - 1].1)
            };
            let (seg_end, replacement) = match ws.get(slot + 1) {
                Some(&(k, to)) => (k, from.0.abs_diff(to.0) + from.1.abs_diff(to.1)),
                None => (w.len(), 0),
            };
            let segment = seg_end - seg_start;

            let p = patch_remove_edge(&m, &w, cell).unwrap();
            let ok = p.length_delta <= 0
                && p.new_string.len() + segment == w.len() + replacement
                && execute(&p.new_string, n, directed).unwrap() == target
                && levenshtein(&w, &p.new_string) <= segment + replacement;
            if !ok {
                bad.push(format!("remove trial {trial}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "500 flips ({inserts} 0→1, {removes} 1→0), {} violations {:?}",
            bad.len(),
            bad
        ),
    )
}

fn dataset_properties() -> Outcome {
    let params = GenParams::default();
    let ds = gen_dataset(100, &params, 1).unwrap();
    let mut problems = Vec::new();
    let (mut lo, mut hi): (f64, f64) = (1.0, 0.0);
    for (i, s) in ds.iter().enumerate() {
        let m = &s.matrix;
        if !m.is_symmetric() || !m.has_zero_diagonal() || m.is_directed() {
            problems.push(format!("#{i} shape"));
        }
        if execute(&s.instructions, m.n(), false).unwrap() != *m
            || AdjacencyMatrix::unflatten_binary(&s.binary, m.n(), false).unwrap() != *m
            || s.instructions != encode_canonical(m)
        {
            problems.push(format!("#{i} encodings"));
        }
        let d = off_diagonal_density(m);
        lo = lo.min(d);
        hi = hi.max(d);
        if !(0.15..=0.22).contains(&d) {
            problems.push(format!("#{i} (label {}, n={}) density {d:.3}", s.label(), m.n()));
        }
        if s.class == GraphClass::Torus {
            for p in s.points.as_ref().unwrap().points() {
                let ring = (p[0].hypot(p[1]) - params.torus_major).powi(2) + p[2] * p[2];
                if (ring - params.torus_minor.powi(2)).abs() > 1e-9 {
                    problems.push(format!("#{i} off torus"));
                    break;
                }
            }
        }
    }
    let per_class: Vec<usize> = GraphClass::ALL
        .iter()
        .map(|c| ds.iter().filter(|s| s.class == *c).count())
        .collect();
    outcome(
        problems.is_empty() && ds.len() == 300 && per_class == [100, 100, 100],
        format!(
            "{} samples {:?}, density range [{lo:.3}, {hi:.3}] (band [0.15, 0.22]), {} problems {:?}",
            ds.len(),
            per_class,
            problems.len(),
            problems
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("round-trip", round_trip),
        ("worst-case length", worst_case_length),
        ("length bound", length_bound),
        ("nearest-neighbour distance", nn_distance),
        ("asymptotic length regime", length_regime),
        ("compression", compression),
        ("edit locality", edit_locality),
        ("dataset properties", dataset_properties),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let o = run();
        println!(
            "[{}] {name}: {} ({:.2?})",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed()
        );
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
