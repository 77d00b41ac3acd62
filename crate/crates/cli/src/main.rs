use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use graphcode::analysis::{measure_length_stats, patch_flip, LengthStats};
use graphcode::datagen::{gen_dataset, write_dataset, GenParams};
use graphcode::{encode_canonical, execute, AdjacencyMatrix, Cell, InstructionString};

/// Encode graphs as instruction strings and run the accompanying experiments.
#[derive(Parser, Debug)]
#[command(name = "graphcode", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the canonical instruction string of a matrix file.
    Encode {
        /// Matrix text file, or `-` for standard input.
        matrix: PathBuf,
    },
    /// Run an instruction string and print the resulting matrix.
    Decode {
        /// Instruction string file, or `-` for standard input.
        string: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        directed: bool,
    },
    /// Generate the three-class geometric graph dataset.
    GenDataset {
        #[arg(long, default_value_t = 100)]
        per_class: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Edge threshold percentile of pairwise point distances.
        #[arg(long, default_value_t = 20.0)]
        percentile: f64,
        /// Leave the point coordinates out of the records.
        #[arg(long)]
        no_points: bool,
    },
    /// Measure canonical length and nearest-neighbour statistics.
    Stats {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rho: f64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the CSV header line first.
        #[arg(long)]
        header: bool,
    },
    /// Flip one cell and patch the canonical string locally.
    Patch {
        matrix: PathBuf,
        /// 1-based `row,col`.
        #[arg(long, value_parser = parse_cell)]
        flip: Cell,
    },
}

fn parse_cell(s: &str) -> Result<Cell, String> {
    let (r, c) = s.split_once(',').ok_or("expected ROW,COL")?;
    let r = r.trim().parse().map_err(|_| format!("invalid row {r:?}"))?;
    let c = c.trim().parse().map_err(|_| format!("invalid column {c:?}"))?;
    Ok(Cell::new(r, c))
}

enum Failure {
    /// Bad input or arguments; exit code 2.
    Usage(String),
    /// Anything else, e.g. I/O; exit code 1.
    Internal(String),
}

type CmdResult = Result<(), Failure>;

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn read_matrix(path: &Path) -> Result<AdjacencyMatrix, Failure> {
    let text = read_input(path)?;
    text.parse()
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str) -> CmdResult {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Failure::Internal(e.to_string()))
}

fn encode(path: &Path) -> CmdResult {
    let m = read_matrix(path)?;
    emit(&format!("{}\n", encode_canonical(&m)))
}

fn decode(path: &Path, n: usize, directed: bool) -> CmdResult {
    let text = read_input(path)?;
    let w: InstructionString = text
        .parse()
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let m = execute(&w, n, directed).map_err(|e| Failure::Usage(e.to_string()))?;
    emit(&m.to_text())
}

fn gen(per_class: usize, seed: u64, out: &Path, percentile: f64, no_points: bool) -> CmdResult {
    let params = GenParams {
        percentile,
        ..GenParams::default()
    };
    let samples = gen_dataset(per_class, &params, seed).map_err(|e| Failure::Usage(e.to_string()))?;

    // Write next to the target, then rename into place.
    let dir = match out.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let io_err = |e: io::Error| Failure::Internal(format!("{}: {e}", out.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    {
        let mut w = io::BufWriter::new(tmp.as_file_mut());
        write_dataset(&mut w, &samples, !no_points).map_err(io_err)?;
        w.flush().map_err(io_err)?;
    }
    tmp.persist(out).map_err(|e| io_err(e.error))?;
    Ok(())
}

fn stats(n: usize, rho: f64, samples: usize, seed: u64, header: bool) -> CmdResult {
    if !(rho > 0.0 && rho <= 1.0) {
        return Err(Failure::Usage(format!("--rho must lie in (0, 1], got {rho}")));
    }
    if n == 0 || samples == 0 {
        return Err(Failure::Usage("--n and --samples must be at least 1".into()));
    }
    let s = measure_length_stats(n, rho, samples, seed).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut text = String::new();
    if header {
        text.push_str(LengthStats::CSV_HEADER);
        text.push('\n');
    }
    text.push_str(&s.csv_row());
    text.push('\n');
    emit(&text)
}

fn patch(path: &Path, cell: Cell) -> CmdResult {
    let m = read_matrix(path)?;
    let w = encode_canonical(&m);
    let p = patch_flip(&m, &w, cell).map_err(|e| Failure::Usage(e.to_string()))?;
    emit(&format!(
        "{}\nlength_delta={}\nedit_distance={}\n",
        p.new_string, p.length_delta, p.edit_distance
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Encode { matrix } => encode(matrix),
        Command::Decode { string, n, directed } => decode(string, *n, *directed),
        Command::GenDataset {
            per_class,
            seed,
            out,
            percentile,
            no_points,
        } => gen(*per_class, *seed, out, *percentile, *no_points),
        Command::Stats {
            n,
            rho,
            samples,
            seed,
            header,
        } => stats(*n, *rho, *samples, *seed, *header),
        Command::Patch { matrix, flip } => patch(matrix, *flip),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("graphcode: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("graphcode: {msg}");
            ExitCode::from(1)
        }
    }
}
