//! Labelled samples and the line-delimited JSON dataset file.
//!
//! One record per line, fields in this order:
//!
//! ```text
//! {"label":1,"n":5,"binary":"0110...","instructions":"DE...","seed":42,"points":[[x,y,z],...]}
//! ```
//!
//! `points` is optional; coordinates are written with 17 significant digits.

use std::io::{self, BufRead, Write};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Deserialize;

use crate::encode::encode_canonical;
use crate::error::{Error, Result};
use crate::instruction::InstructionString;
use crate::interp::execute;
use crate::matrix::{AdjacencyMatrix, BinaryString};

use super::clouds::{gen_class1, gen_class2, gen_class3, Point3};
use super::graph::points_to_graph;
use super::{GenParams, PointCloud3D};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    SingleWalk,
    TwoWalks,
    Torus,
}

impl GraphClass {
    pub const ALL: [GraphClass; 3] = [GraphClass::SingleWalk, GraphClass::TwoWalks, GraphClass::Torus];

    pub fn label(self) -> u8 {
        match self {
            GraphClass::SingleWalk => 1,
            GraphClass::TwoWalks => 2,
            GraphClass::Torus => 3,
        }
    }

    pub fn from_label(label: u8) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.label() == label)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DatasetSample {
    pub class: GraphClass,
    pub matrix: AdjacencyMatrix,
    pub binary: BinaryString,
    pub instructions: InstructionString,
    pub points: Option<PointCloud3D>,
    /// Seeds the generator that produced this sample on its own.
    pub seed: u64,
}

impl DatasetSample {
    pub fn label(&self) -> u8 {
        self.class.label()
    }
}

/// Per-sample seed, a pure function of `(seed, class, index)`.
pub fn sample_seed(seed: u64, class: GraphClass, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((u64::from(class.label()) << 32) ^ index);
    rng.next_u64()
}

pub fn generate_sample(class: GraphClass, seed: u64, params: &GenParams) -> Result<DatasetSample> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cloud = match class {
        GraphClass::SingleWalk => gen_class1(&mut rng, params),
        GraphClass::TwoWalks => gen_class2(&mut rng, params),
        GraphClass::Torus => gen_class3(&mut rng, params),
    };
    let matrix = points_to_graph(&cloud, params.percentile)?;
    Ok(DatasetSample {
        class,
        binary: matrix.flatten_binary(),
        instructions: encode_canonical(&matrix),
        matrix,
        points: Some(cloud),
        seed,
    })
}

/// `per_class` samples of each class, ordered by class then index.
pub fn gen_dataset(per_class: usize, params: &GenParams, seed: u64) -> Result<Vec<DatasetSample>> {
    if per_class == 0 {
        return Err(Error::InvalidParams("per_class must be at least 1"));
    }
    params.validate()?;
    let jobs: Vec<(GraphClass, u64)> = GraphClass::ALL
        .into_iter()
        .flat_map(|c| (0..per_class as u64).map(move |i| (c, i)))
        .collect();
    jobs.into_par_iter()
        .map(|(class, i)| generate_sample(class, sample_seed(seed, class, i), params))
        .collect()
}

fn write_float(out: &mut String, x: f64) {
    // 17 significant digits in scientific notation, which is valid JSON.
    out.push_str(&format!("{x:.16e}"));
}

/// Writes one record followed by a newline.
pub fn write_record<W: Write>(w: &mut W, sample: &DatasetSample, with_points: bool) -> io::Result<()> {
    let mut line = format!(
        "{{\"label\":{},\"n\":{},\"binary\":\"{}\",\"instructions\":\"{}\",\"seed\":{}",
        sample.label(),
        sample.matrix.n(),
        sample.binary,
        sample.instructions,
        sample.seed
    );
    if let (true, Some(cloud)) = (with_points, &sample.points) {
        line.push_str(",\"points\":[");
        for (i, p) in cloud.points().iter().enumerate() {
            if i > 0 {
                line.push(',');
            }
            line.push('[');
            for (k, x) in p.iter().enumerate() {
                if k > 0 {
                    line.push(',');
                }
                write_float(&mut line, *x);
            }
            line.push(']');
        }
        line.push(']');
    }
    line.push_str("}\n");
    w.write_all(line.as_bytes())
}

pub fn write_dataset<W: Write>(w: &mut W, samples: &[DatasetSample], with_points: bool) -> io::Result<()> {
    for s in samples {
        write_record(w, s, with_points)?;
    }
    Ok(())
}

/// One parsed line of a dataset file, before consistency checks.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetRecord {
    pub label: u8,
    pub n: usize,
    pub binary: String,
    pub instructions: String,
    pub seed: u64,
    #[serde(default)]
    pub points: Option<Vec<Point3>>,
}

impl DatasetRecord {
    /// Rebuilds the sample, checking that both encodings describe the same
    /// undirected matrix.
    pub fn into_sample(self, line: usize) -> Result<DatasetSample> {
        let bad = |message: String| Error::parse(line, 1, message);
        let class =
            GraphClass::from_label(self.label).ok_or_else(|| bad(format!("unknown label {}", self.label)))?;
        let binary: BinaryString = self.binary.parse().map_err(|e| bad(format!("binary: {e}")))?;
        let matrix = AdjacencyMatrix::unflatten_binary(&binary, self.n, false)
            .map_err(|e| bad(format!("binary: {e}")))?;
        let instructions: InstructionString = self
            .instructions
            .parse()
            .map_err(|e| bad(format!("instructions: {e}")))?;
        if execute(&instructions, self.n, false)? != matrix {
            return Err(bad("instructions and binary describe different graphs".into()));
        }
        if let Some(points) = &self.points {
            if points.len() != self.n {
                return Err(bad(format!("{} points for {} vertices", points.len(), self.n)));
            }
        }
        Ok(DatasetSample {
            class,
            matrix,
            binary,
            instructions,
            points: self.points.map(PointCloud3D::new),
            seed: self.seed,
        })
    }
}

/// Reads and validates every record. Blank lines are not allowed.
pub fn read_dataset<R: BufRead>(reader: R) -> Result<Vec<DatasetSample>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|e| Error::parse(line_no, 1, e.to_string()))?;
        let record: DatasetRecord = serde_json::from_str(&line)
            .map_err(|e| Error::parse(line_no, e.column().max(1), e.to_string()))?;
        out.push(record.into_sample(line_no)?);
    }
    Ok(out)
}
