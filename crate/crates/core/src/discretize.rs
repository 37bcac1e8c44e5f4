//! Binning of real-valued columns into small integer codes.
//!
//! A value maps to the number of cut points strictly below it, so a value
//! equal to a cut point lands in the lower bin. Values outside the fitted
//! range clamp to the edge bins.

use std::fmt;
use std::io::{BufRead, Write};
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    EqualWidth,
    #[default]
    EqualFrequency,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "equal_width" | "equal-width" => Ok(Strategy::EqualWidth),
            "equal_frequency" | "equal-frequency" => Ok(Strategy::EqualFrequency),
            other => Err(Error::config(format!(
                "unknown binning strategy `{other}` (expected equal_width or equal_frequency)"
            ))),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::EqualWidth => "equal_width",
            Strategy::EqualFrequency => "equal_frequency",
        })
    }
}

pub const DEFAULT_BINS: usize = 3;

/// Per-column cut points, each list strictly increasing.
#[derive(Clone, Debug, PartialEq)]
pub struct Binning {
    cuts: Vec<Vec<f64>>,
    strategy: Strategy,
    n_bins: usize,
}

impl Binning {
    pub fn cuts(&self) -> &[Vec<f64>] {
        &self.cuts
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn n_bins(&self) -> usize {
        self.n_bins
    }

    pub fn n_columns(&self) -> usize {
        self.cuts.len()
    }

    pub fn code(&self, column: usize, value: f64) -> usize {
        self.cuts[column].partition_point(|&c| c < value)
    }

    /// One line per column, space-separated cut points (empty line for a constant column).
    pub fn write_sidecar<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        for cuts in &self.cuts {
            let line: Vec<String> = cuts.iter().map(|c| c.to_string()).collect();
            writeln!(w, "{}", line.join(" "))?;
        }
        Ok(())
    }

    /// Reads the sidecar format. Strategy and bin count are not stored in it, so
    /// the caller supplies them.
    pub fn read_sidecar<R: BufRead>(
        r: R,
        source_name: &str,
        strategy: Strategy,
        n_bins: usize,
    ) -> Result<Self> {
        let mut cuts = Vec::new();
        for (i, line) in r.lines().enumerate() {
            let line_no = i as u64 + 1;
            let line = line.map_err(|e| Error::parse(source_name, line_no, e.to_string()))?;
            let column = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<f64>()
                        .ok()
                        .filter(|v| v.is_finite())
                        .ok_or_else(|| {
                            Error::parse(source_name, line_no, format!("bad cut point `{tok}`"))
                        })
                })
                .collect::<Result<Vec<_>>>()?;
            if column.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::parse(source_name, line_no, "cut points not strictly increasing"));
            }
            if column.len() + 1 > n_bins {
                return Err(Error::parse(source_name, line_no, "more cut points than bins allow"));
            }
            cuts.push(column);
        }
        Ok(Binning { cuts, strategy, n_bins })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut buf = Vec::new();
        self.write_sidecar(&mut buf).map_err(|e| Error::io(path, e))?;
        std::fs::write(path, buf).map_err(|e| Error::io(path, e))
    }
}

fn column_count(matrix: &[Vec<f64>]) -> Result<usize> {
    let width = matrix.first().map_or(0, Vec::len);
    if matrix.iter().any(|r| r.len() != width) {
        return Err(Error::config("matrix rows have differing lengths"));
    }
    Ok(width)
}

/// Linear-interpolation quantile of sorted data.
fn quantile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    let frac = pos - lo as f64;
    sorted[lo] + (sorted[hi] - sorted[lo]) * frac
}

pub fn fit_bins(matrix: &[Vec<f64>], n_bins: usize, strategy: Strategy) -> Result<Binning> {
    if n_bins < 2 {
        return Err(Error::config(format!("n_bins must be at least 2, got {n_bins}")));
    }
    if matrix.is_empty() {
        return Err(Error::config("cannot fit bins on an empty matrix"));
    }
    let width = column_count(matrix)?;
    if matrix.iter().flatten().any(|v| !v.is_finite()) {
        return Err(Error::domain("matrix contains non-finite values"));
    }

    let cuts = (0..width)
        .map(|c| {
            let mut column: Vec<f64> = matrix.iter().map(|r| r[c]).collect();
            column.sort_by(f64::total_cmp);
            let (min, max) = (column[0], column[column.len() - 1]);
            let mut cuts: Vec<f64> = (1..n_bins)
                .map(|k| match strategy {
                    Strategy::EqualWidth => min + k as f64 * (max - min) / n_bins as f64,
                    Strategy::EqualFrequency => quantile(&column, k as f64 / n_bins as f64),
                })
                .collect();
            cuts.dedup();
            // a cut at or above the maximum separates nothing
            cuts.retain(|&c| c < max);
            cuts
        })
        .collect();
    Ok(Binning { cuts, strategy, n_bins })
}

pub fn apply_bins(binning: &Binning, matrix: &[Vec<f64>]) -> Result<Vec<Vec<usize>>> {
    matrix
        .iter()
        .map(|row| {
            if row.len() != binning.n_columns() {
                return Err(Error::config(format!(
                    "row has {} columns, binning expects {}",
                    row.len(),
                    binning.n_columns()
                )));
            }
            row.iter()
                .enumerate()
                .map(|(c, &v)| {
                    if v.is_nan() {
                        Err(Error::domain("cannot bin NaN"))
                    } else {
                        Ok(binning.code(c, v))
                    }
                })
                .collect()
        })
        .collect()
}
