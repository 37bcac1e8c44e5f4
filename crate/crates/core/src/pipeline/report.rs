use std::fmt::Write as _;

use super::{ClassifierRun, ClusterOutcome, Ranking};
use crate::classifiers::ClassifierKind;
use crate::rouge::Metric;

/// `100 · (ranked − unranked) / unranked`; 0 when equal, `None` when only the
/// baseline is zero.
pub fn percent_change(unranked: f64, ranked: f64) -> Option<f64> {
    if ranked == unranked {
        Some(0.0)
    } else if unranked == 0.0 {
        None
    } else {
        Some(100.0 * (ranked - unranked) / unranked)
    }
}

/// Metric × classifier grids of mean ROUGE recall over the evaluated test
/// clusters. A cell is `None` when no test cluster has references.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentReport {
    pub metrics: Vec<Metric>,
    pub classifiers: Vec<ClassifierKind>,
    pub ranking: Ranking,
    pub unranked: Vec<Vec<Option<f64>>>,
    pub ranked: Vec<Vec<Option<f64>>>,
}

fn mean_recall(outcomes: &[ClusterOutcome], m: usize) -> Option<f64> {
    let recalls: Vec<f64> = outcomes
        .iter()
        .filter_map(|o| o.summary.rouge.get(m).map(|s| s.recall))
        .collect();
    (!recalls.is_empty()).then(|| recalls.iter().sum::<f64>() / recalls.len() as f64)
}

fn fmt_cell(v: Option<f64>, decimals: usize) -> String {
    v.map_or_else(|| "NA".to_owned(), |v| format!("{v:.decimals$}"))
}

impl ExperimentReport {
    pub fn from_runs(metrics: &[Metric], ranking: Ranking, runs: &[ClassifierRun]) -> Self {
        let grid = |pick: fn(&ClassifierRun) -> &[ClusterOutcome]| {
            (0..metrics.len())
                .map(|m| runs.iter().map(|r| mean_recall(pick(r), m)).collect())
                .collect()
        };
        ExperimentReport {
            metrics: metrics.to_vec(),
            classifiers: runs.iter().map(|r| r.classifier).collect(),
            ranking,
            unranked: grid(|r| &r.unranked),
            ranked: grid(|r| &r.ranked),
        }
    }

    pub fn percent_changes(&self) -> Vec<Vec<Option<f64>>> {
        self.unranked
            .iter()
            .zip(&self.ranked)
            .map(|(u, r)| {
                u.iter()
                    .zip(r)
                    .map(|(u, r)| match (u, r) {
                        (Some(u), Some(r)) => percent_change(*u, *r),
                        _ => None,
                    })
                    .collect()
            })
            .collect()
    }

    /// Three sections of rows `section,metric,<classifier>...`: the unranked
    /// run (`none`), the ranked run, and `percent_change`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("section,metric");
        for c in &self.classifiers {
            out.push(',');
            out.push_str(c.name());
        }
        out.push('\n');
        let sections = [
            (Ranking::None.name(), &self.unranked, 6),
            (self.ranking.name(), &self.ranked, 6),
            ("percent_change", &self.percent_changes(), 2),
        ];
        for (section, grid, decimals) in sections {
            for (metric, row) in self.metrics.iter().zip(grid.iter()) {
                let _ = write!(out, "{section},{}", metric.display_name());
                for &cell in row {
                    let _ = write!(out, ",{}", fmt_cell(cell, decimals));
                }
                out.push('\n');
            }
        }
        out
    }
}
