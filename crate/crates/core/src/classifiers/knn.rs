use super::{argmax_toward_relevant, check_k, check_query, Classifier, Label, TrainingSet};
use crate::error::Result;

pub(crate) fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// The `k` training rows closest to `query` as `(index, distance)`, nearest
/// first, equal distances by ascending index.
pub(crate) fn nearest(train: &TrainingSet, query: &[f64], k: usize) -> Vec<(usize, f64)> {
    let mut dists: Vec<(usize, f64)> = train
        .features()
        .iter()
        .enumerate()
        .map(|(i, row)| (i, euclidean(row, query)))
        .collect();
    dists.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)));
    dists.truncate(k);
    dists
}

/// Majority vote among the `k` Euclidean nearest neighbours.
#[derive(Clone, Debug)]
pub struct Knn {
    train: TrainingSet,
    k: usize,
}

impl Knn {
    pub fn new(train: TrainingSet, k: usize) -> Result<Self> {
        check_k(&train, k)?;
        Ok(Knn { train, k })
    }
}

impl Classifier for Knn {
    fn predict(&self, query: &[f64]) -> Result<Label> {
        check_query(&self.train, query)?;
        let mut votes = [0.0; 2];
        for (i, _) in nearest(&self.train, query, self.k) {
            votes[self.train.labels()[i].index()] += 1.0;
        }
        Ok(argmax_toward_relevant(votes))
    }
}
