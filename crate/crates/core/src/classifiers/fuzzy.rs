use super::knn::nearest;
use super::{argmax_toward_relevant, check_k, check_query, Classifier, Label, TrainingSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FuzzyPrediction {
    pub label: Label,
    /// Membership per class, indexed by [`Label::index`]; sums to 1.
    pub membership: [f64; 2],
}

/// Fuzzy k-nearest neighbours with crisp training memberships and
/// inverse-distance weights `d^(-2/(m-1))`.
#[derive(Clone, Debug)]
pub struct FuzzyNn {
    train: TrainingSet,
    k: usize,
    m: f64,
}

impl FuzzyNn {
    pub fn new(train: TrainingSet, k: usize, m: f64) -> Result<Self> {
        check_k(&train, k)?;
        if !(m > 1.0 && m.is_finite()) {
            return Err(Error::config(format!("fuzzifier m must exceed 1, got {m}")));
        }
        Ok(FuzzyNn { train, k, m })
    }

    pub fn memberships(&self, query: &[f64]) -> Result<FuzzyPrediction> {
        check_query(&self.train, query)?;
        let neighbours = nearest(&self.train, query, self.k);
        let mut membership = [0.0; 2];
        if let Some(&(i, _)) = neighbours.iter().find(|(_, d)| *d == 0.0) {
            membership[self.train.labels()[i].index()] = 1.0;
        } else {
            let exponent = -2.0 / (self.m - 1.0);
            let mut total = 0.0;
            for (i, d) in neighbours {
                let w = d.powf(exponent);
                membership[self.train.labels()[i].index()] += w;
                total += w;
            }
            for u in &mut membership {
                *u /= total;
            }
        }
        Ok(FuzzyPrediction { label: argmax_toward_relevant(membership), membership })
    }
}

impl Classifier for FuzzyNn {
    fn predict(&self, query: &[f64]) -> Result<Label> {
        Ok(self.memberships(query)?.label)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrnnPrediction {
    pub label: Label,
    /// Lower approximation membership per class.
    pub lower: [f64; 2],
    /// Upper approximation membership per class.
    pub upper: [f64; 2],
}

/// Fuzzy-rough nearest neighbour classifier over min-max rescaled features.
///
/// Similarity is `mean_a (1 − |x_a − y_a|)`. For each class `c`, over the `k`
/// most similar training rows `y`:
/// `L(c) = min max(1 − sim, [y ∈ c])` and `U(c) = max min(sim, [y ∈ c])`.
/// The prediction maximises `(L + U) / 2`.
#[derive(Clone, Debug)]
pub struct FuzzyRoughNn {
    rows: Vec<Vec<f64>>,
    labels: Vec<Label>,
    min: Vec<f64>,
    max: Vec<f64>,
    k: usize,
}

impl FuzzyRoughNn {
    pub fn new(train: &TrainingSet, k: usize) -> Result<Self> {
        check_k(train, k)?;
        let width = train.n_features();
        let mut min = vec![f64::INFINITY; width];
        let mut max = vec![f64::NEG_INFINITY; width];
        for row in train.features() {
            for (a, &v) in row.iter().enumerate() {
                min[a] = min[a].min(v);
                max[a] = max[a].max(v);
            }
        }
        let mut model = FuzzyRoughNn { rows: Vec::new(), labels: train.labels().to_vec(), min, max, k };
        model.rows = train.features().iter().map(|r| model.rescale(r)).collect();
        Ok(model)
    }

    /// Maps into `[0, 1]` with the training range; out-of-range values clamp.
    fn rescale(&self, row: &[f64]) -> Vec<f64> {
        row.iter()
            .enumerate()
            .map(|(a, &v)| {
                let span = self.max[a] - self.min[a];
                if span > 0.0 {
                    ((v - self.min[a]) / span).clamp(0.0, 1.0)
                } else {
                    0.0
                }
            })
            .collect()
    }

    fn similarity(x: &[f64], y: &[f64]) -> Result<f64> {
        if x.iter().chain(y).any(|v| !(0.0..=1.0).contains(v)) {
            return Err(Error::Internal("fuzzy-rough similarity on unscaled features".into()));
        }
        if x.is_empty() {
            return Ok(1.0);
        }
        let total: f64 = x.iter().zip(y).map(|(a, b)| 1.0 - (a - b).abs()).sum();
        Ok(total / x.len() as f64)
    }

    pub fn bounds(&self, query: &[f64]) -> Result<FrnnPrediction> {
        if query.len() != self.min.len() {
            return Err(Error::config(format!(
                "query has {} features, model expects {}",
                query.len(),
                self.min.len()
            )));
        }
        if query.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("query features must be finite"));
        }
        let q = self.rescale(query);
        let mut sims = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| Ok((i, Self::similarity(&q, r)?)))
            .collect::<Result<Vec<_>>>()?;
        sims.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
        sims.truncate(self.k);

        let mut lower = [1.0f64; 2];
        let mut upper = [0.0f64; 2];
        for (i, sim) in sims {
            for class in Label::ALL {
                let member = if self.labels[i] == class { 1.0 } else { 0.0 };
                let c = class.index();
                lower[c] = lower[c].min((1.0 - sim).max(member));
                upper[c] = upper[c].max(sim.min(member));
            }
        }
        let score = [(lower[0] + upper[0]) / 2.0, (lower[1] + upper[1]) / 2.0];
        Ok(FrnnPrediction { label: argmax_toward_relevant(score), lower, upper })
    }
}

impl Classifier for FuzzyRoughNn {
    fn predict(&self, query: &[f64]) -> Result<Label> {
        Ok(self.bounds(query)?.label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Label::*;

    fn line() -> TrainingSet {
        // A = non_relevant at 0, B = relevant at 1
        TrainingSet::new(vec![vec![0.0], vec![1.0]], vec![NonRelevant, Relevant]).unwrap()
    }

    #[test]
    fn fuzzy_weights() {
        let f = FuzzyNn::new(line(), 2, 2.0).unwrap();
        let p = f.memberships(&[0.25]).unwrap();
        assert_eq!(p.label, NonRelevant);
        assert!((p.membership[NonRelevant.index()] - 0.9).abs() < 1e-12);
        assert!((p.membership[Relevant.index()] - 0.1).abs() < 1e-12);
    }

    #[test]
    fn fuzzy_zero_distance_and_k1() {
        let f = FuzzyNn::new(line(), 2, 2.0).unwrap();
        let p = f.memberships(&[1.0]).unwrap();
        assert_eq!((p.label, p.membership), (Relevant, [1.0, 0.0]));
        let f = FuzzyNn::new(line(), 1, 2.0).unwrap();
        let p = f.memberships(&[0.4]).unwrap();
        assert_eq!((p.label, p.membership), (NonRelevant, [0.0, 1.0]));
    }

    #[test]
    fn fuzzy_rejects_m() {
        assert!(FuzzyNn::new(line(), 1, 1.0).is_err());
    }

    #[test]
    fn frnn_identical_point() {
        let f = FuzzyRoughNn::new(&line(), 1).unwrap();
        let p = f.bounds(&[1.0]).unwrap();
        assert_eq!(p.label, Relevant);
        assert_eq!((p.lower[0] + p.upper[0]) / 2.0, 1.0);
    }

    #[test]
    fn frnn_single_neighbour_bounds() {
        let f = FuzzyRoughNn::new(&line(), 1).unwrap();
        let p = f.bounds(&[0.3]).unwrap();
        let s = 0.7;
        assert!((p.upper[NonRelevant.index()] - s).abs() < 1e-12);
        assert_eq!(p.upper[Relevant.index()], 0.0);
        assert_eq!(p.label, NonRelevant);
    }

    #[test]
    fn frnn_tie_goes_relevant() {
        let f = FuzzyRoughNn::new(&line(), 2).unwrap();
        assert_eq!(f.bounds(&[0.5]).unwrap().label, Relevant);
    }

    #[test]
    fn frnn_clamps_out_of_range_queries() {
        let f = FuzzyRoughNn::new(&line(), 1).unwrap();
        assert_eq!(f.predict(&[7.0]).unwrap(), Relevant);
        assert_eq!(f.predict(&[-7.0]).unwrap(), NonRelevant);
    }

    #[test]
    fn frnn_similarity_guards_scaling() {
        assert!(matches!(FuzzyRoughNn::similarity(&[1.5], &[0.0]), Err(Error::Internal(_))));
    }
}
