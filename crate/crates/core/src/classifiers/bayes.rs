use super::{argmax_toward_relevant, Classifier, Label, TrainingSet};
use crate::error::{Error, Result};

pub const VARIANCE_FLOOR: f64 = 1e-9;

#[derive(Clone, Debug)]
struct ClassModel {
    log_prior: f64,
    mean: Vec<f64>,
    var: Vec<f64>,
}

/// Gaussian naive Bayes with maximum-likelihood variances floored at [`VARIANCE_FLOOR`].
#[derive(Clone, Debug)]
pub struct GaussianNb {
    classes: [ClassModel; 2],
}

impl GaussianNb {
    pub fn fit(train: &TrainingSet) -> Self {
        let width = train.n_features();
        let fit_class = |class: Label| {
            let rows: Vec<&Vec<f64>> = train
                .features()
                .iter()
                .zip(train.labels())
                .filter(|(_, &l)| l == class)
                .map(|(r, _)| r)
                .collect();
            let n = rows.len() as f64;
            let mean: Vec<f64> = (0..width).map(|a| rows.iter().map(|r| r[a]).sum::<f64>() / n).collect();
            let var = (0..width)
                .map(|a| {
                    let v = rows.iter().map(|r| (r[a] - mean[a]).powi(2)).sum::<f64>() / n;
                    v.max(VARIANCE_FLOOR)
                })
                .collect();
            ClassModel { log_prior: (n / train.len() as f64).ln(), mean, var }
        };
        GaussianNb { classes: [fit_class(Label::Relevant), fit_class(Label::NonRelevant)] }
    }

    /// Unnormalised log posterior per class.
    pub fn log_scores(&self, query: &[f64]) -> Result<[f64; 2]> {
        let width = self.classes[0].mean.len();
        if query.len() != width {
            return Err(Error::config(format!("query has {} features, model expects {width}", query.len())));
        }
        let score = |m: &ClassModel| {
            m.log_prior
                + query
                    .iter()
                    .zip(m.mean.iter().zip(&m.var))
                    .map(|(&x, (&mu, &var))| {
                        -0.5 * (2.0 * std::f64::consts::PI * var).ln() - (x - mu).powi(2) / (2.0 * var)
                    })
                    .sum::<f64>()
        };
        Ok([score(&self.classes[0]), score(&self.classes[1])])
    }
}

impl Classifier for GaussianNb {
    fn predict(&self, query: &[f64]) -> Result<Label> {
        if query.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("query features must be finite"));
        }
        Ok(argmax_toward_relevant(self.log_scores(query)?))
    }
}
