//! Supervised sentence classifiers: KNN, fuzzy NN, fuzzy-rough NN,
//! Gaussian naive Bayes and LEM1 rule induction.
//!
//! All of them break ties toward [`Label::Relevant`].

mod bayes;
mod fuzzy;
mod knn;
mod lem1;

use std::fmt;
use std::str::FromStr;

pub use bayes::GaussianNb;
pub use fuzzy::{FrnnPrediction, FuzzyNn, FuzzyPrediction, FuzzyRoughNn};
pub use knn::Knn;
pub use lem1::{lem1_predict, lem1_train, Lem1Classifier, Lem1Model, Rule, RuleSet};

use crate::discretize::{Strategy, DEFAULT_BINS};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Relevant,
    NonRelevant,
}

impl Label {
    pub const ALL: [Label; 2] = [Label::Relevant, Label::NonRelevant];

    pub fn as_str(self) -> &'static str {
        match self {
            Label::Relevant => "relevant",
            Label::NonRelevant => "non_relevant",
        }
    }

    /// Index into two-element per-class arrays (relevant first).
    pub fn index(self) -> usize {
        match self {
            Label::Relevant => 0,
            Label::NonRelevant => 1,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "relevant" => Ok(Label::Relevant),
            "non_relevant" => Ok(Label::NonRelevant),
            other => Err(Error::config(format!("unknown label `{other}`"))),
        }
    }
}

/// Picks the larger of two per-class scores; equal scores go to `Relevant`.
pub(crate) fn argmax_toward_relevant(scores: [f64; 2]) -> Label {
    if scores[Label::Relevant.index()] >= scores[Label::NonRelevant.index()] {
        Label::Relevant
    } else {
        Label::NonRelevant
    }
}

/// Real-valued feature rows with binary labels.
#[derive(Clone, Debug, PartialEq)]
pub struct TrainingSet {
    features: Vec<Vec<f64>>,
    labels: Vec<Label>,
}

impl TrainingSet {
    pub fn new(features: Vec<Vec<f64>>, labels: Vec<Label>) -> Result<Self> {
        if features.len() != labels.len() {
            return Err(Error::config(format!(
                "{} feature rows for {} labels",
                features.len(),
                labels.len()
            )));
        }
        if features.is_empty() {
            return Err(Error::domain("training set is empty"));
        }
        let width = features[0].len();
        if features.iter().any(|r| r.len() != width) {
            return Err(Error::config("feature rows have differing lengths"));
        }
        if features.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::domain("training features must be finite"));
        }
        for class in Label::ALL {
            if !labels.contains(&class) {
                return Err(Error::domain(format!("training set has no `{class}` example")));
            }
        }
        Ok(TrainingSet { features, labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn n_features(&self) -> usize {
        self.features[0].len()
    }

    pub fn features(&self) -> &[Vec<f64>] {
        &self.features
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Most frequent class, `Relevant` on a tie.
    pub fn majority(&self) -> Label {
        let relevant = self.labels.iter().filter(|&&l| l == Label::Relevant).count();
        argmax_toward_relevant([relevant as f64, (self.len() - relevant) as f64])
    }
}

pub trait Classifier {
    fn predict(&self, query: &[f64]) -> Result<Label>;

    fn predict_batch(&self, queries: &[Vec<f64>]) -> Result<Vec<Label>> {
        queries.iter().map(|q| self.predict(q)).collect()
    }
}

pub(crate) fn check_query(train: &TrainingSet, query: &[f64]) -> Result<()> {
    if query.len() != train.n_features() {
        return Err(Error::config(format!(
            "query has {} features, model expects {}",
            query.len(),
            train.n_features()
        )));
    }
    if query.iter().any(|v| !v.is_finite()) {
        return Err(Error::domain("query features must be finite"));
    }
    Ok(())
}

pub(crate) fn check_k(train: &TrainingSet, k: usize) -> Result<()> {
    if k == 0 || k > train.len() {
        return Err(Error::config(format!(
            "k must lie in 1..={} (training size), got {k}",
            train.len()
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassifierKind {
    Knn,
    FuzzyNn,
    FuzzyRoughNn,
    NaiveBayes,
    Lem1,
}

impl ClassifierKind {
    pub const ALL: [ClassifierKind; 5] = [
        ClassifierKind::FuzzyNn,
        ClassifierKind::FuzzyRoughNn,
        ClassifierKind::Knn,
        ClassifierKind::NaiveBayes,
        ClassifierKind::Lem1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassifierKind::Knn => "knn",
            ClassifierKind::FuzzyNn => "fuzzynn",
            ClassifierKind::FuzzyRoughNn => "frnn",
            ClassifierKind::NaiveBayes => "naive_bayes",
            ClassifierKind::Lem1 => "lem1",
        }
    }

    pub fn valid_names() -> String {
        Self::ALL.iter().map(|k| k.name()).collect::<Vec<_>>().join(", ")
    }
}

impl fmt::Display for ClassifierKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassifierKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                Error::config(format!(
                    "unknown classifier `{s}`; valid names: {}",
                    Self::valid_names()
                ))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassifierParams {
    pub k: usize,
    /// Fuzzifier of the fuzzy NN weights, must exceed 1.
    pub m: f64,
    pub lem1_bins: usize,
    pub lem1_strategy: Strategy,
}

impl Default for ClassifierParams {
    fn default() -> Self {
        ClassifierParams { k: 3, m: 2.0, lem1_bins: DEFAULT_BINS, lem1_strategy: Strategy::EqualFrequency }
    }
}

/// A trained model of any supported kind.
#[derive(Clone, Debug)]
pub enum Model {
    Knn(Knn),
    FuzzyNn(FuzzyNn),
    FuzzyRoughNn(FuzzyRoughNn),
    NaiveBayes(GaussianNb),
    Lem1(Lem1Classifier),
}

impl Model {
    pub fn train(kind: ClassifierKind, params: &ClassifierParams, train: &TrainingSet) -> Result<Model> {
        Ok(match kind {
            ClassifierKind::Knn => Model::Knn(Knn::new(train.clone(), params.k)?),
            ClassifierKind::FuzzyNn => Model::FuzzyNn(FuzzyNn::new(train.clone(), params.k, params.m)?),
            ClassifierKind::FuzzyRoughNn => Model::FuzzyRoughNn(FuzzyRoughNn::new(train, params.k)?),
            ClassifierKind::NaiveBayes => Model::NaiveBayes(GaussianNb::fit(train)),
            ClassifierKind::Lem1 => {
                Model::Lem1(Lem1Classifier::fit(train, params.lem1_bins, params.lem1_strategy)?)
            }
        })
    }

    pub fn kind(&self) -> ClassifierKind {
        match self {
            Model::Knn(_) => ClassifierKind::Knn,
            Model::FuzzyNn(_) => ClassifierKind::FuzzyNn,
            Model::FuzzyRoughNn(_) => ClassifierKind::FuzzyRoughNn,
            Model::NaiveBayes(_) => ClassifierKind::NaiveBayes,
            Model::Lem1(_) => ClassifierKind::Lem1,
        }
    }
}

impl Classifier for Model {
    fn predict(&self, query: &[f64]) -> Result<Label> {
        match self {
            Model::Knn(m) => m.predict(query),
            Model::FuzzyNn(m) => m.predict(query),
            Model::FuzzyRoughNn(m) => m.predict(query),
            Model::NaiveBayes(m) => m.predict(query),
            Model::Lem1(m) => m.predict(query),
        }
    }
}
