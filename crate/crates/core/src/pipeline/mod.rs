//! Tagging, training, rank post-processing and summary assembly.
//!
//! Per cluster: split and featurize sentences, classify them, rank the
//! sentences predicted relevant by a rough-set measure over their discretized
//! embeddings, then fill the word budget greedily in rank order.

mod corpus;
mod report;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

pub use corpus::{load_corpus, load_references, Cluster};
pub use report::{percent_change, ExperimentReport};

use crate::classifiers::{Classifier, ClassifierKind, ClassifierParams, Label, Model, TrainingSet};
use crate::discretize::{apply_bins, fit_bins, Binning, Strategy, DEFAULT_BINS};
use crate::error::{Error, Result};
use crate::rouge::{self, Metric, RougeScore};
use crate::rough::{DecisionTable, Measure, Memberships, ObjectSet, RankScore};
use crate::text::{
    tokenize, word_count, Cohesion, FeatureExtractor, NounLexicon, SentenceRecord, SentimentLexicon,
    WordVectors,
};

pub const DEFAULT_WORD_BUDGET: usize = 100;
pub const DEFAULT_TOP_FRACTION: f64 = 0.2;

/// How the sentences predicted relevant are ordered before budget filling.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Ranking {
    /// Document order.
    None,
    Pawlak,
    #[default]
    Aggregate,
}

impl Ranking {
    pub fn name(self) -> &'static str {
        match self {
            Ranking::None => "none",
            Ranking::Pawlak => "pawlak",
            Ranking::Aggregate => "aggregate",
        }
    }

    pub fn measure(self) -> Option<Measure> {
        match self {
            Ranking::None => None,
            Ranking::Pawlak => Some(Measure::Pawlak),
            Ranking::Aggregate => Some(Measure::Aggregate),
        }
    }
}

impl fmt::Display for Ranking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Ranking {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Ranking::None),
            "pawlak" => Ok(Ranking::Pawlak),
            "aggregate" => Ok(Ranking::Aggregate),
            other => Err(Error::config(format!(
                "unknown ranking `{other}`; valid names: none, pawlak, aggregate"
            ))),
        }
    }
}

/// Word vectors plus the optional lexicons used by feature extraction.
#[derive(Clone, Debug)]
pub struct Resources {
    pub vectors: WordVectors,
    pub sentiment: Option<SentimentLexicon>,
    pub nouns: Option<NounLexicon>,
}

impl Resources {
    pub fn new(vectors: WordVectors) -> Self {
        Resources { vectors, sentiment: None, nouns: None }
    }

    pub fn extractor(&self, cohesion: Cohesion) -> FeatureExtractor<'_> {
        FeatureExtractor {
            vectors: &self.vectors,
            sentiment: self.sentiment.as_ref(),
            nouns: self.nouns.as_ref(),
            cohesion,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PipelineConfig {
    pub word_budget: usize,
    /// Share of each training cluster tagged `relevant`, in `(0, 1)`.
    pub top_fraction: f64,
    pub classifier: ClassifierParams,
    /// Bins per embedding dimension in the ranking decision system.
    pub embed_bins: usize,
    pub embed_strategy: Strategy,
    pub cohesion: Cohesion,
    pub metrics: Vec<Metric>,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            word_budget: DEFAULT_WORD_BUDGET,
            top_fraction: DEFAULT_TOP_FRACTION,
            classifier: ClassifierParams::default(),
            embed_bins: DEFAULT_BINS,
            embed_strategy: Strategy::EqualFrequency,
            cohesion: Cohesion::Mean,
            metrics: Metric::standard(),
        }
    }
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<()> {
        if self.word_budget == 0 {
            return Err(Error::config("word budget must be at least 1"));
        }
        check_top_fraction(self.top_fraction)?;
        if self.embed_bins < 2 {
            return Err(Error::config(format!("embedding bins must be at least 2, got {}", self.embed_bins)));
        }
        if self.metrics.is_empty() {
            return Err(Error::config("at least one ROUGE metric is required"));
        }
        Ok(())
    }
}

fn check_top_fraction(f: f64) -> Result<()> {
    if !(f > 0.0 && f < 1.0) {
        return Err(Error::config(format!("top fraction must lie strictly between 0 and 1, got {f}")));
    }
    Ok(())
}

/// A cluster after sentence splitting and feature extraction.
#[derive(Clone, Debug, PartialEq)]
pub struct PreparedCluster {
    pub id: String,
    pub records: Vec<SentenceRecord>,
    /// Tokenized reference summaries.
    pub references: Vec<Vec<String>>,
}

pub fn prepare_cluster(cluster: &Cluster, resources: &Resources, cohesion: Cohesion) -> PreparedCluster {
    PreparedCluster {
        id: cluster.id.clone(),
        records: resources.extractor(cohesion).extract_cluster(&cluster.id, &cluster.docs),
        references: cluster.references.iter().map(|r| tokenize(r)).collect(),
    }
}

/// Stable sentence id `doc_id#index_in_doc`.
pub fn sentence_id(record: &SentenceRecord) -> String {
    format!("{}#{}", record.doc_id, record.index_in_doc)
}

/// Labels the top `⌈top_fraction · S⌉` sentences by ROUGE-1 recall `relevant`
/// and the rest `non_relevant`. Ties at the cutoff go to the earlier position
/// in the document, then to the earlier record.
pub fn tag_training_sentences(
    records: &mut [SentenceRecord],
    references: &[Vec<String>],
    top_fraction: f64,
) -> Result<()> {
    if references.is_empty() {
        return Err(Error::config("training cluster has no reference summaries"));
    }
    check_top_fraction(top_fraction)?;
    let recalls = records
        .iter()
        .map(|r| Ok(rouge::rouge_n(&r.tokens, references, 1)?.recall))
        .collect::<Result<Vec<f64>>>()?;
    let mut order: Vec<usize> = (0..records.len()).collect();
    order.sort_by(|&a, &b| {
        recalls[b]
            .total_cmp(&recalls[a])
            .then(records[a].index_in_doc.cmp(&records[b].index_in_doc))
            .then(a.cmp(&b))
    });
    // the epsilon keeps products like 0.7 * 10 = 7.000000000000001 from rounding up
    let top = ((top_fraction * records.len() as f64) - 1e-9).ceil().max(0.0) as usize;
    for (rank, &i) in order.iter().enumerate() {
        records[i].label = Some(if rank < top { Label::Relevant } else { Label::NonRelevant });
    }
    Ok(())
}

/// Per-column min-max scaling fit on training rows; constant columns map to 0.
#[derive(Clone, Debug, PartialEq)]
pub struct FeatureScaler {
    min: Vec<f64>,
    max: Vec<f64>,
}

impl FeatureScaler {
    pub fn fit(rows: &[Vec<f64>]) -> Self {
        let width = rows.first().map_or(0, Vec::len);
        let mut min = vec![f64::INFINITY; width];
        let mut max = vec![f64::NEG_INFINITY; width];
        for row in rows {
            for (a, &v) in row.iter().enumerate() {
                min[a] = min[a].min(v);
                max[a] = max[a].max(v);
            }
        }
        FeatureScaler { min, max }
    }

    /// Values outside the training range land outside `[0, 1]`.
    pub fn transform(&self, row: &[f64]) -> Vec<f64> {
        row.iter()
            .zip(self.min.iter().zip(&self.max))
            .map(|(&v, (&lo, &hi))| if hi > lo { (v - lo) / (hi - lo) } else { 0.0 })
            .collect()
    }
}

/// Tagged training sentences turned into model inputs.
#[derive(Clone, Debug)]
pub struct TrainingData {
    set: TrainingSet,
    scaler: FeatureScaler,
    embed_binning: Binning,
}

impl TrainingData {
    /// Every record must carry a label (see [`tag_training_sentences`]).
    pub fn from_clusters(clusters: &[PreparedCluster], config: &PipelineConfig) -> Result<Self> {
        let records: Vec<&SentenceRecord> = clusters.iter().flat_map(|c| &c.records).collect();
        let labels = records
            .iter()
            .map(|r| {
                r.label.ok_or_else(|| {
                    Error::config(format!("training sentence {} is untagged", sentence_id(r)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if records.is_empty() {
            return Err(Error::config("training corpus has no sentences"));
        }
        let raw: Vec<Vec<f64>> = records.iter().map(|r| r.features.to_vec()).collect();
        let scaler = FeatureScaler::fit(&raw);
        let set = TrainingSet::new(raw.iter().map(|r| scaler.transform(r)).collect(), labels)?;
        let embeddings: Vec<Vec<f64>> = records.iter().map(|r| r.embedding.clone()).collect();
        let embed_binning = fit_bins(&embeddings, config.embed_bins, config.embed_strategy)?;
        Ok(TrainingData { set, scaler, embed_binning })
    }

    pub fn training_set(&self) -> &TrainingSet {
        &self.set
    }

    pub fn scaler(&self) -> &FeatureScaler {
        &self.scaler
    }

    pub fn embed_binning(&self) -> &Binning {
        &self.embed_binning
    }
}

/// Decision system over one cluster: objects are sentences, attributes the
/// discretized embedding dimensions `e0..`, decision the predicted label.
pub fn build_decision_system(
    records: &[SentenceRecord],
    binning: &Binning,
    labels: &[Label],
) -> Result<DecisionTable> {
    if labels.len() != records.len() {
        return Err(Error::config(format!("{} labels for {} sentences", labels.len(), records.len())));
    }
    let embeddings: Vec<Vec<f64>> = records.iter().map(|r| r.embedding.clone()).collect();
    let codes = if embeddings.is_empty() { Vec::new() } else { apply_bins(binning, &embeddings)? };
    DecisionTable::new(
        records.iter().map(sentence_id).collect(),
        (0..binning.n_columns()).map(|d| format!("e{d}")).collect(),
        codes,
        Some(labels.iter().map(|l| l.as_str()).collect()),
    )
}

/// Scores every object of `relevant` by `measure` over all attributes with
/// `relevant` as the target set, sorted descending with index tie-break.
pub fn rank_post_process(
    table: &DecisionTable,
    relevant: &ObjectSet,
    measure: Measure,
) -> Result<Vec<RankScore>> {
    if relevant.is_empty() {
        return Err(Error::domain("no sentence was classified relevant"));
    }
    Memberships::new(table, &table.all_attributes(), relevant)?.rank_subset(relevant.iter().copied(), measure)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SummaryResult {
    /// Record indices of the chosen sentences, in document order.
    pub selected: Vec<usize>,
    /// The same indices in the order they were chosen.
    pub selection_order: Vec<usize>,
    pub sentence_ids: Vec<String>,
    /// One sentence per line.
    pub text: String,
    pub word_count: usize,
    /// Rank scores of the ranked candidates, best first; empty when unranked.
    pub scores: Vec<RankScore>,
    /// No sentence fit the budget.
    pub empty: bool,
    /// No sentence was classified relevant, so all sentences were candidates in document order.
    pub fallback: bool,
    pub rouge: Vec<RougeScore>,
}

/// Walks `ranked` (record indices) and keeps a sentence iff it still fits in
/// `word_budget`; sentences are never cut.
pub fn assemble_summary(records: &[SentenceRecord], ranked: &[usize], word_budget: usize) -> Result<SummaryResult> {
    if word_budget == 0 {
        return Err(Error::config("word budget must be at least 1"));
    }
    let mut seen = BTreeSet::new();
    for &i in ranked {
        if i >= records.len() || !seen.insert(i) {
            return Err(Error::config(format!("ranked list has an invalid or repeated sentence index {i}")));
        }
    }
    let mut used = 0;
    let mut selection_order = Vec::new();
    for &i in ranked {
        let len = word_count(&records[i].text);
        if used + len <= word_budget {
            used += len;
            selection_order.push(i);
        }
    }
    let mut selected = selection_order.clone();
    selected.sort_unstable();
    let text: String = selected.iter().map(|&i| format!("{}\n", records[i].text)).collect();
    Ok(SummaryResult {
        sentence_ids: selected.iter().map(|&i| sentence_id(&records[i])).collect(),
        empty: selected.is_empty(),
        selected,
        selection_order,
        text,
        word_count: used,
        scores: Vec::new(),
        fallback: false,
        rouge: Vec::new(),
    })
}

/// Everything produced for one cluster, kept for inspection.
#[derive(Clone, Debug)]
pub struct ClusterOutcome {
    pub cluster_id: String,
    pub labels: Vec<Label>,
    /// Record indices predicted relevant.
    pub relevant: ObjectSet,
    /// Ranking decision system; `None` when unranked or nothing was relevant.
    pub table: Option<DecisionTable>,
    /// Candidate order handed to [`assemble_summary`].
    pub candidates: Vec<usize>,
    pub summary: SummaryResult,
}

/// A classifier trained on tagged clusters, ready to summarize new ones.
#[derive(Clone, Debug)]
pub struct Summarizer {
    model: Model,
    scaler: FeatureScaler,
    embed_binning: Binning,
    word_budget: usize,
    metrics: Vec<Metric>,
}

impl Summarizer {
    pub fn train(kind: ClassifierKind, data: &TrainingData, config: &PipelineConfig) -> Result<Self> {
        config.validate()?;
        Ok(Summarizer {
            model: Model::train(kind, &config.classifier, &data.set)?,
            scaler: data.scaler.clone(),
            embed_binning: data.embed_binning.clone(),
            word_budget: config.word_budget,
            metrics: config.metrics.clone(),
        })
    }

    pub fn model(&self) -> &Model {
        &self.model
    }

    pub fn embed_binning(&self) -> &Binning {
        &self.embed_binning
    }

    pub fn classify(&self, records: &[SentenceRecord]) -> Result<Vec<Label>> {
        records.iter().map(|r| self.model.predict(&self.scaler.transform(&r.features))).collect()
    }

    /// Summarizes with labels from [`Summarizer::classify`], so several
    /// rankings can share one classification pass.
    pub fn summarize_with_labels(
        &self,
        cluster: &PreparedCluster,
        labels: Vec<Label>,
        ranking: Ranking,
    ) -> Result<ClusterOutcome> {
        let records = &cluster.records;
        let relevant: ObjectSet = labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == Label::Relevant)
            .map(|(i, _)| i)
            .collect();

        let mut table = None;
        let mut scores = Vec::new();
        let fallback = relevant.is_empty();
        let candidates: Vec<usize> = if fallback {
            log::warn!("cluster {}: no sentence classified relevant; using document order", cluster.id);
            (0..records.len()).collect()
        } else if let Some(measure) = ranking.measure() {
            let t = build_decision_system(records, &self.embed_binning, &labels)?;
            scores = rank_post_process(&t, &relevant, measure)?;
            table = Some(t);
            scores.iter().map(|s| s.object).collect()
        } else {
            relevant.iter().copied().collect()
        };

        let mut summary = assemble_summary(records, &candidates, self.word_budget)?;
        summary.scores = scores;
        summary.fallback = fallback;
        if summary.empty {
            log::warn!("cluster {}: no sentence fits the {}-word budget", cluster.id, self.word_budget);
        }
        if !cluster.references.is_empty() {
            let tokens = tokenize(&summary.text);
            summary.rouge = self
                .metrics
                .iter()
                .map(|&m| rouge::score(m, &tokens, &cluster.references))
                .collect::<Result<_>>()?;
        }
        Ok(ClusterOutcome { cluster_id: cluster.id.clone(), labels, relevant, table, candidates, summary })
    }

    pub fn summarize(&self, cluster: &PreparedCluster, ranking: Ranking) -> Result<ClusterOutcome> {
        let labels = self.classify(&cluster.records)?;
        self.summarize_with_labels(cluster, labels, ranking)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub pipeline: PipelineConfig,
    /// Report columns, in order.
    pub classifiers: Vec<ClassifierKind>,
    /// Compared against the unranked run; must not be [`Ranking::None`].
    pub ranking: Ranking,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            pipeline: PipelineConfig::default(),
            classifiers: ClassifierKind::ALL.to_vec(),
            ranking: Ranking::Aggregate,
        }
    }
}

/// Outcomes of one classifier on every test cluster, unranked and ranked.
#[derive(Clone, Debug)]
pub struct ClassifierRun {
    pub classifier: ClassifierKind,
    pub summarizer: Summarizer,
    pub unranked: Vec<ClusterOutcome>,
    pub ranked: Vec<ClusterOutcome>,
}

impl ClassifierRun {
    pub fn outcomes(&self, ranking: Ranking) -> &[ClusterOutcome] {
        if ranking == Ranking::None {
            &self.unranked
        } else {
            &self.ranked
        }
    }
}

#[derive(Clone, Debug)]
pub struct Experiment {
    pub runs: Vec<ClassifierRun>,
    pub report: ExperimentReport,
}

/// Tags and trains on `train`, summarizes every test cluster with each
/// classifier both unranked and with `config.ranking`, and reports mean
/// ROUGE recall per metric and classifier.
pub fn run_experiment(
    train: &[Cluster],
    test: &[Cluster],
    resources: &Resources,
    config: &ExperimentConfig,
) -> Result<Experiment> {
    let pc = &config.pipeline;
    pc.validate()?;
    if config.ranking == Ranking::None {
        return Err(Error::config("the ranked run needs a ranking other than `none`"));
    }
    if config.classifiers.is_empty() {
        return Err(Error::config("at least one classifier is required"));
    }
    if test.is_empty() {
        return Err(Error::config("no test clusters"));
    }
    let mut tagged = Vec::with_capacity(train.len());
    for cluster in train {
        let mut prepared = prepare_cluster(cluster, resources, pc.cohesion);
        tag_training_sentences(&mut prepared.records, &prepared.references, pc.top_fraction)
            .map_err(|e| match e {
                Error::Config(msg) => Error::Config(format!("cluster {}: {msg}", cluster.id)),
                other => other,
            })?;
        tagged.push(prepared);
    }
    let data = TrainingData::from_clusters(&tagged, pc)?;
    let prepared: Vec<PreparedCluster> = test.iter().map(|c| prepare_cluster(c, resources, pc.cohesion)).collect();

    let mut runs = Vec::new();
    for &kind in &config.classifiers {
        let summarizer = Summarizer::train(kind, &data, pc)?;
        let mut unranked = Vec::new();
        let mut ranked = Vec::new();
        for cluster in &prepared {
            let labels = summarizer.classify(&cluster.records)?;
            unranked.push(summarizer.summarize_with_labels(cluster, labels.clone(), Ranking::None)?);
            ranked.push(summarizer.summarize_with_labels(cluster, labels, config.ranking)?);
            log::info!("cluster {} summarized with {kind}", cluster.id);
        }
        runs.push(ClassifierRun { classifier: kind, summarizer, unranked, ranked });
    }
    let report = ExperimentReport::from_runs(&pc.metrics, config.ranking, &runs);
    Ok(Experiment { runs, report })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(doc: &str, i: usize, text: &str) -> SentenceRecord {
        SentenceRecord {
            cluster_id: "c".into(),
            doc_id: doc.into(),
            index_in_doc: i,
            text: text.into(),
            tokens: tokenize(text),
            features: [0.0; 6],
            embedding: vec![0.0],
            label: None,
        }
    }

    fn words(n: usize) -> String {
        vec!["w"; n].join(" ")
    }

    #[test]
    fn tag_ten_sentences_two_relevant() {
        let refs = vec![tokenize("alpha beta gamma delta")];
        let mut recs: Vec<SentenceRecord> = (1..=10).map(|i| record("d", i, &format!("s{i} zeta"))).collect();
        recs[6] = record("d", 7, "alpha beta gamma delta");
        tag_training_sentences(&mut recs, &refs, 0.2).unwrap();
        let relevant: Vec<usize> =
            (0..10).filter(|&i| recs[i].label == Some(Label::Relevant)).collect();
        // the exact copy first, then the earliest zero-recall sentence
        assert_eq!(relevant, vec![0, 6]);
    }

    #[test]
    fn tag_ceiling_and_errors() {
        let refs = vec![tokenize("a")];
        let mut recs: Vec<SentenceRecord> = (1..=10).map(|i| record("d", i, "b")).collect();
        tag_training_sentences(&mut recs, &refs, 0.7).unwrap();
        assert_eq!(recs.iter().filter(|r| r.label == Some(Label::Relevant)).count(), 7);
        tag_training_sentences(&mut recs, &refs, 0.01).unwrap();
        assert_eq!(recs.iter().filter(|r| r.label == Some(Label::Relevant)).count(), 1);
        assert!(matches!(tag_training_sentences(&mut recs, &[], 0.2), Err(Error::Config(_))));
        assert!(matches!(tag_training_sentences(&mut recs, &refs, 1.0), Err(Error::Config(_))));
    }

    #[test]
    fn tag_ties_prefer_earlier_position() {
        let refs = vec![tokenize("x")];
        let mut recs = vec![record("a", 3, "x"), record("b", 1, "x"), record("b", 2, "y")];
        tag_training_sentences(&mut recs, &refs, 0.3).unwrap();
        assert_eq!(recs[1].label, Some(Label::Relevant));
        assert_eq!(recs[0].label, Some(Label::NonRelevant));
    }

    #[test]
    fn greedy_skip_rule() {
        let recs = vec![record("d", 1, &words(7)), record("d", 2, &words(4))];
        let s = assemble_summary(&recs, &[0, 1], 5).unwrap();
        assert_eq!(s.selected, vec![1]);
        assert_eq!(s.word_count, 4);
        assert!(!s.empty);
    }

    #[test]
    fn document_order_output_and_empty_flag() {
        let recs = vec![record("d", 1, "one two"), record("d", 2, "three"), record("d", 3, "four five six")];
        let s = assemble_summary(&recs, &[2, 0, 1], 100).unwrap();
        assert_eq!(s.selection_order, vec![2, 0, 1]);
        assert_eq!(s.selected, vec![0, 1, 2]);
        assert_eq!(s.text, "one two\nthree\nfour five six\n");
        assert_eq!(s.sentence_ids, vec!["d#1", "d#2", "d#3"]);
        let e = assemble_summary(&recs, &[2, 0], 1).unwrap();
        assert!(e.empty && e.text.is_empty());
        assert!(assemble_summary(&recs, &[0, 0], 10).is_err());
        assert!(assemble_summary(&recs, &[0], 0).is_err());
    }

    #[test]
    fn example_table_restricted_to_x() {
        let (table, x) = crate::rough::worked_example();
        let ranked = rank_post_process(&table, &x, Measure::Aggregate).unwrap();
        let order: Vec<usize> = ranked.iter().map(|s| s.object).collect();
        assert_eq!(order, vec![1, 4]);
        assert!(rank_post_process(&table, &ObjectSet::new(), Measure::Aggregate).is_err());
    }

    #[test]
    fn decision_system_shape() {
        let mut recs = vec![record("d", 1, "a b"), record("d", 2, "b a"), record("d", 3, "c")];
        recs[0].embedding = vec![0.1, 0.5];
        recs[1].embedding = vec![0.1, 0.5];
        recs[2].embedding = vec![0.9, -1.0];
        let binning = fit_bins(&recs.iter().map(|r| r.embedding.clone()).collect::<Vec<_>>(), 3, Strategy::EqualFrequency)
            .unwrap();
        let labels = vec![Label::Relevant, Label::Relevant, Label::NonRelevant];
        let t = build_decision_system(&recs, &binning, &labels).unwrap();
        assert_eq!(t.attributes(), &["e0".to_string(), "e1".to_string()]);
        assert_eq!(t.row(0), t.row(1));
        for o in 0..3 {
            for a in 0..2 {
                assert!(["0", "1", "2"].contains(&t.symbol_name(t.value(o, a))));
            }
        }
        assert_eq!(t.decision_class("relevant").unwrap(), [0, 1].into_iter().collect());
    }

    #[test]
    fn scaler_maps_training_range_to_unit() {
        let s = FeatureScaler::fit(&[vec![1.0, 5.0], vec![3.0, 5.0]]);
        assert_eq!(s.transform(&[2.0, 5.0]), vec![0.5, 0.0]);
        assert_eq!(s.transform(&[5.0, 9.0]), vec![2.0, 0.0]);
    }

    #[test]
    fn ranking_names() {
        for r in [Ranking::None, Ranking::Pawlak, Ranking::Aggregate] {
            assert_eq!(r.name().parse::<Ranking>().unwrap(), r);
        }
        assert!("rank".parse::<Ranking>().is_err());
    }
}
