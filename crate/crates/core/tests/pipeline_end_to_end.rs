mod common;

use common::{brute_aggregate, data_dir, greedy_select};
use num_rational::Ratio;
use roughrank::classifiers::{ClassifierKind, Label};
use roughrank::pipeline::{
    load_corpus, prepare_cluster, run_experiment, Cluster, ClusterOutcome, Experiment, ExperimentConfig, Ranking,
    Resources, TrainingData,
};
use roughrank::rough::DecisionTable;
use roughrank::text::{word_count, NounLexicon, SentimentLexicon, WordVectors};

fn resources() -> Resources {
    let d = data_dir();
    let mut r = Resources::new(WordVectors::load(&d.join("vectors.txt")).unwrap());
    r.sentiment = Some(SentimentLexicon::load(&d.join("sentiment.tsv")).unwrap());
    r.nouns = Some(NounLexicon::load(&d.join("nouns.txt")).unwrap());
    r
}

fn corpus() -> (Vec<Cluster>, Vec<Cluster>) {
    (load_corpus(&data_dir().join("train")).unwrap(), load_corpus(&data_dir().join("test")).unwrap())
}

fn experiment(config: &ExperimentConfig) -> Experiment {
    let (train, test) = corpus();
    run_experiment(&train, &test, &resources(), config).unwrap()
}

fn symbol_rows(table: &DecisionTable) -> Vec<Vec<u8>> {
    (0..table.n_objects())
        .map(|o| table.row(o).iter().map(|&s| table.symbol_name(s).parse().unwrap()).collect())
        .collect()
}

/// Brute-force aggregate ordering of the relevant set, then greedy budget filling.
fn oracle_selection(outcome: &ClusterOutcome, lengths: &[usize], budget: usize) -> Vec<usize> {
    let table = outcome.table.as_ref().expect("ranked outcome keeps its table");
    let rows = symbol_rows(table);
    let attrs: Vec<usize> = (0..table.n_attributes()).collect();
    let mut order: Vec<(Ratio<u64>, usize)> =
        outcome.relevant.iter().map(|&o| (brute_aggregate(&rows, &attrs, &outcome.relevant, o), o)).collect();
    order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let order: Vec<usize> = order.into_iter().map(|(_, o)| o).collect();
    greedy_select(lengths, &order, budget)
}

fn check_invariants(exp: &Experiment, config: &ExperimentConfig) -> usize {
    let (_, test) = corpus();
    let res = resources();
    let budget = config.pipeline.word_budget;
    let mut nontrivial = 0;
    for run in &exp.runs {
        for (cluster, (plain, ranked)) in test.iter().zip(run.unranked.iter().zip(&run.ranked)) {
            let prepared = prepare_cluster(cluster, &res, config.pipeline.cohesion);
            let lengths: Vec<usize> = prepared.records.iter().map(|r| word_count(&r.text)).collect();
            assert_eq!(plain.labels, ranked.labels, "ranking must not change classification");
            for outcome in [plain, ranked] {
                let s = &outcome.summary;
                assert!(s.word_count <= budget);
                assert_eq!(s.word_count, word_count(&s.text));
                let mut ids = s.selected.clone();
                ids.dedup();
                assert_eq!(ids.len(), s.selected.len());
                if !s.fallback {
                    assert!(s.selected.iter().all(|&i| outcome.labels[i] == Label::Relevant));
                }
            }
            if !ranked.summary.fallback {
                assert_eq!(ranked.summary.selected, oracle_selection(ranked, &lengths, budget), "{}", cluster.id);
                let relevant_words: usize = ranked.relevant.iter().map(|&i| lengths[i]).sum();
                if relevant_words > budget {
                    nontrivial += 1;
                }
            }
        }
    }
    nontrivial
}

#[test]
fn default_experiment_respects_invariants() {
    let config = ExperimentConfig::default();
    let exp = experiment(&config);
    check_invariants(&exp, &config);
    assert_eq!(exp.report.classifiers, ClassifierKind::ALL.to_vec());
    assert_eq!(exp.report.to_csv().lines().count(), 1 + 3 * 4);
}

#[test]
fn tight_budget_exercises_ranking_oracle() {
    let mut config = ExperimentConfig::default();
    config.pipeline.top_fraction = 0.5;
    config.pipeline.word_budget = 40;
    let exp = experiment(&config);
    assert!(check_invariants(&exp, &config) > 0, "no cluster had more relevant words than the budget");
}

#[test]
fn experiment_is_deterministic() {
    let config = ExperimentConfig::default();
    let (a, b) = (experiment(&config), experiment(&config));
    assert_eq!(a.report, b.report);
    for (ra, rb) in a.runs.iter().zip(&b.runs) {
        for (oa, ob) in ra.ranked.iter().zip(&rb.ranked) {
            assert_eq!(oa.summary, ob.summary);
        }
    }
}

#[test]
fn pawlak_ranking_and_single_sentence_cluster() {
    let (train, _) = corpus();
    let res = resources();
    let config = ExperimentConfig { ranking: Ranking::Pawlak, ..ExperimentConfig::default() };
    let single = Cluster { id: "one".into(), docs: vec![("d".into(), "The river rose on Monday.".into())], references: vec![] };
    let exp = run_experiment(&train, &[single], &res, &config).unwrap();
    for run in &exp.runs {
        let o = &run.ranked[0];
        assert_eq!(o.summary.selected, vec![0]);
        if let Some(t) = &o.table {
            assert_eq!(t.n_objects(), 1);
        }
    }
    assert!(exp.report.to_csv().contains("pawlak,ROUGE-1,NA"));
}

#[test]
fn untagged_training_data_is_rejected() {
    let (train, _) = corpus();
    let res = resources();
    let cfg = ExperimentConfig::default();
    let prepared: Vec<_> = train.iter().map(|c| prepare_cluster(c, &res, cfg.pipeline.cohesion)).collect();
    assert!(TrainingData::from_clusters(&prepared, &cfg.pipeline).is_err());
}

#[test]
fn training_cluster_without_references_is_config_error() {
    let (mut train, test) = corpus();
    train[0].references.clear();
    let err = run_experiment(&train, &test, &resources(), &ExperimentConfig::default()).unwrap_err();
    assert_eq!(err.exit_code(), 2);
}
