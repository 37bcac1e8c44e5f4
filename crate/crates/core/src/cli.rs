//! Command-line front end: `rank`, `demo`, `summarize` and `evaluate`.
//!
//! Every long option may also come from a `--config` file of `key = value`
//! lines (keys are option names without dashes, `_` and `-` interchangeable).
//! Flags override the file, which overrides the documented defaults.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::classifiers::{ClassifierKind, ClassifierParams};
use crate::discretize::{Strategy, DEFAULT_BINS};
use crate::error::{Error, Result};
use crate::pipeline::{
    load_corpus, load_references, run_experiment, ExperimentConfig, PipelineConfig, Ranking, Resources,
    DEFAULT_TOP_FRACTION, DEFAULT_WORD_BUDGET,
};
use crate::rouge::{self, Metric, DEFAULT_MAX_SKIP};
use crate::rough::{rank_objects, worked_example, DecisionTable, Measure, Memberships, DECISION_COLUMN};
use crate::text::{tokenize, Cohesion, NounLexicon, SentimentLexicon, WordVectors};

#[derive(Debug, Parser)]
#[command(name = "roughrank", version, about = "Rough-set rank measures and rank-based extractive summarization")]
pub struct Cli {
    /// File of `key = value` option defaults; command-line flags take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Log more (-v per-cluster progress, -vv debug); warnings always show.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank the objects of a CSV decision table against a target class.
    Rank(RankArgs),
    /// Walk through the six-object demonstration table.
    Demo,
    /// Train on tagged clusters, then summarize and evaluate test clusters.
    Summarize(SummarizeArgs),
    /// Score one summary against reference summaries with ROUGE.
    Evaluate(EvaluateArgs),
}

#[derive(Debug, Args)]
pub struct RankArgs {
    /// CSV table: first column `id`, an optional last column `decision`.
    #[arg(long, value_name = "FILE")]
    pub table: Option<PathBuf>,
    /// Column defining the target set X (`decision` or an attribute).
    #[arg(long, value_name = "NAME")]
    pub class_col: Option<String>,
    /// Value of --class-col selecting X.
    #[arg(long, value_name = "SYMBOL")]
    pub class_value: Option<String>,
    /// Comma-separated attributes [default: every attribute except --class-col].
    #[arg(long, value_name = "LIST")]
    pub attrs: Option<String>,
    /// rank, aggregate or pawlak [default: aggregate].
    #[arg(long)]
    pub measure: Option<String>,
}

#[derive(Debug, Args)]
pub struct SummarizeArgs {
    /// Test corpus: `<dir>/<cluster>/docs/*.txt`, optional `refs/*.txt`.
    #[arg(long, value_name = "DIR")]
    pub corpus: Option<PathBuf>,
    /// Training corpus with the same layout; every cluster needs references.
    #[arg(long, value_name = "DIR")]
    pub train: Option<PathBuf>,
    /// Word vectors, one `token v1 ... vD` line per word.
    #[arg(long, value_name = "FILE")]
    pub glove: Option<PathBuf>,
    /// Sentiment lexicon, `token<TAB>positive<TAB>negative` lines [default: none].
    #[arg(long, value_name = "FILE")]
    pub lexicon: Option<PathBuf>,
    /// Noun list, one word per line [default: none, capitalization heuristic only].
    #[arg(long, value_name = "FILE")]
    pub nouns: Option<PathBuf>,
    /// fuzzynn, frnn, knn, naive_bayes or lem1.
    #[arg(long, value_name = "NAME")]
    pub classifier: Option<String>,
    /// Ordering of the summaries written: none, pawlak or aggregate [default: aggregate].
    #[arg(long, value_name = "MODE")]
    pub rank: Option<String>,
    /// Summary word budget [default: 100].
    #[arg(long, value_name = "N")]
    pub words: Option<usize>,
    /// Output directory for `<cluster>.summary.txt`, report.csv and model files.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
    /// Neighbours for knn, fuzzynn and frnn [default: 3].
    #[arg(long)]
    pub k: Option<usize>,
    /// Fuzzy NN fuzzifier, above 1 [default: 2].
    #[arg(long)]
    pub m: Option<f64>,
    /// LEM1 bins per feature [default: 3].
    #[arg(long, value_name = "N")]
    pub bins: Option<usize>,
    /// LEM1 binning: equal_width or equal_frequency [default: equal_frequency].
    #[arg(long)]
    pub strategy: Option<String>,
    /// Bins per embedding dimension for ranking [default: 3].
    #[arg(long, value_name = "N")]
    pub embed_bins: Option<usize>,
    /// Embedding binning: equal_width or equal_frequency [default: equal_frequency].
    #[arg(long)]
    pub embed_strategy: Option<String>,
    /// Share of training sentences tagged relevant, in (0, 1) [default: 0.2].
    #[arg(long, value_name = "F")]
    pub top_fraction: Option<f64>,
    /// Cohesion feature: mean or sum [default: mean].
    #[arg(long)]
    pub cohesion: Option<String>,
    /// Comma-separated ROUGE metrics [default: rouge1,rouge2,rougeL,rougeSU4].
    #[arg(long, value_name = "LIST")]
    pub metrics: Option<String>,
    /// Skip distance for a bare `rougeSU` [default: 4].
    #[arg(long, value_name = "N")]
    pub skip: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    /// Summary text file.
    #[arg(long, value_name = "FILE")]
    pub summary: Option<PathBuf>,
    /// Directory of reference `*.txt` files.
    #[arg(long, value_name = "DIR")]
    pub refs: Option<PathBuf>,
    /// Comma-separated ROUGE metrics [default: rouge1,rouge2,rougeL,rougeSU4].
    #[arg(long, value_name = "LIST")]
    pub metrics: Option<String>,
    /// Skip distance for a bare `rougeSU` [default: 4].
    #[arg(long, value_name = "N")]
    pub skip: Option<usize>,
}

const CONFIG_KEYS: &[&str] = &[
    "table", "class-col", "class-value", "attrs", "measure", "corpus", "train", "glove", "lexicon", "nouns",
    "classifier", "rank", "words", "out", "k", "m", "bins", "strategy", "embed-bins", "embed-strategy",
    "top-fraction", "cohesion", "metrics", "skip", "summary", "refs",
];

/// Values read from a `--config` file.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ConfigFile {
    values: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn parse(text: &str, source_name: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::parse(source_name, i as u64 + 1, "expected `key = value`"))?;
            let key = key.trim().replace('_', "-");
            if !CONFIG_KEYS.contains(&key.as_str()) {
                return Err(Error::config(format!("{source_name}: unknown option `{key}`")));
            }
            values.insert(key, value.trim().to_owned());
        }
        Ok(ConfigFile { values })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Flag, else config entry, else `None`.
    fn get<T>(&self, flag: Option<T>, key: &str) -> Result<Option<T>>
    where
        T: FromStr,
        T::Err: Display,
    {
        if flag.is_some() {
            return Ok(flag);
        }
        self.values
            .get(key)
            .map(|v| v.parse::<T>().map_err(|e| Error::config(format!("config option `{key}`: {e}"))))
            .transpose()
    }

    fn or<T>(&self, flag: Option<T>, key: &str, default: T) -> Result<T>
    where
        T: FromStr,
        T::Err: Display,
    {
        Ok(self.get(flag, key)?.unwrap_or(default))
    }

    fn required<T>(&self, flag: Option<T>, key: &str) -> Result<T>
    where
        T: FromStr,
        T::Err: Display,
    {
        self.get(flag, key)?.ok_or_else(|| Error::config(format!("missing required option --{key}")))
    }
}

fn parse_named<T: FromStr<Err = Error>>(value: Option<String>) -> Result<Option<T>> {
    value.map(|v| v.parse()).transpose()
}

fn stdout_err(e: std::io::Error) -> Error {
    Error::io("<stdout>", e)
}

pub fn run<W: Write>(cli: Cli, out: &mut W) -> Result<()> {
    let config = match &cli.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    match cli.command {
        Command::Rank(args) => cmd_rank(args, &config, out),
        Command::Demo => cmd_demo(out),
        Command::Summarize(args) => cmd_summarize(args, &config),
        Command::Evaluate(args) => cmd_evaluate(args, &config, out),
    }
}

pub fn cmd_rank<W: Write>(args: RankArgs, config: &ConfigFile, out: &mut W) -> Result<()> {
    let path: PathBuf = config.required(args.table, "table")?;
    let class_col: String = config.required(args.class_col, "class-col")?;
    let class_value: String = config.required(args.class_value, "class-value")?;
    let measure: Measure = config.or(parse_named(args.measure)?, "measure", Measure::Aggregate)?;
    let attrs: Option<String> = config.get(args.attrs, "attrs")?;

    let table = DecisionTable::read_csv_path(&path)?;
    let (target, class_attr) = if class_col == DECISION_COLUMN && table.decision().is_some() {
        (table.decision_class(&class_value)?, None)
    } else {
        let a = table.attribute_index(&class_col)?;
        (table.objects_where(a, &class_value), Some(a))
    };
    let attrs = match attrs {
        Some(list) => {
            let names: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            table.attribute_indices(&names)?
        }
        None => table.all_attributes().into_iter().filter(|&a| Some(a) != class_attr).collect(),
    };
    if target.is_empty() {
        return Err(Error::domain(format!("no object has {class_col} = {class_value}; X is empty")));
    }
    let ranked = rank_objects(&table, &attrs, &target, measure)?;
    let mut text = String::from("object,fraction,score\n");
    for s in ranked {
        text.push_str(&format!(
            "{},{},{}\n",
            table.object_ids()[s.object],
            s.fraction_string(),
            s.two_decimals()
        ));
    }
    out.write_all(text.as_bytes()).map_err(stdout_err)
}

fn set_string(table: &DecisionTable, objects: impl IntoIterator<Item = usize>) -> String {
    let ids: Vec<&str> = objects.into_iter().map(|o| table.object_ids()[o].as_str()).collect();
    format!("{{{}}}", ids.join(", "))
}

pub fn cmd_demo<W: Write>(out: &mut W) -> Result<()> {
    let (table, x) = worked_example();
    let all = table.all_attributes();
    let memberships = Memberships::new(&table, &all, &x)?;
    let mut text = String::new();

    text.push_str(&format!("Decision table, X = {}\n", set_string(&table, x.iter().copied())));
    let mut csv = Vec::new();
    table.write_csv(&mut csv)?;
    text.push_str(&String::from_utf8_lossy(&csv));

    text.push_str("\nIndiscernibility classes\n");
    let mut attr_sets: Vec<Vec<usize>> = all.iter().map(|&a| vec![a]).collect();
    attr_sets.push(all.clone());
    for attrs in attr_sets {
        let names: Vec<&str> = attrs.iter().map(|&a| table.attributes()[a].as_str()).collect();
        let p = crate::rough::indiscernibility_partition(&table, &attrs)?;
        let blocks: Vec<String> = p.blocks().iter().map(|b| set_string(&table, b.iter().copied())).collect();
        text.push_str(&format!("{{{}}}: {}\n", names.join(", "), blocks.join(" ")));
    }

    let x1 = 0;
    let terms: Vec<String> = memberships
        .per_attribute(x1)?
        .iter()
        .map(|s| format!("{}/{}", s.numerator, s.denominator))
        .collect();
    let agg = memberships.aggregate(x1)?;
    text.push_str(&format!(
        "\nAggregate rank of {}\n(1/{})({}) = {} = {}\n",
        table.object_ids()[x1],
        all.len(),
        terms.join(" + "),
        agg.fraction_string(),
        agg.two_decimals()
    ));

    text.push_str("\nobject,rank,rank_value,aggregate,aggregate_value\n");
    for o in 0..table.n_objects() {
        let r = memberships.rank(o)?;
        let a = memberships.aggregate(o)?;
        text.push_str(&format!(
            "{},{},{},{},{}\n",
            table.object_ids()[o],
            r.fraction_string(),
            r.two_decimals(),
            a.fraction_string(),
            a.two_decimals()
        ));
    }
    let order = memberships.rank_subset(0..table.n_objects(), Measure::Aggregate)?;
    let ids: Vec<&str> = order.iter().map(|s| table.object_ids()[s.object].as_str()).collect();
    text.push_str(&format!("\nOrder by aggregate rank: {}\n", ids.join(", ")));
    out.write_all(text.as_bytes()).map_err(stdout_err)
}

fn parse_metrics(list: Option<String>, skip: usize) -> Result<Vec<Metric>> {
    let list = list.unwrap_or_else(|| "rouge1,rouge2,rougeL,rougeSU".to_owned());
    let metrics = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Metric::parse_with_skip(s, skip))
        .collect::<Result<Vec<_>>>()?;
    if metrics.is_empty() {
        return Err(Error::config("metric list is empty"));
    }
    Ok(metrics)
}

/// Writes every file under `dir` through a temporary name, renaming only once
/// all of them are written.
fn write_all_atomic(dir: &Path, files: &[(String, Vec<u8>)]) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut staged = Vec::new();
    for (name, bytes) in files {
        let tmp = dir.join(format!(".{name}.tmp"));
        if let Err(e) = std::fs::write(&tmp, bytes) {
            for (t, _) in &staged {
                let _ = std::fs::remove_file(t);
            }
            let _ = std::fs::remove_file(&tmp);
            return Err(Error::io(&tmp, e));
        }
        staged.push((tmp, dir.join(name)));
    }
    for (tmp, dest) in &staged {
        std::fs::rename(tmp, dest).map_err(|e| Error::io(dest, e))?;
    }
    Ok(())
}

pub fn cmd_summarize(args: SummarizeArgs, config: &ConfigFile) -> Result<()> {
    let corpus: PathBuf = config.required(args.corpus, "corpus")?;
    let train: PathBuf = config.required(args.train, "train")?;
    let glove: PathBuf = config.required(args.glove, "glove")?;
    let out_dir: PathBuf = config.required(args.out, "out")?;
    let lexicon: Option<PathBuf> = config.get(args.lexicon, "lexicon")?;
    let nouns: Option<PathBuf> = config.get(args.nouns, "nouns")?;
    let classifier: ClassifierKind = config.required(parse_named(args.classifier)?, "classifier")?;
    let rank: Ranking = config.or(parse_named(args.rank)?, "rank", Ranking::Aggregate)?;
    let skip = config.or(args.skip, "skip", DEFAULT_MAX_SKIP)?;
    let defaults = ClassifierParams::default();
    let params = ClassifierParams {
        k: config.or(args.k, "k", defaults.k)?,
        m: config.or(args.m, "m", defaults.m)?,
        lem1_bins: config.or(args.bins, "bins", DEFAULT_BINS)?,
        lem1_strategy: config.or(parse_named(args.strategy)?, "strategy", Strategy::EqualFrequency)?,
    };
    if params.k == 0 {
        return Err(Error::config("k must be at least 1"));
    }
    if !(params.m > 1.0 && params.m.is_finite()) {
        return Err(Error::config(format!("m must exceed 1, got {}", params.m)));
    }
    if params.lem1_bins < 2 {
        return Err(Error::config(format!("bins must be at least 2, got {}", params.lem1_bins)));
    }
    let pipeline = PipelineConfig {
        word_budget: config.or(args.words, "words", DEFAULT_WORD_BUDGET)?,
        top_fraction: config.or(args.top_fraction, "top-fraction", DEFAULT_TOP_FRACTION)?,
        classifier: params,
        embed_bins: config.or(args.embed_bins, "embed-bins", DEFAULT_BINS)?,
        embed_strategy: config.or(parse_named(args.embed_strategy)?, "embed-strategy", Strategy::EqualFrequency)?,
        cohesion: config.or(parse_named(args.cohesion)?, "cohesion", Cohesion::Mean)?,
        metrics: parse_metrics(config.get(args.metrics, "metrics")?, skip)?,
    };
    pipeline.validate()?;

    let mut resources = Resources::new(WordVectors::load(&glove)?);
    resources.sentiment = lexicon.as_deref().map(SentimentLexicon::load).transpose()?;
    resources.nouns = nouns.as_deref().map(NounLexicon::load).transpose()?;
    let train_clusters = load_corpus(&train)?;
    let test_clusters = load_corpus(&corpus)?;

    let experiment_config = ExperimentConfig {
        pipeline,
        classifiers: vec![classifier],
        ranking: if rank == Ranking::None { Ranking::Aggregate } else { rank },
    };
    let experiment = run_experiment(&train_clusters, &test_clusters, &resources, &experiment_config)?;
    let run = &experiment.runs[0];

    let mut files = Vec::new();
    for outcome in run.outcomes(rank) {
        files.push((format!("{}.summary.txt", outcome.cluster_id), outcome.summary.text.clone().into_bytes()));
    }
    files.push(("report.csv".to_owned(), experiment.report.to_csv().into_bytes()));
    let mut bins = Vec::new();
    run.summarizer.embed_binning().write_sidecar(&mut bins).map_err(|e| Error::io(&out_dir, e))?;
    files.push(("embedding_bins.txt".to_owned(), bins));
    if let crate::classifiers::Model::Lem1(lem1) = run.summarizer.model() {
        files.push(("rules.txt".to_owned(), lem1.model().rules.to_string().into_bytes()));
    }
    write_all_atomic(&out_dir, &files)
}

pub fn cmd_evaluate<W: Write>(args: EvaluateArgs, config: &ConfigFile, out: &mut W) -> Result<()> {
    let summary_path: PathBuf = config.required(args.summary, "summary")?;
    let refs_dir: PathBuf = config.required(args.refs, "refs")?;
    let skip = config.or(args.skip, "skip", DEFAULT_MAX_SKIP)?;
    let metrics = parse_metrics(config.get(args.metrics, "metrics")?, skip)?;

    let summary = std::fs::read_to_string(&summary_path).map_err(|e| Error::io(&summary_path, e))?;
    let references: Vec<Vec<String>> = load_references(&refs_dir)?.iter().map(|r| tokenize(r)).collect();
    let candidate = tokenize(&summary);
    let mut text = String::from("metric,recall,precision,f1\n");
    for m in metrics {
        text.push_str(&rouge::score(m, &candidate, &references)?.csv_row());
        text.push('\n');
    }
    out.write_all(text.as_bytes()).map_err(stdout_err)
}
