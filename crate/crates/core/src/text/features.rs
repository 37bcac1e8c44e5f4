use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::resources::{NounLexicon, SentimentLexicon, WordVectors};
use super::segment::{is_numeric, split_sentences, tokenize};
use crate::classifiers::Label;
use crate::error::{Error, Result};

pub const FEATURE_NAMES: [&str; 6] = [
    "position",
    "sentiment",
    "cohesion",
    "tf_isf",
    "noun_count",
    "numeric_count",
];

/// One sentence of a cluster with everything the pipeline derives from it.
#[derive(Clone, Debug, PartialEq)]
pub struct SentenceRecord {
    pub cluster_id: String,
    pub doc_id: String,
    /// 1-based position inside its document.
    pub index_in_doc: usize,
    pub text: String,
    pub tokens: Vec<String>,
    pub features: [f64; 6],
    pub embedding: Vec<f64>,
    pub label: Option<Label>,
}

/// `2(N − i) / (N(N + 1))` for the `i`-th of `N` sentences (1-based).
pub fn sentence_position_score(i: usize, n: usize) -> Result<f64> {
    if i == 0 || i > n {
        return Err(Error::domain(format!("sentence index {i} outside 1..={n}")));
    }
    let (i, n) = (i as f64, n as f64);
    Ok(2.0 * (n - i) / (n * (n + 1.0)))
}

/// Share of tokens that lean positive or negative in the lexicon.
pub fn sentiment_score(tokens: &[String], lexicon: &SentimentLexicon) -> f64 {
    if tokens.is_empty() {
        return 0.0;
    }
    let subjective = tokens
        .iter()
        .filter_map(|t| lexicon.get(t))
        .filter(|(pos, neg)| pos != neg)
        .count();
    subjective as f64 / tokens.len() as f64
}

pub fn cosine_similarity(a: &[f64], b: &[f64]) -> f64 {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    if na == 0.0 || nb == 0.0 {
        0.0
    } else {
        (dot / (na * nb)).clamp(-1.0, 1.0)
    }
}

/// How cohesion similarities are combined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Cohesion {
    #[default]
    Mean,
    Sum,
}

impl FromStr for Cohesion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mean" => Ok(Cohesion::Mean),
            "sum" => Ok(Cohesion::Sum),
            other => Err(Error::config(format!("unknown cohesion mode `{other}` (mean|sum)"))),
        }
    }
}

impl fmt::Display for Cohesion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cohesion::Mean => "mean",
            Cohesion::Sum => "sum",
        })
    }
}

/// Cosine similarity of sentence `target` to every other sentence of its document.
pub fn cohesion_score(target: usize, embeddings: &[Vec<f64>], mode: Cohesion) -> f64 {
    if embeddings.len() < 2 {
        return 0.0;
    }
    let total: f64 = embeddings
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != target)
        .map(|(_, e)| cosine_similarity(&embeddings[target], e))
        .sum();
    match mode {
        Cohesion::Mean => total / (embeddings.len() - 1) as f64,
        Cohesion::Sum => total,
    }
}

/// Sentence frequencies over a cluster, for tf-isf scoring.
#[derive(Clone, Debug)]
pub struct SentenceFrequency {
    sentences: usize,
    frequency: HashMap<String, usize>,
}

impl SentenceFrequency {
    pub fn new<S: AsRef<[String]>>(corpus: &[S]) -> Self {
        let mut frequency: HashMap<String, usize> = HashMap::new();
        for sentence in corpus {
            let mut seen: Vec<&String> = sentence.as_ref().iter().collect();
            seen.sort();
            seen.dedup();
            for t in seen {
                *frequency.entry(t.clone()).or_default() += 1;
            }
        }
        SentenceFrequency { sentences: corpus.len(), frequency }
    }

    /// `Σ_t tf(t) · ln(S / sf(t))` over distinct tokens. Tokens unseen in the
    /// corpus count as occurring in one sentence.
    pub fn score(&self, tokens: &[String]) -> f64 {
        let mut tf: HashMap<&str, usize> = HashMap::new();
        for t in tokens {
            *tf.entry(t.as_str()).or_default() += 1;
        }
        let s = self.sentences.max(1) as f64;
        let mut terms: Vec<(&str, usize)> = tf.into_iter().collect();
        // fixed summation order keeps the result bit-reproducible
        terms.sort_unstable();
        terms
            .into_iter()
            .map(|(t, count)| {
                let sf = self.frequency.get(t).copied().unwrap_or(0).max(1) as f64;
                count as f64 * (s / sf).ln()
            })
            .sum()
    }
}

pub fn tf_isf_score<S: AsRef<[String]>>(tokens: &[String], corpus: &[S]) -> f64 {
    SentenceFrequency::new(corpus).score(tokens)
}

/// Capitalized words past the first word of the sentence, plus words whose
/// tokens appear in the optional noun lexicon. Each word counts at most once.
pub fn noun_presence(text: &str, nouns: Option<&NounLexicon>) -> usize {
    text.split_whitespace()
        .enumerate()
        .filter(|&(pos, raw)| {
            let word = raw.trim_matches(|c: char| !c.is_alphanumeric());
            if word.is_empty() {
                return false;
            }
            let capitalized = pos > 0
                && word != "I"
                && word.chars().next().is_some_and(char::is_uppercase);
            capitalized || nouns.is_some_and(|n| tokenize(word).iter().any(|t| n.contains(t)))
        })
        .count()
}

pub fn numeric_presence(tokens: &[String]) -> usize {
    tokens.iter().filter(|t| is_numeric(t)).count()
}

/// Mean of the in-vocabulary token vectors; the zero vector when none are known.
pub fn embed_sentence(tokens: &[String], vectors: &WordVectors) -> Vec<f64> {
    let mut sum = vec![0.0; vectors.dim()];
    let mut known = 0usize;
    for v in tokens.iter().filter_map(|t| vectors.get(t)) {
        for (s, x) in sum.iter_mut().zip(v) {
            *s += x;
        }
        known += 1;
    }
    if known > 0 {
        for s in &mut sum {
            *s /= known as f64;
        }
    }
    sum
}

/// Turns raw documents into [`SentenceRecord`]s with all six features.
#[derive(Clone, Copy, Debug)]
pub struct FeatureExtractor<'a> {
    pub vectors: &'a WordVectors,
    pub sentiment: Option<&'a SentimentLexicon>,
    pub nouns: Option<&'a NounLexicon>,
    pub cohesion: Cohesion,
}

impl<'a> FeatureExtractor<'a> {
    pub fn new(vectors: &'a WordVectors) -> Self {
        FeatureExtractor { vectors, sentiment: None, nouns: None, cohesion: Cohesion::Mean }
    }

    /// `docs` is a list of `(doc_id, text)` pairs in cluster order.
    pub fn extract_cluster(&self, cluster_id: &str, docs: &[(String, String)]) -> Vec<SentenceRecord> {
        let empty_lexicon = SentimentLexicon::default();
        let lexicon = self.sentiment.unwrap_or(&empty_lexicon);

        let mut records = Vec::new();
        let mut doc_ranges = Vec::new();
        for (doc_id, text) in docs {
            let sentences = split_sentences(text);
            let start = records.len();
            for (i, sentence) in sentences.into_iter().enumerate() {
                let tokens = tokenize(&sentence);
                let embedding = embed_sentence(&tokens, self.vectors);
                records.push(SentenceRecord {
                    cluster_id: cluster_id.to_owned(),
                    doc_id: doc_id.clone(),
                    index_in_doc: i + 1,
                    text: sentence,
                    tokens,
                    features: [0.0; 6],
                    embedding,
                    label: None,
                });
            }
            doc_ranges.push(start..records.len());
        }

        let isf = SentenceFrequency::new(&records.iter().map(|r| r.tokens.clone()).collect::<Vec<_>>());
        for range in doc_ranges {
            let n = range.len();
            let embeddings: Vec<Vec<f64>> = records[range.clone()].iter().map(|r| r.embedding.clone()).collect();
            for (local, record) in records[range].iter_mut().enumerate() {
                record.features = [
                    sentence_position_score(local + 1, n).expect("index within document"),
                    sentiment_score(&record.tokens, lexicon),
                    cohesion_score(local, &embeddings, self.cohesion),
                    isf.score(&record.tokens),
                    noun_presence(&record.text, self.nouns) as f64,
                    numeric_presence(&record.tokens) as f64,
                ];
            }
        }
        records
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(words: &[&str]) -> Vec<String> {
        words.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn position_examples() {
        assert_eq!(sentence_position_score(3, 3).unwrap(), 0.0);
        assert!((sentence_position_score(1, 3).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!((sentence_position_score(2, 4).unwrap() - 0.2).abs() < 1e-15);
        assert!(sentence_position_score(0, 3).is_err());
        assert!(sentence_position_score(4, 3).is_err());
    }

    #[test]
    fn sentiment_examples() {
        let mut lex = SentimentLexicon::default();
        lex.insert("good", 0.8, 0.0).unwrap();
        lex.insert("bad", 0.0, 0.7).unwrap();
        lex.insert("meh", 0.2, 0.2).unwrap();
        assert_eq!(sentiment_score(&toks(&["table", "chair"]), &lex), 0.0);
        assert!((sentiment_score(&toks(&["good", "bad", "table"]), &lex) - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(sentiment_score(&toks(&["good", "bad"]), &lex), 1.0);
        assert_eq!(sentiment_score(&toks(&["meh"]), &lex), 0.0);
        assert_eq!(sentiment_score(&[], &lex), 0.0);
    }

    #[test]
    fn cohesion_examples() {
        assert_eq!(cohesion_score(0, &[vec![1.0, 2.0]], Cohesion::Mean), 0.0);
        let same = vec![vec![1.0, 2.0], vec![1.0, 2.0]];
        assert!((cohesion_score(0, &same, Cohesion::Mean) - 1.0).abs() < 1e-12);
        let orth = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        assert_eq!(cohesion_score(0, &orth, Cohesion::Mean), 0.0);
        let with_zero = vec![vec![1.0, 0.0], vec![0.0, 0.0], vec![2.0, 0.0]];
        assert!((cohesion_score(0, &with_zero, Cohesion::Mean) - 0.5).abs() < 1e-12);
        assert!((cohesion_score(0, &with_zero, Cohesion::Sum) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn tf_isf_examples() {
        let corpus = vec![
            toks(&["the", "cat", "cat"]),
            toks(&["the", "dog"]),
            toks(&["the", "cow"]),
            toks(&["the", "hen"]),
        ];
        assert_eq!(tf_isf_score(&toks(&["the"]), &corpus), 0.0);
        assert!((tf_isf_score(&corpus[0], &corpus) - 2.0 * 4f64.ln()).abs() < 1e-12);
        let single = vec![toks(&["a", "b", "a"])];
        assert_eq!(tf_isf_score(&single[0], &single), 0.0);
    }

    #[test]
    fn noun_examples() {
        assert_eq!(noun_presence("the cat sat", None), 0);
        assert_eq!(noun_presence("He met John in Delhi", None), 2);
        assert_eq!(noun_presence("Paris is big", None), 0);
        let nouns: NounLexicon = ["cat", "paris"].into_iter().collect();
        assert_eq!(noun_presence("the cat sat", Some(&nouns)), 1);
        assert_eq!(noun_presence("Paris is big", Some(&nouns)), 1);
        assert_eq!(noun_presence("so I met Paris.", Some(&nouns)), 1);
    }

    #[test]
    fn numeric_examples() {
        assert_eq!(numeric_presence(&toks(&["the", "42", "men"])), 1);
        assert_eq!(numeric_presence(&toks(&["no", "digits"])), 0);
        assert_eq!(numeric_presence(&toks(&["3", "14", "1998"])), 3);
    }

    #[test]
    fn embedding_examples() {
        let mut v = WordVectors::new(2);
        v.insert("x", vec![1.0, 0.0]).unwrap();
        v.insert("y", vec![0.0, 1.0]).unwrap();
        assert_eq!(embed_sentence(&toks(&["zz", "qq"]), &v), vec![0.0, 0.0]);
        assert_eq!(embed_sentence(&toks(&["x", "zz"]), &v), vec![1.0, 0.0]);
        assert_eq!(embed_sentence(&toks(&["x", "y"]), &v), vec![0.5, 0.5]);
    }

    #[test]
    fn extract_cluster_features() {
        let mut v = WordVectors::new(2);
        v.insert("cat", vec![1.0, 0.0]).unwrap();
        v.insert("dog", vec![0.0, 1.0]).unwrap();
        let docs = vec![
            ("d1".to_string(), "The cat sat. The dog ran in 1998. A cat again.".to_string()),
            ("d2".to_string(), "Only one sentence about Rome here.".to_string()),
        ];
        let recs = FeatureExtractor::new(&v).extract_cluster("c1", &docs);
        assert_eq!(recs.len(), 4);
        assert_eq!(recs[1].index_in_doc, 2);
        assert_eq!(recs[3].doc_id, "d2");
        assert_eq!(recs[3].features[0], 0.0);
        assert_eq!(recs[3].features[2], 0.0);
        assert_eq!(recs[1].features[5], 1.0);
        assert_eq!(recs[3].features[4], 1.0);
        assert!(recs.iter().all(|r| r.features.iter().all(|f| f.is_finite())));
    }
}
