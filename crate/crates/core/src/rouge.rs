//! ROUGE-N, ROUGE-L and ROUGE-SU over token lists.
//!
//! Overlaps are clipped counts. With several references the score against the
//! single best-matching reference is reported: highest recall for ROUGE-N and
//! ROUGE-SU, highest F1 for ROUGE-L. No stemming or stopword removal.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_SKIP: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Metric {
    RougeN(usize),
    RougeL,
    RougeSU(usize),
}

impl Metric {
    /// `rouge1`, `rouge2`, `rougeL`, `rougeSU4`, ...
    pub fn name(&self) -> String {
        match self {
            Metric::RougeN(n) => format!("rouge{n}"),
            Metric::RougeL => "rougeL".to_owned(),
            Metric::RougeSU(skip) => format!("rougeSU{skip}"),
        }
    }

    /// Column label in the style of the published result tables.
    pub fn display_name(&self) -> String {
        match self {
            Metric::RougeN(n) => format!("ROUGE-{n}"),
            Metric::RougeL => "ROUGE-L".to_owned(),
            Metric::RougeSU(_) => "ROUGE-SU".to_owned(),
        }
    }

    /// ROUGE-1, ROUGE-2, ROUGE-L, ROUGE-SU4.
    pub fn standard() -> Vec<Metric> {
        vec![Metric::RougeN(1), Metric::RougeN(2), Metric::RougeL, Metric::RougeSU(DEFAULT_MAX_SKIP)]
    }

    /// Parses a metric name; a bare `rougeSU` takes `default_skip`.
    pub fn parse_with_skip(s: &str, default_skip: usize) -> Result<Metric> {
        let bad = || Error::config(format!("unknown metric `{s}` (expected rougeN, rougeL or rougeSU[k])"));
        let rest = s.strip_prefix("rouge").ok_or_else(bad)?;
        if rest == "L" {
            Ok(Metric::RougeL)
        } else if let Some(skip) = rest.strip_prefix("SU") {
            if skip.is_empty() {
                Ok(Metric::RougeSU(default_skip))
            } else {
                skip.parse().map(Metric::RougeSU).map_err(|_| bad())
            }
        } else {
            match rest.parse::<usize>() {
                Ok(n) if n >= 1 => Ok(Metric::RougeN(n)),
                _ => Err(bad()),
            }
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Metric::parse_with_skip(s, DEFAULT_MAX_SKIP)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RougeScore {
    pub metric: Metric,
    pub recall: f64,
    pub precision: f64,
    pub f1: f64,
}

impl RougeScore {
    pub fn zero(metric: Metric) -> Self {
        RougeScore { metric, recall: 0.0, precision: 0.0, f1: 0.0 }
    }

    fn from_counts(metric: Metric, overlap: usize, reference_total: usize, candidate_total: usize) -> Self {
        let ratio = |num: usize, den: usize| if den == 0 { 0.0 } else { num as f64 / den as f64 };
        let recall = ratio(overlap, reference_total);
        let precision = ratio(overlap, candidate_total);
        RougeScore { metric, recall, precision, f1: f1(recall, precision) }
    }

    /// `metric,recall,precision,f1` row.
    pub fn csv_row(&self) -> String {
        format!("{},{:.6},{:.6},{:.6}", self.metric, self.recall, self.precision, self.f1)
    }
}

pub fn f1(recall: f64, precision: f64) -> f64 {
    if recall + precision == 0.0 {
        0.0
    } else {
        2.0 * recall * precision / (recall + precision)
    }
}

type Counts<'a> = HashMap<Vec<&'a str>, usize>;

fn ngram_counts<S: AsRef<str>>(tokens: &[S], n: usize) -> Counts<'_> {
    let mut counts = Counts::new();
    if tokens.len() >= n {
        for w in tokens.windows(n) {
            *counts.entry(w.iter().map(AsRef::as_ref).collect()).or_default() += 1;
        }
    }
    counts
}

/// Unigrams plus ordered pairs `(t_i, t_j)` with at most `max_skip` tokens between them.
pub fn skip_units<S: AsRef<str>>(tokens: &[S], max_skip: usize) -> HashMap<Vec<&str>, usize> {
    let mut counts = ngram_counts(tokens, 1);
    for i in 0..tokens.len() {
        let last = (i + 1 + max_skip).min(tokens.len().saturating_sub(1));
        for j in i + 1..=last {
            *counts.entry(vec![tokens[i].as_ref(), tokens[j].as_ref()]).or_default() += 1;
        }
    }
    counts
}

fn clipped_overlap(a: &Counts<'_>, b: &Counts<'_>) -> usize {
    a.iter().map(|(g, &c)| c.min(b.get(g).copied().unwrap_or(0))).sum()
}

fn total(c: &Counts<'_>) -> usize {
    c.values().sum()
}

fn check_refs<R>(references: &[R]) -> Result<()> {
    if references.is_empty() {
        Err(Error::domain("ROUGE needs at least one reference"))
    } else {
        Ok(())
    }
}

fn best_by_recall(scores: impl Iterator<Item = RougeScore>, metric: Metric) -> RougeScore {
    scores.fold(RougeScore::zero(metric), |best, s| {
        if s.recall > best.recall || (s.recall == best.recall && s.f1 > best.f1) {
            s
        } else {
            best
        }
    })
}

fn count_based<S, R, F>(candidate: &[S], references: &[R], metric: Metric, units: F) -> Result<RougeScore>
where
    S: AsRef<str>,
    R: AsRef<[S]>,
    F: for<'a> Fn(&'a [S]) -> Counts<'a>,
{
    check_refs(references)?;
    if candidate.is_empty() {
        return Ok(RougeScore::zero(metric));
    }
    let cand = units(candidate);
    let cand_total = total(&cand);
    Ok(best_by_recall(
        references.iter().map(|r| {
            let refc = units(r.as_ref());
            RougeScore::from_counts(metric, clipped_overlap(&cand, &refc), total(&refc), cand_total)
        }),
        metric,
    ))
}

pub fn rouge_n<S, R>(candidate: &[S], references: &[R], n: usize) -> Result<RougeScore>
where
    S: AsRef<str>,
    R: AsRef<[S]>,
{
    if n == 0 {
        return Err(Error::config("ROUGE-N needs n >= 1"));
    }
    count_based(candidate, references, Metric::RougeN(n), |t| ngram_counts(t, n))
}

pub fn rouge_su<S, R>(candidate: &[S], references: &[R], max_skip: usize) -> Result<RougeScore>
where
    S: AsRef<str>,
    R: AsRef<[S]>,
{
    count_based(candidate, references, Metric::RougeSU(max_skip), |t| skip_units(t, max_skip))
}

/// Longest common subsequence length by dynamic programming.
/// String equality with cheap rejections first; most distinct tokens differ in length or first byte.
#[inline]
fn same_token(x: &str, y: &str) -> bool {
    x.len() == y.len() && x.as_bytes().first() == y.as_bytes().first() && (x.as_ptr() == y.as_ptr() || x == y)
}

pub fn lcs_len<S: AsRef<str>>(a: &[S], b: &[S]) -> usize {
    if b.len() <= 64 {
        lcs_len_bits(a, b)
    } else {
        lcs_len_dp(a, b)
    }
}

/// Length plus the first eight bytes; equal keys decide equality for tokens of at most eight bytes.
fn token_key(t: &str) -> (u64, u32) {
    let bytes = t.as_bytes();
    let prefix = bytes.iter().take(8).enumerate().fold(0u64, |k, (i, &c)| k | u64::from(c) << (8 * i));
    (prefix, bytes.len() as u32)
}

/// Bit-parallel LCS for `b.len() <= 64`: bit j of `v` is cleared once column j
/// has contributed a match, so the LCS is the number of cleared bits.
fn lcs_len_bits<S: AsRef<str>>(a: &[S], b: &[S]) -> usize {
    let m = b.len();
    debug_assert!(m <= 64);
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut keys = [(0u64, 0u32); 64];
    for (k, y) in keys.iter_mut().zip(b) {
        *k = token_key(y.as_ref());
    }
    let keys = &keys[..m];
    let mut v = all;
    for x in a {
        let x = x.as_ref();
        let kx = token_key(x);
        let matches = if kx.1 <= 8 {
            keys.iter().enumerate().fold(0u64, |acc, (j, &k)| acc | (u64::from(k == kx) << j))
        } else {
            keys.iter()
                .zip(b)
                .enumerate()
                .fold(0u64, |acc, (j, (&k, y))| acc | (u64::from(k == kx && x == y.as_ref()) << j))
        };
        let u = v & matches;
        v = (v.wrapping_add(u) | (v - u)) & all;
    }
    m - v.count_ones() as usize
}

fn lcs_len_dp<S: AsRef<str>>(a: &[S], b: &[S]) -> usize {
    // single DP row; `diag` carries the cell up-left of the one being written
    let mut row = vec![0u32; b.len() + 1];
    for x in a {
        let x = x.as_ref();
        let mut diag = 0;
        for (j, y) in b.iter().enumerate() {
            let up = row[j + 1];
            row[j + 1] = if same_token(x, y.as_ref()) { diag + 1 } else { row[j].max(up) };
            diag = up;
        }
    }
    row[b.len()] as usize
}

pub fn rouge_l<S, R>(candidate: &[S], references: &[R]) -> Result<RougeScore>
where
    S: AsRef<str>,
    R: AsRef<[S]>,
{
    check_refs(references)?;
    let metric = Metric::RougeL;
    if candidate.is_empty() {
        return Ok(RougeScore::zero(metric));
    }
    Ok(references
        .iter()
        .map(|r| {
            let r = r.as_ref();
            RougeScore::from_counts(metric, lcs_len(candidate, r), r.len(), candidate.len())
        })
        .fold(RougeScore::zero(metric), |best, s| if s.f1 > best.f1 { s } else { best }))
}

pub fn score<S, R>(metric: Metric, candidate: &[S], references: &[R]) -> Result<RougeScore>
where
    S: AsRef<str>,
    R: AsRef<[S]>,
{
    match metric {
        Metric::RougeN(n) => rouge_n(candidate, references, n),
        Metric::RougeL => rouge_l(candidate, references),
        Metric::RougeSU(skip) => rouge_su(candidate, references, skip),
    }
}
