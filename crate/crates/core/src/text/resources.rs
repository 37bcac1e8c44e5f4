use std::collections::{HashMap, HashSet};
use std::io::BufRead;
use std::path::Path;

use crate::error::{Error, Result};

fn open(path: &Path) -> Result<std::io::BufReader<std::fs::File>> {
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    Ok(std::io::BufReader::new(file))
}

/// Token → fixed-dimension real vector, loaded from `token v1 ... vD` lines.
#[derive(Clone, Debug, Default)]
pub struct WordVectors {
    dim: usize,
    vectors: HashMap<String, Vec<f64>>,
}

impl WordVectors {
    pub fn new(dim: usize) -> Self {
        WordVectors { dim, vectors: HashMap::new() }
    }

    pub fn insert(&mut self, token: impl Into<String>, vector: Vec<f64>) -> Result<()> {
        if vector.len() != self.dim {
            return Err(Error::config(format!(
                "vector of dimension {} in a {}-dimensional vocabulary",
                vector.len(),
                self.dim
            )));
        }
        self.vectors.insert(token.into(), vector);
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn get(&self, token: &str) -> Option<&[f64]> {
        self.vectors.get(token).map(Vec::as_slice)
    }

    /// Later duplicates of a token override earlier ones.
    pub fn read<R: BufRead>(reader: R, source_name: &str) -> Result<Self> {
        let mut out: Option<WordVectors> = None;
        for (i, line) in reader.lines().enumerate() {
            let line_no = i as u64 + 1;
            let line = line.map_err(|e| Error::parse(source_name, line_no, e.to_string()))?;
            let mut fields = line.split_whitespace();
            let Some(token) = fields.next() else { continue };
            let vector = fields
                .map(|f| {
                    f.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(|| {
                        Error::parse(source_name, line_no, format!("bad vector component `{f}`"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if vector.is_empty() {
                return Err(Error::parse(source_name, line_no, "token without vector"));
            }
            let vocab = out.get_or_insert_with(|| WordVectors::new(vector.len()));
            if vector.len() != vocab.dim {
                return Err(Error::parse(
                    source_name,
                    line_no,
                    format!("dimension {} differs from {}", vector.len(), vocab.dim),
                ));
            }
            vocab.vectors.insert(token.to_owned(), vector);
        }
        out.ok_or_else(|| Error::parse(source_name, 0, "no word vectors found"))
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::read(open(path)?, &path.display().to_string())
    }
}

/// Token → (positive, negative) polarity scores in `[0, 1]`.
#[derive(Clone, Debug, Default)]
pub struct SentimentLexicon {
    scores: HashMap<String, (f64, f64)>,
}

impl SentimentLexicon {
    pub fn insert(&mut self, token: impl Into<String>, positive: f64, negative: f64) -> Result<()> {
        if !(0.0..=1.0).contains(&positive) || !(0.0..=1.0).contains(&negative) {
            return Err(Error::config("sentiment scores must lie in [0, 1]"));
        }
        self.scores.insert(token.into(), (positive, negative));
        Ok(())
    }

    pub fn get(&self, token: &str) -> Option<(f64, f64)> {
        self.scores.get(token).copied()
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    /// `token<TAB>pos<TAB>neg` lines; blank lines and `#` comments are skipped.
    pub fn read<R: BufRead>(reader: R, source_name: &str) -> Result<Self> {
        let mut lexicon = SentimentLexicon::default();
        for (i, line) in reader.lines().enumerate() {
            let line_no = i as u64 + 1;
            let line = line.map_err(|e| Error::parse(source_name, line_no, e.to_string()))?;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 {
                return Err(Error::parse(source_name, line_no, "expected token<TAB>pos<TAB>neg"));
            }
            let score = |f: &str| {
                f.trim()
                    .parse::<f64>()
                    .ok()
                    .filter(|v| (0.0..=1.0).contains(v))
                    .ok_or_else(|| Error::parse(source_name, line_no, format!("bad score `{f}`")))
            };
            let (pos, neg) = (score(fields[1])?, score(fields[2])?);
            lexicon.scores.insert(fields[0].trim().to_lowercase(), (pos, neg));
        }
        Ok(lexicon)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::read(open(path)?, &path.display().to_string())
    }
}

/// Lowercased tokens known to be nouns, one per line.
#[derive(Clone, Debug, Default)]
pub struct NounLexicon {
    nouns: HashSet<String>,
}

impl NounLexicon {
    pub fn contains(&self, token: &str) -> bool {
        self.nouns.contains(token)
    }

    pub fn read<R: BufRead>(reader: R, source_name: &str) -> Result<Self> {
        let mut nouns = HashSet::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| Error::parse(source_name, i as u64 + 1, e.to_string()))?;
            let token = line.trim();
            if !token.is_empty() && !token.starts_with('#') {
                nouns.insert(token.to_lowercase());
            }
        }
        Ok(NounLexicon { nouns })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::read(open(path)?, &path.display().to_string())
    }
}

impl<S: Into<String>> FromIterator<S> for NounLexicon {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        NounLexicon {
            nouns: iter.into_iter().map(|s| s.into().to_lowercase()).collect(),
        }
    }
}
