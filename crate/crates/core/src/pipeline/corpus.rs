use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

/// One document cluster: `<root>/<id>/docs/*.txt` and `<root>/<id>/refs/*.txt`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cluster {
    pub id: String,
    /// `(doc_id, text)` in file-name order.
    pub docs: Vec<(String, String)>,
    pub references: Vec<String>,
}

fn sorted_entries(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut entries = std::fs::read_dir(dir)
        .map_err(|e| Error::io(dir, e))?
        .map(|e| e.map(|e| e.path()).map_err(|err| Error::io(dir, err)))
        .collect::<Result<Vec<_>>>()?;
    entries.sort();
    Ok(entries)
}

fn read_txt_files(dir: &Path) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for path in sorted_entries(dir)? {
        if path.is_file() && path.extension().is_some_and(|e| e == "txt") {
            let text = std::fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
            let stem = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            out.push((stem, text));
        }
    }
    Ok(out)
}

/// Loads every cluster directory under `root`, sorted by name. A cluster
/// without a `refs/` directory has no references.
pub fn load_corpus(root: &Path) -> Result<Vec<Cluster>> {
    let mut clusters = Vec::new();
    for dir in sorted_entries(root)? {
        if !dir.is_dir() {
            continue;
        }
        let id = dir.file_name().unwrap_or_default().to_string_lossy().into_owned();
        let docs_dir = dir.join("docs");
        if !docs_dir.is_dir() {
            return Err(Error::io(
                &docs_dir,
                std::io::Error::new(std::io::ErrorKind::NotFound, "cluster has no docs/ directory"),
            ));
        }
        let docs = read_txt_files(&docs_dir)?;
        let refs_dir = dir.join("refs");
        let references = if refs_dir.is_dir() {
            read_txt_files(&refs_dir)?.into_iter().map(|(_, t)| t).collect()
        } else {
            Vec::new()
        };
        clusters.push(Cluster { id, docs, references });
    }
    if clusters.is_empty() {
        return Err(Error::io(
            root,
            std::io::Error::new(std::io::ErrorKind::NotFound, "no cluster directories"),
        ));
    }
    Ok(clusters)
}

/// Reads every `*.txt` file of a directory, sorted by name.
pub fn load_references(dir: &Path) -> Result<Vec<String>> {
    let refs: Vec<String> = read_txt_files(dir)?.into_iter().map(|(_, t)| t).collect();
    if refs.is_empty() {
        return Err(Error::io(
            dir,
            std::io::Error::new(std::io::ErrorKind::NotFound, "no reference *.txt files"),
        ));
    }
    Ok(refs)
}
