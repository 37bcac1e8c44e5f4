use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Display;
use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// Set of object indices into a [`DecisionTable`].
pub type ObjectSet = BTreeSet<usize>;

/// Name of the optional trailing CSV column that holds the decision class.
pub const DECISION_COLUMN: &str = "decision";

/// Interned attribute or decision value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(u32);

/// Objects described by discrete attribute values, with an optional decision column.
#[derive(Clone, Debug)]
pub struct DecisionTable {
    object_ids: Vec<String>,
    attributes: Vec<String>,
    rows: Vec<Vec<Symbol>>,
    decision: Option<Vec<Symbol>>,
    symbols: Vec<String>,
    symbol_index: HashMap<String, Symbol>,
}

impl DecisionTable {
    /// Builds a table from displayable cell values (integers, strings, ...).
    pub fn new<V: Display, D: Display>(
        object_ids: Vec<String>,
        attributes: Vec<String>,
        rows: Vec<Vec<V>>,
        decision: Option<Vec<D>>,
    ) -> Result<Self> {
        if object_ids.len() != rows.len() {
            return Err(Error::config(format!(
                "{} object ids for {} rows",
                object_ids.len(),
                rows.len()
            )));
        }
        check_unique(&object_ids, "object id")?;
        check_unique(&attributes, "attribute name")?;

        let mut table = DecisionTable {
            object_ids,
            attributes,
            rows: Vec::with_capacity(rows.len()),
            decision: None,
            symbols: Vec::new(),
            symbol_index: HashMap::new(),
        };
        for (i, row) in rows.iter().enumerate() {
            if row.len() != table.attributes.len() {
                return Err(Error::config(format!(
                    "row {} has {} values, expected {}",
                    table.object_ids[i],
                    row.len(),
                    table.attributes.len()
                )));
            }
            let interned = row.iter().map(|v| table.intern(&v.to_string())).collect();
            table.rows.push(interned);
        }
        if let Some(decision) = decision {
            if decision.len() != table.rows.len() {
                return Err(Error::config(format!(
                    "decision column has {} entries for {} objects",
                    decision.len(),
                    table.rows.len()
                )));
            }
            let interned = decision.iter().map(|v| table.intern(&v.to_string())).collect();
            table.decision = Some(interned);
        }
        Ok(table)
    }

    /// Builds a table whose objects are named `x1..xn` and attributes `a1..ak`.
    pub fn from_rows<V: Display, D: Display>(
        rows: Vec<Vec<V>>,
        decision: Option<Vec<D>>,
    ) -> Result<Self> {
        let width = rows.first().map_or(0, Vec::len);
        let ids = (1..=rows.len()).map(|i| format!("x{i}")).collect();
        let attrs = (1..=width).map(|a| format!("a{a}")).collect();
        Self::new(ids, attrs, rows, decision)
    }

    fn intern(&mut self, value: &str) -> Symbol {
        if let Some(&sym) = self.symbol_index.get(value) {
            return sym;
        }
        let sym = Symbol(self.symbols.len() as u32);
        self.symbols.push(value.to_owned());
        self.symbol_index.insert(value.to_owned(), sym);
        sym
    }

    pub fn n_objects(&self) -> usize {
        self.rows.len()
    }

    pub fn n_attributes(&self) -> usize {
        self.attributes.len()
    }

    pub fn object_ids(&self) -> &[String] {
        &self.object_ids
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn row(&self, object: usize) -> &[Symbol] {
        &self.rows[object]
    }

    pub fn value(&self, object: usize, attr: usize) -> Symbol {
        self.rows[object][attr]
    }

    pub fn decision(&self) -> Option<&[Symbol]> {
        self.decision.as_deref()
    }

    pub fn symbol_name(&self, sym: Symbol) -> &str {
        &self.symbols[sym.0 as usize]
    }

    pub fn lookup_symbol(&self, name: &str) -> Option<Symbol> {
        self.symbol_index.get(name).copied()
    }

    /// Indices of every attribute, in column order.
    pub fn all_attributes(&self) -> Vec<usize> {
        (0..self.attributes.len()).collect()
    }

    pub fn attribute_index(&self, name: &str) -> Result<usize> {
        self.attributes
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| Error::config(format!("unknown attribute `{name}`")))
    }

    pub fn attribute_indices<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>> {
        names.iter().map(|n| self.attribute_index(n.as_ref())).collect()
    }

    pub fn object_index(&self, id: &str) -> Option<usize> {
        self.object_ids.iter().position(|o| o == id)
    }

    pub fn universe(&self) -> ObjectSet {
        (0..self.n_objects()).collect()
    }

    /// Objects whose decision value is named `class`.
    pub fn decision_class(&self, class: &str) -> Result<ObjectSet> {
        let decision = self
            .decision
            .as_ref()
            .ok_or_else(|| Error::config("table has no decision column"))?;
        Ok(match self.lookup_symbol(class) {
            Some(sym) => decision
                .iter()
                .enumerate()
                .filter(|(_, &d)| d == sym)
                .map(|(i, _)| i)
                .collect(),
            None => ObjectSet::new(),
        })
    }

    /// Objects whose value on attribute `attr` is named `value`.
    pub fn objects_where(&self, attr: usize, value: &str) -> ObjectSet {
        match self.lookup_symbol(value) {
            Some(sym) => (0..self.n_objects())
                .filter(|&i| self.rows[i][attr] == sym)
                .collect(),
            None => ObjectSet::new(),
        }
    }

    /// Returns a copy restricted to the given attribute columns (decision kept).
    pub fn project(&self, attrs: &[usize]) -> Result<DecisionTable> {
        self.check_attrs(attrs)?;
        let rows: Vec<Vec<&str>> = self
            .rows
            .iter()
            .map(|r| attrs.iter().map(|&a| self.symbol_name(r[a])).collect())
            .collect();
        let decision = self
            .decision
            .as_ref()
            .map(|d| d.iter().map(|&s| self.symbol_name(s)).collect::<Vec<_>>());
        DecisionTable::new(
            self.object_ids.clone(),
            attrs.iter().map(|&a| self.attributes[a].clone()).collect(),
            rows,
            decision,
        )
    }

    pub(crate) fn check_attrs(&self, attrs: &[usize]) -> Result<()> {
        if attrs.is_empty() {
            return Err(Error::config("attribute subset must be nonempty"));
        }
        if let Some(&bad) = attrs.iter().find(|&&a| a >= self.attributes.len()) {
            return Err(Error::config(format!(
                "attribute index {bad} out of range ({} attributes)",
                self.attributes.len()
            )));
        }
        Ok(())
    }

    pub(crate) fn check_object(&self, object: usize) -> Result<()> {
        if object >= self.n_objects() {
            return Err(Error::domain(format!(
                "object index {object} outside universe of {} objects",
                self.n_objects()
            )));
        }
        Ok(())
    }

    pub(crate) fn check_subset(&self, set: &ObjectSet) -> Result<()> {
        match set.iter().next_back() {
            Some(&max) if max >= self.n_objects() => Err(Error::domain(format!(
                "object index {max} outside universe of {} objects",
                self.n_objects()
            ))),
            _ => Ok(()),
        }
    }

    /// Reads the `id,<attr1>,...,<attrK>[,decision]` CSV layout.
    pub fn read_csv<R: Read>(reader: R, source_name: &str) -> Result<Self> {
        let mut csv = csv::ReaderBuilder::new()
            .has_headers(true)
            .flexible(false)
            .from_reader(reader);
        let csv_err = |e: csv::Error| {
            let line = e.position().map_or(0, |p| p.line());
            Error::parse(source_name, line, e.to_string())
        };
        let header = csv.headers().map_err(csv_err)?.clone();
        let columns: Vec<String> = header.iter().map(|h| h.trim().to_owned()).collect();
        if columns.first().map(String::as_str) != Some("id") {
            return Err(Error::parse(source_name, 1, "first column must be `id`"));
        }
        let has_decision = columns.len() > 1 && columns.last().unwrap() == DECISION_COLUMN;
        let n_attrs = columns.len() - 1 - usize::from(has_decision);
        if n_attrs == 0 {
            return Err(Error::parse(source_name, 1, "no attribute columns"));
        }
        let attributes = columns[1..=n_attrs].to_vec();

        let mut ids = Vec::new();
        let mut rows = Vec::new();
        let mut decision = Vec::new();
        for record in csv.records() {
            let record = record.map_err(csv_err)?;
            let line = record.position().map_or(0, |p| p.line());
            if let Some(col) = record.iter().position(|c| c.trim().is_empty()) {
                return Err(Error::parse(
                    source_name,
                    line,
                    format!("missing value in column `{}`", columns[col]),
                ));
            }
            let cells: Vec<&str> = record.iter().map(str::trim).collect();
            ids.push(cells[0].to_owned());
            rows.push(cells[1..=n_attrs].iter().map(|c| c.to_string()).collect::<Vec<_>>());
            if has_decision {
                decision.push(cells[n_attrs + 1].to_owned());
            }
        }
        DecisionTable::new(ids, attributes, rows, has_decision.then_some(decision)).map_err(
            |e| match e {
                Error::Config(msg) => Error::parse(source_name, 0, msg),
                other => other,
            },
        )
    }

    pub fn read_csv_path(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
        Self::read_csv(std::io::BufReader::new(file), &path.display().to_string())
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut csv = csv::Writer::from_writer(writer);
        let to_err = |e: csv::Error| Error::Internal(format!("csv write failed: {e}"));
        let mut header = vec!["id"];
        header.extend(self.attributes.iter().map(String::as_str));
        if self.decision.is_some() {
            header.push(DECISION_COLUMN);
        }
        csv.write_record(&header).map_err(to_err)?;
        for (i, row) in self.rows.iter().enumerate() {
            let mut record = vec![self.object_ids[i].as_str()];
            record.extend(row.iter().map(|&s| self.symbol_name(s)));
            if let Some(d) = &self.decision {
                record.push(self.symbol_name(d[i]));
            }
            csv.write_record(&record).map_err(to_err)?;
        }
        csv.flush()
            .map_err(|e| Error::Internal(format!("csv flush failed: {e}")))
    }
}

fn check_unique(names: &[String], what: &str) -> Result<()> {
    let mut seen = HashSet::new();
    for n in names {
        if !seen.insert(n.as_str()) {
            return Err(Error::config(format!("duplicate {what} `{n}`")));
        }
    }
    Ok(())
}
