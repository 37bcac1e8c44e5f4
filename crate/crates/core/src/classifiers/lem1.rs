//! LEM1: a global covering over the attributes, then one certain rule per
//! covering block that lies inside a lower approximation.

use std::fmt;

use super::{Classifier, Label, TrainingSet};
use crate::discretize::{apply_bins, fit_bins, Binning, Strategy};
use crate::error::{Error, Result};
use crate::rough::{indiscernibility_partition, DecisionTable, Partition, Symbol};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    /// `(attribute index, value)` pairs, all of which must match.
    pub conditions: Vec<(usize, String)>,
    pub class: String,
    pub support: usize,
}

impl Rule {
    pub fn matches<S: AsRef<str>>(&self, row: &[S]) -> bool {
        self.conditions
            .iter()
            .all(|(a, v)| row.get(*a).is_some_and(|x| x.as_ref() == v))
    }
}

/// Rules over a fixed attribute list, serialised one per line as
/// `attr=val & attr=val => class [support=n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleSet {
    pub attributes: Vec<String>,
    pub rules: Vec<Rule>,
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rule in &self.rules {
            let conds: Vec<String> = rule
                .conditions
                .iter()
                .map(|(a, v)| format!("{}={}", self.attributes[*a], v))
                .collect();
            writeln!(f, "{} => {} [support={}]", conds.join(" & "), rule.class, rule.support)?;
        }
        Ok(())
    }
}

impl RuleSet {
    pub fn parse(text: &str, attributes: &[String]) -> Result<Self> {
        let mut rules = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i as u64 + 1;
            let err = |msg: &str| Error::parse("rule set", line_no, msg.to_owned());
            if line.trim().is_empty() {
                continue;
            }
            let (lhs, rhs) = line.split_once(" => ").ok_or_else(|| err("missing `=>`"))?;
            let (class, support) = rhs
                .trim()
                .strip_suffix(']')
                .and_then(|r| r.rsplit_once(" [support="))
                .ok_or_else(|| err("missing `[support=n]`"))?;
            let support: usize = support.parse().map_err(|_| err("bad support count"))?;
            let conditions = lhs
                .split(" & ")
                .map(|c| {
                    let (name, value) = c.trim().split_once('=').ok_or_else(|| err("condition without `=`"))?;
                    let a = attributes
                        .iter()
                        .position(|x| x == name)
                        .ok_or_else(|| err(&format!("unknown attribute `{name}`")))?;
                    Ok((a, value.to_owned()))
                })
                .collect::<Result<Vec<_>>>()?;
            rules.push(Rule { conditions, class: class.trim().to_owned(), support });
        }
        Ok(RuleSet { attributes: attributes.to_vec(), rules })
    }
}

#[derive(Clone, Debug)]
pub struct Lem1Model {
    /// Attribute indices of the global covering, in table order.
    pub covering: Vec<usize>,
    pub rules: RuleSet,
}

fn partition_on(table: &DecisionTable, attrs: &[usize]) -> Result<Partition> {
    if attrs.is_empty() {
        Ok(Partition::by_key(table.n_objects(), |_| ()))
    } else {
        indiscernibility_partition(table, attrs)
    }
}

/// Decision value of each object if its full-attribute class is consistent
/// (it lies in a lower approximation), `None` for boundary objects.
pub(crate) fn certain_decision(table: &DecisionTable) -> Result<Vec<Option<Symbol>>> {
    let decision = table
        .decision()
        .ok_or_else(|| Error::config("LEM1 needs a decision column"))?;
    let full = partition_on(table, &table.all_attributes())?;
    let mut out = vec![None; table.n_objects()];
    for block in full.blocks() {
        let d = decision[block[0]];
        if block.iter().all(|&o| decision[o] == d) {
            for &o in block {
                out[o] = Some(d);
            }
        }
    }
    Ok(out)
}

pub fn lem1_train(table: &DecisionTable) -> Result<Lem1Model> {
    let certain = certain_decision(table)?;
    let target = Partition::by_key(table.n_objects(), |o| certain[o]);

    let mut covering = table.all_attributes();
    for a in table.all_attributes() {
        let candidate: Vec<usize> = covering.iter().copied().filter(|&c| c != a).collect();
        if partition_on(table, &candidate)?.refines(&target) {
            covering = candidate;
        }
    }

    let mut rules = Vec::new();
    if !covering.is_empty() {
        for block in partition_on(table, &covering)?.blocks() {
            if let Some(class) = certain[block[0]] {
                rules.push(Rule {
                    conditions: covering
                        .iter()
                        .map(|&a| (a, table.symbol_name(table.value(block[0], a)).to_owned()))
                        .collect(),
                    class: table.symbol_name(class).to_owned(),
                    support: block.len(),
                });
            }
        }
    }
    Ok(Lem1Model {
        covering,
        rules: RuleSet { attributes: table.attributes().to_vec(), rules },
    })
}

/// Class of the highest-support matching rule (ties prefer `relevant`, then
/// rule order); `fallback` when nothing matches.
pub fn lem1_predict<S: AsRef<str>>(rules: &RuleSet, row: &[S], fallback: &str) -> String {
    let relevant = Label::Relevant.as_str();
    let mut best: Option<&Rule> = None;
    for rule in rules.rules.iter().filter(|r| r.matches(row)) {
        best = match best {
            None => Some(rule),
            Some(b) if rule.support > b.support => Some(rule),
            Some(b) if rule.support == b.support && b.class != relevant && rule.class == relevant => Some(rule),
            keep => keep,
        };
    }
    best.map_or_else(|| fallback.to_owned(), |r| r.class.clone())
}

/// LEM1 over binned real features.
#[derive(Clone, Debug)]
pub struct Lem1Classifier {
    binning: Binning,
    model: Lem1Model,
    fallback: Label,
}

impl Lem1Classifier {
    pub fn fit(train: &TrainingSet, n_bins: usize, strategy: Strategy) -> Result<Self> {
        let binning = fit_bins(train.features(), n_bins, strategy)?;
        let codes = apply_bins(&binning, train.features())?;
        let ids = (1..=train.len()).map(|i| format!("s{i}")).collect();
        let attrs = (0..train.n_features()).map(|a| format!("f{a}")).collect();
        let decision: Vec<&str> = train.labels().iter().map(|l| l.as_str()).collect();
        let table = DecisionTable::new(ids, attrs, codes, Some(decision))?;
        Ok(Lem1Classifier { binning, model: lem1_train(&table)?, fallback: train.majority() })
    }

    pub fn model(&self) -> &Lem1Model {
        &self.model
    }

    pub fn binning(&self) -> &Binning {
        &self.binning
    }
}

impl Classifier for Lem1Classifier {
    fn predict(&self, query: &[f64]) -> Result<Label> {
        let codes = apply_bins(&self.binning, &[query.to_vec()])?;
        let row: Vec<String> = codes[0].iter().map(usize::to_string).collect();
        lem1_predict(&self.model.rules, &row, self.fallback.as_str()).parse()
    }
}
