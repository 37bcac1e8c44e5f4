//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use num_rational::Ratio;
use rand::Rng;
use roughrank::rough::{DecisionTable, ObjectSet};

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("data")
}

/// Raw rows plus target set; the table is built from the rows.
#[derive(Clone, Debug)]
pub struct RandomTable {
    pub rows: Vec<Vec<u8>>,
    pub x: ObjectSet,
}

impl RandomTable {
    pub fn table(&self) -> DecisionTable {
        let decision: Vec<u8> = (0..self.rows.len()).map(|o| u8::from(self.x.contains(&o))).collect();
        DecisionTable::from_rows(self.rows.clone(), Some(decision)).unwrap()
    }

    pub fn n_attrs(&self) -> usize {
        self.rows[0].len()
    }
}

/// 1..=max_objects rows, 1..=max_attrs columns over `{0..alphabet}`, nonempty X.
pub fn random_table<R: Rng>(rng: &mut R, max_objects: usize, max_attrs: usize, alphabet: u8) -> RandomTable {
    let n = rng.gen_range(1..=max_objects);
    let k = rng.gen_range(1..=max_attrs);
    let rows = (0..n).map(|_| (0..k).map(|_| rng.gen_range(0..alphabet)).collect()).collect();
    let mut x: ObjectSet = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    if x.is_empty() {
        x.insert(rng.gen_range(0..n));
    }
    RandomTable { rows, x }
}

/// All nonempty attribute subsets of `0..k`, as sorted index lists.
pub fn nonempty_subsets(k: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << k)).map(|mask| (0..k).filter(|a| mask & (1 << a) != 0).collect()).collect()
}

pub fn agree(rows: &[Vec<u8>], x: usize, y: usize, attrs: &[usize]) -> bool {
    attrs.iter().all(|&a| rows[x][a] == rows[y][a])
}

/// Blocks by direct pairwise comparison, each sorted, listed by smallest member.
pub fn pairwise_blocks(rows: &[Vec<u8>], attrs: &[usize]) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; rows.len()];
    let mut blocks = Vec::new();
    for x in 0..rows.len() {
        if assigned[x] {
            continue;
        }
        let block: Vec<usize> = (0..rows.len()).filter(|&y| agree(rows, x, y, attrs)).collect();
        for &y in &block {
            assigned[y] = true;
        }
        blocks.push(block);
    }
    blocks
}

/// `|[x]_P ∩ X| / |X|` counted directly.
pub fn brute_rank(rows: &[Vec<u8>], attrs: &[usize], x: &ObjectSet, obj: usize) -> Ratio<u64> {
    let hits = x.iter().filter(|&&y| agree(rows, obj, y, attrs)).count() as u64;
    Ratio::new(hits, x.len() as u64)
}

/// `|[x]_P ∩ X| / |[x]_P|` counted directly.
pub fn brute_pawlak(rows: &[Vec<u8>], attrs: &[usize], x: &ObjectSet, obj: usize) -> Ratio<u64> {
    let block = (0..rows.len()).filter(|&y| agree(rows, obj, y, attrs)).count() as u64;
    let hits = x.iter().filter(|&&y| agree(rows, obj, y, attrs)).count() as u64;
    Ratio::new(hits, block)
}

/// Mean of single-attribute rank measures, counted directly.
pub fn brute_aggregate(rows: &[Vec<u8>], attrs: &[usize], x: &ObjectSet, obj: usize) -> Ratio<u64> {
    let sum: Ratio<u64> = attrs.iter().map(|&a| brute_rank(rows, &[a], x, obj)).sum();
    sum / Ratio::from_integer(attrs.len() as u64)
}

/// Greedy budget filling over `order`, returned sorted.
pub fn greedy_select(lengths: &[usize], order: &[usize], budget: usize) -> Vec<usize> {
    let mut used = 0;
    let mut chosen = Vec::new();
    for &i in order {
        if used + lengths[i] <= budget {
            used += lengths[i];
            chosen.push(i);
        }
    }
    chosen.sort_unstable();
    chosen
}
