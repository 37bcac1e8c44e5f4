use std::collections::HashMap;
use std::hash::Hash;

use super::table::{DecisionTable, ObjectSet};
use crate::error::Result;

/// Disjoint, nonempty blocks covering the universe `0..n`.
///
/// Blocks are ordered by their smallest member and each block lists its
/// members in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    /// Groups objects `0..n` by equal keys.
    pub fn by_key<K, F>(n: usize, mut key: F) -> Self
    where
        K: Eq + Hash,
        F: FnMut(usize) -> K,
    {
        let mut index: HashMap<K, usize> = HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = Vec::with_capacity(n);
        for obj in 0..n {
            let next = blocks.len();
            let b = *index.entry(key(obj)).or_insert(next);
            if b == next {
                blocks.push(Vec::new());
            }
            blocks[b].push(obj);
            block_of.push(b);
        }
        Partition { blocks, block_of }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn universe_size(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_index(&self, object: usize) -> usize {
        self.block_of[object]
    }

    /// The equivalence class `[x]` of an object.
    pub fn class_of(&self, object: usize) -> &[usize] {
        &self.blocks[self.block_of[object]]
    }

    /// True when every block of `self` lies inside a single block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.universe_size() == coarser.universe_size()
            && self.blocks.iter().all(|b| {
                let target = coarser.block_of[b[0]];
                b.iter().all(|&o| coarser.block_of[o] == target)
            })
    }

    /// `|block ∩ set|` for every block, indexed like [`Partition::blocks`].
    pub fn intersection_counts(&self, set: &ObjectSet) -> Vec<u64> {
        let mut counts = vec![0u64; self.blocks.len()];
        for &o in set {
            counts[self.block_of[o]] += 1;
        }
        counts
    }
}

/// Partition of the universe by the indiscernibility relation on `attrs`.
pub fn indiscernibility_partition(table: &DecisionTable, attrs: &[usize]) -> Result<Partition> {
    table.check_attrs(attrs)?;
    Ok(if let [single] = attrs {
        Partition::by_key(table.n_objects(), |o| table.value(o, *single))
    } else {
        Partition::by_key(table.n_objects(), |o| {
            attrs.iter().map(|&a| table.value(o, a)).collect::<Vec<_>>()
        })
    })
}
