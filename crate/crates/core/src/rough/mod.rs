//! Indiscernibility partitions, rough approximations and membership-based ranking.
//!
//! Three membership functions are available for an object `x`, an attribute
//! subset `P` and a target set `X`:
//!
//! * Pawlak membership `|[x]_P ∩ X| / |[x]_P|`,
//! * the rank measure `|[x]_P ∩ X| / |X|`, the share of `X` captured by the class of `x`,
//! * the aggregate rank measure, the mean of the single-attribute rank
//!   measures `ρ_{a}(x)` over `a ∈ P`. Objects that miss `X` on only a few
//!   attributes keep a nonzero score.
//!
//! All scores are exact fractions.

mod measure;
mod partition;
mod table;

pub use measure::{
    aggregate_rank_measure, boundary_region, lower_approximation, membership_pawlak,
    rank_measure, rank_objects, sort_scores, upper_approximation, Measure, Memberships,
    RankScore,
};
pub use partition::{indiscernibility_partition, Partition};
pub use table::{DecisionTable, ObjectSet, Symbol, DECISION_COLUMN};

/// The six-object, three-attribute demonstration table together with the
/// target set `{x2, x5}` (indices 1 and 4).
pub fn worked_example() -> (DecisionTable, ObjectSet) {
    let rows = vec![
        vec![0, 1, 1],
        vec![0, 1, 0],
        vec![0, 0, 0],
        vec![1, 1, 1],
        vec![0, 1, 0],
        vec![0, 2, 1],
    ];
    let decision = vec![0, 1, 0, 0, 1, 0];
    let table = DecisionTable::from_rows(rows, Some(decision)).expect("static table is valid");
    (table, ObjectSet::from([1, 4]))
}
