use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use super::partition::{indiscernibility_partition, Partition};
use super::table::{DecisionTable, ObjectSet};
use crate::error::{Error, Result};

/// Which membership function produced a [`RankScore`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Measure {
    /// `|[x]_P ∩ X| / |[x]_P|`
    Pawlak,
    /// `|[x]_P ∩ X| / |X|`
    Rank,
    /// Mean of the single-attribute rank measures over `P`.
    Aggregate,
}

impl Measure {
    pub fn name(self) -> &'static str {
        match self {
            Measure::Pawlak => "pawlak",
            Measure::Rank => "rank",
            Measure::Aggregate => "aggregate",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pawlak" => Ok(Measure::Pawlak),
            "rank" => Ok(Measure::Rank),
            "aggregate" => Ok(Measure::Aggregate),
            other => Err(Error::config(format!(
                "unknown measure `{other}` (expected rank, aggregate or pawlak)"
            ))),
        }
    }
}

/// Exact score of one object, kept as an unreduced fraction.
///
/// For [`Measure::Aggregate`] the denominator is `|P|·|X|` and the numerator
/// sums the single-attribute overlaps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankScore {
    pub object: usize,
    pub numerator: u64,
    pub denominator: u64,
    pub kind: Measure,
}

impl RankScore {
    pub fn ratio(&self) -> Ratio<u64> {
        Ratio::new(self.numerator, self.denominator)
    }

    pub fn value(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }

    pub fn is_one(&self) -> bool {
        self.numerator == self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator == 0
    }

    /// Compares score values exactly.
    pub fn cmp_value(&self, other: &RankScore) -> Ordering {
        let lhs = u128::from(self.numerator) * u128::from(other.denominator);
        let rhs = u128::from(other.numerator) * u128::from(self.denominator);
        lhs.cmp(&rhs)
    }

    /// Reduced fraction such as `2/3`, or `0` / `1`.
    pub fn fraction_string(&self) -> String {
        let r = self.ratio();
        if *r.denom() == 1 {
            r.numer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    }

    /// Value truncated (not rounded) to two decimals, e.g. `0.66` for 2/3.
    pub fn two_decimals(&self) -> String {
        let hundredths = (u128::from(self.numerator) * 100) / u128::from(self.denominator);
        format!("{}.{:02}", hundredths / 100, hundredths % 100)
    }
}

/// Precomputed partitions for scoring many objects against one target set.
#[derive(Clone, Debug)]
pub struct Memberships {
    attrs: Vec<usize>,
    target_size: u64,
    full: Partition,
    full_counts: Vec<u64>,
    single: Vec<(Partition, Vec<u64>)>,
}

impl Memberships {
    pub fn new(table: &DecisionTable, attrs: &[usize], target: &ObjectSet) -> Result<Self> {
        table.check_subset(target)?;
        let full = indiscernibility_partition(table, attrs)?;
        let full_counts = full.intersection_counts(target);
        let single = attrs
            .iter()
            .map(|&a| {
                let p = indiscernibility_partition(table, &[a])?;
                let counts = p.intersection_counts(target);
                Ok((p, counts))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Memberships {
            attrs: attrs.to_vec(),
            target_size: target.len() as u64,
            full,
            full_counts,
            single,
        })
    }

    pub fn partition(&self) -> &Partition {
        &self.full
    }

    pub fn attributes(&self) -> &[usize] {
        &self.attrs
    }

    fn check_object(&self, object: usize) -> Result<()> {
        if object >= self.full.universe_size() {
            return Err(Error::domain(format!(
                "object index {object} outside universe of {} objects",
                self.full.universe_size()
            )));
        }
        Ok(())
    }

    fn check_target(&self) -> Result<()> {
        if self.target_size == 0 {
            return Err(Error::domain("target set X is empty; rank measure undefined"));
        }
        Ok(())
    }

    pub fn pawlak(&self, object: usize) -> Result<RankScore> {
        self.check_object(object)?;
        let b = self.full.block_index(object);
        Ok(RankScore {
            object,
            numerator: self.full_counts[b],
            denominator: self.full.blocks()[b].len() as u64,
            kind: Measure::Pawlak,
        })
    }

    pub fn rank(&self, object: usize) -> Result<RankScore> {
        self.check_object(object)?;
        self.check_target()?;
        Ok(RankScore {
            object,
            numerator: self.full_counts[self.full.block_index(object)],
            denominator: self.target_size,
            kind: Measure::Rank,
        })
    }

    pub fn aggregate(&self, object: usize) -> Result<RankScore> {
        self.check_object(object)?;
        self.check_target()?;
        let numerator = self
            .single
            .iter()
            .map(|(p, counts)| counts[p.block_index(object)])
            .sum();
        Ok(RankScore {
            object,
            numerator,
            denominator: self.single.len() as u64 * self.target_size,
            kind: Measure::Aggregate,
        })
    }

    /// Single-attribute rank measures `ρ_{a}(x)` for each attribute in order.
    pub fn per_attribute(&self, object: usize) -> Result<Vec<RankScore>> {
        self.check_object(object)?;
        self.check_target()?;
        Ok(self
            .single
            .iter()
            .map(|(p, counts)| RankScore {
                object,
                numerator: counts[p.block_index(object)],
                denominator: self.target_size,
                kind: Measure::Rank,
            })
            .collect())
    }

    pub fn score(&self, object: usize, measure: Measure) -> Result<RankScore> {
        match measure {
            Measure::Pawlak => self.pawlak(object),
            Measure::Rank => self.rank(object),
            Measure::Aggregate => self.aggregate(object),
        }
    }

    /// Scores `objects` and sorts them by descending score, ties by ascending index.
    pub fn rank_subset<I>(&self, objects: I, measure: Measure) -> Result<Vec<RankScore>>
    where
        I: IntoIterator<Item = usize>,
    {
        self.check_target()?;
        let mut scores = objects
            .into_iter()
            .map(|o| self.score(o, measure))
            .collect::<Result<Vec<_>>>()?;
        sort_scores(&mut scores);
        Ok(scores)
    }
}

/// Descending by exact value, then ascending object index.
pub fn sort_scores(scores: &mut [RankScore]) {
    scores.sort_by(|a, b| b.cmp_value(a).then(a.object.cmp(&b.object)));
}

pub fn lower_approximation(
    table: &DecisionTable,
    attrs: &[usize],
    target: &ObjectSet,
) -> Result<ObjectSet> {
    table.check_subset(target)?;
    let p = indiscernibility_partition(table, attrs)?;
    let counts = p.intersection_counts(target);
    Ok(p.blocks()
        .iter()
        .zip(&counts)
        .filter(|(b, &c)| c as usize == b.len())
        .flat_map(|(b, _)| b.iter().copied())
        .collect())
}

pub fn upper_approximation(
    table: &DecisionTable,
    attrs: &[usize],
    target: &ObjectSet,
) -> Result<ObjectSet> {
    table.check_subset(target)?;
    let p = indiscernibility_partition(table, attrs)?;
    let counts = p.intersection_counts(target);
    Ok(p.blocks()
        .iter()
        .zip(&counts)
        .filter(|(_, &c)| c > 0)
        .flat_map(|(b, _)| b.iter().copied())
        .collect())
}

pub fn boundary_region(
    table: &DecisionTable,
    attrs: &[usize],
    target: &ObjectSet,
) -> Result<ObjectSet> {
    let upper = upper_approximation(table, attrs, target)?;
    let lower = lower_approximation(table, attrs, target)?;
    Ok(upper.difference(&lower).copied().collect())
}

pub fn membership_pawlak(
    table: &DecisionTable,
    attrs: &[usize],
    object: usize,
    target: &ObjectSet,
) -> Result<RankScore> {
    table.check_object(object)?;
    Memberships::new(table, attrs, target)?.pawlak(object)
}

pub fn rank_measure(
    table: &DecisionTable,
    attrs: &[usize],
    object: usize,
    target: &ObjectSet,
) -> Result<RankScore> {
    table.check_object(object)?;
    Memberships::new(table, attrs, target)?.rank(object)
}

pub fn aggregate_rank_measure(
    table: &DecisionTable,
    attrs: &[usize],
    object: usize,
    target: &ObjectSet,
) -> Result<RankScore> {
    table.check_object(object)?;
    Memberships::new(table, attrs, target)?.aggregate(object)
}

/// Every object of the universe, ordered by descending score.
pub fn rank_objects(
    table: &DecisionTable,
    attrs: &[usize],
    target: &ObjectSet,
    measure: Measure,
) -> Result<Vec<RankScore>> {
    if target.is_empty() {
        return Err(Error::domain("target set X is empty; cannot rank"));
    }
    Memberships::new(table, attrs, target)?.rank_subset(0..table.n_objects(), measure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rough::worked_example;

    fn set(ids: &[usize]) -> ObjectSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn partitions_of_table1() {
        let (t, _) = worked_example();
        let p = indiscernibility_partition(&t, &[0]).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 1, 2, 4, 5], vec![3]]);
        let p = indiscernibility_partition(&t, &t.all_attributes()).unwrap();
        assert_eq!(p.blocks(), &[vec![0], vec![1, 4], vec![2], vec![3], vec![5]]);
    }

    #[test]
    fn approximations() {
        let (t, x) = worked_example();
        let all = t.all_attributes();
        assert_eq!(lower_approximation(&t, &all, &x).unwrap(), set(&[1, 4]));
        assert_eq!(boundary_region(&t, &all, &x).unwrap(), ObjectSet::new());
        assert_eq!(upper_approximation(&t, &[2], &x).unwrap(), set(&[1, 2, 4]));
        assert_eq!(lower_approximation(&t, &[2], &x).unwrap(), ObjectSet::new());
        assert_eq!(boundary_region(&t, &[2], &x).unwrap(), set(&[1, 2, 4]));

        let u = t.universe();
        for attrs in [vec![0], vec![1, 2], all.clone()] {
            assert_eq!(lower_approximation(&t, &attrs, &u).unwrap(), u);
            assert_eq!(upper_approximation(&t, &attrs, &u).unwrap(), u);
            assert!(boundary_region(&t, &attrs, &u).unwrap().is_empty());
            let empty = ObjectSet::new();
            assert!(lower_approximation(&t, &attrs, &empty).unwrap().is_empty());
            assert!(upper_approximation(&t, &attrs, &empty).unwrap().is_empty());
        }
    }

    #[test]
    fn pawlak_membership() {
        let (t, x) = worked_example();
        let all = t.all_attributes();
        assert_eq!(membership_pawlak(&t, &all, 1, &x).unwrap().ratio(), Ratio::from_integer(1));
        assert_eq!(membership_pawlak(&t, &[2], 2, &x).unwrap().ratio(), Ratio::new(2, 3));
        let zero = membership_pawlak(&t, &all, 3, &ObjectSet::new()).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn rank_measure_values() {
        let (t, x) = worked_example();
        let all = t.all_attributes();
        let got: Vec<_> = (0..6)
            .map(|o| rank_measure(&t, &all, o, &x).unwrap().ratio())
            .collect();
        let want: Vec<_> = [0, 1, 0, 0, 1, 0].iter().map(|&v| Ratio::from_integer(v)).collect();
        assert_eq!(got, want);
        assert!(rank_measure(&t, &[0], 0, &x).unwrap().is_one());
    }

    #[test]
    fn aggregate_values_and_expansion() {
        let (t, x) = worked_example();
        let all = t.all_attributes();
        let m = Memberships::new(&t, &all, &x).unwrap();
        let parts: Vec<_> = m.per_attribute(0).unwrap().iter().map(|s| (s.numerator, s.denominator)).collect();
        assert_eq!(parts, vec![(2, 2), (2, 2), (0, 2)]);
        let want = [(2, 3), (1, 1), (2, 3), (1, 3), (1, 1), (1, 3)];
        for (o, &(n, d)) in want.iter().enumerate() {
            assert_eq!(m.aggregate(o).unwrap().ratio(), Ratio::new(n, d), "object {o}");
        }
        // single attribute: aggregate == rank
        for o in 0..6 {
            let a = aggregate_rank_measure(&t, &[1], o, &x).unwrap();
            let r = rank_measure(&t, &[1], o, &x).unwrap();
            assert_eq!(a.ratio(), r.ratio());
        }
    }

    #[test]
    fn empty_target_is_domain_error() {
        let (t, _) = worked_example();
        let empty = ObjectSet::new();
        assert!(matches!(rank_measure(&t, &[0], 0, &empty), Err(Error::Domain(_))));
        assert!(matches!(aggregate_rank_measure(&t, &[0], 0, &empty), Err(Error::Domain(_))));
        assert!(matches!(rank_objects(&t, &[0], &empty, Measure::Pawlak), Err(Error::Domain(_))));
        assert!(matches!(aggregate_rank_measure(&t, &[], 0, &set(&[1])), Err(Error::Config(_))));
    }

    #[test]
    fn out_of_universe_rejected() {
        let (t, x) = worked_example();
        assert!(matches!(rank_measure(&t, &[0], 6, &x), Err(Error::Domain(_))));
        assert!(matches!(lower_approximation(&t, &[0], &set(&[9])), Err(Error::Domain(_))));
    }

    #[test]
    fn ranking_orders() {
        let (t, x) = worked_example();
        let all = t.all_attributes();
        let order: Vec<_> = rank_objects(&t, &all, &x, Measure::Aggregate)
            .unwrap()
            .iter()
            .map(|s| s.object)
            .collect();
        assert_eq!(order, vec![1, 4, 0, 2, 3, 5]);
        let order: Vec<_> = rank_objects(&t, &all, &x, Measure::Rank)
            .unwrap()
            .iter()
            .map(|s| s.object)
            .collect();
        assert_eq!(order, vec![1, 4, 0, 2, 3, 5]);
        // all ties: identity order
        let order: Vec<_> = rank_objects(&t, &[0], &t.universe(), Measure::Pawlak)
            .unwrap()
            .iter()
            .map(|s| s.object)
            .collect();
        assert_eq!(order, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn display_forms() {
        let s = RankScore { object: 0, numerator: 4, denominator: 6, kind: Measure::Aggregate };
        assert_eq!(s.fraction_string(), "2/3");
        assert_eq!(s.two_decimals(), "0.66");
        let one = RankScore { object: 0, numerator: 6, denominator: 6, kind: Measure::Aggregate };
        assert_eq!(one.fraction_string(), "1");
        assert_eq!(one.two_decimals(), "1.00");
    }
}
