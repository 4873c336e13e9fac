//! Hedonic coalition formation.
//!
//! Agents carry preferences over the coalitions they could join, given in one
//! of three compact models: additive integer utilities, friend appreciation
//! (more friends first, then fewer enemies), and enemy aversion (fewer
//! enemies first, then more friends). On top of the models sit stability
//! verification with certifying witnesses, polynomial and parameterized
//! verification algorithms for the friend-appreciation model, existence
//! procedures for Nash stability, and structural parameter measurement.

mod fa;
mod params;
mod search;
mod verify;

pub use fa::{
    fa_core_verify_bounded, fa_core_verify_colorcoded, fa_scc_partition, fa_unbounded_blocking,
    BlockingMode,
};
pub use params::{measure_parameters, FeedbackKind, ParameterReport};
pub use search::{ea_nash_exist_fas, nash_search_symmetric, NashSearch};
pub use verify::verify;

use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A coalition is a set of agent indices.
pub type Coalition = BTreeSet<usize>;

/// Preference model attached to a [`HedonicInstance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HedonicModel {
    Additive,
    FriendAppreciation,
    EnemyAversion,
}

impl fmt::Display for HedonicModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HedonicModel::Additive => "additive",
            HedonicModel::FriendAppreciation => "fa",
            HedonicModel::EnemyAversion => "ea",
        })
    }
}

/// A hedonic game in one of the compact preference models.
///
/// Additive games store sparse nonzero arc weights; an absent arc means
/// utility 0. Friend-appreciation and enemy-aversion games store the
/// friendship digraph; an absent arc means the target is an enemy. Both
/// graph models embed into the additive model through [`HedonicInstance::utility`]:
/// a friend is worth `n` against `-1` per enemy under friend appreciation,
/// and `1` against `-n` under enemy aversion, which makes the utility sums
/// reproduce the lexicographic orderings.
#[derive(Debug, Clone)]
pub struct HedonicInstance {
    n: usize,
    model: HedonicModel,
    utilities: BTreeMap<(usize, usize), i64>,
    friendship: BTreeSet<(usize, usize)>,
    symmetric: bool,
}

impl HedonicInstance {
    /// Additive game over `n` agents from `(i, j, u_i(j))` triples.
    pub fn additive(
        n: usize,
        utilities: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Result<HedonicInstance> {
        check_agent_count(n)?;
        let mut map = BTreeMap::new();
        for (i, j, w) in utilities {
            check_arc(n, i, j)?;
            if map.insert((i, j), w).is_some() {
                return Err(Error::domain(format!(
                    "duplicate utility entry for ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
        map.retain(|_, w| *w != 0);
        let symmetric = map
            .iter()
            .all(|(&(i, j), &w)| map.get(&(j, i)).copied().unwrap_or(0) == w);
        Ok(HedonicInstance {
            n,
            model: HedonicModel::Additive,
            utilities: map,
            friendship: BTreeSet::new(),
            symmetric,
        })
    }

    /// Friend-appreciation game over `n` agents with the given friendship arcs.
    pub fn friend_appreciation(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<HedonicInstance> {
        Self::from_digraph(n, arcs, HedonicModel::FriendAppreciation)
    }

    /// Enemy-aversion game over `n` agents with the given friendship arcs.
    pub fn enemy_aversion(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<HedonicInstance> {
        Self::from_digraph(n, arcs, HedonicModel::EnemyAversion)
    }

    fn from_digraph(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
        model: HedonicModel,
    ) -> Result<HedonicInstance> {
        check_agent_count(n)?;
        let mut set = BTreeSet::new();
        for (i, j) in arcs {
            check_arc(n, i, j)?;
            if !set.insert((i, j)) {
                return Err(Error::domain(format!(
                    "duplicate friendship arc ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
        let symmetric = set.iter().all(|&(i, j)| set.contains(&(j, i)));
        Ok(HedonicInstance {
            n,
            model,
            utilities: BTreeMap::new(),
            friendship: set,
            symmetric,
        })
    }

    pub fn agent_count(&self) -> usize {
        self.n
    }

    pub fn model(&self) -> HedonicModel {
        self.model
    }

    /// True iff `u_i(j) = u_j(i)` for every ordered pair, which for the graph
    /// models means every friendship is mutual.
    pub fn symmetric(&self) -> bool {
        self.symmetric
    }

    /// The utility agent `i` assigns to agent `j`, under the model's encoding.
    pub fn utility(&self, i: usize, j: usize) -> i64 {
        debug_assert!(i < self.n && j < self.n && i != j);
        match self.model {
            HedonicModel::Additive => self.utilities.get(&(i, j)).copied().unwrap_or(0),
            HedonicModel::FriendAppreciation => {
                if self.is_friend(i, j) {
                    self.n as i64
                } else {
                    -1
                }
            }
            HedonicModel::EnemyAversion => {
                if self.is_friend(i, j) {
                    1
                } else {
                    -(self.n as i64)
                }
            }
        }
    }

    pub fn is_friend(&self, i: usize, j: usize) -> bool {
        self.friendship.contains(&(i, j))
    }

    /// Out-neighbors of `i` in the friendship digraph.
    pub fn friends_of(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.friendship.range((i, 0)..(i + 1, 0)).map(|&(_, j)| j)
    }

    pub fn friendship_arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.friendship.iter().copied()
    }

    /// Nonzero additive arcs `(i, j, u_i(j))`.
    pub fn utility_arcs(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.utilities.iter().map(|(&(i, j), &w)| (i, j, w))
    }

    pub(crate) fn additive_value(&self, i: usize, set: &Coalition) -> i64 {
        set.iter()
            .filter(|&&j| j != i)
            .map(|&j| self.utilities.get(&(i, j)).copied().unwrap_or(0))
            .sum()
    }

    /// Friends and enemies of `i` inside `set`, not counting `i` itself.
    pub(crate) fn friend_split(&self, i: usize, set: &Coalition) -> (usize, usize) {
        let friends = set.iter().filter(|&&j| j != i && self.is_friend(i, j)).count();
        let others = set.len() - usize::from(set.contains(&i));
        (friends, others - friends)
    }

    pub(crate) fn check_coalition(&self, set: &Coalition) -> Result<()> {
        match set.iter().next_back() {
            Some(&top) if top >= self.n => Err(Error::domain(format!(
                "agent {} exceeds the instance's {} agents",
                top + 1,
                self.n
            ))),
            _ => Ok(()),
        }
    }
}

fn check_agent_count(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("a hedonic game needs at least one agent"));
    }
    Ok(())
}

fn check_arc(n: usize, i: usize, j: usize) -> Result<()> {
    if i >= n || j >= n {
        return Err(Error::domain(format!(
            "arc ({}, {}) leaves the agent range 1..={}",
            i + 1,
            j + 1,
            n
        )));
    }
    if i == j {
        return Err(Error::domain(format!("agent {} cannot rate himself", i + 1)));
    }
    Ok(())
}

/// Outcome of comparing two coalitions from one agent's point of view.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Prefers,
    Indifferent,
    Dispreferred,
}

/// How `agent` ranks coalition `s` against coalition `t`.
///
/// Both coalitions must contain the agent. Additive preferences compare
/// utility sums; friend appreciation compares friend counts and breaks ties
/// by fewer enemies; enemy aversion compares enemy counts and breaks ties by
/// more friends.
pub fn compare(
    instance: &HedonicInstance,
    agent: usize,
    s: &Coalition,
    t: &Coalition,
) -> Result<Comparison> {
    instance.check_coalition(s)?;
    instance.check_coalition(t)?;
    if agent >= instance.n || !s.contains(&agent) || !t.contains(&agent) {
        return Err(Error::domain(format!(
            "agent {} must belong to both compared coalitions",
            agent + 1
        )));
    }
    let ordering = match instance.model {
        HedonicModel::Additive => instance
            .additive_value(agent, s)
            .cmp(&instance.additive_value(agent, t)),
        HedonicModel::FriendAppreciation => {
            let (fs, es) = instance.friend_split(agent, s);
            let (ft, et) = instance.friend_split(agent, t);
            fs.cmp(&ft).then(et.cmp(&es))
        }
        HedonicModel::EnemyAversion => {
            let (fs, es) = instance.friend_split(agent, s);
            let (ft, et) = instance.friend_split(agent, t);
            et.cmp(&es).then(fs.cmp(&ft))
        }
    };
    Ok(match ordering {
        std::cmp::Ordering::Greater => Comparison::Prefers,
        std::cmp::Ordering::Equal => Comparison::Indifferent,
        std::cmp::Ordering::Less => Comparison::Dispreferred,
    })
}

/// Stability notion checked by [`verify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilityConcept {
    Nash,
    IndividuallyStable,
    Core,
    StrictCore,
}

impl fmt::Display for StabilityConcept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StabilityConcept::Nash => "nash",
            StabilityConcept::IndividuallyStable => "indiv",
            StabilityConcept::Core => "core",
            StabilityConcept::StrictCore => "strict_core",
        })
    }
}

/// A partition of the agents into disjoint nonempty coalitions.
///
/// Coalitions are kept in canonical order, sorted by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    coalitions: Vec<Coalition>,
    index: Vec<usize>,
}

impl Partition {
    pub fn new(n: usize, blocks: &[Vec<usize>]) -> Result<Partition> {
        check_agent_count(n)?;
        let mut coalitions = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.is_empty() {
                return Err(Error::domain("partitions cannot contain empty coalitions"));
            }
            let set: Coalition = block.iter().copied().collect();
            if set.len() != block.len() {
                return Err(Error::domain("a coalition lists an agent twice"));
            }
            coalitions.push(set);
        }
        coalitions.sort_by_key(|set| *set.iter().next().expect("nonempty"));
        let mut index = vec![usize::MAX; n];
        for (pos, set) in coalitions.iter().enumerate() {
            for &agent in set {
                if agent >= n {
                    return Err(Error::domain(format!(
                        "agent {} exceeds the agent range 1..={}",
                        agent + 1,
                        n
                    )));
                }
                if index[agent] != usize::MAX {
                    return Err(Error::domain(format!(
                        "agent {} appears in two coalitions",
                        agent + 1
                    )));
                }
                index[agent] = pos;
            }
        }
        if let Some(agent) = index.iter().position(|&p| p == usize::MAX) {
            return Err(Error::domain(format!(
                "agent {} is missing from the partition",
                agent + 1
            )));
        }
        Ok(Partition { coalitions, index })
    }

    pub fn singletons(n: usize) -> Partition {
        let blocks: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        Partition::new(n, &blocks).expect("singleton blocks are always valid")
    }

    pub fn grand(n: usize) -> Partition {
        Partition::new(n, &[(0..n).collect()]).expect("the grand coalition is always valid")
    }

    pub fn agent_count(&self) -> usize {
        self.index.len()
    }

    pub fn coalitions(&self) -> &[Coalition] {
        &self.coalitions
    }

    pub fn coalition_of(&self, agent: usize) -> &Coalition {
        &self.coalitions[self.index[agent]]
    }

    /// Size of the largest coalition.
    pub fn kappa(&self) -> usize {
        self.coalitions.iter().map(Coalition::len).max().unwrap_or(0)
    }

    pub fn coalition_count(&self) -> usize {
        self.coalitions.len()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, set) in self.coalitions.iter().enumerate() {
            if pos > 0 {
                f.write_str(" | ")?;
            }
            for (k, agent) in set.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", agent + 1)?;
            }
        }
        Ok(())
    }
}

/// The four certificate shapes a stability check can produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    BlockingCoalition,
    WeaklyBlockingCoalition,
    BlockingTuple,
    Envy,
}

/// A certificate of instability.
///
/// Coalition witnesses carry the deviating group in `agents`. Tuple and envy
/// witnesses carry the moving agent in `agents` and the joined coalition,
/// possibly empty, in `target`. [`Witness::reverify`] replays the defining
/// predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub agents: Coalition,
    pub target: Option<Coalition>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self.kind {
            WitnessKind::BlockingCoalition => "blocking coalition",
            WitnessKind::WeaklyBlockingCoalition => "weakly blocking coalition",
            WitnessKind::BlockingTuple => "blocking tuple",
            WitnessKind::Envy => "envy",
        };
        write!(f, "{label}:")?;
        for &agent in &self.agents {
            write!(f, " {}", agent + 1)?;
        }
        if let Some(target) = &self.target {
            f.write_str(" ->")?;
            if target.is_empty() {
                f.write_str(" (alone)")?;
            }
            for &agent in target {
                write!(f, " {}", agent + 1)?;
            }
        }
        Ok(())
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::{additive_example, ea_example, fa_example};
    use super::*;

    fn set(agents: &[usize]) -> Coalition {
        agents.iter().copied().collect()
    }

    #[test]
    fn constructors_reject_malformed_input() {
        assert!(HedonicInstance::additive(0, []).is_err());
        assert!(HedonicInstance::additive(3, [(0, 0, 1)]).is_err());
        assert!(HedonicInstance::additive(3, [(0, 3, 1)]).is_err());
        assert!(HedonicInstance::additive(3, [(0, 1, 1), (0, 1, 2)]).is_err());
        assert!(HedonicInstance::friend_appreciation(3, [(1, 1)]).is_err());
        assert!(HedonicInstance::enemy_aversion(3, [(0, 1), (0, 1)]).is_err());
    }

    #[test]
    fn zero_utilities_collapse_to_absent_arcs() {
        let g = HedonicInstance::additive(3, [(0, 1, 0), (1, 2, 3)]).unwrap();
        assert_eq!(g.utility_arcs().count(), 1);
        assert_eq!(g.utility(0, 1), 0);
        assert_eq!(g.utility(1, 2), 3);
    }

    #[test]
    fn symmetry_flags_follow_the_arcs() {
        assert!(!additive_example().symmetric());
        assert!(!fa_example().symmetric());
        let g = HedonicInstance::additive(2, [(0, 1, 5), (1, 0, 5)]).unwrap();
        assert!(g.symmetric());
        let mutual = HedonicInstance::enemy_aversion(2, [(0, 1), (1, 0)]).unwrap();
        assert!(mutual.symmetric());
    }

    #[test]
    fn graph_models_encode_into_additive_utilities() {
        let fa = fa_example();
        assert_eq!(fa.utility(0, 1), 4);
        assert_eq!(fa.utility(1, 2), -1);
        let ea = ea_example();
        assert_eq!(ea.utility(0, 1), 1);
        assert_eq!(ea.utility(1, 2), -4);
    }

    #[test]
    fn compare_matches_the_worked_examples() {
        let fa = fa_example();
        let grand = set(&[0, 1, 2, 3]);
        let alone = set(&[3]);
        assert_eq!(compare(&fa, 3, &grand, &alone).unwrap(), Comparison::Prefers);
        assert_eq!(compare(&fa, 3, &grand, &grand).unwrap(), Comparison::Indifferent);

        let additive = additive_example();
        let pair = set(&[1, 3]);
        let alone = set(&[1]);
        assert_eq!(compare(&additive, 1, &pair, &alone).unwrap(), Comparison::Prefers);
    }

    #[test]
    fn compare_requires_membership() {
        let fa = fa_example();
        assert!(compare(&fa, 0, &set(&[1, 2]), &set(&[0])).is_err());
        assert!(compare(&fa, 0, &set(&[0]), &set(&[1])).is_err());
        assert!(compare(&fa, 9, &set(&[9]), &set(&[9])).is_err());
    }

    #[test]
    fn fa_and_ea_read_the_same_coalition_differently() {
        let fa = fa_example();
        let ea = ea_example();
        let mixed = set(&[0, 1, 3]);
        let alone = set(&[0]);
        assert_eq!(compare(&fa, 0, &mixed, &alone).unwrap(), Comparison::Prefers);
        assert_eq!(compare(&ea, 0, &mixed, &alone).unwrap(), Comparison::Dispreferred);
    }

    #[test]
    fn lexicographic_orders_match_the_encoded_sums() {
        for instance in [fa_example(), ea_example()] {
            for agent in 0..4 {
                let subsets: Vec<Coalition> = (0u32..16)
                    .filter(|mask| mask & (1 << agent) != 0)
                    .map(|mask| (0..4).filter(|&j| mask & (1 << j) != 0).collect())
                    .collect();
                for s in &subsets {
                    for t in &subsets {
                        let lex = compare(&instance, agent, s, t).unwrap();
                        let sum_s: i64 =
                            s.iter().filter(|&&j| j != agent).map(|&j| instance.utility(agent, j)).sum();
                        let sum_t: i64 =
                            t.iter().filter(|&&j| j != agent).map(|&j| instance.utility(agent, j)).sum();
                        let by_sum = match sum_s.cmp(&sum_t) {
                            std::cmp::Ordering::Greater => Comparison::Prefers,
                            std::cmp::Ordering::Equal => Comparison::Indifferent,
                            std::cmp::Ordering::Less => Comparison::Dispreferred,
                        };
                        assert_eq!(lex, by_sum);
                    }
                }
            }
        }
    }

    #[test]
    fn partitions_canonicalize_and_index() {
        let p = Partition::new(4, &[vec![2, 3], vec![1], vec![0]]).unwrap();
        assert_eq!(p.coalitions().len(), 3);
        assert_eq!(p.coalitions()[0], set(&[0]));
        assert_eq!(p.coalitions()[2], set(&[2, 3]));
        assert_eq!(p.coalition_of(3), &set(&[2, 3]));
        assert_eq!(p.kappa(), 2);
        assert_eq!(p.coalition_count(), 3);
        assert_eq!(p.to_string(), "1 | 2 | 3 4");
    }

    #[test]
    fn partitions_reject_malformed_blocks() {
        assert!(Partition::new(3, &[vec![0, 1]]).is_err());
        assert!(Partition::new(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(3, &[vec![0, 1, 2], vec![]]).is_err());
        assert!(Partition::new(3, &[vec![0, 1, 3]]).is_err());
        assert!(Partition::new(3, &[vec![0, 0, 1, 2]]).is_err());
    }

    #[test]
    fn ready_made_partitions() {
        assert_eq!(Partition::singletons(3).coalition_count(), 3);
        assert_eq!(Partition::singletons(3).kappa(), 1);
        assert_eq!(Partition::grand(3).coalition_count(), 1);
        assert_eq!(Partition::grand(3).kappa(), 3);
    }
}
