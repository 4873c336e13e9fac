//! Stability verification with certifying witnesses.

use super::{
    compare, Coalition, Comparison, HedonicInstance, Partition, StabilityConcept, Witness,
    WitnessKind,
};
use crate::error::{Error, Result};
use crate::limits::SearchLimits;
use crate::oracles::combinations;

pub(crate) fn strictly_prefers(
    instance: &HedonicInstance,
    agent: usize,
    s: &Coalition,
    t: &Coalition,
) -> Result<bool> {
    Ok(compare(instance, agent, s, t)? == Comparison::Prefers)
}

pub(crate) fn weakly_prefers(
    instance: &HedonicInstance,
    agent: usize,
    s: &Coalition,
    t: &Coalition,
) -> Result<bool> {
    Ok(compare(instance, agent, s, t)? != Comparison::Dispreferred)
}

fn check_pair(instance: &HedonicInstance, partition: &Partition) -> Result<()> {
    if instance.agent_count() != partition.agent_count() {
        return Err(Error::domain(format!(
            "partition covers {} agents but the game has {}",
            partition.agent_count(),
            instance.agent_count()
        )));
    }
    Ok(())
}

/// The best coalition `agent` could ever be offered: himself plus everyone he
/// values positively. Any coalition he weakly prefers to this one he is
/// indifferent to, so it bounds what deviations can achieve.
fn best_coalition(instance: &HedonicInstance, agent: usize) -> Coalition {
    let mut best: Coalition = (0..instance.agent_count())
        .filter(|&j| j != agent && instance.utility(agent, j) > 0)
        .collect();
    best.insert(agent);
    best
}

fn with(agent: usize, coalition: &Coalition) -> Coalition {
    let mut joined = coalition.clone();
    joined.insert(agent);
    joined
}

/// Check `partition` against a stability concept, returning a certifying
/// witness for instability or `None` for stable.
///
/// Nash and individual stability scan every agent against every coalition of
/// the partition plus the empty one. The core concepts search all nonempty
/// agent subsets for a blocking (core) or weakly blocking (strict core)
/// coalition, smallest and lexicographically first witness first, skipping
/// agents that cannot improve on their current coalition at all. Each subset
/// the search touches consumes one node from `limits`.
pub fn verify(
    instance: &HedonicInstance,
    partition: &Partition,
    concept: StabilityConcept,
    limits: &SearchLimits,
) -> Result<Option<Witness>> {
    check_pair(instance, partition)?;
    match concept {
        StabilityConcept::Nash => verify_nash(instance, partition),
        StabilityConcept::IndividuallyStable => verify_indiv(instance, partition),
        StabilityConcept::Core => verify_subsets(instance, partition, false, limits),
        StabilityConcept::StrictCore => verify_subsets(instance, partition, true, limits),
    }
}

fn deviation_targets<'a>(
    partition: &'a Partition,
    home: &'a Coalition,
) -> impl Iterator<Item = Coalition> + 'a {
    partition
        .coalitions()
        .iter()
        .filter(move |set| *set != home)
        .cloned()
        .chain((home.len() > 1).then(Coalition::new))
}

fn verify_nash(instance: &HedonicInstance, partition: &Partition) -> Result<Option<Witness>> {
    for agent in 0..instance.agent_count() {
        let home = partition.coalition_of(agent);
        for target in deviation_targets(partition, home) {
            if strictly_prefers(instance, agent, &with(agent, &target), home)? {
                return Ok(Some(Witness {
                    kind: WitnessKind::Envy,
                    agents: [agent].into(),
                    target: Some(target),
                }));
            }
        }
    }
    Ok(None)
}

fn verify_indiv(instance: &HedonicInstance, partition: &Partition) -> Result<Option<Witness>> {
    for agent in 0..instance.agent_count() {
        let home = partition.coalition_of(agent);
        for target in deviation_targets(partition, home) {
            let joined = with(agent, &target);
            if !strictly_prefers(instance, agent, &joined, home)? {
                continue;
            }
            let mut welcomed = true;
            for &member in &target {
                if !weakly_prefers(instance, member, &joined, partition.coalition_of(member))? {
                    welcomed = false;
                    break;
                }
            }
            if welcomed {
                return Ok(Some(Witness {
                    kind: WitnessKind::BlockingTuple,
                    agents: [agent].into(),
                    target: Some(target),
                }));
            }
        }
    }
    Ok(None)
}

fn verify_subsets(
    instance: &HedonicInstance,
    partition: &Partition,
    weak: bool,
    limits: &SearchLimits,
) -> Result<Option<Witness>> {
    // An agent can only join a deviation he strictly (core) or weakly
    // (strict core) prefers over his current coalition, and his best
    // conceivable coalition bounds both; everyone else is pruned up front.
    let mut pool = Vec::new();
    for agent in 0..instance.agent_count() {
        let best = best_coalition(instance, agent);
        let home = partition.coalition_of(agent);
        let usable = if weak {
            weakly_prefers(instance, agent, &best, home)?
        } else {
            strictly_prefers(instance, agent, &best, home)?
        };
        if usable {
            pool.push(agent);
        }
    }
    for size in 1..=pool.len() {
        for picks in combinations(pool.len(), size) {
            limits.tick()?;
            let candidate: Coalition = picks.iter().map(|&p| pool[p]).collect();
            if blocks(instance, partition, &candidate, weak)? {
                return Ok(Some(Witness {
                    kind: if weak {
                        WitnessKind::WeaklyBlockingCoalition
                    } else {
                        WitnessKind::BlockingCoalition
                    },
                    agents: candidate,
                    target: None,
                }));
            }
        }
    }
    Ok(None)
}

pub(crate) fn blocks(
    instance: &HedonicInstance,
    partition: &Partition,
    candidate: &Coalition,
    weak: bool,
) -> Result<bool> {
    if candidate.is_empty() {
        return Ok(false);
    }
    let mut strict_somewhere = false;
    for &member in candidate {
        match compare(instance, member, candidate, partition.coalition_of(member))? {
            Comparison::Prefers => strict_somewhere = true,
            Comparison::Indifferent if weak => {}
            _ => return Ok(false),
        }
    }
    Ok(strict_somewhere)
}

impl Witness {
    /// Replay this witness against its defining predicate.
    pub fn reverify(&self, instance: &HedonicInstance, partition: &Partition) -> Result<bool> {
        check_pair(instance, partition)?;
        instance.check_coalition(&self.agents)?;
        if let Some(target) = &self.target {
            instance.check_coalition(target)?;
        }
        match self.kind {
            WitnessKind::BlockingCoalition => blocks(instance, partition, &self.agents, false),
            WitnessKind::WeaklyBlockingCoalition => blocks(instance, partition, &self.agents, true),
            WitnessKind::BlockingTuple | WitnessKind::Envy => {
                let (agent, target) = match (self.agents.len(), &self.target) {
                    (1, Some(target)) => (*self.agents.iter().next().expect("len 1"), target),
                    _ => return Ok(false),
                };
                let home = partition.coalition_of(agent);
                let in_partition = target.is_empty()
                    || partition.coalitions().iter().any(|set| set == target);
                if !in_partition || target.contains(&agent) || target == home {
                    return Ok(false);
                }
                let joined = with(agent, target);
                if !strictly_prefers(instance, agent, &joined, home)? {
                    return Ok(false);
                }
                if self.kind == WitnessKind::Envy {
                    return Ok(true);
                }
                for &member in target {
                    if !weakly_prefers(instance, member, &joined, partition.coalition_of(member))? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{additive_example, ea_example, fa_example};
    use super::*;

    fn set(agents: &[usize]) -> Coalition {
        agents.iter().copied().collect()
    }

    fn free() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn singleton_partition_of_the_additive_example_is_core_stable() {
        let game = additive_example();
        let singles = Partition::singletons(4);
        assert!(verify(&game, &singles, StabilityConcept::Core, &free()).unwrap().is_none());
    }

    #[test]
    fn singleton_partition_admits_a_blocking_tuple() {
        let game = additive_example();
        let singles = Partition::singletons(4);
        let witness = verify(&game, &singles, StabilityConcept::IndividuallyStable, &free())
            .unwrap()
            .expect("a blocking tuple exists");
        assert_eq!(witness.kind, WitnessKind::BlockingTuple);
        assert!(witness.reverify(&game, &singles).unwrap());

        // The worked example's tuple: agent 2 joins {4} for utility 1 over 0.
        let pinned = Witness {
            kind: WitnessKind::BlockingTuple,
            agents: set(&[1]),
            target: Some(set(&[3])),
        };
        assert!(pinned.reverify(&game, &singles).unwrap());
    }

    #[test]
    fn singleton_partition_fails_the_stronger_concepts_too() {
        let game = additive_example();
        let singles = Partition::singletons(4);
        assert!(verify(&game, &singles, StabilityConcept::Nash, &free()).unwrap().is_some());
        assert!(verify(&game, &singles, StabilityConcept::StrictCore, &free())
            .unwrap()
            .is_some());
    }

    #[test]
    fn the_worked_partition_is_strictly_core_stable_and_nash() {
        let game = additive_example();
        let partition = Partition::new(4, &[vec![0, 1, 3], vec![2]]).unwrap();
        for concept in [
            StabilityConcept::StrictCore,
            StabilityConcept::Core,
            StabilityConcept::Nash,
            StabilityConcept::IndividuallyStable,
        ] {
            assert!(verify(&game, &partition, concept, &free()).unwrap().is_none());
        }
    }

    #[test]
    fn fa_grand_coalition_is_stable_under_every_concept() {
        let game = fa_example();
        let grand = Partition::grand(4);
        for concept in [
            StabilityConcept::Nash,
            StabilityConcept::IndividuallyStable,
            StabilityConcept::Core,
            StabilityConcept::StrictCore,
        ] {
            assert!(verify(&game, &grand, concept, &free()).unwrap().is_none());
        }
    }

    #[test]
    fn fa_split_partition_is_strictly_core_stable_but_not_nash() {
        let game = fa_example();
        let partition = Partition::new(4, &[vec![0, 1, 2], vec![3]]).unwrap();
        assert!(verify(&game, &partition, StabilityConcept::StrictCore, &free())
            .unwrap()
            .is_none());
        assert!(verify(&game, &partition, StabilityConcept::IndividuallyStable, &free())
            .unwrap()
            .is_none());
        let envy = verify(&game, &partition, StabilityConcept::Nash, &free())
            .unwrap()
            .expect("someone envies");
        assert_eq!(envy.kind, WitnessKind::Envy);
        assert!(envy.reverify(&game, &partition).unwrap());

        // Agent 4 envies {1, 2, 3}, as the worked example states.
        let pinned = Witness {
            kind: WitnessKind::Envy,
            agents: set(&[3]),
            target: Some(set(&[0, 1, 2])),
        };
        assert!(pinned.reverify(&game, &partition).unwrap());
    }

    #[test]
    fn ea_pair_partition_is_core_but_not_strictly_core_stable() {
        let game = ea_example();
        let partition = Partition::new(4, &[vec![0, 1], vec![2], vec![3]]).unwrap();
        assert!(verify(&game, &partition, StabilityConcept::Core, &free()).unwrap().is_none());
        let witness = verify(&game, &partition, StabilityConcept::StrictCore, &free())
            .unwrap()
            .expect("weakly blocked");
        assert_eq!(witness.kind, WitnessKind::WeaklyBlockingCoalition);
        assert_eq!(witness.agents, set(&[0, 2]));
        assert!(witness.reverify(&game, &partition).unwrap());
    }

    #[test]
    fn ea_pair_partition_is_individually_stable_but_not_nash() {
        let game = ea_example();
        let partition = Partition::new(4, &[vec![0, 1], vec![2], vec![3]]).unwrap();
        assert!(verify(&game, &partition, StabilityConcept::IndividuallyStable, &free())
            .unwrap()
            .is_none());
        let envy = verify(&game, &partition, StabilityConcept::Nash, &free())
            .unwrap()
            .expect("agent 3 envies {4}");
        assert_eq!(envy.agents, set(&[2]));
        assert_eq!(envy.target, Some(set(&[3])));
        assert!(envy.reverify(&game, &partition).unwrap());
    }

    #[test]
    fn ea_grand_coalition_is_blocked() {
        let game = ea_example();
        let grand = Partition::grand(4);
        let witness = verify(&game, &grand, StabilityConcept::Core, &free())
            .unwrap()
            .expect("enemies force a deviation");
        assert_eq!(witness.kind, WitnessKind::BlockingCoalition);
        assert!(witness.reverify(&game, &grand).unwrap());
    }

    #[test]
    fn core_search_respects_the_node_budget() {
        // A stable partition forces the search through its whole candidate
        // pool, so a tight budget runs out midway.
        let game = additive_example();
        let singles = Partition::singletons(4);
        let tight = SearchLimits::nodes(3);
        assert!(verify(&game, &singles, StabilityConcept::Core, &tight).is_err());
        let enough = SearchLimits::nodes(7);
        assert!(verify(&game, &singles, StabilityConcept::Core, &enough).unwrap().is_none());
    }

    #[test]
    fn verify_rejects_mismatched_sizes() {
        let game = ea_example();
        let partition = Partition::singletons(3);
        assert!(verify(&game, &partition, StabilityConcept::Nash, &free()).is_err());
    }

    #[test]
    fn tampered_witnesses_fail_reverification() {
        let game = additive_example();
        let singles = Partition::singletons(4);
        let bogus_tuple = Witness {
            kind: WitnessKind::BlockingTuple,
            agents: set(&[1]),
            target: Some(set(&[2])),
        };
        assert!(!bogus_tuple.reverify(&game, &singles).unwrap());
        let bogus_block = Witness {
            kind: WitnessKind::BlockingCoalition,
            agents: set(&[0, 2]),
            target: None,
        };
        assert!(!bogus_block.reverify(&game, &singles).unwrap());
        let not_in_partition = Witness {
            kind: WitnessKind::Envy,
            agents: set(&[1]),
            target: Some(set(&[2, 3])),
        };
        assert!(!not_in_partition.reverify(&game, &singles).unwrap());
    }
}
