//! Stable-partition search: better-response dynamics for symmetric additive
//! games and exhaustive Nash existence for enemy-aversion games.

use super::verify::{strictly_prefers, verify};
use super::{
    Coalition, HedonicInstance, HedonicModel, Partition, StabilityConcept,
};
use crate::error::{Error, Result};
use crate::limits::SearchLimits;
use crate::oracles::enumerate_partitions;

/// Outcome of [`nash_search_symmetric`]: the stable partition together with
/// the social welfare after each deviation, starting from all singletons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NashSearch {
    pub partition: Partition,
    pub welfare: Vec<i64>,
}

fn social_welfare(instance: &HedonicInstance, partition: &Partition) -> i64 {
    (0..instance.agent_count())
        .map(|i| instance.additive_value(i, partition.coalition_of(i)))
        .sum()
}

/// Find a Nash stable partition of a symmetric additive game by iterated
/// better responses from the all-singletons partition.
///
/// Each accepted deviation raises the social welfare by at least two (both
/// directions of the moved agent's utilities count), so the dynamics
/// terminate. Every move costs one node from `limits`. The returned welfare
/// trace starts at the singleton welfare of zero and is strictly increasing.
pub fn nash_search_symmetric(
    instance: &HedonicInstance,
    limits: &SearchLimits,
) -> Result<NashSearch> {
    if instance.model() != HedonicModel::Additive {
        return Err(Error::unsupported(format!(
            "better-response search requires an additive game, got {}",
            instance.model()
        )));
    }
    if !instance.symmetric() {
        return Err(Error::contract(
            "better-response search requires symmetric utilities",
        ));
    }
    let n = instance.agent_count();
    let mut blocks: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let mut welfare = vec![0i64];
    'dynamics: loop {
        let partition = Partition::new(n, &blocks)?;
        for agent in 0..n {
            let home = partition.coalition_of(agent);
            let targets = partition
                .coalitions()
                .iter()
                .filter(|&c| c != home)
                .cloned()
                .chain((home.len() > 1).then(Coalition::new));
            for target in targets {
                let mut joined = target.clone();
                joined.insert(agent);
                if strictly_prefers(instance, agent, &joined, home)? {
                    limits.tick()?;
                    let mut next: Vec<Vec<usize>> = partition
                        .coalitions()
                        .iter()
                        .filter(|&c| c != home && *c != target)
                        .map(|c| c.iter().copied().collect())
                        .collect();
                    let rest: Vec<usize> =
                        home.iter().copied().filter(|&j| j != agent).collect();
                    if !rest.is_empty() {
                        next.push(rest);
                    }
                    next.push(joined.iter().copied().collect());
                    blocks = next;
                    let gained = social_welfare(instance, &Partition::new(n, &blocks)?);
                    debug_assert!(gained > *welfare.last().expect("seeded"));
                    welfare.push(gained);
                    continue 'dynamics;
                }
            }
        }
        return Ok(NashSearch { partition, welfare });
    }
}

/// Decide whether an enemy-aversion game admits a Nash stable partition.
///
/// Under enemy aversion an agent flees any coalition holding an enemy, and
/// one-sided friendships let the unloved side walk out, so every coalition of
/// a Nash stable partition is a clique of mutual friends. Only agents in at
/// least one mutual friendship can participate in a non-trivial coalition;
/// the search enumerates partitions of those agents into mutual cliques and
/// verifies each candidate outright.
pub fn ea_nash_exist_fas(instance: &HedonicInstance) -> Result<Option<Partition>> {
    if instance.model() != HedonicModel::EnemyAversion {
        return Err(Error::unsupported(format!(
            "the Nash existence check requires an enemy-aversion game, got {}",
            instance.model()
        )));
    }
    let n = instance.agent_count();
    let mutual: Vec<usize> = (0..n)
        .filter(|&i| instance.friends_of(i).any(|j| instance.is_friend(j, i)))
        .collect();
    let loners: Vec<Vec<usize>> = (0..n)
        .filter(|i| mutual.binary_search(i).is_err())
        .map(|i| vec![i])
        .collect();
    let all_mutual = |group: &[usize]| {
        group.iter().enumerate().all(|(pos, &i)| {
            group[pos + 1..]
                .iter()
                .all(|&j| instance.is_friend(i, j) && instance.is_friend(j, i))
        })
    };
    let limits = SearchLimits::default();
    if mutual.is_empty() {
        let candidate = Partition::singletons(n);
        let stable =
            verify(instance, &candidate, StabilityConcept::Nash, &limits)?.is_none();
        return Ok(stable.then_some(candidate));
    }
    for grouping in enumerate_partitions(mutual.len())? {
        let mut blocks: Vec<Vec<usize>> = grouping
            .iter()
            .map(|g| g.iter().map(|&p| mutual[p]).collect())
            .collect();
        if !blocks.iter().all(|g| all_mutual(g)) {
            continue;
        }
        blocks.extend(loners.iter().cloned());
        let candidate = Partition::new(n, &blocks)?;
        if verify(instance, &candidate, StabilityConcept::Nash, &limits)?.is_none() {
            return Ok(Some(candidate));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{additive_example, ea_example};
    use super::super::verify;
    use super::*;

    fn free() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn symmetric_search_reaches_a_nash_stable_partition() {
        let game = HedonicInstance::additive(
            4,
            [(0, 1, 3), (1, 0, 3), (1, 2, 1), (2, 1, 1), (0, 3, -2), (3, 0, -2)],
        )
        .unwrap();
        let found = nash_search_symmetric(&game, &free()).unwrap();
        assert!(verify(&game, &found.partition, StabilityConcept::Nash, &free())
            .unwrap()
            .is_none());
        assert_eq!(found.welfare.first(), Some(&0));
        assert!(found.welfare.windows(2).all(|w| w[0] < w[1]));
        let settled = *found.welfare.last().unwrap();
        assert_eq!(settled, social_welfare(&game, &found.partition));
    }

    #[test]
    fn a_single_mutual_friendship_pairs_up() {
        let game = HedonicInstance::additive(2, [(0, 1, 1), (1, 0, 1)]).unwrap();
        let found = nash_search_symmetric(&game, &free()).unwrap();
        assert_eq!(found.partition, Partition::grand(2));
        assert_eq!(found.welfare, vec![0, 2]);
    }

    #[test]
    fn hostile_agents_stay_single() {
        let game = HedonicInstance::additive(3, [(0, 1, -1), (1, 0, -1)]).unwrap();
        let found = nash_search_symmetric(&game, &free()).unwrap();
        assert_eq!(found.partition, Partition::singletons(3));
        assert_eq!(found.welfare, vec![0]);
    }

    #[test]
    fn the_search_insists_on_its_preconditions() {
        let asymmetric = additive_example();
        assert!(nash_search_symmetric(&asymmetric, &free()).is_err());
        let ea = ea_example();
        assert!(nash_search_symmetric(&ea, &free()).is_err());
    }

    #[test]
    fn the_search_respects_the_node_budget() {
        let game = HedonicInstance::additive(2, [(0, 1, 1), (1, 0, 1)]).unwrap();
        assert!(nash_search_symmetric(&game, &SearchLimits::nodes(0)).is_err());
    }

    #[test]
    fn the_worked_enemy_aversion_game_has_no_nash_stable_partition() {
        assert_eq!(ea_nash_exist_fas(&ea_example()).unwrap(), None);
    }

    #[test]
    fn mutual_pairs_assemble_into_a_stable_partition() {
        let game = HedonicInstance::enemy_aversion(3, [(0, 1), (1, 0)]).unwrap();
        let found = ea_nash_exist_fas(&game).unwrap().expect("the pair stands alone");
        assert_eq!(
            found,
            Partition::new(3, &[vec![0, 1], vec![2]]).unwrap()
        );
        assert!(verify(&game, &found, StabilityConcept::Nash, &free())
            .unwrap()
            .is_none());
    }

    #[test]
    fn friendless_enemy_aversion_games_settle_as_singletons() {
        let game = HedonicInstance::enemy_aversion(3, []).unwrap();
        let found = ea_nash_exist_fas(&game).unwrap().expect("singletons are stable");
        assert_eq!(found, Partition::singletons(3));
    }

    #[test]
    fn a_one_sided_friendship_spoils_every_partition() {
        // Agent 1 chases agent 2, who flees any coalition containing him, so
        // no partition is immune to a unilateral move.
        let game = HedonicInstance::enemy_aversion(2, [(0, 1)]).unwrap();
        assert_eq!(ea_nash_exist_fas(&game).unwrap(), None);
    }

    #[test]
    fn the_existence_check_rejects_other_models() {
        assert!(ea_nash_exist_fas(&additive_example()).is_err());
    }
}
