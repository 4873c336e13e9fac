//! Brute-force references, instance generators, and enumeration utilities.
//!
//! Everything here trades speed for being obviously correct: the iterators
//! enumerate whole search spaces in a fixed order, and the reference solvers
//! certify the parameterized algorithms on desk-scale instances.

mod clique;
mod gen;

pub use clique::{clique_decision_bb, clique_to_cc_instance, max_clique_size, CliqueInput};
pub use gen::{generate, Generated, GeneratorShape, GeneratorSpec, GENERATOR_VERSION};

use crate::error::{Error, Result};
use crate::hedonic::{verify, HedonicInstance, Partition, StabilityConcept};
use crate::limits::SearchLimits;

/// The first stable partition of the instance under `concept`, scanning all
/// set partitions in restricted-growth order, or `None` when every partition
/// admits a witness. Guarded at 10 agents.
pub fn brute_force_hedonic(
    instance: &HedonicInstance,
    concept: StabilityConcept,
) -> Result<Option<Partition>> {
    let n = instance.agent_count();
    if n > 10 {
        return Err(Error::resource(format!(
            "exhaustive stability search guarded at 10 agents, got {n}"
        )));
    }
    let limits = SearchLimits::default();
    for blocks in enumerate_partitions(n)? {
        let partition = Partition::new(n, &blocks)?;
        if verify(instance, &partition, concept, &limits)?.is_none() {
            return Ok(Some(partition));
        }
    }
    Ok(None)
}

/// All `take`-element subsets of `{0..pool}` in lexicographic order.
pub fn combinations(pool: usize, take: usize) -> Combinations {
    let current = if take <= pool {
        Some((0..take).collect())
    } else {
        None
    };
    Combinations { pool, take, current }
}

pub struct Combinations {
    pool: usize,
    take: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.current.as_mut()?;
        let out = current.clone();
        // Advance: bump the rightmost index that still has room.
        let mut pos = self.take;
        loop {
            if pos == 0 {
                self.current = None;
                break;
            }
            pos -= 1;
            if current[pos] < self.pool - (self.take - pos) {
                current[pos] += 1;
                for i in pos + 1..self.take {
                    current[i] = current[i - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// All set partitions of `{0..n}` in restricted-growth-string order. Blocks
/// are listed by smallest member. Guarded at n ≤ 12 (Bell numbers explode).
pub fn enumerate_partitions(n: usize) -> Result<SetPartitions> {
    if n == 0 {
        return Err(Error::domain("cannot partition an empty ground set"));
    }
    if n > 12 {
        return Err(Error::resource(format!(
            "partition enumeration guarded at 12 elements, got {n}"
        )));
    }
    Ok(SetPartitions { code: vec![0; n], fresh: true })
}

pub struct SetPartitions {
    code: Vec<usize>,
    fresh: bool,
}

impl SetPartitions {
    fn blocks(&self) -> Vec<Vec<usize>> {
        let count = self.code.iter().max().unwrap() + 1;
        let mut blocks = vec![Vec::new(); count];
        for (i, &c) in self.code.iter().enumerate() {
            blocks[c].push(i);
        }
        blocks
    }

    fn advance(&mut self) -> bool {
        // A restricted growth string satisfies code[i] <= max(code[..i]) + 1;
        // the successor bumps the rightmost position with headroom.
        let n = self.code.len();
        for i in (1..n).rev() {
            let cap = self.code[..i].iter().max().copied().unwrap_or(0) + 1;
            if self.code[i] < cap {
                self.code[i] += 1;
                for j in i + 1..n {
                    self.code[j] = 0;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for SetPartitions {
    type Item = Vec<Vec<usize>>;

    fn next(&mut self) -> Option<Vec<Vec<usize>>> {
        if self.fresh {
            self.fresh = false;
            return Some(self.blocks());
        }
        if self.advance() {
            Some(self.blocks())
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<_> = combinations(4, 2).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(2, 3).count(), 0);
        assert_eq!(combinations(6, 3).count(), 20);
    }

    #[test]
    fn partition_counts_match_bell_numbers() {
        let bell = [1usize, 1, 2, 5, 15, 52, 203, 877, 4140];
        for n in 1..=8 {
            assert_eq!(enumerate_partitions(n).unwrap().count(), bell[n], "n={n}");
        }
    }

    #[test]
    fn partitions_of_three_in_growth_order() {
        let all: Vec<_> = enumerate_partitions(3).unwrap().collect();
        assert_eq!(
            all,
            vec![
                vec![vec![0, 1, 2]],
                vec![vec![0, 1], vec![2]],
                vec![vec![0, 2], vec![1]],
                vec![vec![0], vec![1, 2]],
                vec![vec![0], vec![1], vec![2]],
            ]
        );
    }

    #[test]
    fn partition_guard() {
        assert!(enumerate_partitions(0).is_err());
        assert!(enumerate_partitions(13).is_err());
    }

    #[test]
    fn brute_force_settles_the_worked_friendship_games() {
        let arcs = [(0, 1), (1, 0), (0, 2), (2, 0), (3, 1), (2, 3)];
        let fa = HedonicInstance::friend_appreciation(4, arcs).unwrap();
        let found = brute_force_hedonic(&fa, StabilityConcept::Nash)
            .unwrap()
            .expect("the grand coalition is stable");
        assert_eq!(found, Partition::grand(4));

        let ea = HedonicInstance::enemy_aversion(4, arcs).unwrap();
        assert_eq!(brute_force_hedonic(&ea, StabilityConcept::Nash).unwrap(), None);
        assert_eq!(brute_force_hedonic(&ea, StabilityConcept::StrictCore).unwrap(), None);
        assert!(brute_force_hedonic(&ea, StabilityConcept::Core).unwrap().is_some());
    }

    #[test]
    fn brute_force_guards_its_blowup() {
        let big = HedonicInstance::friend_appreciation(11, []).unwrap();
        assert!(brute_force_hedonic(&big, StabilityConcept::Core).is_err());
    }
}
