//! Preference profiles over a fixed alternative set, plus recognition of
//! one-dimensional structure (single-peaked and single-crossing) and minimum
//! deletion distances to those structures.
//!
//! Alternatives and voters are indexed from 0 internally; the text formats
//! use 1-based indices.

mod deletion;
mod recognize;

pub use deletion::{deletion_distance, DeletionCertificate, DeletionTarget, Structure};
pub use recognize::{recognize_sc, recognize_sp};

use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// Which side of a profile an axis orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisTarget {
    Alternatives,
    Voters,
}

/// A witness ordering: alternatives for single-peakedness, voters for
/// single-crossingness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Axis {
    pub target: AxisTarget,
    pub order: Vec<usize>,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.target {
            AxisTarget::Alternatives => "alternatives",
            AxisTarget::Voters => "voters",
        };
        write!(f, "{tag}:")?;
        for x in &self.order {
            write!(f, " {}", x + 1)?;
        }
        Ok(())
    }
}

/// The two supported ballot formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    Linear,
    Approval,
}

#[derive(Debug, Clone)]
enum Ballots {
    /// One strict ranking per voter, best first.
    Linear(Vec<Vec<usize>>),
    /// One approval set per voter.
    Approval(Vec<BTreeSet<usize>>),
}

/// An election profile: `m` alternatives and one ballot per voter.
#[derive(Debug, Clone)]
pub struct PreferenceProfile {
    m: usize,
    ballots: Ballots,
    /// Linear profiles only: ranks[v][a] is the 0-based position of `a` in
    /// voter `v`'s ranking.
    ranks: Vec<Vec<usize>>,
}

impl PreferenceProfile {
    /// Builds a linear-order profile. Every ranking must be a permutation of
    /// `0..m`.
    pub fn linear(m: usize, orders: Vec<Vec<usize>>) -> Result<Self> {
        if m == 0 {
            return Err(Error::domain("a profile needs at least one alternative"));
        }
        if orders.is_empty() {
            return Err(Error::domain("a profile needs at least one voter"));
        }
        let mut ranks = Vec::with_capacity(orders.len());
        for (v, order) in orders.iter().enumerate() {
            if order.len() != m {
                return Err(Error::domain(format!(
                    "voter {} ranks {} alternatives, expected {}",
                    v + 1,
                    order.len(),
                    m
                )));
            }
            let mut rank = vec![usize::MAX; m];
            for (pos, &a) in order.iter().enumerate() {
                if a >= m {
                    return Err(Error::domain(format!(
                        "voter {} ranks unknown alternative {}",
                        v + 1,
                        a + 1
                    )));
                }
                if rank[a] != usize::MAX {
                    return Err(Error::domain(format!(
                        "voter {} ranks alternative {} twice",
                        v + 1,
                        a + 1
                    )));
                }
                rank[a] = pos;
            }
            ranks.push(rank);
        }
        Ok(PreferenceProfile { m, ballots: Ballots::Linear(orders), ranks })
    }

    /// Builds an approval profile. Approval sets may be empty; members must
    /// lie in `0..m`.
    pub fn approval(m: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        if m == 0 {
            return Err(Error::domain("a profile needs at least one alternative"));
        }
        if sets.is_empty() {
            return Err(Error::domain("a profile needs at least one voter"));
        }
        let mut ballots = Vec::with_capacity(sets.len());
        for (v, set) in sets.into_iter().enumerate() {
            let mut b = BTreeSet::new();
            for a in set {
                if a >= m {
                    return Err(Error::domain(format!(
                        "voter {} approves unknown alternative {}",
                        v + 1,
                        a + 1
                    )));
                }
                if !b.insert(a) {
                    return Err(Error::domain(format!(
                        "voter {} approves alternative {} twice",
                        v + 1,
                        a + 1
                    )));
                }
            }
            ballots.push(b);
        }
        Ok(PreferenceProfile { m, ballots: Ballots::Approval(ballots), ranks: Vec::new() })
    }

    pub fn kind(&self) -> ProfileKind {
        match self.ballots {
            Ballots::Linear(_) => ProfileKind::Linear,
            Ballots::Approval(_) => ProfileKind::Approval,
        }
    }

    pub fn num_alternatives(&self) -> usize {
        self.m
    }

    pub fn num_voters(&self) -> usize {
        match &self.ballots {
            Ballots::Linear(o) => o.len(),
            Ballots::Approval(s) => s.len(),
        }
    }

    /// 0-based position of `alternative` in `voter`'s ranking (0 is best).
    pub fn rank(&self, voter: usize, alternative: usize) -> Result<usize> {
        self.check_voter(voter)?;
        self.check_alternative(alternative)?;
        match self.ballots {
            Ballots::Linear(_) => Ok(self.ranks[voter][alternative]),
            Ballots::Approval(_) => {
                Err(Error::contract("rank is only defined on linear profiles"))
            }
        }
    }

    /// Voter's full ranking, best first. Linear profiles only.
    pub fn ranking(&self, voter: usize) -> Result<&[usize]> {
        self.check_voter(voter)?;
        match &self.ballots {
            Ballots::Linear(o) => Ok(&o[voter]),
            Ballots::Approval(_) => {
                Err(Error::contract("ranking is only defined on linear profiles"))
            }
        }
    }

    /// Voter's approval set. Approval profiles only.
    pub fn approval_set(&self, voter: usize) -> Result<&BTreeSet<usize>> {
        self.check_voter(voter)?;
        match &self.ballots {
            Ballots::Approval(s) => Ok(&s[voter]),
            Ballots::Linear(_) => {
                Err(Error::contract("approval_set is only defined on approval profiles"))
            }
        }
    }

    /// Voters approving `alternative` (the alternative's supporter set).
    pub fn supporters(&self, alternative: usize) -> Result<Vec<usize>> {
        self.check_alternative(alternative)?;
        match &self.ballots {
            Ballots::Approval(sets) => Ok(sets
                .iter()
                .enumerate()
                .filter(|(_, s)| s.contains(&alternative))
                .map(|(v, _)| v)
                .collect()),
            Ballots::Linear(_) => {
                Err(Error::contract("supporters is only defined on approval profiles"))
            }
        }
    }

    pub(crate) fn linear_rank(&self, voter: usize, alternative: usize) -> usize {
        self.ranks[voter][alternative]
    }

    fn check_voter(&self, voter: usize) -> Result<()> {
        if voter >= self.num_voters() {
            return Err(Error::contract(format!("voter {} out of range", voter + 1)));
        }
        Ok(())
    }

    fn check_alternative(&self, alternative: usize) -> Result<()> {
        if alternative >= self.m {
            return Err(Error::contract(format!(
                "alternative {} out of range",
                alternative + 1
            )));
        }
        Ok(())
    }

    /// The profile restricted to `voters` (in their given order).
    pub fn restrict_voters(&self, voters: &[usize]) -> Result<Self> {
        if voters.is_empty() {
            return Err(Error::domain("a profile needs at least one voter"));
        }
        for &v in voters {
            self.check_voter(v)?;
        }
        match &self.ballots {
            Ballots::Linear(o) => {
                PreferenceProfile::linear(self.m, voters.iter().map(|&v| o[v].clone()).collect())
            }
            Ballots::Approval(s) => PreferenceProfile::approval(
                self.m,
                voters.iter().map(|&v| s[v].iter().copied().collect()).collect(),
            ),
        }
    }

    /// The profile restricted to `alternatives`; indices are compacted to
    /// `0..alternatives.len()` following the given order.
    pub fn restrict_alternatives(&self, alternatives: &[usize]) -> Result<Self> {
        if alternatives.is_empty() {
            return Err(Error::domain("a profile needs at least one alternative"));
        }
        let mut new_index = vec![usize::MAX; self.m];
        for (i, &a) in alternatives.iter().enumerate() {
            self.check_alternative(a)?;
            if new_index[a] != usize::MAX {
                return Err(Error::domain(format!("alternative {} listed twice", a + 1)));
            }
            new_index[a] = i;
        }
        match &self.ballots {
            Ballots::Linear(orders) => PreferenceProfile::linear(
                alternatives.len(),
                orders
                    .iter()
                    .map(|o| {
                        o.iter()
                            .filter(|&&a| new_index[a] != usize::MAX)
                            .map(|&a| new_index[a])
                            .collect()
                    })
                    .collect(),
            ),
            Ballots::Approval(sets) => PreferenceProfile::approval(
                alternatives.len(),
                sets.iter()
                    .map(|s| {
                        s.iter()
                            .filter(|&&a| new_index[a] != usize::MAX)
                            .map(|&a| new_index[a])
                            .collect()
                    })
                    .collect(),
            ),
        }
    }
}

/// Definitional single-peakedness check along a full alternative order.
///
/// Linear ballots must be unimodal along the axis; approval ballots must be
/// axis intervals.
pub fn is_single_peaked_along(profile: &PreferenceProfile, order: &[usize]) -> Result<bool> {
    check_permutation(order, profile.m, "axis")?;
    match &profile.ballots {
        Ballots::Linear(_) => {
            for v in 0..profile.num_voters() {
                // Walking the axis, desirability must strictly rise to the
                // peak and strictly fall afterwards.
                let mut falling = false;
                for w in order.windows(2) {
                    let better_left =
                        profile.linear_rank(v, w[0]) < profile.linear_rank(v, w[1]);
                    if better_left {
                        falling = true;
                    } else if falling {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        Ballots::Approval(sets) => {
            let mut pos = vec![0usize; profile.m];
            for (p, &a) in order.iter().enumerate() {
                pos[a] = p;
            }
            for set in sets {
                if set.is_empty() {
                    continue;
                }
                let lo = set.iter().map(|&a| pos[a]).min().unwrap();
                let hi = set.iter().map(|&a| pos[a]).max().unwrap();
                if hi - lo + 1 != set.len() {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Definitional single-crossingness check along a full voter order.
///
/// Linear ballots: every alternative pair flips orientation at most once
/// along the order. Approval ballots: every alternative's supporter set is an
/// interval of the order.
pub fn is_single_crossing_along(profile: &PreferenceProfile, order: &[usize]) -> Result<bool> {
    check_permutation(order, profile.num_voters(), "voter order")?;
    match &profile.ballots {
        Ballots::Linear(_) => {
            for a in 0..profile.m {
                for b in (a + 1)..profile.m {
                    let mut flips = 0;
                    let mut last = None;
                    for &v in order {
                        let pref = profile.linear_rank(v, a) < profile.linear_rank(v, b);
                        if let Some(prev) = last {
                            if prev != pref {
                                flips += 1;
                            }
                        }
                        last = Some(pref);
                    }
                    if flips > 1 {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        Ballots::Approval(sets) => {
            let mut pos = vec![0usize; profile.num_voters()];
            for (p, &v) in order.iter().enumerate() {
                pos[v] = p;
            }
            for a in 0..profile.m {
                let supp: Vec<usize> = sets
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| s.contains(&a))
                    .map(|(v, _)| pos[v])
                    .collect();
                if supp.is_empty() {
                    continue;
                }
                let lo = *supp.iter().min().unwrap();
                let hi = *supp.iter().max().unwrap();
                if hi - lo + 1 != supp.len() {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

fn check_permutation(order: &[usize], len: usize, what: &str) -> Result<()> {
    if order.len() != len {
        return Err(Error::contract(format!(
            "{what} has length {}, expected {len}",
            order.len()
        )));
    }
    let mut seen = vec![false; len];
    for &x in order {
        if x >= len || seen[x] {
            return Err(Error::contract(format!("{what} is not a permutation")));
        }
        seen[x] = true;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Three linear ballots over four alternatives, used across the crate's
    /// tests: v1: a3>a4>a2>a1, v2: a2>a3>a4>a1, v3: a1>a2>a3>a4.
    pub(crate) fn small_linear() -> PreferenceProfile {
        PreferenceProfile::linear(
            4,
            vec![vec![2, 3, 1, 0], vec![1, 2, 3, 0], vec![0, 1, 2, 3]],
        )
        .unwrap()
    }

    pub(crate) fn small_approval() -> PreferenceProfile {
        PreferenceProfile::approval(4, vec![vec![1, 2], vec![0], vec![2, 3]]).unwrap()
    }

    #[test]
    fn rank_reads_positions() {
        let p = small_linear();
        assert_eq!(p.rank(1, 3).unwrap(), 2);
        assert_eq!(p.rank(0, 2).unwrap(), 0);
        assert_eq!(p.rank(2, 0).unwrap(), 0);
    }

    #[test]
    fn rank_rejects_approval_profiles() {
        let p = small_approval();
        assert!(matches!(p.rank(0, 0), Err(Error::Contract(_))));
    }

    #[test]
    fn rejects_malformed_ballots() {
        assert!(PreferenceProfile::linear(3, vec![vec![0, 1]]).is_err());
        assert!(PreferenceProfile::linear(3, vec![vec![0, 1, 1]]).is_err());
        assert!(PreferenceProfile::linear(3, vec![vec![0, 1, 3]]).is_err());
        assert!(PreferenceProfile::approval(3, vec![vec![0, 3]]).is_err());
        assert!(PreferenceProfile::approval(3, vec![vec![1, 1]]).is_err());
        assert!(PreferenceProfile::linear(0, vec![]).is_err());
    }

    #[test]
    fn linear_sp_checks_unimodality() {
        let p = small_linear();
        assert!(is_single_peaked_along(&p, &[0, 1, 2, 3]).unwrap());
        assert!(is_single_peaked_along(&p, &[3, 2, 1, 0]).unwrap());
        // v3 has a valley at a3 on the axis a2,a3,a1,a4.
        assert!(!is_single_peaked_along(&p, &[1, 2, 0, 3]).unwrap());
    }

    #[test]
    fn approval_sp_checks_intervals() {
        let p = small_approval();
        assert!(is_single_peaked_along(&p, &[0, 1, 2, 3]).unwrap());
        assert!(!is_single_peaked_along(&p, &[1, 0, 2, 3]).unwrap());
    }

    #[test]
    fn linear_sc_counts_flips() {
        let p = small_linear();
        assert!(is_single_crossing_along(&p, &[0, 1, 2]).unwrap());
        assert!(is_single_crossing_along(&p, &[2, 1, 0]).unwrap());
        // With v3 in the middle the pair (a1, a2) flips twice.
        assert!(!is_single_crossing_along(&p, &[0, 2, 1]).unwrap());
    }

    #[test]
    fn approval_sc_checks_supporter_intervals() {
        let p = small_approval();
        assert!(is_single_crossing_along(&p, &[0, 2, 1]).unwrap());
        assert!(!is_single_crossing_along(&p, &[0, 1, 2]).unwrap());
    }

    #[test]
    fn restriction_keeps_order() {
        let p = small_linear();
        let q = p.restrict_alternatives(&[1, 2, 3]).unwrap();
        // v1: a3>a4>a2 becomes 1>2>0 over compacted indices.
        assert_eq!(q.ranking(0).unwrap(), &[1, 2, 0]);
        let r = p.restrict_voters(&[2]).unwrap();
        assert_eq!(r.num_voters(), 1);
        assert_eq!(r.ranking(0).unwrap(), &[0, 1, 2, 3]);
    }
}
