//! Exact committee solvers: plain enumeration, the voter-partition search,
//! the rank-bounded search for Chamberlin-Courant, and the deletion-set
//! decomposition for maximin approval.

use crate::error::{Error, Result};
use crate::limits::SearchLimits;
use crate::oracles::{combinations, enumerate_partitions};
use crate::profiles::{recognize_sc, recognize_sp, PreferenceProfile, ProfileKind};
use std::collections::HashMap;

use super::{
    mav_distance, misrepresentation, optimal_assignment, pav_score, CommitteeSolution,
    MultiWinnerInstance, Objective, Rule,
};

/// Exact optimum for any rule by scanning all C(m,k) committees in
/// lexicographic order; the first committee attaining the optimum wins.
pub fn solve_by_committee_enumeration(
    instance: &MultiWinnerInstance,
    rule: Rule,
    limits: &SearchLimits,
) -> Result<CommitteeSolution> {
    let profile = &instance.profile;
    let k = instance.k;
    let mut best: Option<CommitteeSolution> = None;
    for committee in combinations(profile.num_alternatives(), k) {
        limits.tick()?;
        let candidate = evaluate(profile, rule, committee)?;
        let better = match (&best, &candidate.objective) {
            (None, _) => true,
            (Some(b), Objective::Misrep(x)) => match &b.objective {
                Objective::Misrep(y) => x < y,
                _ => unreachable!(),
            },
            (Some(b), Objective::Score(x)) => match &b.objective {
                Objective::Score(y) => x > y,
                _ => unreachable!(),
            },
        };
        if better {
            best = Some(candidate);
        }
    }
    Ok(best.expect("at least one committee exists"))
}

fn evaluate(profile: &PreferenceProfile, rule: Rule, committee: Vec<usize>) -> Result<CommitteeSolution> {
    let (assignment, objective) = match rule {
        Rule::Monroe | Rule::ChamberlinCourant => {
            let a = optimal_assignment(profile, rule, &committee)?;
            let value = misrepresentation(profile, rule, &committee, &a)?;
            (Some(a), Objective::Misrep(value))
        }
        Rule::Mav => (None, Objective::Misrep(mav_distance(profile, &committee)?)),
        Rule::Pav => (None, Objective::Score(pav_score(profile, &committee)?)),
    };
    Ok(CommitteeSolution { rule, committee, assignment, objective })
}

/// Exact Chamberlin-Courant optimum by enumerating set partitions of the
/// voters into at most k blocks and serving each block with its best single
/// alternative. With k ≥ n every voter simply gets their favorite.
pub fn solve_cc_by_voter_partition(
    instance: &MultiWinnerInstance,
    limits: &SearchLimits,
) -> Result<CommitteeSolution> {
    let profile = &instance.profile;
    let n = profile.num_voters();
    let m = profile.num_alternatives();
    let k = instance.k;

    if k >= n {
        let mut assignment = Vec::with_capacity(n);
        let mut objective = 0u64;
        for v in 0..n {
            let (a, c) = favorite(profile, v)?;
            assignment.push(a);
            objective += c;
        }
        let committee = pad_committee(&assignment, m, k);
        return Ok(CommitteeSolution {
            rule: Rule::ChamberlinCourant,
            committee,
            assignment: Some(assignment),
            objective: Objective::Misrep(objective),
        });
    }

    let mut best: Option<(u64, Vec<usize>, Vec<usize>)> = None;
    for blocks in enumerate_partitions(n)? {
        limits.tick()?;
        if blocks.len() > k {
            continue;
        }
        let mut assignment = vec![0usize; n];
        let mut objective = 0u64;
        for block in &blocks {
            let (a, c) = best_for_block(profile, block)?;
            for &v in block {
                assignment[v] = a;
            }
            objective += c;
        }
        let committee = pad_committee(&assignment, m, k);
        let candidate = (objective, committee, assignment);
        let better = match &best {
            None => true,
            Some(b) => candidate.0 < b.0 || (candidate.0 == b.0 && (candidate.1 < b.1 || (candidate.1 == b.1 && candidate.2 < b.2))),
        };
        if better {
            best = Some(candidate);
        }
    }
    let (objective, committee, assignment) = best.expect("partitions are nonempty");
    Ok(CommitteeSolution {
        rule: Rule::ChamberlinCourant,
        committee,
        assignment: Some(assignment),
        objective: Objective::Misrep(objective),
    })
}

fn favorite(profile: &PreferenceProfile, voter: usize) -> Result<(usize, u64)> {
    match profile.kind() {
        ProfileKind::Linear => Ok((profile.ranking(voter)?[0], 0)),
        ProfileKind::Approval => {
            let ballot = profile.approval_set(voter)?;
            match ballot.iter().next() {
                Some(&a) => Ok((a, 0)),
                None => Ok((0, 1)),
            }
        }
    }
}

fn best_for_block(profile: &PreferenceProfile, block: &[usize]) -> Result<(usize, u64)> {
    let mut best = (0usize, u64::MAX);
    for a in 0..profile.num_alternatives() {
        let mut cost = 0u64;
        for &v in block {
            cost += match profile.kind() {
                ProfileKind::Linear => profile.rank(v, a)? as u64,
                ProfileKind::Approval => u64::from(!profile.approval_set(v)?.contains(&a)),
            };
        }
        if cost < best.1 {
            best = (a, cost);
        }
    }
    Ok(best)
}

fn pad_committee(assignment: &[usize], m: usize, k: usize) -> Vec<usize> {
    let mut committee: Vec<usize> = assignment.to_vec();
    committee.sort_unstable();
    committee.dedup();
    for a in 0..m {
        if committee.len() == k {
            break;
        }
        if !committee.contains(&a) {
            committee.push(a);
        }
    }
    committee.sort_unstable();
    committee
}

/// Decides whether some committee and assignment stay within the
/// misrepresentation bound R on a linear profile. Voters are processed in
/// order; each either takes their top choice or is misrepresented to an
/// alternative of rank at most the remaining budget. Failed
/// (voter, committee, budget) states are memoized.
pub fn solve_cc_xp_misrep(
    instance: &MultiWinnerInstance,
    limits: &SearchLimits,
) -> Result<Option<CommitteeSolution>> {
    let profile = &instance.profile;
    if profile.kind() == ProfileKind::Approval {
        return Err(Error::unsupported(
            "rank-bounded search needs linear ballots; use committee enumeration for approval",
        ));
    }
    let bound = instance
        .misrep_bound()
        .ok_or_else(|| Error::contract("rank-bounded search needs a misrepresentation bound"))?;

    let mut search = XpSearch {
        profile,
        k: instance.k,
        limits,
        memo: HashMap::new(),
        assignment: vec![0; profile.num_voters()],
        dominated_from: dominance_horizon(profile),
    };
    let mut committee = Vec::new();
    if !search.run(0, &mut committee, bound)? {
        return Ok(None);
    }
    let assignment = search.assignment;
    let committee = pad_committee(&assignment, profile.num_alternatives(), instance.k);
    let objective = misrepresentation(profile, Rule::ChamberlinCourant, &committee, &assignment)?;
    debug_assert!(objective <= bound);
    Ok(Some(CommitteeSolution {
        rule: Rule::ChamberlinCourant,
        committee,
        assignment: Some(assignment),
        objective: Objective::Misrep(objective),
    }))
}

/// For each alternative x, the smallest voter index v such that some other
/// alternative serves voters v, v+1, … all strictly cheaper than x does.
/// From that voter on, adding x to the committee is never useful: swapping
/// in the cheaper alternative improves every remaining voter. Voters already
/// processed are unaffected, so the prune threshold only depends on x.
fn dominance_horizon(profile: &PreferenceProfile) -> Vec<i64> {
    let n = profile.num_voters();
    let m = profile.num_alternatives();
    let mut rank = vec![vec![0u32; m]; n];
    for (v, row) in rank.iter_mut().enumerate() {
        for a in 0..m {
            row[a] = profile.linear_rank(v, a) as u32;
        }
    }
    let mut horizon = vec![i64::MAX; m];
    for x in 0..m {
        for y in 0..m {
            if y == x {
                continue;
            }
            let last_violation = (0..n)
                .rev()
                .find(|&w| rank[w][y] > rank[w][x])
                .map_or(-1, |w| w as i64);
            horizon[x] = horizon[x].min(last_violation + 1);
            if horizon[x] == 0 {
                break;
            }
        }
    }
    horizon
}

struct XpSearch<'a> {
    profile: &'a PreferenceProfile,
    k: usize,
    limits: &'a SearchLimits,
    memo: HashMap<(usize, Vec<usize>), u64>,
    assignment: Vec<usize>,
    dominated_from: Vec<i64>,
}

impl XpSearch<'_> {
    fn run(&mut self, voter: usize, committee: &mut Vec<usize>, budget: u64) -> Result<bool> {
        if voter == self.profile.num_voters() {
            return Ok(true);
        }
        self.limits.tick()?;
        if let Some(&failed) = self.memo.get(&(voter, committee.clone())) {
            if budget <= failed {
                return Ok(false);
            }
        }
        if committee.len() == self.k && !self.remaining_affordable(voter, committee, budget)? {
            self.record_failure(voter, committee, budget);
            return Ok(false);
        }
        let ranking = self.profile.ranking(voter)?;
        let deepest = (budget as usize).min(ranking.len() - 1);
        let mut used_member = false;
        for rank in 0..=deepest {
            let a = ranking[rank];
            match committee.binary_search(&a) {
                Ok(_) => {
                    // Sitting members beyond the best one only cost more for
                    // the same state.
                    if used_member {
                        continue;
                    }
                    used_member = true;
                    self.assignment[voter] = a;
                    if self.run(voter + 1, committee, budget - rank as u64)? {
                        return Ok(true);
                    }
                }
                Err(slot) => {
                    if committee.len() < self.k && self.dominated_from[a] > voter as i64 {
                        committee.insert(slot, a);
                        self.assignment[voter] = a;
                        let ok = self.run(voter + 1, committee, budget - rank as u64)?;
                        committee.remove(slot);
                        if ok {
                            return Ok(true);
                        }
                    }
                }
            }
        }
        self.record_failure(voter, committee, budget);
        Ok(false)
    }

    /// Once the committee is full, every later voter costs at least the rank
    /// of their best committee member; prune if those costs already exceed
    /// the budget.
    fn remaining_affordable(&self, from: usize, committee: &[usize], budget: u64) -> Result<bool> {
        let mut lower = 0u64;
        for v in from..self.profile.num_voters() {
            let best = committee
                .iter()
                .map(|&a| self.profile.linear_rank(v, a))
                .min()
                .unwrap();
            lower += best as u64;
            if lower > budget {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn record_failure(&mut self, voter: usize, committee: &[usize], budget: u64) {
        let entry = self.memo.entry((voter, committee.to_vec())).or_insert(0);
        *entry = (*entry).max(budget);
    }
}

/// One residual subproblem handed to a maximin inner solver: choose `seats`
/// alternatives of the structured profile minimizing the largest
/// `offsets[i] − 2·|ballot_i ∩ choice|` over voters.
pub struct MavSeatProblem<'a> {
    pub profile: &'a PreferenceProfile,
    pub seats: usize,
    pub offsets: &'a [i64],
}

pub trait MavInnerSolver {
    /// Returns the best residual committee with its objective value, or
    /// `None` when `seats` exceeds the residual alternative count.
    fn solve(&self, problem: &MavSeatProblem<'_>) -> Result<Option<(Vec<usize>, i64)>>;
}

/// Default inner solver: exact enumeration of residual committees. With this
/// solver the decomposition output equals global brute force.
pub struct EnumerationInner;

impl MavInnerSolver for EnumerationInner {
    fn solve(&self, problem: &MavSeatProblem<'_>) -> Result<Option<(Vec<usize>, i64)>> {
        let m = problem.profile.num_alternatives();
        if problem.seats > m {
            return Ok(None);
        }
        let mut best: Option<(Vec<usize>, i64)> = None;
        for committee in combinations(m, problem.seats) {
            let mut worst = i64::MIN;
            for v in 0..problem.profile.num_voters() {
                let ballot = problem.profile.approval_set(v)?;
                let overlap = committee.iter().filter(|a| ballot.contains(a)).count() as i64;
                worst = worst.max(problem.offsets[v] - 2 * overlap);
            }
            if best.as_ref().map_or(true, |(_, b)| worst < *b) {
                best = Some((committee, worst));
            }
        }
        Ok(best)
    }
}

/// Maximin approval via a deletion set: every subset D' of `deleted` is
/// assumed inside the committee, the inner solver fills the remaining seats
/// from the structured residual profile, and the best combination wins.
/// The per-voter Hamming distance decomposes as
/// |ballot Δ W| = |ballot| + |D'| + seats − 2·|ballot ∩ D'| − 2·|ballot' ∩ W'|,
/// so the residual subproblem only needs per-voter offsets.
pub fn solve_mav_with_deletion_set(
    instance: &MultiWinnerInstance,
    deleted: &[usize],
    inner: &dyn MavInnerSolver,
    limits: &SearchLimits,
) -> Result<CommitteeSolution> {
    let profile = &instance.profile;
    if profile.kind() != ProfileKind::Approval {
        return Err(Error::unsupported("maximin deletion sets need approval ballots"));
    }
    let m = profile.num_alternatives();
    let k = instance.k;
    let mut deleted: Vec<usize> = deleted.to_vec();
    deleted.sort_unstable();
    deleted.dedup();
    if deleted.iter().any(|&a| a >= m) {
        return Err(Error::contract("deleted alternative out of range"));
    }
    let keep: Vec<usize> = (0..m).filter(|a| !deleted.contains(a)).collect();
    if keep.is_empty() {
        return Err(Error::contract("deletion set covers every alternative"));
    }
    let residual = profile.restrict_alternatives(&keep)?;
    if recognize_sp(&residual)?.is_none() && recognize_sc(&residual)?.is_none() {
        return Err(Error::contract(
            "residual profile is neither single-peaked nor single-crossing",
        ));
    }

    let n = profile.num_voters();
    let mut best: Option<(i64, Vec<usize>)> = None;
    for mask in 0u64..(1u64 << deleted.len()) {
        limits.tick()?;
        let inside: Vec<usize> = deleted
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &a)| a)
            .collect();
        if inside.len() > k || k - inside.len() > keep.len() {
            continue;
        }
        let seats = k - inside.len();
        let mut offsets = Vec::with_capacity(n);
        for v in 0..n {
            let ballot = profile.approval_set(v)?;
            let shared = inside.iter().filter(|a| ballot.contains(a)).count() as i64;
            offsets.push(ballot.len() as i64 + inside.len() as i64 + seats as i64 - 2 * shared);
        }
        let problem = MavSeatProblem { profile: &residual, seats, offsets: &offsets };
        if let Some((chosen, value)) = inner.solve(&problem)? {
            let mut committee: Vec<usize> = inside.clone();
            committee.extend(chosen.iter().map(|&i| keep[i]));
            committee.sort_unstable();
            let better = match &best {
                None => true,
                Some((b, c)) => value < *b || (value == *b && committee < *c),
            };
            if better {
                best = Some((value, committee));
            }
        }
    }
    let (value, committee) = best.expect("the full deletion set is always feasible");
    let objective = mav_distance(profile, &committee)?;
    debug_assert_eq!(objective as i64, value);
    Ok(CommitteeSolution {
        rule: Rule::Mav,
        committee,
        assignment: None,
        objective: Objective::Misrep(objective),
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{approval_example, linear_example};
    use super::*;
    use crate::multiwinner::Bound;

    fn limits() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn enumeration_finds_worked_optima() {
        let linear = MultiWinnerInstance::new(linear_example(), 2, None).unwrap();
        let cc = solve_by_committee_enumeration(&linear, Rule::ChamberlinCourant, &limits()).unwrap();
        assert_eq!(cc.committee, vec![0, 3]);
        assert_eq!(cc.objective, Objective::Misrep(0));

        let monroe = solve_by_committee_enumeration(&linear, Rule::Monroe, &limits()).unwrap();
        assert_eq!(monroe.committee, vec![1, 3]);
        assert_eq!(monroe.objective, Objective::Misrep(3));

        let approval = MultiWinnerInstance::new(approval_example(), 2, None).unwrap();
        let pav = solve_by_committee_enumeration(&approval, Rule::Pav, &limits()).unwrap();
        assert_eq!(pav.committee, vec![0, 1]);
        assert_eq!(pav.objective, Objective::Score(num_rational::BigRational::from_integer(6.into())));

        let mav = solve_by_committee_enumeration(&approval, Rule::Mav, &limits()).unwrap();
        assert_eq!(mav.objective, Objective::Misrep(3));

        let cc_app = solve_by_committee_enumeration(&approval, Rule::ChamberlinCourant, &limits()).unwrap();
        assert_eq!(cc_app.committee, vec![0, 4]);
        assert_eq!(cc_app.objective, Objective::Misrep(0));
    }

    #[test]
    fn enumeration_with_k_equal_m_is_the_full_set() {
        let p = approval_example();
        let instance = MultiWinnerInstance::new(p, 5, None).unwrap();
        let sol = solve_by_committee_enumeration(&instance, Rule::Mav, &limits()).unwrap();
        assert_eq!(sol.committee, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn enumeration_respects_node_budget() {
        let instance = MultiWinnerInstance::new(linear_example(), 2, None).unwrap();
        let tight = SearchLimits::nodes(3);
        assert!(solve_by_committee_enumeration(&instance, Rule::ChamberlinCourant, &tight).is_err());
    }

    #[test]
    fn voter_partition_matches_enumeration() {
        let instance = MultiWinnerInstance::new(linear_example(), 2, None).unwrap();
        let by_partition = solve_cc_by_voter_partition(&instance, &limits()).unwrap();
        assert_eq!(by_partition.objective, Objective::Misrep(0));
        assert_eq!(by_partition.committee, vec![0, 3]);

        let approval = MultiWinnerInstance::new(approval_example(), 2, None).unwrap();
        let a = solve_cc_by_voter_partition(&approval, &limits()).unwrap();
        let b = solve_by_committee_enumeration(&approval, Rule::ChamberlinCourant, &limits()).unwrap();
        assert_eq!(a.objective, b.objective);
    }

    #[test]
    fn voter_partition_shortcut_for_large_k() {
        let p = crate::profiles::PreferenceProfile::linear(
            4,
            vec![vec![2, 0, 1, 3], vec![1, 2, 0, 3]],
        )
        .unwrap();
        let instance = MultiWinnerInstance::new(p, 3, None).unwrap();
        let sol = solve_cc_by_voter_partition(&instance, &limits()).unwrap();
        assert_eq!(sol.objective, Objective::Misrep(0));
        assert_eq!(sol.assignment, Some(vec![2, 1]));
        assert_eq!(sol.committee, vec![0, 1, 2]);
    }

    #[test]
    fn xp_misrep_finds_the_zero_bound_witness() {
        let instance =
            MultiWinnerInstance::new(linear_example(), 2, Some(Bound::Misrep(0))).unwrap();
        let sol = solve_cc_xp_misrep(&instance, &limits()).unwrap().unwrap();
        assert_eq!(sol.committee, vec![0, 3]);
        assert_eq!(sol.objective, Objective::Misrep(0));
    }

    #[test]
    fn xp_misrep_detects_infeasible_bounds() {
        // Three voters with pairwise different favorites, one seat: someone
        // pays at least rank one, and serving everyone best costs two.
        let p = crate::profiles::PreferenceProfile::linear(
            3,
            vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 0, 1]],
        )
        .unwrap();
        let instance = MultiWinnerInstance::new(p.clone(), 1, Some(Bound::Misrep(1))).unwrap();
        assert!(solve_cc_xp_misrep(&instance, &limits()).unwrap().is_none());
        let relaxed = MultiWinnerInstance::new(p, 1, Some(Bound::Misrep(2))).unwrap();
        let sol = solve_cc_xp_misrep(&relaxed, &limits()).unwrap().unwrap();
        assert_eq!(sol.objective, Objective::Misrep(2));
    }

    #[test]
    fn xp_misrep_generous_bound_always_succeeds() {
        let p = linear_example();
        let worst = (p.num_voters() * (p.num_alternatives() - 1)) as u64;
        let instance = MultiWinnerInstance::new(p, 2, Some(Bound::Misrep(worst))).unwrap();
        assert!(solve_cc_xp_misrep(&instance, &limits()).unwrap().is_some());
    }

    #[test]
    fn xp_misrep_rejects_approval_profiles() {
        let instance =
            MultiWinnerInstance::new(approval_example(), 2, Some(Bound::Misrep(0))).unwrap();
        assert!(solve_cc_xp_misrep(&instance, &limits()).is_err());
    }

    #[test]
    fn mav_deletion_with_empty_set_matches_enumeration() {
        // The approval example is single-crossing in the voter order
        // v1, v2, v4, v3, v5, so an empty deletion set is legal.
        let instance = MultiWinnerInstance::new(approval_example(), 2, None).unwrap();
        let sol =
            solve_mav_with_deletion_set(&instance, &[], &EnumerationInner, &limits()).unwrap();
        assert_eq!(sol.objective, Objective::Misrep(3));
        let direct = solve_by_committee_enumeration(&instance, Rule::Mav, &limits()).unwrap();
        assert_eq!(sol.objective, direct.objective);
        assert_eq!(sol.committee, direct.committee);
    }

    #[test]
    fn mav_deletion_handles_unstructured_profiles() {
        // Neither single-peaked nor single-crossing as a whole; deleting a1
        // leaves an interval profile (the tangle fixture from recognition).
        let p = crate::profiles::PreferenceProfile::approval(
            4,
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 2], vec![0, 3]],
        )
        .unwrap();
        let instance = MultiWinnerInstance::new(p.clone(), 2, None).unwrap();
        assert!(
            solve_mav_with_deletion_set(&instance, &[], &EnumerationInner, &limits()).is_err()
        );
        let sol =
            solve_mav_with_deletion_set(&instance, &[0], &EnumerationInner, &limits()).unwrap();
        let direct = solve_by_committee_enumeration(&instance, Rule::Mav, &limits()).unwrap();
        assert_eq!(sol.objective, direct.objective);
    }
}
