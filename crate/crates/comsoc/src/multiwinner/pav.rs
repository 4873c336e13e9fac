//! Proportional-approval solvers: the small-score greedy, the
//! score-parameterized decision search, and kernelization in the combined
//! parameter (max ballot size, score bound).

use crate::error::{Error, Result};
use crate::limits::SearchLimits;
use crate::oracles::combinations;
use crate::profiles::{PreferenceProfile, ProfileKind};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::collections::{BTreeMap, HashSet};

use super::{
    harmonic, pav_score, Bound, CommitteeSolution, MultiWinnerInstance, Objective, Rule,
};

fn rational(x: usize) -> BigRational {
    BigRational::from_integer(x.into())
}

fn nonempty_voters(profile: &PreferenceProfile) -> Result<Vec<usize>> {
    let mut kept = Vec::new();
    for v in 0..profile.num_voters() {
        if !profile.approval_set(v)?.is_empty() {
            kept.push(v);
        }
    }
    Ok(kept)
}

fn supporter_lists(profile: &PreferenceProfile) -> Result<Vec<Vec<usize>>> {
    (0..profile.num_alternatives()).map(|a| profile.supporters(a)).collect()
}

fn pad_committee(mut base: Vec<usize>, m: usize, k: usize) -> Vec<usize> {
    base.sort_unstable();
    base.dedup();
    for a in 0..m {
        if base.len() == k {
            break;
        }
        if !base.contains(&a) {
            base.push(a);
        }
    }
    base.sort_unstable();
    base
}

/// Builds a size-k committee of score at least S, for S up to
/// min(k, number of voters with nonempty ballots). Each round picks, in
/// order of preference: the smallest alternative whose (nonempty) supporter
/// set is disjoint from all voters covered so far, else one approved by some
/// uncovered voter, else one approved by nobody, else the smallest left.
/// Every pick of the first two kinds raises the score by at least one, and
/// once they dry up all nonempty voters are covered, so the bound holds.
pub fn pav_greedy_small_score(instance: &MultiWinnerInstance) -> Result<CommitteeSolution> {
    let profile = &instance.profile;
    if profile.kind() != ProfileKind::Approval {
        return Err(Error::unsupported("proportional approval needs approval ballots"));
    }
    let s = instance
        .score_bound()
        .ok_or_else(|| Error::contract("greedy committee construction needs a score bound"))?;
    let k = instance.k;
    let m = profile.num_alternatives();
    let n = profile.num_voters();
    let active = nonempty_voters(profile)?.len();
    if *s > rational(k.min(active)) {
        return Err(Error::contract(format!(
            "score bound exceeds min(k, nonempty voters) = {}",
            k.min(active)
        )));
    }
    let supporters = supporter_lists(profile)?;

    let mut covered = vec![false; n];
    let mut chosen = vec![false; m];
    let mut committee = Vec::with_capacity(k);
    for _ in 0..k {
        let fresh = |a: &usize| supporters[*a].iter().all(|&v| !covered[v]);
        let pick = (0..m)
            .find(|a| !chosen[*a] && !supporters[*a].is_empty() && fresh(a))
            .or_else(|| (0..m).find(|a| !chosen[*a] && supporters[*a].iter().any(|&v| !covered[v])))
            .or_else(|| (0..m).find(|a| !chosen[*a] && supporters[*a].is_empty()))
            .or_else(|| (0..m).find(|a| !chosen[*a]))
            .expect("k is at most m");
        chosen[pick] = true;
        committee.push(pick);
        for &v in &supporters[pick] {
            covered[v] = true;
        }
    }
    committee.sort_unstable();
    let score = pav_score(profile, &committee)?;
    debug_assert!(score >= *s);
    Ok(CommitteeSolution {
        rule: Rule::Pav,
        committee,
        assignment: None,
        objective: Objective::Score(score),
    })
}

/// Decides whether some size-k committee reaches score S. Small bounds go to
/// the greedy, bounds of at least the (nonempty) voter count go to a search
/// over supporter-set types, and the middle range scans committees directly.
pub fn solve_pav_score_xp(
    instance: &MultiWinnerInstance,
    limits: &SearchLimits,
) -> Result<Option<CommitteeSolution>> {
    let profile = &instance.profile;
    if profile.kind() != ProfileKind::Approval {
        return Err(Error::unsupported("proportional approval needs approval ballots"));
    }
    let s = instance
        .score_bound()
        .ok_or_else(|| Error::contract("score decision needs a score bound"))?;
    let k = instance.k;
    let active = nonempty_voters(profile)?.len();

    if *s <= rational(k.min(active)) {
        return Ok(Some(pav_greedy_small_score(instance)?));
    }
    if *s >= rational(active) {
        return search_by_types(instance, limits);
    }
    for committee in combinations(profile.num_alternatives(), k) {
        limits.tick()?;
        let score = pav_score(profile, &committee)?;
        if score >= *s {
            return Ok(Some(CommitteeSolution {
                rule: Rule::Pav,
                committee,
                assignment: None,
                objective: Objective::Score(score),
            }));
        }
    }
    Ok(None)
}

/// Exact maximum over committees described by how many alternatives are
/// taken from each supporter-set type; the number of types depends only on
/// the voters, so this search suits instances with few voters and many
/// alternatives.
fn search_by_types(
    instance: &MultiWinnerInstance,
    limits: &SearchLimits,
) -> Result<Option<CommitteeSolution>> {
    let profile = &instance.profile;
    let s = instance.score_bound().unwrap();
    let k = instance.k;
    let supporters = supporter_lists(profile)?;
    let mut grouped: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (a, sup) in supporters.iter().enumerate() {
        grouped.entry(sup.clone()).or_default().push(a);
    }
    let classes: Vec<(Vec<usize>, Vec<usize>)> = grouped.into_iter().collect();
    let caps: Vec<usize> = classes.iter().map(|(_, alts)| alts.len().min(k)).collect();
    let mut suffix_cap = vec![0usize; classes.len() + 1];
    for i in (0..classes.len()).rev() {
        suffix_cap[i] = suffix_cap[i + 1] + caps[i];
    }

    let mut search = TypeSearch {
        profile,
        classes: &classes,
        caps: &caps,
        suffix_cap: &suffix_cap,
        limits,
        best: None,
    };
    search.dfs(0, k, &mut Vec::new())?;
    let (score, committee) = match search.best {
        Some(best) => best,
        None => return Ok(None),
    };
    if score >= *s {
        Ok(Some(CommitteeSolution {
            rule: Rule::Pav,
            committee,
            assignment: None,
            objective: Objective::Score(score),
        }))
    } else {
        Ok(None)
    }
}

struct TypeSearch<'a> {
    profile: &'a PreferenceProfile,
    classes: &'a [(Vec<usize>, Vec<usize>)],
    caps: &'a [usize],
    suffix_cap: &'a [usize],
    limits: &'a SearchLimits,
    best: Option<(BigRational, Vec<usize>)>,
}

impl TypeSearch<'_> {
    fn dfs(&mut self, idx: usize, left: usize, counts: &mut Vec<usize>) -> Result<()> {
        if left > self.suffix_cap[idx] {
            return Ok(());
        }
        if left == 0 || idx == self.classes.len() {
            if left == 0 {
                self.leaf(counts)?;
            }
            return Ok(());
        }
        for take in 0..=self.caps[idx].min(left) {
            counts.push(take);
            self.dfs(idx + 1, left - take, counts)?;
            counts.pop();
        }
        Ok(())
    }

    fn leaf(&mut self, counts: &[usize]) -> Result<()> {
        self.limits.tick()?;
        let mut per_voter = vec![0usize; self.profile.num_voters()];
        let mut committee = Vec::new();
        for (idx, &take) in counts.iter().enumerate() {
            if take == 0 {
                continue;
            }
            let (sup, alts) = &self.classes[idx];
            for &v in sup {
                per_voter[v] += take;
            }
            committee.extend_from_slice(&alts[..take]);
        }
        committee.sort_unstable();
        let mut score = BigRational::from_integer(0.into());
        for &c in &per_voter {
            score += harmonic(c);
        }
        let better = match &self.best {
            None => true,
            Some((bs, bc)) => score > *bs || (score == *bs && committee < *bc),
        };
        if better {
            self.best = Some((score, committee));
        }
        Ok(())
    }
}

/// Result of kernelization: either the decision is already certified with a
/// witness committee of the original instance, or an equivalent reduced
/// instance whose size depends only on the max ballot size b and the score
/// bound S. `alt_map` sends reduced alternative indices to original ones.
#[derive(Debug, Clone)]
pub enum KernelOutcome {
    Yes { witness: Vec<usize>, score: BigRational },
    Reduced { instance: MultiWinnerInstance, alt_map: Vec<usize> },
}

/// Kernelizes a proportional-approval decision instance. Reduction rules, in
/// order: (1) an alternative approved by S voters certifies yes; (2) small
/// bounds go to the greedy; (3) with S at least the voter count, unapproved
/// alternatives are dropped (or the instance is decided outright when fewer
/// than k approved alternatives remain); (4) at most k alternatives per
/// identical supporter set survive; (5) k alternatives with support at least
/// S/ln k certify yes; (6) enough alternatives at one support level below
/// that threshold contain k pairwise-disjoint ones, certifying yes;
/// (7) enough low-support alternatives untouched by better-served voters
/// make every weaker alternative redundant, deleting all strictly lower
/// support levels. Instances that are decidedly negative reduce to a
/// canonical one-voter no-instance.
pub fn pav_kernelize(instance: &MultiWinnerInstance) -> Result<KernelOutcome> {
    let original = &instance.profile;
    if original.kind() != ProfileKind::Approval {
        return Err(Error::unsupported("proportional approval needs approval ballots"));
    }
    let s = instance
        .score_bound()
        .ok_or_else(|| Error::contract("kernelization needs a score bound"))?
        .clone();
    let k = instance.k;
    let m = original.num_alternatives();

    let certified = |witness: Vec<usize>| -> Result<KernelOutcome> {
        let score = pav_score(original, &witness)?;
        debug_assert!(score >= s);
        Ok(KernelOutcome::Yes { witness, score })
    };

    let kept_voters = nonempty_voters(original)?;
    let mut b = 0usize;
    for &v in &kept_voters {
        b = b.max(original.approval_set(v)?.len());
    }
    if kept_voters.is_empty() {
        if s <= rational(0) {
            return certified((0..k).collect());
        }
        return no_instance(&s);
    }
    let mut work = original.restrict_voters(&kept_voters)?;
    let mut alt_map: Vec<usize> = (0..m).collect();

    // (1) A single alternative can already carry the whole bound.
    let supporters = supporter_lists(&work)?;
    if let Some(a) = (0..work.num_alternatives()).find(|&a| rational(supporters[a].len()) >= s) {
        return certified(pad_committee(vec![alt_map[a]], m, k));
    }

    // (2) Small bounds are a guaranteed yes via the greedy.
    let active = work.num_voters();
    if s <= rational(k.min(active)) {
        let greedy = pav_greedy_small_score(instance)?;
        return certified(greedy.committee);
    }

    // (3) With S >= n, only approved alternatives matter.
    if s >= rational(active) {
        let approved: Vec<usize> =
            (0..work.num_alternatives()).filter(|&a| !supporters[a].is_empty()).collect();
        if approved.len() >= k {
            alt_map = approved.iter().map(|&a| alt_map[a]).collect();
            work = work.restrict_alternatives(&approved)?;
            let reduced = MultiWinnerInstance::new(work, k, Some(Bound::Score(s)))?;
            return Ok(KernelOutcome::Reduced { instance: reduced, alt_map });
        }
        // Every committee can contain all approved alternatives; padding
        // contributes nothing, so the decision is immediate.
        let mut best = BigRational::from_integer(0.into());
        for v in 0..work.num_voters() {
            best += harmonic(work.approval_set(v)?.len());
        }
        if best >= s {
            let base: Vec<usize> = approved.iter().map(|&a| alt_map[a]).collect();
            return certified(pad_committee(base, m, k));
        }
        return no_instance(&s);
    }

    // (4) Alternatives with identical supporter sets are exchangeable; keep
    // at most k per set.
    let mut grouped: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (a, sup) in supporters.iter().enumerate() {
        grouped.entry(sup.clone()).or_default().push(a);
    }
    let mut keep: Vec<usize> = grouped.values().flat_map(|alts| alts.iter().take(k).copied()).collect();
    keep.sort_unstable();
    if keep.len() < work.num_alternatives() {
        alt_map = keep.iter().map(|&a| alt_map[a]).collect();
        work = work.restrict_alternatives(&keep)?;
    }

    // Past rule (2), S > min(k, n) and S < n, hence S > k. A single seat can
    // then never reach the bound once rule (1) has passed.
    if k == 1 {
        return no_instance(&s);
    }

    let supporters = supporter_lists(&work)?;
    let count = |a: usize| supporters[a].len();
    let threshold_l = (s.to_f64().unwrap_or(f64::MAX) / (k as f64).ln()).ceil() as usize;
    let ceil_s_over_k = (s.clone() / rational(k)).ceil().to_integer().to_usize().unwrap_or(usize::MAX);

    // (5) Any k alternatives with support >= S/ln k score at least
    // (S/ln k)·H(k) >= S together, however their supporters overlap.
    let l_set: Vec<usize> = (0..work.num_alternatives()).filter(|&a| count(a) >= threshold_l).collect();
    if l_set.len() >= k {
        let witness: Vec<usize> = l_set[..k].iter().map(|&a| alt_map[a]).collect();
        let score = pav_score(original, &witness)?;
        if score >= s {
            return Ok(KernelOutcome::Yes { witness, score });
        }
    }

    // (6) At a fixed support level ell below the L-threshold, enough
    // alternatives guarantee k with pairwise disjoint supporters: each
    // chosen alternative rules out at most (b−1)·ell rivals.
    for ell in ceil_s_over_k..threshold_l {
        let level: Vec<usize> =
            (0..work.num_alternatives()).filter(|&a| count(a) == ell).collect();
        if level.len() < k * (b - 1) * ell + k {
            continue;
        }
        let mut taken = Vec::new();
        let mut used: HashSet<usize> = HashSet::new();
        for &a in &level {
            if supporters[a].iter().all(|v| !used.contains(v)) {
                taken.push(a);
                used.extend(supporters[a].iter().copied());
                if taken.len() == k {
                    break;
                }
            }
        }
        if taken.len() == k {
            let witness: Vec<usize> = taken.iter().map(|&a| alt_map[a]).collect();
            return certified(witness);
        }
    }

    // (7) From the highest low-support level downward: if enough level-j
    // alternatives are approved only by voters who approve nothing stronger,
    // any committee can swap its sub-level-j members for disjoint ones from
    // this pool without losing score, so all strictly lower levels die.
    for j in (1..ceil_s_over_k).rev() {
        let mut above: HashSet<usize> = HashSet::new();
        for a in 0..work.num_alternatives() {
            if count(a) >= j + 1 {
                above.extend(supporters[a].iter().copied());
            }
        }
        let pool = (0..work.num_alternatives())
            .filter(|&a| count(a) == j && supporters[a].iter().all(|v| !above.contains(v)))
            .count();
        if pool >= k * (b - 1) * j + k {
            let keep: Vec<usize> =
                (0..work.num_alternatives()).filter(|&a| count(a) >= j).collect();
            alt_map = keep.iter().map(|&a| alt_map[a]).collect();
            work = work.restrict_alternatives(&keep)?;
            break;
        }
    }

    let kept_voters = nonempty_voters(&work)?;
    if kept_voters.len() < work.num_voters() {
        work = work.restrict_voters(&kept_voters)?;
    }
    let reduced = MultiWinnerInstance::new(work, k, Some(Bound::Score(s)))?;
    Ok(KernelOutcome::Reduced { instance: reduced, alt_map })
}

/// Canonical negative instance: one voter approving nothing, one seat. Its
/// best score is zero, below every positive bound; emitted only on paths
/// where the original decision is provably negative and S > 0.
fn no_instance(s: &BigRational) -> Result<KernelOutcome> {
    let profile = PreferenceProfile::approval(1, vec![vec![]])?;
    let instance = MultiWinnerInstance::new(profile, 1, Some(Bound::Score(s.clone())))?;
    Ok(KernelOutcome::Reduced { instance, alt_map: vec![0] })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::approval_example;
    use super::*;
    use crate::multiwinner::solve_by_committee_enumeration;

    fn limits() -> SearchLimits {
        SearchLimits::default()
    }

    fn pav_instance(m: usize, ballots: Vec<Vec<usize>>, k: usize, s: BigRational) -> MultiWinnerInstance {
        let profile = PreferenceProfile::approval(m, ballots).unwrap();
        MultiWinnerInstance::new(profile, k, Some(Bound::Score(s))).unwrap()
    }

    fn brute_decision(instance: &MultiWinnerInstance) -> bool {
        let best = solve_by_committee_enumeration(instance, Rule::Pav, &limits()).unwrap();
        match best.objective {
            Objective::Score(score) => score >= *instance.score_bound().unwrap(),
            _ => unreachable!(),
        }
    }

    #[test]
    fn greedy_covers_disjoint_singletons() {
        let instance = pav_instance(3, vec![vec![0], vec![1], vec![2]], 3, rational(3));
        let sol = pav_greedy_small_score(&instance).unwrap();
        assert_eq!(sol.committee, vec![0, 1, 2]);
        assert_eq!(sol.objective, Objective::Score(rational(3)));
    }

    #[test]
    fn greedy_reaches_the_bound_on_the_worked_example() {
        let instance =
            MultiWinnerInstance::new(approval_example(), 2, Some(Bound::Score(rational(2)))).unwrap();
        let sol = pav_greedy_small_score(&instance).unwrap();
        assert_eq!(sol.committee, vec![0, 4]);
        assert_eq!(sol.objective, Objective::Score(BigRational::new(11.into(), 2.into())));
    }

    #[test]
    fn greedy_prefers_spare_alternatives_once_everyone_is_covered() {
        let instance = pav_instance(4, vec![vec![0], vec![1]], 3, rational(2));
        let sol = pav_greedy_small_score(&instance).unwrap();
        assert_eq!(sol.committee, vec![0, 1, 2]);
        assert_eq!(sol.objective, Objective::Score(rational(2)));
    }

    #[test]
    fn greedy_rejects_oversized_bounds() {
        let instance =
            MultiWinnerInstance::new(approval_example(), 2, Some(Bound::Score(rational(3)))).unwrap();
        assert!(pav_greedy_small_score(&instance).is_err());
    }

    #[test]
    fn xp_certifies_the_worked_optimum() {
        let instance =
            MultiWinnerInstance::new(approval_example(), 2, Some(Bound::Score(rational(6)))).unwrap();
        let sol = solve_pav_score_xp(&instance, &limits()).unwrap().unwrap();
        assert_eq!(sol.committee, vec![0, 1]);
        assert_eq!(sol.objective, Objective::Score(rational(6)));
    }

    #[test]
    fn xp_rejects_unreachable_bounds() {
        let instance = MultiWinnerInstance::new(
            approval_example(),
            2,
            Some(Bound::Score(BigRational::new(13.into(), 2.into()))),
        )
        .unwrap();
        assert!(solve_pav_score_xp(&instance, &limits()).unwrap().is_none());
    }

    #[test]
    fn xp_zero_bound_is_always_satisfiable() {
        let instance =
            MultiWinnerInstance::new(approval_example(), 2, Some(Bound::Score(rational(0)))).unwrap();
        assert!(solve_pav_score_xp(&instance, &limits()).unwrap().is_some());
    }

    #[test]
    fn xp_middle_range_scans_committees() {
        let instance =
            MultiWinnerInstance::new(approval_example(), 1, Some(Bound::Score(rational(2)))).unwrap();
        let sol = solve_pav_score_xp(&instance, &limits()).unwrap().unwrap();
        assert_eq!(sol.committee, vec![0]);
        let hopeless = MultiWinnerInstance::new(
            approval_example(),
            1,
            Some(Bound::Score(BigRational::new(9.into(), 2.into()))),
        )
        .unwrap();
        assert!(solve_pav_score_xp(&hopeless, &limits()).unwrap().is_none());
    }

    #[test]
    fn kernel_certifies_a_dominant_alternative() {
        let instance =
            pav_instance(3, vec![vec![0], vec![0], vec![0]], 2, rational(3));
        match pav_kernelize(&instance).unwrap() {
            KernelOutcome::Yes { witness, score } => {
                assert_eq!(witness, vec![0, 1]);
                assert_eq!(score, rational(3));
            }
            other => panic!("expected a certified yes, got {other:?}"),
        }
    }

    #[test]
    fn kernel_caps_duplicate_supporter_sets() {
        let instance = pav_instance(
            5,
            vec![vec![0, 1, 2], vec![0, 1, 2], vec![3], vec![4]],
            2,
            rational(3),
        );
        match pav_kernelize(&instance).unwrap() {
            KernelOutcome::Reduced { instance: reduced, alt_map } => {
                assert_eq!(alt_map, vec![0, 1, 3, 4]);
                assert_eq!(reduced.profile.num_alternatives(), 4);
                assert_eq!(brute_decision(&instance), brute_decision(&reduced));
            }
            other => panic!("expected a reduced instance, got {other:?}"),
        }
    }

    #[test]
    fn kernel_trivial_branch_keeps_approved_alternatives() {
        let instance = pav_instance(
            4,
            vec![vec![0], vec![1]],
            2,
            BigRational::new(5.into(), 2.into()),
        );
        match pav_kernelize(&instance).unwrap() {
            KernelOutcome::Reduced { instance: reduced, alt_map } => {
                assert_eq!(alt_map, vec![0, 1]);
                assert_eq!(reduced.profile.num_alternatives(), 2);
                assert!(!brute_decision(&reduced));
            }
            other => panic!("expected a reduced instance, got {other:?}"),
        }
    }

    #[test]
    fn kernel_decides_when_every_approved_alternative_fits() {
        let yes = pav_instance(
            5,
            vec![vec![0, 1, 2]],
            4,
            BigRational::new(3.into(), 2.into()),
        );
        match pav_kernelize(&yes).unwrap() {
            KernelOutcome::Yes { witness, score } => {
                assert_eq!(witness, vec![0, 1, 2, 3]);
                assert_eq!(score, BigRational::new(11.into(), 6.into()));
            }
            other => panic!("expected a certified yes, got {other:?}"),
        }
        let no = pav_instance(
            4,
            vec![vec![0], vec![1]],
            3,
            BigRational::new(5.into(), 2.into()),
        );
        match pav_kernelize(&no).unwrap() {
            KernelOutcome::Reduced { instance: reduced, .. } => {
                assert_eq!(reduced.profile.num_voters(), 1);
                assert_eq!(reduced.profile.num_alternatives(), 1);
                assert!(!brute_decision(&reduced));
                assert!(!brute_decision(&no));
            }
            other => panic!("expected the canonical no-instance, got {other:?}"),
        }
    }

    #[test]
    fn kernel_l_rule_certifies_heavy_overlap() {
        // Three alternatives approved by the same nineteen voters; two more
        // voters keep S below n. With k=3 the threshold ceil(20/ln 3) = 19
        // is met, and the overlapping committee still reaches the bound.
        let mut ballots = vec![vec![0, 1, 2]; 19];
        ballots.push(vec![3]);
        ballots.push(vec![4]);
        let instance = pav_instance(5, ballots, 3, rational(20));
        match pav_kernelize(&instance).unwrap() {
            KernelOutcome::Yes { witness, score } => {
                assert_eq!(witness, vec![0, 1, 2]);
                assert_eq!(score, rational(19) * BigRational::new(11.into(), 6.into()));
            }
            other => panic!("expected a certified yes, got {other:?}"),
        }
    }

    #[test]
    fn kernel_level_rule_finds_disjoint_alternatives() {
        // Singleton ballots make every supporter set disjoint, so level 2
        // holds k=2 disjoint alternatives scoring 2+2 >= 3.
        let instance = pav_instance(
            2,
            vec![vec![0], vec![0], vec![1], vec![1]],
            2,
            rational(3),
        );
        match pav_kernelize(&instance).unwrap() {
            KernelOutcome::Yes { witness, score } => {
                assert_eq!(witness, vec![0, 1]);
                assert_eq!(score, rational(4));
            }
            other => panic!("expected a certified yes, got {other:?}"),
        }
    }

    #[test]
    fn kernel_tail_rule_deletes_weak_alternatives() {
        // Two support-2 alternatives approved by otherwise unserved voters
        // let rule (7) fire at level 2, deleting both support-1 alternatives
        // and the voters left with empty ballots.
        let instance = pav_instance(
            4,
            vec![vec![0], vec![0], vec![1], vec![1], vec![2], vec![3]],
            2,
            rational(5),
        );
        match pav_kernelize(&instance).unwrap() {
            KernelOutcome::Reduced { instance: reduced, alt_map } => {
                assert_eq!(alt_map, vec![0, 1]);
                assert_eq!(reduced.profile.num_alternatives(), 2);
                assert_eq!(reduced.profile.num_voters(), 4);
                assert_eq!(brute_decision(&instance), brute_decision(&reduced));
            }
            other => panic!("expected a reduced instance, got {other:?}"),
        }
    }

    #[test]
    fn kernel_single_seat_no_instance() {
        let instance = pav_instance(3, vec![vec![0], vec![1], vec![2]], 1, rational(2));
        match pav_kernelize(&instance).unwrap() {
            KernelOutcome::Reduced { instance: reduced, .. } => {
                assert_eq!(reduced.profile.num_alternatives(), 1);
                assert!(!brute_decision(&reduced));
                assert!(!brute_decision(&instance));
            }
            other => panic!("expected the canonical no-instance, got {other:?}"),
        }
    }
}
