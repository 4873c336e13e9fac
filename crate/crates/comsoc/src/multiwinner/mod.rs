//! The four committee rules and their solvers.
//!
//! Monroe and Chamberlin-Courant measure a committee together with a
//! voter-to-member assignment: the sum of assigned ranks on linear ballots,
//! the number of voters assigned an unapproved member on approval ballots.
//! Monroe additionally forces proportional load: every member serves between
//! floor(n/k) and ceil(n/k) voters. The maximin-approval rule scores a
//! committee by its largest Hamming distance to any ballot, and the
//! proportional-approval rule by a sum of partial harmonic series, kept as
//! exact rationals.

mod assignment;
mod pav;
mod solvers;

pub use assignment::optimal_assignment;
pub use pav::{pav_greedy_small_score, pav_kernelize, solve_pav_score_xp, KernelOutcome};
pub use solvers::{
    solve_by_committee_enumeration, solve_cc_by_voter_partition, solve_cc_xp_misrep,
    solve_mav_with_deletion_set, EnumerationInner, MavInnerSolver, MavSeatProblem,
};

use crate::error::{Error, Result};
use crate::profiles::{PreferenceProfile, ProfileKind};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// The four rules. `Monroe` and `ChamberlinCourant` are assignment-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Monroe,
    ChamberlinCourant,
    Mav,
    Pav,
}

impl Rule {
    pub fn uses_assignment(self) -> bool {
        matches!(self, Rule::Monroe | Rule::ChamberlinCourant)
    }

    pub fn name(self) -> &'static str {
        match self {
            Rule::Monroe => "monroe",
            Rule::ChamberlinCourant => "cc",
            Rule::Mav => "mav",
            Rule::Pav => "pav",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Decision bound carried by an instance: a misrepresentation ceiling for the
/// minimizing rules, a score floor for the proportional-approval rule.
#[derive(Debug, Clone, PartialEq)]
pub enum Bound {
    Misrep(u64),
    Score(BigRational),
}

/// A committee-selection instance: a profile, the committee size, and an
/// optional decision bound.
#[derive(Debug, Clone)]
pub struct MultiWinnerInstance {
    pub profile: PreferenceProfile,
    pub k: usize,
    pub bound: Option<Bound>,
}

impl MultiWinnerInstance {
    pub fn new(profile: PreferenceProfile, k: usize, bound: Option<Bound>) -> Result<Self> {
        if k < 1 || k > profile.num_alternatives() {
            return Err(Error::domain(format!(
                "committee size {k} outside 1..={}",
                profile.num_alternatives()
            )));
        }
        if let Some(Bound::Score(s)) = &bound {
            if *s < BigRational::zero() {
                return Err(Error::domain("score bound must be nonnegative"));
            }
        }
        Ok(MultiWinnerInstance { profile, k, bound })
    }

    pub fn misrep_bound(&self) -> Option<u64> {
        match &self.bound {
            Some(Bound::Misrep(r)) => Some(*r),
            _ => None,
        }
    }

    pub fn score_bound(&self) -> Option<&BigRational> {
        match &self.bound {
            Some(Bound::Score(s)) => Some(s),
            _ => None,
        }
    }
}

/// Objective value of a solution: counted misrepresentation for the
/// minimizing rules, an exact rational score for proportional approval.
#[derive(Debug, Clone, PartialEq)]
pub enum Objective {
    Misrep(u64),
    Score(BigRational),
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Objective::Misrep(x) => write!(f, "{x}"),
            Objective::Score(s) => {
                if s.is_integer() {
                    write!(f, "{}", s.numer())
                } else {
                    write!(f, "{}/{}", s.numer(), s.denom())
                }
            }
        }
    }
}

/// A solved committee. The assignment is present exactly for the
/// assignment-based rules and maps every voter to a committee member.
#[derive(Debug, Clone)]
pub struct CommitteeSolution {
    pub rule: Rule,
    pub committee: Vec<usize>,
    pub assignment: Option<Vec<usize>>,
    pub objective: Objective,
}

impl CommitteeSolution {
    /// Recomputes the objective from scratch and checks structural
    /// invariants; used before results cross the CLI boundary.
    pub fn verify(&self, profile: &PreferenceProfile, k: usize) -> Result<()> {
        if self.committee.len() != k {
            return Err(Error::domain(format!(
                "committee has {} members, expected {k}",
                self.committee.len()
            )));
        }
        check_committee(profile, &self.committee)?;
        let recomputed = match (self.rule, &self.assignment) {
            (Rule::Monroe | Rule::ChamberlinCourant, Some(assignment)) => {
                if self.rule == Rule::Monroe {
                    check_monroe_balance(profile.num_voters(), k, &self.committee, assignment)?;
                }
                Objective::Misrep(misrepresentation(
                    profile,
                    self.rule,
                    &self.committee,
                    assignment,
                )?)
            }
            (Rule::Monroe | Rule::ChamberlinCourant, None) => {
                return Err(Error::domain("assignment-based rule without an assignment"));
            }
            (Rule::Mav, _) => Objective::Misrep(mav_distance(profile, &self.committee)?),
            (Rule::Pav, _) => Objective::Score(pav_score(profile, &self.committee)?),
        };
        if recomputed != self.objective {
            return Err(Error::domain(format!(
                "objective {} does not re-verify (expected {})",
                self.objective, recomputed
            )));
        }
        Ok(())
    }
}

fn check_committee(profile: &PreferenceProfile, committee: &[usize]) -> Result<()> {
    if committee.is_empty() {
        return Err(Error::contract("committee must be nonempty"));
    }
    let mut seen = vec![false; profile.num_alternatives()];
    for &w in committee {
        if w >= profile.num_alternatives() {
            return Err(Error::contract(format!("committee member {} out of range", w + 1)));
        }
        if seen[w] {
            return Err(Error::contract(format!("committee member {} repeated", w + 1)));
        }
        seen[w] = true;
    }
    Ok(())
}

pub(crate) fn check_monroe_balance(
    n: usize,
    k: usize,
    committee: &[usize],
    assignment: &[usize],
) -> Result<()> {
    let mut load = vec![0usize; committee.len()];
    for &w in assignment {
        let slot = committee
            .iter()
            .position(|&c| c == w)
            .ok_or_else(|| Error::domain("assignment target outside committee"))?;
        load[slot] += 1;
    }
    let (lo, hi) = (n / k, n.div_ceil(k));
    for (slot, &l) in load.iter().enumerate() {
        if l < lo || l > hi {
            return Err(Error::domain(format!(
                "member {} serves {l} voters, outside [{lo}, {hi}]",
                committee[slot] + 1
            )));
        }
    }
    Ok(())
}

/// Misrepresentation of an assignment-based solution: the sum of assigned
/// ranks on linear ballots, the number of voters handed an unapproved member
/// on approval ballots.
pub fn misrepresentation(
    profile: &PreferenceProfile,
    rule: Rule,
    committee: &[usize],
    assignment: &[usize],
) -> Result<u64> {
    if !rule.uses_assignment() {
        return Err(Error::contract("misrepresentation applies to assignment-based rules"));
    }
    check_committee(profile, committee)?;
    if assignment.len() != profile.num_voters() {
        return Err(Error::domain(format!(
            "assignment covers {} voters, expected {}",
            assignment.len(),
            profile.num_voters()
        )));
    }
    let mut total = 0u64;
    for (v, &w) in assignment.iter().enumerate() {
        if !committee.contains(&w) {
            return Err(Error::domain(format!(
                "voter {} assigned to {} outside the committee",
                v + 1,
                w + 1
            )));
        }
        total += match profile.kind() {
            ProfileKind::Linear => profile.rank(v, w)? as u64,
            ProfileKind::Approval => u64::from(!profile.approval_set(v)?.contains(&w)),
        };
    }
    Ok(total)
}

/// Largest Hamming distance between the committee and any ballot.
pub fn mav_distance(profile: &PreferenceProfile, committee: &[usize]) -> Result<u64> {
    if profile.kind() != ProfileKind::Approval {
        return Err(Error::unsupported("maximin distance needs approval ballots"));
    }
    check_committee(profile, committee)?;
    let mut worst = 0u64;
    for v in 0..profile.num_voters() {
        let ballot = profile.approval_set(v)?;
        let inside = committee.iter().filter(|w| ballot.contains(w)).count();
        let distance = (ballot.len() - inside) + (committee.len() - inside);
        worst = worst.max(distance as u64);
    }
    Ok(worst)
}

/// Companion score: `m` minus the maximin distance.
pub fn mav_score(profile: &PreferenceProfile, committee: &[usize]) -> Result<u64> {
    Ok(profile.num_alternatives() as u64 - mav_distance(profile, committee)?)
}

/// Partial harmonic number 1 + 1/2 + ... + 1/x as an exact rational.
pub fn harmonic(x: usize) -> BigRational {
    let mut h = BigRational::zero();
    for j in 1..=x {
        h += BigRational::one() / BigRational::from_integer(j.into());
    }
    h
}

/// Proportional-approval score: the sum over voters of the partial harmonic
/// number of how many committee members they approve.
pub fn pav_score(profile: &PreferenceProfile, committee: &[usize]) -> Result<BigRational> {
    if profile.kind() != ProfileKind::Approval {
        return Err(Error::unsupported("proportional approval needs approval ballots"));
    }
    check_committee(profile, committee)?;
    let mut total = BigRational::zero();
    for v in 0..profile.num_voters() {
        let ballot = profile.approval_set(v)?;
        let inside = committee.iter().filter(|w| ballot.contains(w)).count();
        total += harmonic(inside);
    }
    Ok(total)
}

/// Number of voters whose assigned member they approve (`n` minus the
/// approval misrepresentation).
pub fn approval_score(
    profile: &PreferenceProfile,
    rule: Rule,
    committee: &[usize],
    assignment: &[usize],
) -> Result<u64> {
    if profile.kind() != ProfileKind::Approval {
        return Err(Error::unsupported("approval score needs approval ballots"));
    }
    Ok(profile.num_voters() as u64 - misrepresentation(profile, rule, committee, assignment)?)
}
