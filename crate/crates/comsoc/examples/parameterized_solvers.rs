//! Parameterized engines beside the committee-enumeration baseline: the
//! rank-bounded Chamberlin-Courant search, proportional-approval
//! kernelization, the small-score greedy, and the maximin deletion-set
//! solver.
//!
//! Run with: cargo run --example parameterized_solvers

use comsoc::limits::SearchLimits;
use comsoc::multiwinner::{
    pav_greedy_small_score, pav_kernelize, solve_by_committee_enumeration, solve_cc_xp_misrep,
    solve_mav_with_deletion_set, solve_pav_score_xp, Bound, EnumerationInner, KernelOutcome,
    MultiWinnerInstance, Rule,
};
use comsoc::profiles::PreferenceProfile;
use num_rational::BigRational;

fn main() -> comsoc::Result<()> {
    let limits = SearchLimits::default();

    // A cover-based decision: is there a committee of size 2 whose total
    // misrepresentation stays at 0? The search misrepresents voters one at
    // a time instead of scanning all committees.
    let linear = PreferenceProfile::linear(
        5,
        vec![
            vec![0, 1, 2, 3, 4],
            vec![3, 2, 1, 4, 0],
            vec![3, 2, 4, 1, 0],
            vec![3, 4, 2, 1, 0],
        ],
    )?;
    let decision = MultiWinnerInstance::new(linear, 2, Some(Bound::Misrep(0)))?;
    match solve_cc_xp_misrep(&decision, &limits)? {
        Some(solution) => println!(
            "cc within bound 0: committee {:?} objective {}",
            one_based(&solution.committee),
            solution.objective
        ),
        None => println!("cc within bound 0: no committee"),
    }

    // Proportional approval as a decision problem. The kernel either
    // certifies a yes outright or shrinks the instance to a function of the
    // ballot size and the score bound before any search runs.
    let approval = PreferenceProfile::approval(
        5,
        vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4], vec![0, 1], vec![4]],
    )?;
    let score: BigRational = "6".parse().expect("literal rational");
    let pav = MultiWinnerInstance::new(approval.clone(), 2, Some(Bound::Score(score)))?;
    match pav_kernelize(&pav)? {
        KernelOutcome::Yes { witness, score } => {
            println!("pav kernel: certified committee {:?} score {score}", one_based(&witness));
        }
        KernelOutcome::Reduced { instance, .. } => {
            println!(
                "pav kernel: reduced to {} alternatives, {} voters",
                instance.profile.num_alternatives(),
                instance.profile.num_voters()
            );
            match solve_pav_score_xp(&instance, &limits)? {
                Some(solution) => println!("  reduced decision: yes, {}", solution.objective),
                None => println!("  reduced decision: no"),
            }
        }
    }

    // Small score bounds never need a search at all: a greedy pass that
    // covers fresh voters reaches any score up to min(k, voters).
    let small: BigRational = "2".parse().expect("literal rational");
    let easy = MultiWinnerInstance::new(approval.clone(), 2, Some(Bound::Score(small)))?;
    let greedy = pav_greedy_small_score(&easy)?;
    println!("pav greedy: committee {:?} score {}", one_based(&greedy.committee), greedy.objective);

    // Maximin approval, solved by guessing the committee members drawn from
    // a deletion set whose removal leaves the profile single-peaked. The
    // inner solver here is plain enumeration over the residual seats.
    let mav = MultiWinnerInstance::new(approval, 2, None)?;
    let solution = solve_mav_with_deletion_set(&mav, &[4], &EnumerationInner, &limits)?;
    println!("mav by deletion set {{a5}}: committee {:?} distance {}", one_based(&solution.committee), solution.objective);

    // The baseline agrees.
    let check = solve_by_committee_enumeration(&mav, Rule::Mav, &limits)?;
    assert_eq!(check.objective, solution.objective);
    println!("enumeration confirms distance {}", check.objective);
    Ok(())
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|&a| a + 1).collect()
}
