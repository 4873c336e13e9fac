//! The four committee rules on one pair of small profiles.
//!
//! Run with: cargo run --example committee_rules

use comsoc::limits::SearchLimits;
use comsoc::multiwinner::{solve_by_committee_enumeration, MultiWinnerInstance, Rule};
use comsoc::profiles::PreferenceProfile;

fn main() -> comsoc::Result<()> {
    // Four rankings over five alternatives. Voter 1 loves a1; the other
    // three prefer a4, with small disagreements below the top.
    let linear = PreferenceProfile::linear(
        5,
        vec![
            vec![0, 1, 2, 3, 4],
            vec![3, 2, 1, 4, 0],
            vec![3, 2, 4, 1, 0],
            vec![3, 4, 2, 1, 0],
        ],
    )?;

    // Five approval ballots over the same alternatives.
    let approval = PreferenceProfile::approval(
        5,
        vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4], vec![0, 1], vec![4]],
    )?;

    let limits = SearchLimits::default();

    println!("linear profile, committees of size 2");
    for rule in [Rule::Monroe, Rule::ChamberlinCourant] {
        let instance = MultiWinnerInstance::new(linear.clone(), 2, None)?;
        let solution = solve_by_committee_enumeration(&instance, rule, &limits)?;
        println!("  {rule}: committee {} objective {}", names(&solution.committee), solution.objective);
        if let Some(assignment) = &solution.assignment {
            println!("    serving alternatives per voter: {}", names(assignment));
        }
    }

    println!("approval profile, committees of size 2");
    for rule in [Rule::Monroe, Rule::ChamberlinCourant, Rule::Mav, Rule::Pav] {
        let instance = MultiWinnerInstance::new(approval.clone(), 2, None)?;
        let solution = solve_by_committee_enumeration(&instance, rule, &limits)?;
        println!("  {rule}: committee {} objective {}", names(&solution.committee), solution.objective);
    }

    // Monroe assigns each committee member an equal share of the voters;
    // Chamberlin-Courant lets any member represent any number of voters.
    // MAV minimizes the worst Hamming distance to a ballot, and PAV
    // maximizes a harmonic-discounted approval score.
    Ok(())
}

fn names(indices: &[usize]) -> String {
    let labels: Vec<String> = indices.iter().map(|&a| format!("a{}", a + 1)).collect();
    labels.join(" ")
}
