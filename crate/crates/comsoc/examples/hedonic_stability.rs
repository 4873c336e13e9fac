//! Stability concepts on hedonic games: one friendship digraph read two
//! ways, plus an additive game, checked against Nash, individual, core, and
//! strict-core stability.
//!
//! Run with: cargo run --example hedonic_stability

use comsoc::hedonic::{verify, HedonicInstance, Partition, StabilityConcept};
use comsoc::limits::SearchLimits;

const CONCEPTS: [StabilityConcept; 4] = [
    StabilityConcept::Nash,
    StabilityConcept::IndividuallyStable,
    StabilityConcept::Core,
    StabilityConcept::StrictCore,
];

fn main() -> comsoc::Result<()> {
    // Agents 1 and 2 are mutual friends, 1 and 3 too; 4 likes 2, and 3
    // likes 4, neither reciprocated.
    let arcs = [(0, 1), (1, 0), (0, 2), (2, 0), (3, 1), (2, 3)];
    let fa = HedonicInstance::friend_appreciation(4, arcs)?;
    let ea = HedonicInstance::enemy_aversion(4, arcs)?;
    let limits = SearchLimits::default();

    // Under friend appreciation the grand coalition collects every friend
    // and passes every concept.
    let grand = Partition::grand(4);
    println!("friend appreciation, grand coalition:");
    for concept in CONCEPTS {
        let witness = verify(&fa, &grand, concept, &limits)?;
        println!("  {concept}: {}", verdict(&witness));
    }

    // Splitting agent 4 off keeps the strict core happy but breaks Nash:
    // someone now envies a neighboring coalition.
    let split = Partition::new(4, &[vec![0, 1, 2], vec![3]])?;
    println!("friend appreciation, 123 | 4:");
    for concept in CONCEPTS {
        let witness = verify(&fa, &split, concept, &limits)?;
        println!("  {concept}: {}", verdict(&witness));
    }

    // Under enemy aversion the same digraph turns unfriendly: unreturned
    // friendship reads as an enemy in the room.
    let pairs = Partition::new(4, &[vec![0, 1], vec![2], vec![3]])?;
    println!("enemy aversion, 12 | 3 | 4:");
    for concept in CONCEPTS {
        let witness = verify(&ea, &pairs, concept, &limits)?;
        println!("  {concept}: {}", verdict(&witness));
    }

    // An additive game with asymmetric feelings. The singleton partition is
    // core stable yet not individually stable, and a certificate of the
    // failure can be replayed.
    let additive = HedonicInstance::additive(
        4,
        [(0, 1, 2), (0, 2, -2), (1, 2, -1), (1, 3, 1), (2, 0, 1), (2, 3, -1)],
    )?;
    let singles = Partition::singletons(4);
    println!("additive game, singletons:");
    for concept in CONCEPTS {
        let witness = verify(&additive, &singles, concept, &limits)?;
        print!("  {concept}: {}", verdict(&witness));
        if let Some(w) = witness {
            assert!(w.reverify(&additive, &singles)?);
            print!(" (re-verified)");
        }
        println!();
    }
    Ok(())
}

fn verdict(witness: &Option<comsoc::hedonic::Witness>) -> String {
    match witness {
        None => "stable".to_string(),
        Some(w) => format!("unstable, {w}"),
    }
}
