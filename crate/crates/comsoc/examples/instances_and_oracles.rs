//! Instance generation and the oracle layer: seeded reproducible random
//! instances, set-partition enumeration, the hedonic brute-force reference,
//! and the Clique to Chamberlin-Courant hard-instance construction.
//!
//! Run with: cargo run --example instances_and_oracles

use comsoc::hedonic::StabilityConcept;
use comsoc::limits::SearchLimits;
use comsoc::multiwinner::solve_cc_xp_misrep;
use comsoc::oracles::{
    brute_force_hedonic, clique_decision_bb, clique_to_cc_instance, enumerate_partitions,
    generate, CliqueInput, Generated, GeneratorShape, GeneratorSpec,
};

fn main() -> comsoc::Result<()> {
    // Identical seed and shape always reproduce the same instance.
    let spec = GeneratorSpec {
        seed: 11,
        shape: GeneratorShape::RandomApproval { alternatives: 6, voters: 4, max_ballot: 3 },
    };
    if let (Generated::Profile(a), Generated::Profile(b)) = (generate(&spec)?, generate(&spec)?) {
        for voter in 0..4 {
            assert_eq!(a.approval_set(voter)?, b.approval_set(voter)?);
        }
        println!("seeded approval profile, ballots:");
        for voter in 0..4 {
            let ballot: Vec<usize> = a.approval_set(voter)?.iter().map(|&x| x + 1).collect();
            println!("  voter {}: {ballot:?}", voter + 1);
        }
    }

    // Every set partition of a small ground set, in restricted growth
    // string order; the count follows the Bell numbers.
    let count = enumerate_partitions(4)?.count();
    println!("set partitions of 4 agents: {count}");

    // The brute-force reference scans those partitions for a stable one.
    // It is slow and honest, which is what certifies the fast solvers.
    let spec = GeneratorSpec {
        seed: 5,
        shape: GeneratorShape::RandomFe {
            agents: 5,
            density: 0.4,
            model: comsoc::hedonic::HedonicModel::FriendAppreciation,
        },
    };
    if let Generated::Game(game) = generate(&spec)? {
        match brute_force_hedonic(&game, StabilityConcept::StrictCore)? {
            Some(partition) => println!("first strictly core stable partition: {partition}"),
            None => println!("no strictly core stable partition"),
        }
    }

    // Hard instances on demand: a graph has a clique of size h exactly when
    // the reduced election admits a committee within the
    // misrepresentation bound. The triangle says yes, the path says no.
    let limits = SearchLimits::default();
    for (name, edges) in [
        ("triangle", vec![(0, 1), (1, 2), (0, 2)]),
        ("path", vec![(0, 1), (1, 2)]),
    ] {
        let input = CliqueInput::new(3, edges.clone(), 3)?;
        let instance = clique_to_cc_instance(&input)?;
        let reduced = solve_cc_xp_misrep(&instance, &limits)?.is_some();
        let direct = clique_decision_bb(3, &edges, 3);
        assert_eq!(reduced, direct);
        println!("{name}: clique of size 3 exists = {reduced}");
    }
    Ok(())
}
