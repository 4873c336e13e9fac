//! The specialized hedonic solvers: strict-core construction from strongly
//! connected components, bounded and color-coded core verification, better
//! response dynamics for symmetric games, Nash existence under enemy
//! aversion, and the parameter report that guides engine choice.
//!
//! Run with: cargo run --example hedonic_algorithms

use comsoc::hedonic::{
    ea_nash_exist_fas, fa_core_verify_bounded, fa_core_verify_colorcoded, fa_scc_partition,
    measure_parameters, nash_search_symmetric, BlockingMode, HedonicInstance, Partition,
};
use comsoc::limits::SearchLimits;

fn main() -> comsoc::Result<()> {
    let limits = SearchLimits::default();

    // Strongly connected components of the friendship digraph form a
    // strictly core stable partition under friend appreciation, whatever
    // the digraph looks like.
    let fa = HedonicInstance::friend_appreciation(
        6,
        [(0, 1), (1, 0), (1, 2), (2, 1), (3, 4), (4, 3), (4, 5)],
    )?;
    let scc = fa_scc_partition(&fa)?;
    println!("scc partition: {scc}");

    // Core verification with the deviation size bounded by the largest
    // current coalition. The color-coded verifier answers the same
    // question with one-sided error at most delta; here they agree.
    let torn = Partition::new(6, &[vec![0], vec![1, 2], vec![3, 4], vec![5]])?;
    let slow = fa_core_verify_bounded(&fa, &torn, BlockingMode::Strict, &limits)?;
    let fast = fa_core_verify_colorcoded(&fa, &torn, 0.001, 42)?;
    println!("bounded verdict:    {}", show(&slow));
    println!("colorcoded verdict: {}", show(&fast));

    // Symmetric additive games always reach a Nash stable partition by
    // better response dynamics; social welfare strictly rises with every
    // accepted move, so the walk terminates.
    let symmetric = HedonicInstance::additive(
        5,
        [
            (0, 1, 3), (1, 0, 3),
            (1, 2, 1), (2, 1, 1),
            (0, 3, -2), (3, 0, -2),
            (3, 4, 2), (4, 3, 2),
        ],
    )?;
    let search = nash_search_symmetric(&symmetric, &limits)?;
    println!(
        "nash search: {} after {} moves, welfare trace {:?}",
        search.partition,
        search.welfare.len() - 1,
        search.welfare
    );

    // Enemy aversion may admit no Nash stable partition at all. The solver
    // reasons over mutual-friendship cliques instead of all partitions.
    let spiky = HedonicInstance::enemy_aversion(
        4,
        [(0, 1), (1, 0), (0, 2), (2, 0), (3, 1), (2, 3)],
    )?;
    match ea_nash_exist_fas(&spiky)? {
        Some(partition) => println!("enemy aversion: nash stable {partition}"),
        None => println!("enemy aversion: no nash stable partition exists"),
    }
    let calm = HedonicInstance::enemy_aversion(4, [(0, 1), (1, 0), (2, 3), (3, 2)])?;
    match ea_nash_exist_fas(&calm)? {
        Some(partition) => println!("two mutual pairs: nash stable {partition}"),
        None => println!("two mutual pairs: none"),
    }

    // The parameter report measures what the parameterized algorithms run
    // on: maximum degree, distinct utility values, and the feedback arc or
    // edge number of the relevant graph.
    let report = measure_parameters(&fa, Some(&torn))?;
    println!(
        "parameters: degree {}, utilities {}, feedback {} ({}), kappa {:?}",
        report.max_degree,
        report.distinct_utility_count,
        report.feedback_number,
        report.feedback_kind,
        report.kappa
    );
    Ok(())
}

fn show(witness: &Option<comsoc::hedonic::Witness>) -> String {
    match witness {
        None => "stable".to_string(),
        Some(w) => format!("unstable, {w}"),
    }
}
