//! Recognizing single-peaked and single-crossing structure, and repairing a
//! profile that has neither by deleting a few voters.
//!
//! Run with: cargo run --example structured_preferences

use comsoc::profiles::{
    deletion_distance, is_single_peaked_along, recognize_sc, recognize_sp, DeletionTarget,
    PreferenceProfile, Structure,
};

fn main() -> comsoc::Result<()> {
    // Rankings that bunch around a societal axis: every ballot falls away
    // from its peak on both sides.
    let peaked = PreferenceProfile::linear(
        4,
        vec![
            vec![0, 1, 2, 3],
            vec![1, 2, 0, 3],
            vec![2, 1, 3, 0],
            vec![3, 2, 1, 0],
        ],
    )?;
    match recognize_sp(&peaked)? {
        Some(axis) => println!("single-peaked along {axis}"),
        None => println!("not single-peaked"),
    }

    // The same ballots ordered so later voters cross over once per pair of
    // alternatives.
    match recognize_sc(&peaked)? {
        Some(axis) => println!("single-crossing along {axis}"),
        None => println!("not single-crossing"),
    }

    // A cyclic tangle has no axis at all.
    let tangle = PreferenceProfile::linear(
        4,
        vec![
            vec![0, 1, 2, 3],
            vec![1, 2, 3, 0],
            vec![2, 3, 0, 1],
            vec![3, 0, 1, 2],
            vec![0, 3, 2, 1],
        ],
    )?;
    println!("tangle single-peaked: {}", recognize_sp(&tangle)?.is_some());

    // Deleting at most two voters can restore the structure. The
    // certificate names the voters and an axis for what remains.
    match deletion_distance(&tangle, Structure::SinglePeaked, DeletionTarget::Voters, 2)? {
        Some(cert) => {
            let removed: Vec<usize> = cert.removed.iter().map(|&v| v + 1).collect();
            println!("delete voters {removed:?}, then single-peaked along {}", cert.axis);
            let kept: Vec<usize> =
                (0..tangle.num_voters()).filter(|v| !cert.removed.contains(v)).collect();
            let residual = tangle.restrict_voters(&kept)?;
            assert!(is_single_peaked_along(&residual, &cert.axis.order)?);
        }
        None => println!("no repair within budget 2"),
    }

    // Alternative deletion works the same way against single-crossingness.
    match deletion_distance(&tangle, Structure::SingleCrossing, DeletionTarget::Alternatives, 2)? {
        Some(cert) => {
            let removed: Vec<usize> = cert.removed.iter().map(|&a| a + 1).collect();
            println!("delete alternatives {removed:?}, then single-crossing along {}", cert.axis);
        }
        None => println!("no single-crossing repair within budget 2"),
    }
    Ok(())
}
