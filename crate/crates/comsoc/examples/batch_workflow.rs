//! The batch front end driven programmatically: write instance files, run
//! commands, read structured records back.
//!
//! Run with: cargo run --example batch_workflow

use comsoc::cli::run;

fn main() -> std::io::Result<()> {
    let dir = std::env::temp_dir().join("comsoc-batch-example");
    std::fs::create_dir_all(&dir)?;

    // Profile files start with `kind m n`; ballots are 1-based. Comment
    // lines are ignored, and an empty approval ballot is an empty line.
    let profile = dir.join("election.approval");
    std::fs::write(
        &profile,
        "# five approval ballots\napproval 5 5\n1 2 3\n1 2 4\n1 2 5\n1 2\n5\n",
    )?;

    // Hedonic games declare their model in the header; arcs are 1-based.
    let game = dir.join("friends.fe");
    std::fs::write(&game, "hedonic fe fa 4\n1 2\n2 1\n1 3\n3 1\n4 2\n3 4\n")?;
    let partition = dir.join("split.part");
    std::fs::write(&partition, "1 2 3\n4\n")?;

    let election = profile.to_str().expect("temp paths are unicode");
    for args in [
        vec!["mw", "solve", "--rule", "pav", "--k", "2", "--profile", election],
        vec!["mw", "recognize", "--structure", "sc", "--profile", election],
        vec![
            "hg",
            "verify",
            "--concept",
            "nash",
            "--instance",
            game.to_str().expect("temp paths are unicode"),
            "--partition",
            partition.to_str().expect("temp paths are unicode"),
        ],
        vec!["gen", "random", "--shape", "fe", "--model", "ea", "--n", "5", "--density", "0.4", "--seed", "7"],
    ] {
        let result = run(&args);
        println!("$ comsoc {}", args.join(" "));
        println!("{}", result.stdout());
        println!("  -> exit {}", result.exit_code());

        // The same invocation as a machine-readable record on one line.
        let mut record_args: Vec<&str> = args.clone();
        record_args.extend(["--output", "record"]);
        println!("  record: {}", run(&record_args).stdout());
        println!();
    }
    Ok(())
}
