use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let result = comsoc::cli::run(&argv);
    for note in &result.diagnostics {
        eprintln!("{note}");
    }
    let out = result.stdout();
    if !out.is_empty() {
        println!("{out}");
    }
    ExitCode::from(result.exit_code())
}
