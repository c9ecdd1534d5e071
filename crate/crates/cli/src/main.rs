use std::io::Write;

fn main() {
    if let Err(msg) = focktiles_cli::configure_threads() {
        eprintln!("error: {msg}");
        std::process::exit(focktiles_cli::EXIT_USAGE);
    }
    let stdin = std::io::stdin();
    let outcome = focktiles_cli::run(std::env::args_os(), &mut stdin.lock());
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.code);
}
