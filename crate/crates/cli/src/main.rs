use std::io::Write;

fn main() {
    let outcome = atlas_cli::run(std::env::args_os());
    std::io::stdout()
        .write_all(outcome.stdout.as_bytes())
        .expect("stdout");
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.status.code());
}
