use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = kasami::cli::run(std::env::args_os());
    if outcome.code == 2 {
        eprint!("{}", outcome.output);
    } else {
        print!("{}", outcome.output);
    }
    ExitCode::from(outcome.code as u8)
}
