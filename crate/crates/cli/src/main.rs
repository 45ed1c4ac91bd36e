use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = plats_cli::run(std::env::args_os());
    if outcome.exit_status == 0 {
        print!("{}", outcome.report);
    } else {
        eprint!("{}", outcome.report);
    }
    ExitCode::from(outcome.exit_status as u8)
}
