use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(superjack_cli::run(std::env::args_os()))
}
