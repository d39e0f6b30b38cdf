use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(elasto_waves::cli::run())
}
