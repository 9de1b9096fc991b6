use std::process::ExitCode;

fn main() -> ExitCode {
    shearlet::cli::run()
}
