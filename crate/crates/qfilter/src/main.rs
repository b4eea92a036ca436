use std::process::ExitCode;

fn main() -> ExitCode {
    qfilter::cli::run()
}
