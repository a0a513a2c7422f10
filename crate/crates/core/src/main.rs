use std::process::ExitCode;

fn main() -> ExitCode {
    qutrit_depol::cli::run()
}
