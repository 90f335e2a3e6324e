use std::process::ExitCode;

fn main() -> ExitCode {
    landau_cs::cli::main_from_env()
}
