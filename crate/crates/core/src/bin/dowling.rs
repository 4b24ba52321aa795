use std::process::ExitCode;

fn main() -> ExitCode {
    dowling::cli::main()
}
