fn main() -> std::process::ExitCode {
    wfa_tools::cli::run(std::env::args_os())
}
