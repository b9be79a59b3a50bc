fn main() -> std::process::ExitCode {
    grassmann_harmonics::cli::main_with_args(std::env::args_os())
}
