fn main() -> std::process::ExitCode {
    rankcode_cli::run(std::env::args_os())
}
