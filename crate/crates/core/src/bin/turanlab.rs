fn main() -> std::process::ExitCode {
    turanlab::cli::main()
}
