fn main() -> std::process::ExitCode {
    cpstrata::cli::main()
}
