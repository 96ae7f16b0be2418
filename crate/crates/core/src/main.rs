fn main() {
    std::process::exit(flexwell::cli::cli_main());
}
