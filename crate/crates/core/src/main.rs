fn main() {
    std::process::exit(symcoh::cli::main_with_args(std::env::args_os()));
}
