fn main() {
    std::process::exit(fracknot::cli::main_with_args(std::env::args_os()));
}
