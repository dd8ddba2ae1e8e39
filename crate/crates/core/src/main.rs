fn main() {
    std::process::exit(parastat::cli::main_with_args(std::env::args_os()));
}
