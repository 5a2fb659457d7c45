fn main() {
    std::process::exit(tqft_hecke::cli::main_with_args(std::env::args_os()));
}
