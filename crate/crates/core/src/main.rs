fn main() {
    std::process::exit(stokeslab::cli::main_with_args(std::env::args_os()));
}
