fn main() {
    std::process::exit(daolab::cli::run(std::env::args_os()));
}
