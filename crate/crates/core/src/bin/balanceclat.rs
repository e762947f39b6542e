fn main() {
    std::process::exit(balanceclat::cli::run(std::env::args_os()));
}
