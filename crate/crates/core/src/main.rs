fn main() {
    std::process::exit(qpoincare::cli::run(std::env::args_os()));
}
