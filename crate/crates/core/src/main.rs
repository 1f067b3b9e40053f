fn main() {
    std::process::exit(qcliff::cli::run());
}
