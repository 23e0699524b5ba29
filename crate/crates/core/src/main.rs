fn main() {
    std::process::exit(hbdiff::cli::run());
}
