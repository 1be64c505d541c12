fn main() {
    std::process::exit(pdmjump::cli::run(std::env::args()));
}
