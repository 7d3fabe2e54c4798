fn main() {
    std::process::exit(normvol::cli::run(std::env::args()));
}
