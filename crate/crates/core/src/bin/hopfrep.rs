fn main() {
    std::process::exit(hopfrep::cli::run());
}
