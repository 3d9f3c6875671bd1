fn main() {
    std::process::exit(tvps::cli::run());
}
