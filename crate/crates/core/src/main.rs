fn main() {
    std::process::exit(fuzzy_riesz::cli::run());
}
