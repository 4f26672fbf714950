fn main() {
    std::process::exit(altdiam::cli::main_with_args());
}
