fn main() {
    std::process::exit(closed_graphs::cli::main());
}
