fn main() {
    std::process::exit(walk_extrema::cli::run(std::env::args_os()));
}
