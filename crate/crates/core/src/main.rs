fn main() {
    std::process::exit(hypercode::cli::dispatch(std::env::args().collect()));
}
