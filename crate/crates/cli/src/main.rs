fn main() {
    std::process::exit(coherence_forge::cli::run(std::env::args_os()));
}
