fn main() {
    std::process::exit(vtsa::cli::run(std::env::args_os()));
}
