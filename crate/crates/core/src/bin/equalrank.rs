fn main() {
    std::process::exit(equalrank::cli::run(std::env::args_os()));
}
