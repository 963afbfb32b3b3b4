fn main() {
    std::process::exit(spoly::cli::run(std::env::args_os()));
}
