fn main() {
    std::process::exit(isobar::cli::run(std::env::args_os()));
}
