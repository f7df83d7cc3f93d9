fn main() {
    std::process::exit(evenpoint::cli::run(std::env::args_os()));
}
