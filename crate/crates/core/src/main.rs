fn main() {
    std::process::exit(etamodeq::cli::run(std::env::args_os()));
}
