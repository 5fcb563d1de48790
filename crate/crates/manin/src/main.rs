fn main() {
    std::process::exit(manin::cli::run(std::env::args_os()));
}
