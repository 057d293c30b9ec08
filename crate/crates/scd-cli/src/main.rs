fn main() {
    std::process::exit(scd_cli::run(std::env::args_os()));
}
