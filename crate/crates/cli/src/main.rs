fn main() {
    std::process::exit(kprom_cli::run(std::env::args_os()));
}
