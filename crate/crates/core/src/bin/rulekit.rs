fn main() {
    std::process::exit(rulekit::cli::main(std::env::args_os()));
}
