fn main() {
    std::process::exit(roughdomain::cli::main());
}
