fn main() {
    std::process::exit(minksum::cli::main());
}
