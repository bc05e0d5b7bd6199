fn main() {
    std::process::exit(susy_spheroidal_cli::run());
}
