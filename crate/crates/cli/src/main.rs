fn main() {
    std::process::exit(bblab::run());
}
