fn main() {
    std::process::exit(splitdec::cli::run());
}
