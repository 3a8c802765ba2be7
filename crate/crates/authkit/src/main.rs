fn main() {
    std::process::exit(authkit::cli::run());
}
