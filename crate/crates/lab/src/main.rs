fn main() {
    std::process::exit(rfh_lab::run(std::env::args_os()));
}
