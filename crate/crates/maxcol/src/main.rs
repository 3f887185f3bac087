fn main() {
    std::process::exit(maxcol::run(std::env::args_os()));
}
