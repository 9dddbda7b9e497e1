fn main() {
    std::process::exit(mwlforge::cli::main_with(std::env::args_os()));
}
