fn main() { std::process::exit(mtzeta::cli::run(std::env::args_os())) }
