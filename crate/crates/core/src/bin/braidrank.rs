fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(braidrank::cli::run(&argv));
}
