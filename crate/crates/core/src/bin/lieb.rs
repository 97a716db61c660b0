use std::io;

fn main() {
    let code = lieb::cli::commands::run_from(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
