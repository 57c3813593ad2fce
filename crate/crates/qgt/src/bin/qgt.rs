use std::process::exit;

fn main() {
    match qgt::cli::main_impl(std::env::args()) {
        Ok(code) => exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            exit(1);
        }
    }
}
