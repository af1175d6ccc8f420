//! Prints the full intermediate record for a problem document.
//!
//! ```text
//! cargo run --example witness -- fixtures/example2.json
//! ```

use elltrace::document::run_trace;

fn main() {
    let Some(path) = std::env::args().nth(1) else {
        eprintln!("usage: witness <problem.json>");
        std::process::exit(2);
    };
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| {
        eprintln!("error: {path}: {e}");
        std::process::exit(1);
    });
    match run_trace(&text, true) {
        Ok(out) => print!("{out}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
