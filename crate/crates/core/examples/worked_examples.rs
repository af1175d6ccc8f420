//! Traces of the four bundled problem documents, one per field type.
//!
//! ```text
//! cargo run --example worked_examples
//! ```

use elltrace::document::run_trace;

const DOCUMENTS: [(&str, &str); 4] = [
    ("over Q", include_str!("../fixtures/example1.json")),
    ("over F_3", include_str!("../fixtures/example2.json")),
    ("over F_2(l)", include_str!("../fixtures/example3.json")),
    ("over F_2(l), inseparable", include_str!("../fixtures/example4.json")),
];

fn main() -> elltrace::Result<()> {
    for (label, doc) in DOCUMENTS {
        print!("{label}: {}", run_trace(doc, false)?);
    }
    Ok(())
}
