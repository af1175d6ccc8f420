//! The differential self-test: random problems over small prime fields,
//! with the trace compared to the sum of the Frobenius orbit.
//!
//! ```text
//! cargo run --release --example differential_selftest [count]
//! ```

use elltrace::selftest::{run_selftest, SelftestOptions};

fn main() -> elltrace::Result<()> {
    let count = std::env::args()
        .nth(1)
        .map_or(100, |s| s.parse().expect("count is a number"));
    let report = run_selftest(&SelftestOptions {
        count,
        ..Default::default()
    })?;
    println!("{report}");
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}
