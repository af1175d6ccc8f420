//! The echelon kernel basis: columns with strictly decreasing trailing-zero
//! counts, each normalized to end in 1.
//!
//! ```text
//! cargo run --example kernel_echelon
//! ```

use elltrace::field::Field;
use elltrace::linalg::trailing_zeros;
use elltrace::{kernel_echelon, Matrix, PrimeField, Rationals};

fn show<F: Field>(k: &F, m: &Matrix<F>) {
    let z = kernel_echelon(k, m);
    println!("{}x{} matrix, kernel dimension {}", m.rows(), m.cols(), z.cols());
    for col in z.columns() {
        let entries: Vec<String> = col.iter().map(|c| k.format_elem(c)).collect();
        println!("  [{}]  trailing zeros {}", entries.join(", "), trailing_zeros(k, &col));
    }
}

fn main() -> elltrace::Result<()> {
    let f3 = PrimeField::new(3)?;
    show(
        &f3,
        &Matrix::from_i64_rows(
            &f3,
            &[
                &[1, 0, 2, 2, 2, 2, 2],
                &[0, 1, 0, 0, 2, 2, 2],
                &[0, 0, 1, 1, 2, 2, 0],
            ],
        ),
    );
    show(
        &Rationals,
        &Matrix::from_i64_rows(&Rationals, &[&[1, 2, 3, 4], &[2, 4, 6, 9]]),
    );
    Ok(())
}
