//! Exact dense linear algebra: echelon-form kernels and minimal polynomials.

use std::fmt;

use crate::extension::Extension;
use crate::poly::Poly;
use crate::Field;

/// Row-major dense matrix over a field.
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Clone for Matrix<F> {
    fn clone(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.clone(),
        }
    }
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> Eq for Matrix<F> {}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for i in 0..self.rows {
            list.entry(&self.row(i));
        }
        list.finish()
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(k: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![k.zero(); rows * cols],
        }
    }

    pub fn identity(k: &F, n: usize) -> Self {
        let mut m = Self::zeros(k, n, n);
        for i in 0..n {
            m.set(i, i, k.one());
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<F::Elem>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a `rows x columns.len()` matrix from column vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == rows), "ragged columns");
        let cols = columns.len();
        let data = (0..rows)
            .flat_map(|i| columns.iter().map(move |c| c[i].clone()))
            .collect();
        Matrix { rows, cols, data }
    }

    pub fn from_i64_rows(k: &F, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| k.from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F::Elem>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn mul(&self, k: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let other_cols = other.columns();
        let data = (0..self.rows)
            .flat_map(|i| {
                let row = self.row(i);
                other_cols
                    .iter()
                    .map(move |c| k.dot(row.iter().zip(c.iter())))
            })
            .collect();
        Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    pub fn is_zero(&self, k: &F) -> bool {
        self.data.iter().all(|v| k.is_zero(v))
    }

    /// Reduced row echelon form with pivots chosen left to right; returns the
    /// reduced matrix and the pivot columns.
    pub fn rref(&self, k: &F) -> (Self, Vec<usize>) {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !k.is_zero(&a[i * cols + c])) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    a.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = k.inv(&a[r * cols + c]).expect("pivot is nonzero");
            for j in c..cols {
                a[r * cols + j] = k.mul(&a[r * cols + j], &inv);
            }
            let pivot_row: Vec<F::Elem> = a[r * cols + c..(r + 1) * cols].to_vec();
            for i in 0..rows {
                if i == r || k.is_zero(&a[i * cols + c]) {
                    continue;
                }
                let f = a[i * cols + c].clone();
                let row = &mut a[i * cols + c..(i + 1) * cols];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !k.is_zero(p) {
                        *x = k.sub(x, &k.mul(&f, p));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (
            Matrix {
                rows,
                cols,
                data: a,
            },
            pivots,
        )
    }
}

/// Number of consecutive zero entries at the bottom of `column`.
pub fn trailing_zeros<F: Field>(k: &F, column: &[F::Elem]) -> usize {
    column.iter().rev().take_while(|v| k.is_zero(v)).count()
}

/// Kernel basis of `m` in echelon form.
///
/// The columns of the result span the right kernel of `m`. Each column's last
/// nonzero entry is 1, and the number of trailing zeros strictly decreases
/// from left to right, so the leftmost column is the kernel vector whose last
/// nonzero coordinate comes earliest. A trivial kernel gives a matrix with
/// no columns.
pub fn kernel_echelon<F: Field>(k: &F, m: &Matrix<F>) -> Matrix<F> {
    let (reduced, pivots) = m.rref(k);
    let n = m.cols;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis: Vec<Vec<F::Elem>> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![k.zero(); n];
            v[f] = k.one();
            for (i, &pc) in pivots.iter().enumerate() {
                if pc > f {
                    break;
                }
                v[pc] = k.neg(reduced.get(i, f));
            }
            v
        })
        .collect();
    Matrix::from_columns(n, &basis)
}

/// The minimal polynomial of `alpha` over the base field of `ext`.
///
/// Forms the matrix with columns `1, alpha, ..., alpha^d` on the power basis
/// of `ext`; the leftmost echelon kernel column holds the coefficients of the
/// monic annihilating polynomial of least degree.
pub fn minimal_polynomial<F: Field>(ext: &Extension<F>, alpha: &Poly<F>) -> Poly<F> {
    let k = ext.base();
    let d = ext.degree();
    let mut columns = Vec::with_capacity(d + 1);
    let mut power = ext.one();
    for i in 0..=d {
        columns.push(ext.coords(&power));
        if i < d {
            power = ext.mul(&power, alpha);
        }
    }
    let m = Matrix::from_columns(d, &columns);
    let z = kernel_echelon(k, &m);
    let poly = Poly::from_coeffs(k, z.column(0));
    debug_assert!(d.is_multiple_of(poly.degree().unwrap()));
    poly
}
